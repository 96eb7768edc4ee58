use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homcone::affine::compare_ne_ir;
use homcone::components::{classify_with, ne, ClassifyOptions};
use homcone::conegeom::ConeSpace;
use homcone::parabolic::ParabolicData;
use homcone::rootsys::{CartanType, RootSystem, Weight};
use homcone::selfcheck::{self, Fault};
use homcone::{report, Error, Result};

/// Components of spaces of rational curves on cones over G/P.
#[derive(Parser)]
#[command(name = "homcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, rho and highest root of a Cartan type.
    Roots {
        #[arg(long = "type")]
        cartan_type: String,
    },
    /// Dimension, Picard rank and Chern degrees of G/P.
    Gp {
        #[arg(long = "type")]
        cartan_type: String,
        /// Comma-separated 1-based simple-root indices of alpha(p).
        #[arg(long)]
        parabolic: String,
    },
    /// Effective classes of a given L-degree.
    Ne {
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// Irreducible components of Mor_d(P^1, X).
    Classify {
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Drop the beta = 0 strata of curves in the vertex rulings.
        #[arg(long)]
        exclude_vertex_stratum: bool,
    },
    /// Compare |ne(d)| with affine level-d weight counts (P = B, lambda = rho).
    AffineCompare {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        degree: u32,
    },
    /// Run the built-in oracle suites.
    Selfcheck {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(clap::Args)]
struct ConeArgs {
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long)]
    parabolic: String,
    /// Full-rank fundamental-weight coordinates, or "min".
    #[arg(long)]
    lambda: String,
    #[arg(long, default_value_t = 1)]
    vertex_dim: i64,
    #[arg(long)]
    degree: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    CartanSign,
}

fn root_system(s: &str) -> Result<RootSystem> {
    RootSystem::build(s.parse::<CartanType>()?)
}

fn parabolic(ty: &str, indices: &str) -> Result<ParabolicData> {
    ParabolicData::new(root_system(ty)?, &ParabolicData::parse_indices(indices)?)
}

impl ConeArgs {
    fn build(&self) -> Result<ConeSpace> {
        let p = parabolic(&self.cartan_type, &self.parabolic)?;
        let lambda = if self.lambda.trim().eq_ignore_ascii_case("min") {
            p.minimal_ample()
        } else {
            self.lambda.parse::<Weight>()?
        };
        ConeSpace::new(p, lambda, self.vertex_dim)
    }
}

fn run(command: Command) -> Result<(String, bool)> {
    Ok(match command {
        Command::Roots { cartan_type } => (report::roots_table(&root_system(&cartan_type)?), true),
        Command::Gp {
            cartan_type,
            parabolic: indices,
        } => (report::gp_table(&parabolic(&cartan_type, &indices)?), true),
        Command::Ne { cone } => {
            let c = cone.build()?;
            (report::ne_table(&ne(&c, cone.degree)), true)
        }
        Command::Classify {
            cone,
            format,
            exclude_vertex_stratum,
        } => {
            let c = cone.build()?;
            let r = classify_with(
                &c,
                cone.degree,
                ClassifyOptions {
                    exclude_vertex_stratum,
                },
            )?;
            let text = match format {
                Format::Json => report::to_json(&r) + "\n",
                Format::Tsv => report::to_tsv(&r),
            };
            (text, true)
        }
        Command::AffineCompare {
            cartan_type,
            degree,
        } => {
            let rs = root_system(&cartan_type)?;
            let all: Vec<usize> = (0..rs.rank()).collect();
            let c = ConeSpace::with_minimal_ample(ParabolicData::new(rs, &all)?, 1)?;
            (report::affine_table(&compare_ne_ir(&c, degree)), true)
        }
        Command::Selfcheck { inject_fault } => {
            let fault = inject_fault.map(|FaultArg::CartanSign| Fault::FlipCartanSign);
            let results = selfcheck::run(fault);
            let mut out = String::new();
            for r in &results {
                out += &format!(
                    "{} {} checked={} failed={} ({} ms)\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.checked,
                    r.failed,
                    r.elapsed.as_millis()
                );
                for f in &r.failures {
                    out += &format!("    {f}\n");
                }
            }
            let ok = results.iter().all(|r| r.passed());
            out += if ok {
                "selfcheck: all suites passed\n"
            } else {
                "selfcheck: FAILED\n"
            };
            (out, ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    e.exit_code() as u8
}
