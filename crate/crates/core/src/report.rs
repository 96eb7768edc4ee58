//! Output formats: the JSON and TSV forms of a [`ComponentReport`] and the
//! plain-text tables printed by the CLI.
//!
//! JSON layout (indices 1-based):
//!
//! ```text
//! { "cone": { "type", "parabolic", "lambda", "ell", "vertex_dim", "dim_x" },
//!   "total_degree", "case": "lines" | "no_lines",
//!   "components": [ { "beta", "alpha_prime", "vertex_multiplicity",
//!                     "relative_degree", "e", "dimension" } ],
//!   "count", "equidimensional" }
//! ```

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::affine::{NeIrComparison, NE_IR_CLAIM};
use crate::components::{
    Case, ComponentDescriptor, ComponentReport, ConeSummary, EffectiveClass,
};
use crate::conegeom::{ConeSpace, TildeClass};
use crate::parabolic::ParabolicData;
use crate::rootsys::{RootSystem, Weight};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeJson {
    #[serde(rename = "type")]
    cartan_type: String,
    parabolic: Vec<usize>,
    lambda: Vec<i64>,
    ell: Vec<i64>,
    vertex_dim: i64,
    dim_x: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentJson {
    beta: Vec<i64>,
    alpha_prime: i64,
    vertex_multiplicity: i64,
    relative_degree: i64,
    e: i64,
    dimension: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportJson {
    cone: ConeJson,
    total_degree: i64,
    case: Case,
    components: Vec<ComponentJson>,
    count: usize,
    equidimensional: bool,
}

impl From<&ComponentReport> for ReportJson {
    fn from(r: &ComponentReport) -> Self {
        ReportJson {
            cone: ConeJson {
                cartan_type: r.cone.cartan_type.to_string(),
                parabolic: r.cone.parabolic.iter().map(|i| i + 1).collect(),
                lambda: r.cone.lambda.clone(),
                ell: r.cone.ell.clone(),
                vertex_dim: r.cone.vertex_dim,
                dim_x: r.cone.dim_x,
            },
            total_degree: r.total_degree,
            case: r.case,
            components: r
                .components
                .iter()
                .map(|d| ComponentJson {
                    beta: d.beta.coeffs().to_vec(),
                    alpha_prime: d.alpha_prime,
                    vertex_multiplicity: d.vertex_multiplicity,
                    relative_degree: d.tilde.relative_degree,
                    e: d.vertex_multiplicity,
                    dimension: d.dimension,
                })
                .collect(),
            count: r.components.len(),
            equidimensional: r.equidimensional,
        }
    }
}

pub fn to_json(report: &ComponentReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(report)).expect("report serializes")
}

fn mismatch(what: impl Into<String>) -> Error {
    Error::input("report", what)
}

/// Parses a JSON report and re-validates it against a freshly built cone:
/// every component is checked for degree bookkeeping, its intersection with
/// the exceptional divisor and its dimension.
pub fn from_json(s: &str) -> Result<ComponentReport> {
    let json: ReportJson =
        serde_json::from_str(s).map_err(|e| Error::input("report", e.to_string()))?;
    let cartan_type = json.cone.cartan_type.parse()?;
    let rs = RootSystem::build(cartan_type)?;
    let alpha_p = json
        .cone
        .parabolic
        .iter()
        .map(|&i| i.checked_sub(1).ok_or_else(|| mismatch("parabolic index 0")))
        .collect::<Result<Vec<_>>>()?;
    let parabolic = ParabolicData::new(rs, &alpha_p)?;
    let cone = ConeSpace::new(
        parabolic,
        Weight::new(json.cone.lambda.clone()),
        json.cone.vertex_dim,
    )?;
    let summary = ConeSummary::from(&cone);
    if summary.ell != json.cone.ell || summary.dim_x != json.cone.dim_x {
        return Err(mismatch("cone ell/dim_x disagree with type, parabolic and lambda"));
    }
    if summary.parabolic != alpha_p {
        return Err(mismatch("parabolic indices are not sorted and distinct"));
    }
    let case = if cone.has_lines() {
        Case::Lines
    } else {
        Case::NoLines
    };
    if case != json.case {
        return Err(mismatch("case disagrees with the cone"));
    }
    let components = json
        .components
        .iter()
        .map(|c| {
            let d = ComponentDescriptor {
                beta: EffectiveClass::new(c.beta.clone())?,
                alpha_prime: c.alpha_prime,
                vertex_multiplicity: c.vertex_multiplicity,
                tilde: TildeClass::new(c.beta.clone(), c.relative_degree),
                dimension: c.dimension,
            };
            if c.e != c.vertex_multiplicity {
                return Err(mismatch("e differs from vertex_multiplicity"));
            }
            d.validate(&cone, json.total_degree)?;
            Ok(d)
        })
        .collect::<Result<Vec<_>>>()?;
    if json.count != components.len() {
        return Err(mismatch("count differs from the number of components"));
    }
    let equidimensional = components
        .windows(2)
        .all(|w| w[0].dimension == w[1].dimension);
    if equidimensional != json.equidimensional {
        return Err(mismatch("equidimensional flag disagrees with the dimensions"));
    }
    Ok(ComponentReport {
        cone: summary,
        total_degree: json.total_degree,
        case,
        components,
        equidimensional,
    })
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub const TSV_HEADER: &str =
    "beta\talpha_prime\tvertex_multiplicity\trelative_degree\te\tdimension";

/// One header row, then one row per component; `beta` is comma-joined.
pub fn to_tsv(report: &ComponentReport) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for d in &report.components {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            join(d.beta.coeffs()),
            d.alpha_prime,
            d.vertex_multiplicity,
            d.tilde.relative_degree,
            d.vertex_multiplicity,
            d.dimension
        );
    }
    out
}

pub fn roots_table(rs: &RootSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# type {}", rs.cartan_type());
    let _ = writeln!(out, "# root\theight");
    for r in rs.positive_roots() {
        let _ = writeln!(out, "{}\t{}", join(r.coords()), r.height());
    }
    let _ = writeln!(out, "count\t{}", rs.positive_roots().len());
    let _ = writeln!(out, "rho\t{}", join(rs.rho().coords()));
    let _ = writeln!(out, "highest_root\t{}", join(rs.highest_root().coords()));
    out
}

pub fn gp_table(p: &ParabolicData) -> String {
    let one_based: Vec<i64> = p.alpha_p().iter().map(|&i| i as i64 + 1).collect();
    let mut out = String::new();
    let _ = writeln!(out, "type\t{}", p.root_system().cartan_type());
    let _ = writeln!(out, "parabolic\t{}", join(&one_based));
    let _ = writeln!(out, "dim\t{}", p.dim_gp());
    let _ = writeln!(out, "picard_rank\t{}", p.picard_rank());
    let _ = writeln!(out, "chern_degrees\t{}", join(p.chern_degrees()));
    let _ = writeln!(out, "kappa\t{}", join(p.kappa().coords()));
    let _ = writeln!(out, "minimal_ample\t{}", join(p.minimal_ample().coords()));
    out
}

pub fn ne_table(classes: &[EffectiveClass]) -> String {
    let mut out = String::from("beta\n");
    for b in classes {
        let _ = writeln!(out, "{}", join(b.coeffs()));
    }
    let _ = writeln!(out, "count\t{}", classes.len());
    out
}

pub fn affine_table(cmp: &NeIrComparison) -> String {
    let verdict = if cmp.matches { "MATCH" } else { "MISMATCH" };
    format!(
        "# {NE_IR_CLAIM}\ndegree={} ne={} ir={} {verdict}\n",
        cmp.degree, cmp.ne_count, cmp.ir_count
    )
}
