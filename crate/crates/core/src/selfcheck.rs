//! Oracle suites run by `homcone selfcheck`.
//!
//! Each suite checks the library against something computed independently:
//! closed-form tables, brute-force scans, or classical moduli dimensions.

use std::time::{Duration, Instant};

use crate::affine::AffineData;
use crate::components::{classify, ne, Case};
use crate::conegeom::{ConeSpace, TildeClass};
use crate::parabolic::ParabolicData;
use crate::rootsys::{CartanType, Root, RootSystem, Weight};
use crate::Result;

/// Deliberate corruption used to prove the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negate `C[0][1]` before building each root system.
    FlipCartanSign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    /// The first few failure messages.
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

const MAX_REPORTED: usize = 20;

struct Suite {
    name: &'static str,
    checked: u64,
    failures: Vec<String>,
    failed: u64,
    start: Instant,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            failures: Vec::new(),
            failed: 0,
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(what);
        }
    }

    fn finish(mut self) -> SuiteResult {
        let hidden = self.failed - self.failures.len() as u64;
        if hidden > 0 {
            self.failures.push(format!("... and {hidden} more"));
        }
        SuiteResult {
            name: self.name,
            checked: self.checked,
            failed: self.failed,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

/// All nonempty subsets of `0..rank`, as sorted index lists.
pub fn nonempty_subsets(rank: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << rank))
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// All vectors of length `len` with entries in `lo..=hi`.
pub fn box_vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// The weight with `ell` on `alpha_p` and 0 elsewhere.
pub fn weight_on(rank: usize, alpha_p: &[usize], ell: &[i64]) -> Weight {
    let mut v = vec![0; rank];
    for (&i, &l) in alpha_p.iter().zip(ell) {
        v[i] = l;
    }
    Weight::new(v)
}

fn build(t: CartanType, fault: Option<Fault>) -> Result<RootSystem> {
    let mut c = t.cartan_matrix();
    if fault == Some(Fault::FlipCartanSign) && c.len() > 1 {
        c[0][1] = -c[0][1];
    }
    RootSystem::with_cartan_matrix(t, c)
}

fn root_counts(fault: Option<Fault>) -> SuiteResult {
    let mut s = Suite::new("root-counts");
    for t in CartanType::all_up_to_rank(8) {
        let rs = match build(t, fault) {
            Ok(rs) => rs,
            Err(e) => {
                s.fail(format!("{t}: {e}"));
                continue;
            }
        };
        let count = rs.positive_roots().len();
        s.check(count == t.positive_root_count(), || {
            format!("{t}: {count} positive roots, expected {}", t.positive_root_count())
        });
        let n = rs.rank();
        let mut sum = vec![0; n];
        for g in rs.positive_roots() {
            for (a, c) in sum.iter_mut().zip(g.coords()) {
                *a += c;
            }
        }
        let two_rho = Root::new(sum);
        for i in 0..n {
            let p = rs.pair(i, &two_rho).unwrap_or(i64::MIN);
            s.check(p == 2, || format!("{t}: <a{}^v, 2rho> = {p}", i + 1));
        }
        let d = rs.symmetrizer();
        let c = rs.cartan();
        let symmetric = (0..n).all(|i| (0..n).all(|j| d[i] * c[i][j] == d[j] * c[j][i]));
        s.check(symmetric && d.iter().all(|&x| x > 0), || {
            format!("{t}: symmetrizer {d:?} does not symmetrize")
        });
        match AffineData::new(t) {
            Ok(a) => s.check(a.dual_coxeter_number() == t.dual_coxeter_number(), || {
                format!("{t}: comarks {:?} sum to {}", a.comarks(), a.dual_coxeter_number())
            }),
            Err(e) => s.fail(format!("{t}: comarks: {e}")),
        }
    }
    s.finish()
}

fn parabolic(t: &str, alpha_p: &[usize]) -> Result<ParabolicData> {
    ParabolicData::new(RootSystem::build(t.parse()?)?, alpha_p)
}

fn chern_degrees() -> SuiteResult {
    let mut s = Suite::new("chern-degrees");
    for n in 1..=6 {
        let t = format!("A{n}");
        match parabolic(&t, &[0]) {
            Ok(p) => s.check(p.chern_degrees() == [n as i64 + 1] && p.dim_gp() == n as i64, || {
                format!("P^{n}: c = {:?}, dim {}", p.chern_degrees(), p.dim_gp())
            }),
            Err(e) => s.fail(format!("P^{n}: {e}")),
        }
    }
    match parabolic("A3", &[1]) {
        Ok(p) => s.check(p.chern_degrees() == [4] && p.dim_gp() == 4, || {
            format!("Gr(2,4): c = {:?}", p.chern_degrees())
        }),
        Err(e) => s.fail(format!("Gr(2,4): {e}")),
    }
    for t in CartanType::all_up_to_rank(8) {
        let all: Vec<usize> = (0..t.rank()).collect();
        match RootSystem::build(t).and_then(|rs| ParabolicData::new(rs, &all)) {
            Ok(p) => s.check(p.chern_degrees().iter().all(|&c| c == 2), || {
                format!("{t}/B: c = {:?}", p.chern_degrees())
            }),
            Err(e) => s.fail(format!("{t}/B: {e}")),
        }
    }
    s.finish()
}

fn small_parabolics() -> Vec<ParabolicData> {
    let mut out = Vec::new();
    for t in CartanType::all_up_to_rank(3) {
        let rs = RootSystem::build(t).expect("standard types build");
        for sub in nonempty_subsets(t.rank()) {
            out.push(ParabolicData::new(rs.clone(), &sub).expect("valid subset"));
        }
    }
    out
}

fn lemma_equiv() -> SuiteResult {
    let mut s = Suite::new("lemma-equiv");
    for p in small_parabolics() {
        let k = p.picard_rank();
        for ell in box_vectors(k, 1, 4) {
            let lambda = weight_on(p.root_system().rank(), p.alpha_p(), &ell);
            match ConeSpace::new(p.clone(), lambda, 1) {
                Ok(c) => {
                    let no_lines = !c.has_lines();
                    let all_ge_two = ell.iter().all(|&l| l >= 2);
                    s.check(c.lemma_equiv_check() && no_lines == all_ge_two, || {
                        format!("{}/{:?} ell={ell:?}", p.root_system().cartan_type(), p.alpha_p())
                    });
                }
                Err(e) => s.fail(format!("ell={ell:?}: {e}")),
            }
        }
    }
    s.finish()
}

/// Branch formula against fibration route over ranks ≤ 3, `n ≤ 3`,
/// `Σ|βᵢ| ≤ 3`, `|relative degree| ≤ 12`, `ℓ ∈ {1,2}^k`.
fn dimension_agreement() -> SuiteResult {
    let mut s = Suite::new("dimension-agreement");
    for p in small_parabolics() {
        let k = p.picard_rank();
        let betas: Vec<Vec<i64>> = box_vectors(k, -1, 3)
            .into_iter()
            .filter(|b| b.iter().map(|x| x.abs()).sum::<i64>() <= 3)
            .collect();
        for ell in box_vectors(k, 1, 2) {
            let lambda = weight_on(p.root_system().rank(), p.alpha_p(), &ell);
            for n in 1..=3 {
                let cone = match ConeSpace::new(p.clone(), lambda.clone(), n) {
                    Ok(c) => c,
                    Err(e) => {
                        s.fail(e.to_string());
                        continue;
                    }
                };
                for beta in &betas {
                    for d in -12..=12 {
                        check_class(&mut s, &cone, TildeClass::new(beta.clone(), d));
                    }
                }
            }
        }
    }
    s.finish()
}

fn check_class(s: &mut Suite, cone: &ConeSpace, t: TildeClass) {
    let Ok(e) = cone.e_intersection(&t) else {
        return;
    };
    let ctx = || {
        format!(
            "{}/{:?} ell={:?} n={} beta={:?} d={}",
            cone.parabolic().root_system().cartan_type(),
            cone.parabolic().alpha_p(),
            cone.ell(),
            cone.vertex_dim(),
            t.beta,
            t.relative_degree
        )
    };
    let ell: i64 = t.beta.iter().zip(cone.ell()).map(|(b, l)| b * l).sum();
    let n = cone.vertex_dim();
    let x = (t.relative_degree + ell) / (n + 1);
    let e_nonneg = e >= 0;
    let d_big = t.relative_degree >= n * ell;
    let x_big = x >= ell;
    s.check(e_nonneg == d_big && d_big == x_big, || format!("{}: e/d/x order", ctx()));
    s.check(cone.total_degree(&t).ok() == Some(ell + e), || format!("{}: total degree", ctx()));
    let nonempty = match cone.is_nonempty(&t) {
        Ok(b) => b,
        Err(err) => {
            s.fail(format!("{}: {err}", ctx()));
            return;
        }
    };
    if !nonempty {
        return;
    }
    let by_chern = cone.dim_mor_tilde_by_chern(&t);
    let by_fibration = cone.dim_mor_tilde_by_fibration(&t);
    match (by_chern, by_fibration) {
        (Ok(a), Ok(b)) => {
            s.check(a == b, || format!("{}: {a} != {b}", ctx()));
            if e < 0 {
                let expected = cone.chern_degree_tilde(&t).unwrap_or(i64::MAX) + cone.dim_x();
                s.check(a >= expected, || format!("{}: below expected dimension", ctx()));
            }
        }
        (a, b) => s.fail(format!("{}: {a:?} / {b:?}", ctx())),
    }
}

/// Reference enumeration of `ne(d)`: scan the box `Π [0, d/ℓᵢ]`, keep the
/// exact hits, order by coordinate sum then reverse lexicographically.
pub fn ne_by_box_scan(ell: &[i64], degree: i64) -> Vec<Vec<i64>> {
    let mut hits: Vec<Vec<i64>> = vec![Vec::new()];
    for &l in ell {
        hits = hits
            .into_iter()
            .flat_map(|v| {
                (0..=degree / l).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    hits.retain(|v| v.iter().zip(ell).map(|(a, b)| a * b).sum::<i64>() == degree);
    hits.sort_by(|a, b| {
        let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    hits
}

fn ne_brute_force() -> SuiteResult {
    let mut s = Suite::new("ne-brute-force");
    let rs = RootSystem::build("A3".parse().expect("A3")).expect("A3 builds");
    for k in 1..=3usize {
        let alpha_p: Vec<usize> = (0..k).collect();
        let p = ParabolicData::new(rs.clone(), &alpha_p).expect("valid subset");
        for ell in box_vectors(k, 1, 4) {
            let lambda = weight_on(3, &alpha_p, &ell);
            let Ok(cone) = ConeSpace::new(p.clone(), lambda, 1) else {
                s.fail(format!("ell={ell:?}: cone rejected"));
                continue;
            };
            for d in 0..=10u32 {
                let got: Vec<Vec<i64>> = ne(&cone, d).iter().map(|b| b.coeffs().to_vec()).collect();
                let want = ne_by_box_scan(&ell, i64::from(d));
                s.check(got == want, || format!("ell={ell:?} d={d}: {got:?} != {want:?}"));
            }
        }
    }
    s.finish()
}

fn classical_moduli() -> SuiteResult {
    let mut s = Suite::new("classical-moduli");
    let line = parabolic("A1", &[0]).expect("A1");
    // ℙ² as the cone over a line: dim Mor_d(ℙ¹, ℙ²) = 3(d+1) − 1
    match ConeSpace::new(line.clone(), Weight::new(vec![1]), 1) {
        Ok(plane) => {
            for d in 0..=6u32 {
                let want = 3 * (i64::from(d) + 1) - 1;
                match classify(&plane, d) {
                    Ok(r) => s.check(
                        r.case == Case::Lines
                            && r.components.len() == 1
                            && r.components[0].dimension == want,
                        || format!("P2 d={d}: {:?}", r.components),
                    ),
                    Err(e) => s.fail(format!("P2 d={d}: {e}")),
                }
            }
        }
        Err(e) => s.fail(format!("P2: {e}")),
    }
    // quadric cone in ℙ³: plane conics 3+3, double rulings 1+5
    match ConeSpace::new(line, Weight::new(vec![2]), 1) {
        Ok(quadric) => match classify(&quadric, 2) {
            Ok(r) => {
                let got: Vec<(Vec<i64>, i64, i64)> = r
                    .components
                    .iter()
                    .map(|c| (c.beta.coeffs().to_vec(), c.vertex_multiplicity, c.dimension))
                    .collect();
                s.check(
                    got == vec![(vec![1], 0, 6), (vec![0], 2, 6)] && r.equidimensional,
                    || format!("quadric cone d=2: {got:?}"),
                );
            }
            Err(e) => s.fail(format!("quadric cone: {e}")),
        },
        Err(e) => s.fail(format!("quadric cone: {e}")),
    }
    s.finish()
}

pub fn run(fault: Option<Fault>) -> Vec<SuiteResult> {
    vec![
        root_counts(fault),
        chern_degrees(),
        lemma_equiv(),
        dimension_agreement(),
        ne_brute_force(),
        classical_moduli(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers() {
        assert_eq!(nonempty_subsets(2), vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(box_vectors(2, 0, 1).len(), 4);
        assert_eq!(box_vectors(0, 0, 1), vec![Vec::<i64>::new()]);
        assert_eq!(ne_by_box_scan(&[1, 1], 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn fault_is_detected() {
        let r = root_counts(Some(Fault::FlipCartanSign));
        assert!(!r.passed());
    }
}
