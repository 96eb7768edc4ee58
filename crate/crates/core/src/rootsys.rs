//! Root systems of the simple Lie algebras.
//!
//! Roots are stored in simple-root coordinates and weights in
//! fundamental-weight coordinates, so the Cartan matrix
//! `C[i][j] = ⟨αᵢ∨, αⱼ⟩` is the only bridge between the two and every
//! pairing is an integer dot product.
//!
//! Bourbaki numbering (0-based here, 1-based on the CLI):
//!
//! | type | diagram                                  | short roots      |
//! |------|------------------------------------------|------------------|
//! | Aₙ   | 1 - 2 - … - n                            | none             |
//! | Bₙ   | 1 - 2 - … - (n-1) => n                   | αₙ               |
//! | Cₙ   | 1 - 2 - … - (n-1) <= n                   | α₁ … αₙ₋₁        |
//! | Dₙ   | 1 - … - (n-2) - (n-1), (n-2) - n         | none             |
//! | Eₙ   | 1 - 3 - 4 - 5 - … - n, 2 - 4             | none             |
//! | F₄   | 1 - 2 => 3 - 4                           | α₃, α₄           |
//! | G₂   | 1 <= 2 (triple bond)                     | α₁               |

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::lattice::{gcd, graded_lex};
use crate::{Error, Result};

/// Upper bound on the number of positive roots the closure may produce
/// before it is declared divergent (E₈ has 120).
const MAX_POSITIVE_ROOTS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A Cartan type such as `A3` or `E8`. Construction enforces the usual
/// rank constraints so that distinct values name distinct root systems
/// (with the exception of `D3 = A3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::input(
                "type",
                format!("{series}{rank} violates the rank constraints"),
            ))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every supported type of rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let series = [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ];
        let mut out = Vec::new();
        for s in series {
            for r in 1..=max_rank {
                if let Ok(t) = CartanType::new(s, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Cartan matrix `C[i][j] = ⟨αᵢ∨, αⱼ⟩` in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, short_to_long: i64| {
            // row of the short root picks up the multiplicity
            c[i][j] = -short_to_long;
            c[j][i] = -1;
        };
        match self.series {
            Series::A => (1..n).for_each(|i| link(i - 1, i, 1)),
            Series::B => {
                (1..n - 1).for_each(|i| link(i - 1, i, 1));
                link(n - 1, n - 2, 2);
            }
            Series::C => {
                (1..n - 1).for_each(|i| link(i - 1, i, 1));
                link(n - 2, n - 1, 2);
            }
            Series::D => {
                (1..n - 1).for_each(|i| link(i - 1, i, 1));
                link(n - 3, n - 1, 1);
            }
            Series::E => {
                link(0, 2, 1);
                link(1, 3, 1);
                (3..n).for_each(|i| link(i - 1, i, 1));
            }
            Series::F => {
                link(0, 1, 1);
                link(2, 1, 2);
                link(2, 3, 1);
            }
            Series::G => link(0, 1, 3),
        }
        c
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.series, n) {
            (Series::A, _) => n * (n + 1) / 2,
            (Series::B, _) | (Series::C, _) => n * n,
            (Series::D, _) => n * (n - 1),
            (Series::E, 6) => 36,
            (Series::E, 7) => 63,
            (Series::E, _) => 120,
            (Series::F, _) => 24,
            (Series::G, _) => 6,
        }
    }

    /// Dual Coxeter number `h∨`.
    pub fn dual_coxeter_number(&self) -> i64 {
        let n = self.rank as i64;
        match (self.series, n) {
            (Series::A, _) => n + 1,
            (Series::B, _) => 2 * n - 1,
            (Series::C, _) => n + 1,
            (Series::D, _) => 2 * n - 2,
            (Series::E, 6) => 12,
            (Series::E, 7) => 18,
            (Series::E, _) => 30,
            (Series::F, _) => 9,
            (Series::G, _) => 4,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::input("type", format!("unknown series in {s:?}"))),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::input("type", format!("bad rank in {s:?}")));
        }
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::input("type", format!("bad rank in {s:?}")))?;
        CartanType::new(series, rank)
    }
}

/// A root written on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Indices of the simple roots occurring with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

/// A weight written on the fundamental weights: `coords[i] = ⟨αᵢ∨, λ⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::input("lambda", format!("bad coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(coords))
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (k, c) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// Cartan data of a simple type together with its positive roots.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    symmetrizer: Vec<i64>,
    highest: usize,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Result<Self> {
        Self::with_cartan_matrix(cartan_type, cartan_type.cartan_matrix())
    }

    /// Builds the root system of an arbitrary matrix, labelled with
    /// `cartan_type`. Fails unless the matrix is a connected
    /// finite-type generalized Cartan matrix.
    pub fn with_cartan_matrix(cartan_type: CartanType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let symmetrizer = symmetrizer(&cartan)?;
        if !is_connected(&cartan) {
            return Err(Error::input("cartan", "Dynkin diagram is not connected"));
        }
        let positive_roots = positive_roots(&cartan)?;
        let set: HashSet<&[i64]> = positive_roots.iter().map(|r| r.coords()).collect();
        let rank = cartan.len();
        let maximal: Vec<usize> = positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                (0..rank).all(|i| {
                    let mut up = r.coords().to_vec();
                    up[i] += 1;
                    !set.contains(up.as_slice())
                })
            })
            .map(|(k, _)| k)
            .collect();
        let highest = match maximal.as_slice() {
            [k] => *k,
            _ => {
                return Err(Error::Internal(format!(
                    "{} maximal roots for {cartan_type}",
                    maximal.len()
                )))
            }
        };
        Ok(RootSystem {
            cartan_type,
            cartan,
            positive_roots,
            symmetrizer,
            highest,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in graded lexicographic order (simple roots first).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `d` with `diag(d)·C` symmetric, normalized so the short roots get 1.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.positive_roots
            .binary_search_by(|r| graded_lex(r.coords(), coords))
            .is_ok()
    }

    /// `⟨αᵢ∨, γ⟩` for a 0-based simple index `i`.
    pub fn pair(&self, i: usize, gamma: &Root) -> Result<i64> {
        if i >= self.rank() {
            return Err(Error::input(
                "index",
                format!("simple root index {} out of range 1..={}", i + 1, self.rank()),
            ));
        }
        if gamma.coords().len() != self.rank() {
            return Err(Error::input(
                "root",
                format!("expected {} coordinates, got {}", self.rank(), gamma.coords().len()),
            ));
        }
        Ok(dot(&self.cartan[i], gamma.coords()))
    }

    /// `ρ`, the weight with every fundamental coordinate equal to 1.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest]
    }

    /// Invariant form `(λ, γ)` with `(ϖᵢ, αⱼ) = δᵢⱼ·dⱼ`.
    pub fn form(&self, lambda: &Weight, gamma: &Root) -> i64 {
        lambda
            .coords()
            .iter()
            .zip(gamma.coords())
            .zip(&self.symmetrizer)
            .map(|((l, g), d)| l * g * d)
            .sum()
    }

    /// Dimension of the irreducible representation of highest weight
    /// `lambda`, by the Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        if lambda.coords().len() != self.rank() {
            return Err(Error::input(
                "lambda",
                format!("expected {} coordinates, got {}", self.rank(), lambda.coords().len()),
            ));
        }
        if !lambda.is_dominant() {
            return Err(Error::input("lambda", format!("{lambda} is not dominant")));
        }
        let shifted = Weight(lambda.coords().iter().map(|c| c + 1).collect());
        let rho = self.rho();
        // The full products overflow i128 already for E8, so each factor is
        // cancelled against the running quotient before multiplying in.
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for gamma in &self.positive_roots {
            let mut a = self.form(&shifted, gamma) as i128;
            let mut b = self.form(&rho, gamma) as i128;
            let g = gcd(a, b);
            a /= g;
            b /= g;
            let g = gcd(a, den);
            a /= g;
            den /= g;
            let g = gcd(b, num);
            b /= g;
            num /= g;
            num = num.checked_mul(a).ok_or(Error::Overflow("weyl_dim"))?;
            den = den.checked_mul(b).ok_or(Error::Overflow("weyl_dim"))?;
        }
        if den != 1 {
            return Err(Error::Internal(format!(
                "Weyl dimension of {lambda} is not an integer ({num}/{den})"
            )));
        }
        u128::try_from(num).map_err(|_| Error::Internal("negative Weyl dimension".into()))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[allow(clippy::needless_range_loop)]
fn validate_cartan(c: &[Vec<i64>]) -> Result<()> {
    let n = c.len();
    if n == 0 || c.iter().any(|row| row.len() != n) {
        return Err(Error::input("cartan", "matrix must be square and nonempty"));
    }
    for i in 0..n {
        if c[i][i] != 2 {
            return Err(Error::input("cartan", format!("diagonal entry {} is not 2", i + 1)));
        }
        for j in 0..n {
            if i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0)) {
                return Err(Error::input(
                    "cartan",
                    format!("entry ({},{}) breaks the sign pattern", i + 1, j + 1),
                ));
            }
        }
    }
    Ok(())
}

fn is_connected(c: &[Vec<i64>]) -> bool {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && c[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Symmetrizing vector of a Cartan matrix, scaled to coprime positive
/// integers. Works component by component on disconnected diagrams.
pub(crate) fn symmetrizer(c: &[Vec<i64>]) -> Result<Vec<i64>> {
    validate_cartan(c)?;
    let n = c.len();
    // Root-length ratios in finite type are 1, 2 or 3 and each connected
    // diagram has at most two lengths, so a seed of 6 stays integral.
    let mut d = vec![0i64; n];
    for start in 0..n {
        if d[start] != 0 {
            continue;
        }
        d[start] = 6;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                // d_i C_ij = d_j C_ji
                let numer = d[i] * c[i][j];
                if numer % c[j][i] != 0 {
                    return Err(Error::input("cartan", "matrix is not symmetrizable"));
                }
                let dj = numer / c[j][i];
                if d[j] == 0 {
                    d[j] = dj;
                    stack.push(j);
                } else if d[j] != dj {
                    return Err(Error::input("cartan", "matrix is not symmetrizable"));
                }
            }
        }
    }
    // normalize each component separately so its short roots get 1
    let mut comp = vec![usize::MAX; n];
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..n {
                if comp[j] == usize::MAX && c[i][j] != 0 {
                    comp[j] = start;
                    members.push(j);
                }
            }
            k += 1;
        }
        let g = members.iter().fold(0i128, |g, &i| gcd(g, d[i] as i128)) as i64;
        for &i in &members {
            d[i] /= g;
        }
    }
    Ok(d)
}

/// Positive roots by root-string closure: from a root `γ`, `γ + αᵢ` is a
/// root iff `q = p − ⟨αᵢ∨, γ⟩ > 0`, where `p` is the largest integer with
/// `γ − p·αᵢ` a root. Roots are produced height by height, so `p` is
/// always computable from what is already known.
pub(crate) fn positive_roots(c: &[Vec<i64>]) -> Result<Vec<Root>> {
    validate_cartan(c)?;
    let n = c.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for gamma in &layer {
            for (i, row) in c.iter().enumerate() {
                let mut p = 0;
                let mut down = gamma.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - dot(row, gamma);
                if q > 0 {
                    let mut up = gamma.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        if all.len() + next.len() > MAX_POSITIVE_ROOTS {
            return Err(Error::Internal(
                "root-string closure does not terminate; matrix is not of finite type".into(),
            ));
        }
        layer = next;
    }
    all.sort_by(|a, b| graded_lex(a, b));
    Ok(all.into_iter().map(Root).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn coords(rs: &RootSystem) -> Vec<Vec<i64>> {
        rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect()
    }

    #[test]
    fn a2() {
        let a2 = rs("A2");
        assert_eq!(a2.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(coords(&a2), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn a1_and_g2() {
        assert_eq!(coords(&rs("A1")), vec![vec![1]]);
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root().coords(), &[3, 2]);
        assert_eq!(g2.symmetrizer(), &[1, 3]);
    }

    #[test]
    fn parse_types() {
        assert_eq!("e6".parse::<CartanType>().unwrap().to_string(), "E6");
        assert_eq!(" A3 ".parse::<CartanType>().unwrap().rank(), 3);
        for bad in ["Z9", "", "A", "A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "A-1", "A2x"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn pairings() {
        let a2 = rs("A2");
        assert_eq!(a2.pair(0, &Root::new(vec![1, 1])).unwrap(), 1);
        assert_eq!(a2.pair(1, &Root::new(vec![1, 0])).unwrap(), -1);
        for t in CartanType::all_up_to_rank(8) {
            let r = RootSystem::build(t).unwrap();
            for i in 0..r.rank() {
                assert_eq!(r.pair(i, &Root::simple(r.rank(), i)).unwrap(), 2);
            }
        }
        assert!(a2.pair(2, &Root::new(vec![1, 0])).is_err());
        assert!(a2.pair(0, &Root::new(vec![1])).is_err());
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for t in CartanType::all_up_to_rank(8) {
            let r = RootSystem::build(t).unwrap();
            let mut sum = vec![0; r.rank()];
            for g in r.positive_roots() {
                for (s, c) in sum.iter_mut().zip(g.coords()) {
                    *s += c;
                }
            }
            let two_rho = Root::new(sum);
            for i in 0..r.rank() {
                assert_eq!(r.pair(i, &two_rho).unwrap(), 2 * r.rho().coords()[i], "{t}");
            }
        }
        assert_eq!(rs("A3").rho().coords(), &[1, 1, 1]);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A3").highest_root().coords(), &[1, 1, 1]);
        assert_eq!(rs("A1").highest_root().coords(), &[1]);
        assert_eq!(rs("C2").highest_root().coords(), &[2, 1]);
        assert_eq!(rs("B3").highest_root().coords(), &[1, 2, 2]);
        assert_eq!(rs("C3").highest_root().coords(), &[2, 2, 1]);
        assert_eq!(rs("F4").highest_root().coords(), &[2, 3, 4, 2]);
        assert_eq!(rs("E8").highest_root().coords(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_dim(&Weight::new(vec![3])).unwrap(), 4);
        let a2 = rs("A2");
        assert_eq!(a2.weyl_dim(&Weight::new(vec![1, 1])).unwrap(), 8);
        assert!(a2.weyl_dim(&Weight::new(vec![-1, 1])).is_err());
        assert!(a2.weyl_dim(&Weight::new(vec![1])).is_err());
        for t in CartanType::all_up_to_rank(8) {
            let r = RootSystem::build(t).unwrap();
            assert_eq!(r.weyl_dim(&Weight::zero(r.rank())).unwrap(), 1);
        }
        // adjoint representations
        let mut e8_adj = vec![0; 8];
        e8_adj[7] = 1;
        assert_eq!(rs("E8").weyl_dim(&Weight::new(e8_adj)).unwrap(), 248);
        assert_eq!(rs("G2").weyl_dim(&Weight::new(vec![0, 1])).unwrap(), 14);
        assert_eq!(rs("G2").weyl_dim(&Weight::new(vec![1, 0])).unwrap(), 7);
        assert_eq!(rs("F4").weyl_dim(&Weight::new(vec![0, 0, 0, 1])).unwrap(), 26);
        assert_eq!(rs("B3").weyl_dim(&Weight::new(vec![0, 0, 1])).unwrap(), 8);
    }

    #[test]
    fn rejects_bad_matrices() {
        let t: CartanType = "A2".parse().unwrap();
        assert!(RootSystem::with_cartan_matrix(t, vec![vec![2, 1], vec![-1, 2]]).is_err());
        assert!(RootSystem::with_cartan_matrix(t, vec![vec![2, 0], vec![0, 2]]).is_err());
        // affine A1: infinite closure
        assert!(RootSystem::with_cartan_matrix(t, vec![vec![2, -2], vec![-2, 2]]).is_err());
    }
}
