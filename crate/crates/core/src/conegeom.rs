//! The cone `X = C_{λ,n}(G/P)` and its resolution.
//!
//! Blowing up the vertex `ℙ(V)` gives `X̃ = ℙ_{G/P}((V⊗O) ⊕ L)`, a
//! `ℙⁿ`-bundle `p: X̃ → G/P` with exceptional divisor `E`. A curve class
//! `α̃` on `X̃` is a pair: its push-forward `β ∈ A₁(G/P)` and its relative
//! degree `α̃·T_p`. Writing `ℓ = β·L`,
//!
//! ```text
//! e = α̃·E       = (relative_degree − n·ℓ) / (n+1)
//! x = α̃·π*L     = (relative_degree + ℓ) / (n+1)  = ℓ + e
//! ```
//!
//! and both must be integers for the class to exist.

use crate::parabolic::ParabolicData;
use crate::rootsys::Weight;
use crate::{Error, Result};

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("cone arithmetic"))
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("cone arithmetic"))
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("cone arithmetic"))
}

pub(crate) fn checked_dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter()
        .zip(b)
        .try_fold(0i64, |acc, (x, y)| add(acc, mul(*x, *y)?))
}

/// A curve class on the blow-up `X̃`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TildeClass {
    /// `p_*α̃`, indexed like `α(p)`.
    pub beta: Vec<i64>,
    /// `α̃·T_p`.
    pub relative_degree: i64,
}

impl TildeClass {
    pub fn new(beta: Vec<i64>, relative_degree: i64) -> Self {
        TildeClass {
            beta,
            relative_degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConeSpace {
    parabolic: ParabolicData,
    lambda: Weight,
    ell: Vec<i64>,
    n: i64,
    dim_x: i64,
}

impl ConeSpace {
    pub fn new(parabolic: ParabolicData, lambda: Weight, vertex_dim: i64) -> Result<Self> {
        if vertex_dim < 1 {
            return Err(Error::input(
                "vertex-dim",
                format!(
                    "must be >= 1, got {vertex_dim}; with no vertex X = G/P and \
                     Mor_beta(G/P) has dimension c1(G/P).beta + dim G/P"
                ),
            ));
        }
        let ell = parabolic.validate_ample(&lambda)?;
        let dim_x = add(parabolic.dim_gp(), vertex_dim)?;
        Ok(ConeSpace {
            parabolic,
            lambda,
            ell,
            n: vertex_dim,
            dim_x,
        })
    }

    /// The cone over `G/P` embedded by its smallest ample weight.
    pub fn with_minimal_ample(parabolic: ParabolicData, vertex_dim: i64) -> Result<Self> {
        let lambda = parabolic.minimal_ample();
        Self::new(parabolic, lambda, vertex_dim)
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `ℓ_α = ⟨α∨, λ⟩` for `α ∈ α(p)`.
    pub fn ell(&self) -> &[i64] {
        &self.ell
    }

    pub fn vertex_dim(&self) -> i64 {
        self.n
    }

    /// `dim X = dim X̃ = dim G/P + n`.
    pub fn dim_x(&self) -> i64 {
        self.dim_x
    }

    /// `β·L`.
    pub fn ell_of(&self, beta: &[i64]) -> Result<i64> {
        self.check_len(beta)?;
        checked_dot(beta, &self.ell)
    }

    fn check_len(&self, beta: &[i64]) -> Result<()> {
        if beta.len() != self.ell.len() {
            return Err(Error::InvalidClass(format!(
                "beta has {} coordinates, Picard rank is {}",
                beta.len(),
                self.ell.len()
            )));
        }
        Ok(())
    }

    /// Whether `G/P` contains lines in the embedding by `L`, i.e. some
    /// effective class has `L`-degree 1.
    pub fn has_lines(&self) -> bool {
        self.ell.iter().min() == Some(&1)
    }

    /// No lines ⟺ `λ ≥ κ` coordinatewise on simple roots (`κ` pairing to 2
    /// on `α(p)`). Always true; exposed for the sweeps.
    pub fn lemma_equiv_check(&self) -> bool {
        let kappa = self.parabolic.kappa();
        let dominates = self
            .lambda
            .coords()
            .iter()
            .zip(kappa.coords())
            .all(|(l, k)| l >= k);
        !self.has_lines() == dominates
    }

    fn divide_exact(&self, numer: i64, what: &str) -> Result<i64> {
        let m = self.n + 1;
        if numer % m != 0 {
            return Err(Error::InvalidClass(format!(
                "{what} = {numer}/{m} is not an integer"
            )));
        }
        Ok(numer / m)
    }

    /// `α̃·E`.
    pub fn e_intersection(&self, t: &TildeClass) -> Result<i64> {
        let ell = self.ell_of(&t.beta)?;
        let numer = sub(t.relative_degree, mul(self.n, ell)?)?;
        self.divide_exact(numer, "alpha~.E")
    }

    /// `x = α̃·π*L`, the degree of the twisting sheaf `O(x)` of a section
    /// over a curve of class `β`.
    pub fn x_degree(&self, t: &TildeClass) -> Result<i64> {
        let ell = self.ell_of(&t.beta)?;
        self.divide_exact(add(t.relative_degree, ell)?, "alpha~.pi*L")
    }

    /// Total degree `π_*α̃·L`, computed as `ℓ + e` and checked against
    /// `α̃·π*L`.
    pub fn total_degree(&self, t: &TildeClass) -> Result<i64> {
        let via_e = add(self.ell_of(&t.beta)?, self.e_intersection(t)?)?;
        let via_pullback = self.x_degree(t)?;
        if via_e != via_pullback {
            return Err(Error::Internal(format!(
                "total degree mismatch: l+e = {via_e}, alpha~.pi*L = {via_pullback}"
            )));
        }
        Ok(via_e)
    }

    /// Whether `Mor_α̃(X̃)` is nonempty: `β` effective, and `x ≥ 0` for
    /// `n ≥ 2`, `x = 0` or `x ≥ ℓ` for `n = 1`.
    pub fn is_nonempty(&self, t: &TildeClass) -> Result<bool> {
        self.e_intersection(t)?;
        if t.beta.iter().any(|&b| b < 0) {
            return Ok(false);
        }
        let ell = self.ell_of(&t.beta)?;
        let x = self.x_degree(t)?;
        Ok(if self.n == 1 {
            x == 0 || x >= ell
        } else {
            x >= 0
        })
    }

    fn require_nonempty(&self, t: &TildeClass) -> Result<()> {
        if self.is_nonempty(t)? {
            Ok(())
        } else {
            Err(Error::EmptyClass(format!(
                "no morphisms of class beta={:?}, relative degree {}",
                t.beta, t.relative_degree
            )))
        }
    }

    /// Dimension of the fiber of `Mor_α̃(X̃) → Mor_β(G/P)`.
    ///
    /// When `x < ℓ` every section lies in `E` and the fiber is
    /// `n·x + n − 1` dimensional; otherwise it is `relative_degree + n`.
    pub fn fiber_dim(&self, t: &TildeClass) -> Result<i64> {
        self.require_nonempty(t)?;
        let ell = self.ell_of(&t.beta)?;
        let x = self.x_degree(t)?;
        if x < ell {
            sub(add(mul(self.n, x)?, self.n)?, 1)
        } else {
            add(t.relative_degree, self.n)
        }
    }

    /// `∫_α̃ c₁(T_X̃) = Σ β_α·c_α + relative_degree`, with the true Chern
    /// degrees of `G/P`.
    pub fn chern_degree_tilde(&self, t: &TildeClass) -> Result<i64> {
        self.check_len(&t.beta)?;
        add(
            checked_dot(&t.beta, self.parabolic.chern_degrees())?,
            t.relative_degree,
        )
    }

    /// Dimension through the fibration: `dim Mor_β(G/P) + fiber_dim`.
    pub fn dim_mor_tilde_by_fibration(&self, t: &TildeClass) -> Result<i64> {
        let base = add(
            checked_dot(&t.beta, self.parabolic.chern_degrees())?,
            self.parabolic.dim_gp(),
        )?;
        add(base, self.fiber_dim(t)?)
    }

    /// Dimension through the expected-dimension formula, corrected by
    /// `e + 1` when the curves are forced into `E`.
    pub fn dim_mor_tilde_by_chern(&self, t: &TildeClass) -> Result<i64> {
        self.require_nonempty(t)?;
        let expected = add(self.chern_degree_tilde(t)?, self.dim_x)?;
        let ell = self.ell_of(&t.beta)?;
        if t.relative_degree >= mul(self.n, ell)? {
            Ok(expected)
        } else {
            let e = self.e_intersection(t)?;
            sub(sub(expected, e)?, 1)
        }
    }

    /// `dim Mor_α̃(X̃)`, computed both ways and cross-checked.
    pub fn dim_mor_tilde(&self, t: &TildeClass) -> Result<i64> {
        let by_chern = self.dim_mor_tilde_by_chern(t)?;
        let by_fibration = self.dim_mor_tilde_by_fibration(t)?;
        if by_chern != by_fibration {
            return Err(Error::Internal(format!(
                "dimension mismatch for beta={:?}, relative degree {}: {by_chern} vs {by_fibration}",
                t.beta, t.relative_degree
            )));
        }
        Ok(by_chern)
    }
}
