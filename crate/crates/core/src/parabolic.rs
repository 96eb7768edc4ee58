//! Standard parabolic subgroups `P ⊃ B` and the data of `G/P` that the
//! curve-counting formulas need.
//!
//! `P` is described by `α(p)`, the simple roots whose negative root space
//! is *not* in the Lie algebra of `P`. The Picard lattice of `G/P` has one
//! generator per element of `α(p)` and curve classes `β ∈ A₁(G/P)` are
//! integer vectors indexed by `α(p)`.

use std::collections::BTreeSet;

use crate::rootsys::{Root, RootSystem, Weight};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ParabolicData {
    rs: RootSystem,
    alpha_p: Vec<usize>,
    nilradical: Vec<Root>,
    chern_degrees: Vec<i64>,
}

impl ParabolicData {
    /// `alpha_p` holds 0-based simple-root indices; order and duplicates are
    /// irrelevant.
    pub fn new(rs: RootSystem, alpha_p: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = alpha_p.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::input(
                "parabolic",
                "alpha(p) must be nonempty (G/P would be a point)",
            ));
        }
        if let Some(&bad) = set.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::input(
                "parabolic",
                format!("index {} out of range 1..={}", bad + 1, rs.rank()),
            ));
        }
        let alpha_p: Vec<usize> = set.into_iter().collect();
        let nilradical: Vec<Root> = rs
            .positive_roots()
            .iter()
            .filter(|g| g.support().any(|i| alpha_p.binary_search(&i).is_ok()))
            .cloned()
            .collect();
        let chern_degrees = alpha_p
            .iter()
            .map(|&a| {
                nilradical
                    .iter()
                    .map(|g| rs.pair(a, g))
                    .sum::<Result<i64>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ParabolicData {
            rs,
            alpha_p,
            nilradical,
            chern_degrees,
        })
    }

    /// Parses a comma-separated list of 1-based indices such as `"1,3"`.
    pub fn parse_indices(s: &str) -> Result<Vec<usize>> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::input("parabolic", "empty index list"));
        }
        s.split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::input("parabolic", format!("bad index {t:?}"))),
            })
            .collect()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Sorted 0-based indices of `α(p)`.
    pub fn alpha_p(&self) -> &[usize] {
        &self.alpha_p
    }

    pub fn picard_rank(&self) -> usize {
        self.alpha_p.len()
    }

    /// Positive roots outside the Levi factor.
    pub fn nilradical(&self) -> &[Root] {
        &self.nilradical
    }

    /// `c_α = ⟨α∨, Σ nilradical⟩` for each `α ∈ α(p)`, in the order of
    /// [`alpha_p`](Self::alpha_p). This is the degree of `c₁(T_{G/P})` on
    /// the Schubert line dual to `ϖ_α`.
    pub fn chern_degrees(&self) -> &[i64] {
        &self.chern_degrees
    }

    pub fn dim_gp(&self) -> i64 {
        self.nilradical.len() as i64
    }

    /// The weight pairing to 2 with every coroot of `α(p)` and to 0
    /// elsewhere (`2ρ` for a Borel). It stands in for `c₁(G/P)` in the
    /// lines/no-lines dichotomy only.
    pub fn kappa(&self) -> Weight {
        self.indicator(2)
    }

    /// The smallest ample weight in the facet of `P`.
    pub fn minimal_ample(&self) -> Weight {
        self.indicator(1)
    }

    fn indicator(&self, value: i64) -> Weight {
        let mut v = vec![0; self.rs.rank()];
        for &i in &self.alpha_p {
            v[i] = value;
        }
        Weight::new(v)
    }

    /// Checks that `lambda` is ample in the facet of `P` and returns its
    /// degrees `ℓ_α = ⟨α∨, λ⟩` on `α(p)`.
    pub fn validate_ample(&self, lambda: &Weight) -> Result<Vec<i64>> {
        let rank = self.rs.rank();
        if lambda.coords().len() != rank {
            return Err(Error::input(
                "lambda",
                format!("expected {rank} coordinates, got {}", lambda.coords().len()),
            ));
        }
        let mut ell = Vec::with_capacity(self.alpha_p.len());
        for (i, &c) in lambda.coords().iter().enumerate() {
            let inside = self.alpha_p.binary_search(&i).is_ok();
            if inside && c < 1 {
                return Err(Error::input(
                    "lambda",
                    format!("coordinate {} must be >= 1 on alpha(p), got {c}", i + 1),
                ));
            }
            if !inside && c != 0 {
                return Err(Error::input(
                    "lambda",
                    format!("coordinate {} must be 0 off alpha(p), got {c}", i + 1),
                ));
            }
            if inside {
                ell.push(c);
            }
        }
        Ok(ell)
    }
}
