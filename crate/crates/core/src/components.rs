//! Irreducible components of `Mor_d(ℙ¹, X)` for a homogeneous cone `X`.
//!
//! Components are indexed by effective classes `β ∈ A₁(G/P)`:
//!
//! * with lines (`min ℓ_α = 1`), by `ne(d) = {β ≥ 0 : β·L = d}`; the generic
//!   curve misses the vertex;
//! * without lines, by `ne(d′)` for every `0 ≤ d′ ≤ d`; the generic curve
//!   of such a component passes through the vertex with multiplicity
//!   `d − d′`.
//!
//! In both cases the component of `β` has dimension
//! `β·(c₁(T_{G/P}) − L) + (n+1)·d + dim X`.

use serde::{Deserialize, Serialize};

use crate::conegeom::{checked_dot, ConeSpace, TildeClass};
use crate::lattice::weighted_compositions;
use crate::rootsys::CartanType;
use crate::{Error, Result};

/// A nonnegative class `β`, indexed like `α(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EffectiveClass(Vec<i64>);

impl EffectiveClass {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|&&c| c < 0) {
            return Err(Error::InvalidClass(format!(
                "effective class has negative coefficient {c}"
            )));
        }
        Ok(EffectiveClass(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    Lines,
    NoLines,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDescriptor {
    pub beta: EffectiveClass,
    /// `β·L`, the degree of the projection to `G/P`.
    pub alpha_prime: i64,
    /// `d − α′`, the multiplicity of the generic curve at the vertex.
    pub vertex_multiplicity: i64,
    /// The class on `X̃` whose morphisms dominate the component.
    pub tilde: TildeClass,
    pub dimension: i64,
}

impl ComponentDescriptor {
    /// Checks the descriptor against the cone at total degree `degree`:
    /// degrees add up, the lift meets `E` in the vertex multiplicity, is
    /// nonempty, and its dimension matches the stored one.
    pub fn validate(&self, cone: &ConeSpace, degree: i64) -> Result<()> {
        let bad = |what: String| Err(Error::Internal(what));
        let ell = cone.ell_of(self.beta.coeffs())?;
        if ell != self.alpha_prime {
            return bad(format!("alpha' = {} but beta.L = {ell}", self.alpha_prime));
        }
        if self.alpha_prime + self.vertex_multiplicity != degree {
            return bad(format!(
                "alpha' + multiplicity = {} != degree {degree}",
                self.alpha_prime + self.vertex_multiplicity
            ));
        }
        if self.tilde.beta != self.beta.coeffs() {
            return bad("lift does not push forward to beta".into());
        }
        let e = cone.e_intersection(&self.tilde)?;
        if e != self.vertex_multiplicity {
            return bad(format!(
                "lift meets E in {e}, multiplicity is {}",
                self.vertex_multiplicity
            ));
        }
        if !cone.is_nonempty(&self.tilde)? {
            return bad(format!("lift of beta={:?} is empty", self.beta.coeffs()));
        }
        let dim = cone.dim_mor_tilde(&self.tilde)?;
        if dim != self.dimension {
            return bad(format!(
                "component dimension {} disagrees with the lift's {dim}",
                self.dimension
            ));
        }
        Ok(())
    }
}

/// What identifies the cone in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSummary {
    pub cartan_type: CartanType,
    /// 0-based.
    pub parabolic: Vec<usize>,
    pub lambda: Vec<i64>,
    pub ell: Vec<i64>,
    pub vertex_dim: i64,
    pub dim_x: i64,
}

impl From<&ConeSpace> for ConeSummary {
    fn from(c: &ConeSpace) -> Self {
        ConeSummary {
            cartan_type: c.parabolic().root_system().cartan_type(),
            parabolic: c.parabolic().alpha_p().to_vec(),
            lambda: c.lambda().coords().to_vec(),
            ell: c.ell().to_vec(),
            vertex_dim: c.vertex_dim(),
            dim_x: c.dim_x(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub cone: ConeSummary,
    pub total_degree: i64,
    pub case: Case,
    pub components: Vec<ComponentDescriptor>,
    pub equidimensional: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Drop the strata with `β = 0` and positive vertex multiplicity
    /// (curves in the vertex rulings).
    pub exclude_vertex_stratum: bool,
}

/// `ne(d)`: effective classes of `L`-degree `d`, graded lexicographic.
pub fn ne(cone: &ConeSpace, degree: u32) -> Vec<EffectiveClass> {
    weighted_compositions(cone.ell(), i64::from(degree))
        .into_iter()
        .map(EffectiveClass)
        .collect()
}

/// `β·L`.
pub fn total_degree(cone: &ConeSpace, beta: &EffectiveClass) -> Result<i64> {
    cone.ell_of(beta.coeffs())
}

/// `β·(c − ℓ) + (n+1)·d + dim X`.
fn component_dimension(cone: &ConeSpace, beta: &EffectiveClass, degree: i64) -> Result<i64> {
    let diff: Vec<i64> = cone
        .parabolic()
        .chern_degrees()
        .iter()
        .zip(cone.ell())
        .map(|(c, l)| c - l)
        .collect();
    let variable = checked_dot(beta.coeffs(), &diff)?;
    let fixed = (cone.vertex_dim() + 1)
        .checked_mul(degree)
        .and_then(|v| v.checked_add(cone.dim_x()))
        .ok_or(Error::Overflow("component dimension"))?;
    variable
        .checked_add(fixed)
        .ok_or(Error::Overflow("component dimension"))
}

fn descriptor(
    cone: &ConeSpace,
    beta: EffectiveClass,
    sub_degree: i64,
    degree: i64,
) -> Result<ComponentDescriptor> {
    let n = cone.vertex_dim();
    let multiplicity = degree - sub_degree;
    let relative_degree = (n + 1)
        .checked_mul(multiplicity)
        .and_then(|a| n.checked_mul(sub_degree).and_then(|b| a.checked_add(b)))
        .ok_or(Error::Overflow("relative degree"))?;
    let dimension = component_dimension(cone, &beta, degree)?;
    let d = ComponentDescriptor {
        tilde: TildeClass::new(beta.coeffs().to_vec(), relative_degree),
        beta,
        alpha_prime: sub_degree,
        vertex_multiplicity: multiplicity,
        dimension,
    };
    d.validate(cone, degree)?;
    Ok(d)
}

pub fn classify(cone: &ConeSpace, degree: u32) -> Result<ComponentReport> {
    classify_with(cone, degree, ClassifyOptions::default())
}

pub fn classify_with(
    cone: &ConeSpace,
    degree: u32,
    options: ClassifyOptions,
) -> Result<ComponentReport> {
    let total = i64::from(degree);
    let case = if cone.has_lines() {
        Case::Lines
    } else {
        Case::NoLines
    };
    let sub_degrees: Vec<u32> = match case {
        Case::Lines => vec![degree],
        // multiplicity ascending
        Case::NoLines => (0..=degree).rev().collect(),
    };
    let mut components = Vec::new();
    for sub in sub_degrees {
        for beta in ne(cone, sub) {
            let d = descriptor(cone, beta, i64::from(sub), total)?;
            if options.exclude_vertex_stratum && d.beta.is_zero() && d.vertex_multiplicity > 0 {
                continue;
            }
            components.push(d);
        }
    }
    let equidimensional = components
        .windows(2)
        .all(|w| w[0].dimension == w[1].dimension);
    Ok(ComponentReport {
        cone: ConeSummary::from(cone),
        total_degree: total,
        case,
        components,
        equidimensional,
    })
}

/// Number of components, without building them.
pub fn count_components(cone: &ConeSpace, degree: u32) -> u64 {
    let count = |d| weighted_compositions(cone.ell(), i64::from(d)).len() as u64;
    if cone.has_lines() {
        count(degree)
    } else {
        (0..=degree).map(count).sum()
    }
}

/// Equidimensionality of `Mor_d(X)` by direct computation, next to the
/// closed-form criterion (`2L = c₁` with lines, `L = c₁` without).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquidimensionalityDiagnostic {
    pub equidimensional: bool,
    pub chern_predicate: bool,
    pub agree: bool,
}

pub fn is_equidimensional(cone: &ConeSpace, degree: u32) -> Result<EquidimensionalityDiagnostic> {
    let report = classify(cone, degree)?;
    let chern = cone.parabolic().chern_degrees();
    let chern_predicate = match report.case {
        Case::Lines => chern.iter().zip(cone.ell()).all(|(c, l)| *c == 2 * l),
        Case::NoLines => chern.iter().zip(cone.ell()).all(|(c, l)| c == l),
    };
    Ok(EquidimensionalityDiagnostic {
        equidimensional: report.equidimensional,
        chern_predicate,
        agree: report.equidimensional == chern_predicate,
    })
}
