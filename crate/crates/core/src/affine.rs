//! Level counting for untwisted affine Lie algebras.
//!
//! A dominant integral weight `Σ mᵢ·Λᵢ` of `ĝ` has level `Σ aᵢ∨·mᵢ`, where
//! the comarks `aᵢ∨` are the coefficients of the highest coroot `θ∨` on the
//! simple coroots and `a₀∨ = 1`. The integrable irreducible modules of
//! level exactly `k` are in bijection with these weights.
//!
//! [`compare_ne_ir`] sets the count of such weights against `|ne(d)|` for
//! a cone embedded by its minimal ample weight. The two numbers are
//! reported side by side; nothing here assumes they agree.

use crate::components::ne;
use crate::conegeom::ConeSpace;
use crate::lattice::weighted_compositions;
use crate::rootsys::{positive_roots, symmetrizer, CartanType};
use crate::{Error, Result};

/// The relation under test, printed as the header of the diagnostic.
pub const NE_IR_CLAIM: &str = "claim under test: |ne(d)| = sum over l_1+...+l_r = d of \
     prod_i |level-l_i dominant weights of g_i^|, g_i the simple factors \
     spanned by alpha(p), lambda = sum of their rho_i";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineData {
    cartan_type: CartanType,
    comarks: Vec<i64>,
}

impl AffineData {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let comarks = comarks_of_matrix(&cartan_type.cartan_matrix())?;
        Ok(AffineData {
            cartan_type,
            comarks,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    /// `(a₀∨, a₁∨, …, a_r∨)` with the affine node first.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// `h∨ = Σ aᵢ∨`.
    pub fn dual_coxeter_number(&self) -> i64 {
        self.comarks.iter().sum()
    }

    /// Dominant weights `(m₀, …, m_r)` of level exactly `level`.
    pub fn level_weights(&self, level: u32) -> Vec<Vec<i64>> {
        weighted_compositions(&self.comarks, i64::from(level))
    }
}

/// Comarks of the untwisted affinization of a connected finite-type Cartan
/// matrix, affine node first.
pub(crate) fn comarks_of_matrix(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let d = symmetrizer(cartan)?;
    let roots = positive_roots(cartan)?;
    let theta = roots
        .last()
        .ok_or_else(|| Error::Internal("no positive roots".into()))?
        .coords();
    // (θ,θ) = Σ θᵢθⱼ dᵢ Cᵢⱼ and θ∨ = Σ θᵢ·dᵢ/d_θ · αᵢ∨ with d_θ = (θ,θ)/2.
    let mut norm = 0;
    for (i, row) in cartan.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            norm += theta[i] * theta[j] * d[i] * c;
        }
    }
    let d_theta = norm / 2;
    let mut out = vec![1];
    for (t, di) in theta.iter().zip(&d) {
        if (t * di) % d_theta != 0 {
            return Err(Error::Internal(format!(
                "comark {t}*{di}/{d_theta} is not an integer"
            )));
        }
        out.push(t * di / d_theta);
    }
    Ok(out)
}

/// Connected components of the Dynkin diagram restricted to `nodes`.
fn diagram_components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let a = nodes[comp[k]];
            for (idx, &b) in nodes.iter().enumerate() {
                if !seen[idx] && cartan[a][b] != 0 {
                    seen[idx] = true;
                    comp.push(idx);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp.into_iter().map(|i| nodes[i]).collect());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeIrComparison {
    pub degree: u32,
    /// `|ne(degree)|` on the cone.
    pub ne_count: u64,
    /// The count predicted from affine level-weight enumeration.
    pub ir_count: u64,
    /// Simple-root indices (0-based) of each factor `gᵢ`.
    pub factors: Vec<Vec<usize>>,
    pub matches: bool,
}

/// Compares `|ne(degree)|` with `Σ_{ℓ₁+…+ℓ_r = degree} Π |ir_{ĝᵢ}(ℓᵢ)|`,
/// where the `gᵢ` are the simple factors whose Dynkin diagrams are the
/// connected components of `α(p)`. For a Borel this is the single count
/// `|ir_ĝ(degree)|`. Intended for cones embedded by the minimal ample
/// weight; `ne` is taken on whatever `λ` the cone carries.
pub fn compare_ne_ir(cone: &ConeSpace, degree: u32) -> NeIrComparison {
    let cartan = cone.parabolic().root_system().cartan();
    let factors = diagram_components(cartan, cone.parabolic().alpha_p());
    let levels = degree as usize;
    // convolution of per-factor level counts
    let mut total = vec![0u64; levels + 1];
    total[0] = 1;
    for nodes in &factors {
        let sub: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let comarks =
            comarks_of_matrix(&sub).expect("subdiagram of a finite-type diagram is finite type");
        let counts: Vec<u64> = (0..=levels)
            .map(|k| weighted_compositions(&comarks, k as i64).len() as u64)
            .collect();
        let mut next = vec![0u64; levels + 1];
        for (a, &ta) in total.iter().enumerate() {
            for (b, &cb) in counts.iter().enumerate().take(levels + 1 - a) {
                next[a + b] = next[a + b].saturating_add(ta.saturating_mul(cb));
            }
        }
        total = next;
    }
    let ne_count = ne(cone, degree).len() as u64;
    let ir_count = total[levels];
    NeIrComparison {
        degree,
        ne_count,
        ir_count,
        factors,
        matches: ne_count == ir_count,
    }
}
