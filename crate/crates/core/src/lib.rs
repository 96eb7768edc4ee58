//! Rational curves on cones over homogeneous varieties.
//!
//! Given a simple group `G`, a standard parabolic `P`, an ample weight `λ`
//! in the facet of `P` and a vertex dimension `n`, the cone
//! `X = C_{λ,n}(G/P)` is the projective cone over `G/P ⊂ ℙ(H⁰L)` with a
//! `ℙ^{n-1}` as vertex. This crate classifies the irreducible components
//! of `Mor_d(ℙ¹, X)` for every degree `d`, computing their dimensions and
//! the multiplicity of the generic curve at the vertex.
//!
//! Everything is exact integer arithmetic. The modules build on each other:
//!
//! * [`rootsys`]: Cartan data, positive roots, `ρ`, highest root, Weyl dimension.
//! * [`parabolic`]: the parabolic `P`, its Picard lattice and Chern degrees.
//! * [`conegeom`]: the cone, its resolution `X̃ = ℙ_{G/P}(V⊗O ⊕ L)` and
//!   curve classes on it.
//! * [`components`]: the component classifier.
//! * [`affine`]: level-`k` dominant weights of untwisted affine algebras.
//! * [`report`]: JSON/TSV wire formats.
//! * [`selfcheck`]: the built-in oracle suites.
//!
//! Simple roots are indexed from 0 in the library and from 1 on the
//! command line. Numbering follows Bourbaki throughout.

pub mod affine;
pub mod components;
pub mod conegeom;
mod error;
mod lattice;
pub mod parabolic;
pub mod report;
pub mod rootsys;
pub mod selfcheck;

pub use error::{Error, Result};
