//! Exact computation of indices of holomorphic 1-forms on germs of complex
//! analytic varieties with isolated singularities.
//!
//! The library computes three indices attached to a 1-form `ω = Σ Aᵢ dxᵢ`
//! restricted to a germ `(V,0) ⊂ (ℂᴺ,0)`:
//!
//! * the algebraic index of a form on an isolated complete intersection,
//!   as the colength of the ideal spanned by the defining equations and the
//!   maximal minors of the Jacobian matrix extended by the coefficient row
//!   ([`indices::egz_index`]);
//! * the homological index, the Euler characteristic (up to sign) of the
//!   complex of Kähler differential modules with the wedge-by-`ω` maps
//!   ([`indices::hom_index_curve`], [`indices::hom_index_graded`]);
//! * the radial index of a form on a parametrized curve, from the vanishing
//!   orders of the pullbacks to the branches ([`curves::radial_index_curve`]).
//!
//! The difference `ν = Ind_hom − Ind_rad` does not depend on the form and is
//! an invariant of the singularity ([`indices::nu_curve`]); for curves it is
//! cross-checked against `dim Ω¹/dO` ([`indices::nu_direct_curve`]).
//!
//! Everything is exact: coefficients are arbitrary-precision rationals, and
//! dimensions come from standard bases (Buchberger for global monomial
//! orders, Mora's tangent-cone algorithm for local ones).
//!
//! See the `examples/` directory for one runnable program per capability,
//! and the `formindex` binary for the file-driven command-line interface.

pub mod curves;
pub mod differentials;
pub mod dimension;
pub mod error;
pub mod freemod;
pub mod germfile;
pub mod indices;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod ratfun;
pub mod rational;
pub mod report;
pub mod series;
pub mod stdbasis;

pub mod cli;
pub(crate) mod linalg;

pub use curves::{BranchPullback, CurveParametrization};
pub use differentials::{OneForm, VarietyGerm};
pub use dimension::{Dimension, GradedPresentation, PoincareSeriesResult};
pub use error::Error;
pub use freemod::{FreeElement, SubmodulePresentation};
pub use germfile::GermFile;
pub use monomial::Monomial;
pub use order::{ModuleOrder, MonomialOrder};
pub use polynomial::{Polynomial, Ring};
pub use ratfun::{RationalFunction, UniPoly};
pub use rational::Rat;
pub use report::IndexReport;
pub use series::TruncatedSeries;
