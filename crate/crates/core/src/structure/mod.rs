//! Structure of Riemannian flat algebras and canonical forms of skew operators.

mod canonical;
mod splitting;

pub use canonical::{
    lorentz_case, skew_canonical_euclidean, skew_canonical_lorentz, LorentzCase, LorentzKind, RotationBlock,
    SkewCanonicalForm, ORTHONORMAL_TOL, RECONSTRUCTION_TOL,
};
pub use splitting::{milnor_build, riemannian_splitting, weight_space, RiemannianSplitting, SplittingChecks};
