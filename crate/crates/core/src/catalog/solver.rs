//! Admissible data on abelian Euclidean bases of dimension 1 and 2.
//!
//! On an abelian base the cocycle and derivation conditions are empty, so
//! admissibility reduces to `A = D − ξ` skew and `[A, ξ] = ξ² − μξ`.

use num_traits::Zero;

use super::CatalogFamily;
use crate::double_extension::AdmissibleTuple;
use crate::error::{Error, Result};
use crate::linalg::{GramMatrix, Matrix, Scalar, Vector};
use crate::metric_lie::MetricLieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchKind {
    /// dim 1: `D = ξ = 0`.
    LineZero,
    /// dim 1: `D = ξ = μ`.
    LineMu,
    /// dim 2: `A = 0`, `ξ = [[μ,0],[λ,0]]`.
    A,
    /// dim 2: `ξ = μ·Id`, `A = [[0,−γ],[γ,0]]`.
    B,
    /// dim 2: `ξ = 0`, `A = [[0,−γ],[γ,0]]`.
    C,
    /// dim 2: `ξ = diag(μ,0)`, `A = 0`.
    D,
}

/// A family of admissible tuples on the abelian Euclidean base, with its
/// free parameters; `b₀` is free in every branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionBranch {
    pub kind: BranchKind,
    pub mu: Scalar,
}

fn rotation_generator(gamma: &Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![Scalar::zero(), -gamma.clone()], vec![gamma.clone(), Scalar::zero()]])
        .expect("2x2")
}

/// Abelian algebra with orthonormal basis `b1, …, bm`.
pub fn abelian_base(m: usize) -> MetricLieAlgebra {
    let names = (1..=m).map(|i| format!("b{i}")).collect();
    MetricLieAlgebra::abelian(names, GramMatrix::identity(m)).expect("identity metric")
}

impl SolutionBranch {
    pub fn label(&self) -> &'static str {
        match self.kind {
            BranchKind::LineZero => "zero",
            BranchKind::LineMu => "mu",
            BranchKind::A => "a",
            BranchKind::B => "b",
            BranchKind::C => "c",
            BranchKind::D => "d",
        }
    }

    pub fn description(&self) -> String {
        let mu = &self.mu;
        match self.kind {
            BranchKind::LineZero => "D = xi = 0".into(),
            BranchKind::LineMu => format!("D = xi = {mu}"),
            BranchKind::A => format!("A = 0, xi = [[{mu}, 0], [lambda, 0]]"),
            BranchKind::B => format!("A = [[0, -gamma], [gamma, 0]], xi = {mu} Id"),
            BranchKind::C => "A = [[0, -gamma], [gamma, 0]], xi = 0".into(),
            BranchKind::D => format!("A = 0, xi = diag({mu}, 0)"),
        }
    }

    pub fn base_dim(&self) -> usize {
        match self.kind {
            BranchKind::LineZero | BranchKind::LineMu => 1,
            _ => 2,
        }
    }

    pub fn free_parameters(&self) -> &'static [&'static str] {
        match self.kind {
            BranchKind::A => &["lambda"],
            BranchKind::B | BranchKind::C => &["gamma"],
            _ => &[],
        }
    }

    /// `(ξ, A)` at the given values of the free parameters.
    pub fn xi_and_skew(&self, params: &[Scalar]) -> Result<(Matrix, Matrix)> {
        if params.len() != self.free_parameters().len() {
            return Err(Error::BadParameters(format!(
                "branch {} takes {} parameter(s), got {}",
                self.label(),
                self.free_parameters().len(),
                params.len()
            )));
        }
        let mu = &self.mu;
        let z = Scalar::zero;
        Ok(match self.kind {
            BranchKind::LineZero => (Matrix::zeros(1, 1), Matrix::zeros(1, 1)),
            BranchKind::LineMu => (Matrix::from_diagonal(std::slice::from_ref(mu)), Matrix::zeros(1, 1)),
            BranchKind::A => (
                Matrix::from_rows(vec![vec![mu.clone(), z()], vec![params[0].clone(), z()]])?,
                Matrix::zeros(2, 2),
            ),
            BranchKind::B => (Matrix::identity(2).scale(mu), rotation_generator(&params[0])),
            BranchKind::C => (Matrix::zeros(2, 2), rotation_generator(&params[0])),
            BranchKind::D => (Matrix::from_diagonal(&[mu.clone(), z()]), Matrix::zeros(2, 2)),
        })
    }

    /// The tuple `(ξ, D = ξ + A, μ, b₀)` on the abelian Euclidean base.
    pub fn instantiate(&self, params: &[Scalar], b0: &Vector) -> Result<AdmissibleTuple> {
        let (xi, a) = self.xi_and_skew(params)?;
        let dee = &xi + &a;
        AdmissibleTuple::new(abelian_base(self.base_dim()), xi, dee, self.mu.clone(), b0.clone())
    }

    /// The catalog member whose structure constants the extension of
    /// [`instantiate`](Self::instantiate) reproduces exactly.
    ///
    /// The `e`-components of `[ē, b]` are `−⟨b₀, b⟩`, so the catalog's
    /// `α, β` are the negated coordinates of `b₀`.
    pub fn target_family(&self, params: &[Scalar], b0: &Vector) -> Result<CatalogFamily> {
        self.xi_and_skew(params)?;
        if b0.len() != self.base_dim() {
            return Err(Error::DimensionMismatch { expected: self.base_dim(), found: b0.len() });
        }
        let mu = self.mu.clone();
        let alpha = -b0[0].clone();
        let beta = || -b0[1].clone();
        let zero = Scalar::zero;
        let one = || Scalar::from_integer(1.into());
        Ok(match self.kind {
            BranchKind::LineZero => CatalogFamily::g3(mu, alpha),
            BranchKind::LineMu => CatalogFamily::g3p(mu, alpha),
            BranchKind::A => CatalogFamily::g4(mu, params[0].clone(), alpha, beta()),
            BranchKind::B => CatalogFamily::g4p(one(), mu, params[0].clone(), alpha, beta()),
            BranchKind::C => CatalogFamily::g4p(zero(), mu, params[0].clone(), alpha, beta()),
            BranchKind::D => CatalogFamily::g4(mu, zero(), alpha, beta()),
        })
    }
}

/// The two branches on a line: `D = ξ ∈ {0, μ}`.
pub fn solve_admissible_dim1(mu: &Scalar) -> Result<Vec<SolutionBranch>> {
    nonzero(mu)?;
    Ok([BranchKind::LineZero, BranchKind::LineMu].map(|kind| SolutionBranch { kind, mu: mu.clone() }).to_vec())
}

/// The branches on the Euclidean plane.
///
/// Branch `d` carries `A = 0`: with `ξ = diag(μ,0)` the commutator `[A, ξ]`
/// is off-diagonal with entries `∓γμ` while `ξ² − μξ = 0`.
pub fn solve_admissible_dim2(mu: &Scalar) -> Result<Vec<SolutionBranch>> {
    nonzero(mu)?;
    Ok([BranchKind::A, BranchKind::B, BranchKind::C, BranchKind::D]
        .map(|kind| SolutionBranch { kind, mu: mu.clone() })
        .to_vec())
}

fn nonzero(mu: &Scalar) -> Result<()> {
    if mu.is_zero() {
        return Err(Error::BadParameters("mu must be nonzero".into()));
    }
    Ok(())
}

/// Exact membership of `(ξ, D)` in the union of the branches, up to a
/// rotation of the base. On the plane this reads: `A` skew, and either
/// `ξ ∈ {0, μ·Id}` or `A = 0` with `det ξ = 0`, `tr ξ = μ`.
pub fn in_branch_union(mu: &Scalar, xi: &Matrix, dee: &Matrix) -> bool {
    let a = dee - xi;
    if !(&a + &a.transpose()).is_zero() {
        return false;
    }
    let n = xi.rows();
    match n {
        1 => a.is_zero() && (xi.is_zero() || xi[(0, 0)] == *mu),
        2 => {
            xi.is_zero()
                || *xi == Matrix::identity(2).scale(mu)
                || (a.is_zero() && xi.determinant().is_zero() && xi.trace() == *mu)
        }
        _ => false,
    }
}
