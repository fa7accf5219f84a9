use num_traits::{Signed, Zero};

use super::{Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// Result of a symmetric congruence diagonalization: `pᵀ · g · p = diag(diagonal)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub p: Matrix,
    pub diagonal: Vec<Scalar>,
}

/// Diagonalizes a symmetric matrix by simultaneous row/column elimination.
///
/// Zero pivots are repaired by a symmetric swap with a later nonzero
/// diagonal entry, or, when the whole remaining diagonal vanishes, by adding
/// the partner of a hyperbolic pair (which makes the pivot `2·g[k][j]`).
/// Fails with [`Error::Degenerate`] when a row vanishes.
pub fn congruence_diagonalize(g: &Matrix) -> Result<Congruence> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut p = Matrix::identity(n);

    // a <- Eᵀ a E and p <- p E, where E adds `s` times column `src` to column `dst`.
    let add_col = |a: &mut Matrix, p: &mut Matrix, dst: usize, src: usize, s: &Scalar| {
        for r in 0..n {
            let v = &a[(r, dst)] + s * &a[(r, src)];
            a[(r, dst)] = v;
            let v = &p[(r, dst)] + s * &p[(r, src)];
            p[(r, dst)] = v;
        }
        for c in 0..n {
            let v = &a[(dst, c)] + s * &a[(src, c)];
            a[(dst, c)] = v;
        }
    };

    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                for r in 0..n {
                    let tmp = a[(r, k)].clone();
                    a[(r, k)] = a[(r, j)].clone();
                    a[(r, j)] = tmp;
                    let tmp = p[(r, k)].clone();
                    p[(r, k)] = p[(r, j)].clone();
                    p[(r, j)] = tmp;
                }
                for c in 0..n {
                    let tmp = a[(k, c)].clone();
                    a[(k, c)] = a[(j, c)].clone();
                    a[(j, c)] = tmp;
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                add_col(&mut a, &mut p, k, j, &super::one());
            } else {
                return Err(Error::Degenerate);
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] / &pivot);
            add_col(&mut a, &mut p, i, k, &f);
        }
    }
    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Ok(Congruence { p, diagonal })
}

/// Sylvester signature `(negative, positive)` of a nondegenerate symmetric matrix.
pub fn signature(g: &Matrix) -> Result<(usize, usize)> {
    let c = congruence_diagonalize(g)?;
    let neg = c.diagonal.iter().filter(|d| d.is_negative()).count();
    Ok((neg, c.diagonal.len() - neg))
}

/// Symmetric nondegenerate bilinear form, stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    m: Matrix,
    inv: Matrix,
}

impl GramMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let inv = m.inverse().map_err(|_| Error::Degenerate)?;
        Ok(GramMatrix { m, inv })
    }

    pub fn identity(n: usize) -> Self {
        GramMatrix { m: Matrix::identity(n), inv: Matrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inv
    }

    pub fn inner(&self, u: &Vector, v: &Vector) -> Scalar {
        u.dot(&self.m.mul_vec(v))
    }

    /// `g · v`, the covector `⟨v, ·⟩` in coordinates.
    pub fn lower(&self, v: &Vector) -> Vector {
        self.m.mul_vec(v)
    }

    /// The vector `x` with `⟨x, e_i⟩ = c_i` for every basis vector.
    pub fn raise(&self, c: &Vector) -> Vector {
        self.inv.mul_vec(c)
    }

    pub fn signature(&self) -> (usize, usize) {
        signature(&self.m).expect("GramMatrix is nondegenerate by construction")
    }

    /// Metric adjoint `g⁻¹ · mᵀ · g`.
    pub fn adjoint(&self, m: &Matrix) -> Matrix {
        &(&self.inv * &m.transpose()) * &self.m
    }

    /// True iff `⟨m u, v⟩ + ⟨u, m v⟩ = 0` for all `u, v`.
    pub fn is_skew(&self, m: &Matrix) -> bool {
        let gm = &self.m * m;
        (&gm + &gm.transpose()).is_zero()
    }

    pub fn is_self_adjoint(&self, m: &Matrix) -> bool {
        let gm = &self.m * m;
        gm == gm.transpose()
    }

    pub fn orthogonal_complement(&self, span: &[Vector]) -> Vec<Vector> {
        let n = self.dim();
        if span.is_empty() {
            return (0..n).map(|i| Vector::basis(n, i)).collect();
        }
        let rows: Vec<Vector> = span.iter().map(|s| self.lower(s)).collect();
        Matrix::from_fn(rows.len(), n, |i, j| rows[i][j].clone()).nullspace()
    }

    /// Gram matrix of the restriction to the span of `basis`.
    pub fn restrict(&self, basis: &[Vector]) -> Matrix {
        let k = basis.len();
        Matrix::from_fn(k, k, |i, j| self.inner(&basis[i], &basis[j]))
    }
}

pub fn adjoint_wrt(g: &GramMatrix, m: &Matrix) -> Result<Matrix> {
    if m.rows() != g.dim() || m.cols() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: m.rows() });
    }
    Ok(g.adjoint(m))
}

pub fn orthogonal_complement(g: &GramMatrix, span: &[Vector]) -> Vec<Vector> {
    g.orthogonal_complement(span)
}

/// Cayley transform `(I − S)(I + S)⁻¹` of `S = g⁻¹ k`, an isometry of `g`
/// whenever `k` is antisymmetric. Fails with [`Error::Singular`] when `I + S`
/// is not invertible.
pub fn cayley_isometry(g: &GramMatrix, k: &Matrix) -> Result<Matrix> {
    let n = g.dim();
    if k.rows() != n || k.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: k.rows() });
    }
    if !(k + &k.transpose()).is_zero() {
        return Err(Error::NotSkew);
    }
    let s = g.inverse() * k;
    let id = Matrix::identity(n);
    let inv = (&id + &s).inverse()?;
    Ok(&(&id - &s) * &inv)
}
