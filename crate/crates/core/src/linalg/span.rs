//! Subspaces represented by spanning lists of vectors.

use super::{Matrix, Vector};

fn stack_rows(n: usize, vectors: &[Vector]) -> Matrix {
    Matrix::from_fn(vectors.len(), n, |i, j| vectors[i][j].clone())
}

/// Canonical basis (nonzero rows of the reduced echelon form) of the span.
/// Two spanning lists generate the same subspace iff their canonical bases agree.
pub fn span_basis(n: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = stack_rows(n, vectors).rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

pub fn span_rank(n: usize, vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    stack_rows(n, vectors).rank()
}

pub fn span_contains(basis: &[Vector], v: &Vector) -> bool {
    if v.is_zero() {
        return true;
    }
    let n = v.len();
    let r = span_rank(n, basis);
    let mut ext = basis.to_vec();
    ext.push(v.clone());
    span_rank(n, &ext) == r
}

pub fn span_contains_all(basis: &[Vector], vs: &[Vector]) -> bool {
    let Some(first) = vs.first() else {
        return true;
    };
    let n = first.len();
    let r = span_rank(n, basis);
    let mut ext = basis.to_vec();
    ext.extend_from_slice(vs);
    span_rank(n, &ext) == r
}

pub fn spans_equal(n: usize, a: &[Vector], b: &[Vector]) -> bool {
    span_basis(n, a) == span_basis(n, b)
}

/// Basis of the intersection of two subspaces of an `n`-dimensional space.
pub fn span_intersection(n: usize, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let a = span_basis(n, a);
    let b = span_basis(n, b);
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum x_i a_i - sum y_j b_j = 0.
    let mut cols = a.clone();
    cols.extend(b.iter().map(|v| -v));
    let m = Matrix::from_columns(n, &cols);
    let found: Vec<Vector> = m
        .nullspace()
        .into_iter()
        .map(|k| Vector::combination(n, &k.as_slice()[..a.len()], &a))
        .collect();
    span_basis(n, &found)
}
