//! Lie algebras with structure constants and a pseudo-Euclidean metric.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{span_basis, GramMatrix, Matrix, Scalar, Vector};

/// A finite-dimensional real Lie algebra `g` together with a nondegenerate
/// symmetric inner product.
///
/// Structure constants are stored in full: `bracket_basis(i, j)` is the
/// coordinate vector of `[e_i, e_j]`. Antisymmetry is enforced when the
/// algebra is built; the Jacobi identity is not, see [`jacobi_check`].
/// Basis labels are only used for display.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    names: Vec<String>,
    brackets: Vec<Vector>,
    gram: GramMatrix,
    product: OnceLock<Vec<Vector>>,
}

impl PartialEq for MetricLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.brackets == other.brackets && self.gram == other.gram
    }
}

impl Eq for MetricLieAlgebra {}

impl MetricLieAlgebra {
    /// Builds the algebra from a flattened tensor `c[(i * n + j) * n + k]`,
    /// the coefficient of `e_k` in `[e_i, e_j]`.
    pub fn from_structure_constants(names: Vec<String>, c: Vec<Scalar>, gram: GramMatrix) -> Result<Self> {
        let n = gram.dim();
        if names.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: names.len() });
        }
        if c.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: c.len() });
        }
        let brackets: Vec<Vector> = c.chunks(n.max(1)).take(n * n).map(|ch| Vector::new(ch.to_vec())).collect();
        for i in 0..n {
            for j in i..n {
                let ij = &brackets[i * n + j];
                let ji = &brackets[j * n + i];
                if !(ij + ji).is_zero() {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(MetricLieAlgebra { names, brackets, gram, product: OnceLock::new() })
    }

    /// Builds the algebra from the listed brackets `[e_i, e_j] = v`; the
    /// opposite entries follow by antisymmetry and every unlisted bracket is
    /// zero. Listing both `(i, j)` and `(j, i)` is accepted only when the two
    /// values are opposite.
    pub fn from_brackets<I>(names: Vec<String>, gram: GramMatrix, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let n = gram.dim();
        if names.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: names.len() });
        }
        let mut brackets = vec![Vector::zeros(n); n * n];
        let mut set = vec![false; n * n];
        for (i, j, v) in entries {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric { i, j });
                }
                continue;
            }
            let neg = -&v;
            if (set[i * n + j] && brackets[i * n + j] != v) || (set[j * n + i] && brackets[j * n + i] != neg) {
                return Err(Error::NotAntisymmetric { i, j });
            }
            brackets[i * n + j] = v;
            brackets[j * n + i] = neg;
            set[i * n + j] = true;
            set[j * n + i] = true;
        }
        Ok(MetricLieAlgebra { names, brackets, gram, product: OnceLock::new() })
    }

    pub fn abelian(names: Vec<String>, gram: GramMatrix) -> Result<Self> {
        Self::from_brackets(names, gram, std::iter::empty())
    }

    /// Default labels `e0, e1, …`.
    pub fn default_names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.bracket_basis(i, j)[k]
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                out = out.axpy(&(&u[i] * &v[j]), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Same Lie bracket, different metric.
    pub fn with_gram(&self, gram: GramMatrix) -> Result<Self> {
        if gram.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: gram.dim() });
        }
        Ok(MetricLieAlgebra { names: self.names.clone(), brackets: self.brackets.clone(), gram, product: OnceLock::new() })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    /// Rewrites the algebra in the basis given by the columns of `p`
    /// (expressed in the current basis). Labels are kept.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.rows() });
        }
        let inv = p.inverse()?;
        let cols = p.columns();
        let gram = GramMatrix::new(&(&p.transpose() * self.gram.matrix()) * p)?;
        let mut brackets = Vec::with_capacity(n * n);
        for ci in &cols {
            for cj in &cols {
                brackets.push(inv.mul_vec(&self.bracket(ci, cj)));
            }
        }
        Ok(MetricLieAlgebra { names: self.names.clone(), brackets, gram, product: OnceLock::new() })
    }

    /// Cached flat list of Levi-Civita products, filled on first use.
    pub(crate) fn product_cache(&self, compute: impl FnOnce() -> Vec<Vector>) -> &[Vector] {
        self.product.get_or_init(compute)
    }

    /// Renders a vector as a combination of the basis labels, e.g. `2·e + 1/2·e1`.
    pub fn format_vector(&self, v: &Vector) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| format!("{c}·{name}"))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for MetricLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        write!(f, "dim {n}")?;
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket_basis(i, j);
                if !b.is_zero() {
                    write!(f, "; [{},{}] = {}", self.names[i], self.names[j], self.format_vector(b))?;
                }
            }
        }
        Ok(())
    }
}

/// A basis triple on which the cyclic Jacobi sum does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub value: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiVerdict {
    pub violation: Option<JacobiViolation>,
}

impl JacobiVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `[[u,v],w] + [[v,w],u] + [[w,u],v] = 0` on all basis triples.
pub fn jacobi_check(g: &MetricLieAlgebra) -> JacobiVerdict {
    let n = g.dim();
    let e = |i: usize| Vector::basis(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let a = g.bracket(g.bracket_basis(i, j), &e(k));
                let b = g.bracket(g.bracket_basis(j, k), &e(i));
                let c = g.bracket(g.bracket_basis(k, i), &e(j));
                let sum = &(&a + &b) + &c;
                if !sum.is_zero() {
                    return JacobiVerdict { violation: Some(JacobiViolation { triple: (i, j, k), value: sum }) };
                }
            }
        }
    }
    JacobiVerdict { violation: None }
}

/// Matrix of `v ↦ [u, v]`.
pub fn ad(g: &MetricLieAlgebra, u: &Vector) -> Matrix {
    let n = g.dim();
    let cols: Vec<Vector> = (0..n).map(|j| g.bracket(u, &Vector::basis(n, j))).collect();
    Matrix::from_columns(n, &cols)
}

/// `ad` of the `i`-th basis vector.
pub fn ad_basis(g: &MetricLieAlgebra, i: usize) -> Matrix {
    let n = g.dim();
    let cols: Vec<Vector> = (0..n).map(|j| g.bracket_basis(i, j).clone()).collect();
    Matrix::from_columns(n, &cols)
}

/// Canonical basis of `[g, g]`.
pub fn derived_ideal(g: &MetricLieAlgebra) -> Vec<Vector> {
    let n = g.dim();
    let all: Vec<Vector> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| g.bracket_basis(i, j).clone())
        .filter(|v| !v.is_zero())
        .collect();
    span_basis(n, &all)
}

/// Basis of the center `{u : [u, v] = 0 for all v}`.
pub fn center(g: &MetricLieAlgebra) -> Vec<Vector> {
    let n = g.dim();
    // Row (j, k): sum_i u_i c[i][j][k] = 0.
    let m = Matrix::from_fn(n * n, n, |row, i| g.structure_constant(i, row / n, row % n).clone());
    if n == 0 {
        return Vec::new();
    }
    m.nullspace()
}

/// `tr(ad_{e_i})` for each basis vector.
pub fn trace_form(g: &MetricLieAlgebra) -> Vector {
    let n = g.dim();
    (0..n)
        .map(|i| (0..n).fold(Scalar::zero(), |acc, j| acc + g.structure_constant(i, j, j)))
        .collect()
}

/// The modular vector `h`: the unique vector with `⟨h, u⟩ = tr(ad_u)`.
pub fn modular_vector(g: &MetricLieAlgebra) -> Vector {
    g.gram().raise(&trace_form(g))
}

pub fn is_unimodular(g: &MetricLieAlgebra) -> bool {
    trace_form(g).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureClass {
    Euclidean,
    Lorentzian,
    OtherPseudo { neg: usize, pos: usize },
}

impl SignatureClass {
    pub fn from_signature((neg, pos): (usize, usize)) -> Self {
        match neg {
            0 => SignatureClass::Euclidean,
            1 => SignatureClass::Lorentzian,
            _ => SignatureClass::OtherPseudo { neg, pos },
        }
    }
}

pub fn classify_signature(g: &MetricLieAlgebra) -> SignatureClass {
    SignatureClass::from_signature(g.gram().signature())
}
