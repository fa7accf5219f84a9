//! The Levi-Civita product of a metric Lie algebra and the identities built on it.
//!
//! For a metric Lie algebra the Levi-Civita connection of the associated
//! left-invariant metric is encoded by a bilinear product `u·v`, determined by
//!
//! ```text
//! 2⟨u·v, w⟩ = ⟨[u,v], w⟩ + ⟨[w,u], v⟩ + ⟨[w,v], u⟩.
//! ```
//!
//! `L_u v = u·v` is skew-symmetric for the metric and `ad_u = L_u − R_u`.
//! The curvature is `K(u,v) = L_{[u,v]} − [L_u, L_v]`; the metric is flat iff
//! the product is left-symmetric. All verdicts here are exact.

use crate::linalg::{span_basis, span_contains, spans_equal, Matrix, Scalar, Vector};
use crate::metric_lie::{derived_ideal, modular_vector, MetricLieAlgebra};

/// Levi-Civita products of basis vectors, `e_i·e_j`, borrowed from the
/// algebra's cache.
#[derive(Clone, Copy, Debug)]
pub struct ProductTable<'a> {
    algebra: &'a MetricLieAlgebra,
    products: &'a [Vector],
}

/// Solves Koszul's formula for every pair of basis vectors. The result is
/// cached on the algebra, so repeated calls are cheap.
pub fn koszul_product(g: &MetricLieAlgebra) -> ProductTable<'_> {
    let products = g.product_cache(|| solve_koszul(g));
    ProductTable { algebra: g, products }
}

fn solve_koszul(g: &MetricLieAlgebra) -> Vec<Vector> {
    let n = g.dim();
    let gram = g.gram();
    let lowered: Vec<Vector> = (0..n * n).map(|ij| gram.lower(g.bracket_basis(ij / n, ij % n))).collect();
    let low = |i: usize, j: usize| &lowered[i * n + j];
    let half = crate::linalg::frac(1, 2);
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let rhs: Vector = (0..n).map(|k| &low(i, j)[k] + &low(k, i)[j] + &low(k, j)[i]).collect();
            out.push(gram.raise(&rhs).scale(&half));
        }
    }
    out
}

impl<'a> ProductTable<'a> {
    /// Wraps an explicit table, bypassing Koszul's formula. Used to test that
    /// perturbed tables fail the defining identities.
    pub fn from_raw(algebra: &'a MetricLieAlgebra, products: &'a [Vector]) -> Self {
        assert_eq!(products.len(), algebra.dim() * algebra.dim());
        ProductTable { algebra, products }
    }

    pub fn algebra(&self) -> &'a MetricLieAlgebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Coordinates of `e_i·e_j`.
    pub fn product_basis(&self, i: usize, j: usize) -> &'a Vector {
        &self.products[i * self.dim() + j]
    }

    pub fn product(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if num_traits::Zero::is_zero(&u[i]) {
                continue;
            }
            for j in 0..n {
                if !num_traits::Zero::is_zero(&v[j]) {
                    out = out.axpy(&(&u[i] * &v[j]), self.product_basis(i, j));
                }
            }
        }
        out
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.product_basis(i, j).clone()).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn right_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.product_basis(j, i).clone()).collect();
        Matrix::from_columns(n, &cols)
    }
}

fn combine(n: usize, u: &Vector, f: impl Fn(usize) -> Matrix) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        if !num_traits::Zero::is_zero(&u[i]) {
            out = &out + &f(i).scale(&u[i]);
        }
    }
    out
}

/// Matrix of `v ↦ u·v`.
pub fn left_mult(t: &ProductTable<'_>, u: &Vector) -> Matrix {
    combine(t.dim(), u, |i| t.left_basis(i))
}

/// Matrix of `v ↦ v·u`.
pub fn right_mult(t: &ProductTable<'_>, u: &Vector) -> Matrix {
    combine(t.dim(), u, |i| t.right_basis(i))
}

/// `K(u,v) = L_{[u,v]} − [L_u, L_v]`.
pub fn curvature(t: &ProductTable<'_>, u: &Vector, v: &Vector) -> Matrix {
    let g = t.algebra();
    let l_uv = left_mult(t, &g.bracket(u, v));
    let lu = left_mult(t, u);
    let lv = left_mult(t, v);
    &l_uv - &lu.commutator(&lv)
}

/// Outcome of [`is_flat`]; `witness` is the first basis pair with nonzero curvature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessVerdict {
    pub witness: Option<((usize, usize), Matrix)>,
}

impl FlatnessVerdict {
    pub fn is_flat(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn is_flat(g: &MetricLieAlgebra) -> FlatnessVerdict {
    let t = koszul_product(g);
    let n = g.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| t.left_basis(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let l_bracket = combine(n, g.bracket_basis(i, j), |k| lefts[k].clone());
            let k = &l_bracket - &lefts[i].commutator(&lefts[j]);
            if !k.is_zero() {
                return FlatnessVerdict { witness: Some(((i, j), k)) };
            }
        }
    }
    FlatnessVerdict { witness: None }
}

/// Checks `R_{u·v} − R_v ∘ R_u = [L_u, R_v]` on all basis pairs.
/// Returns the first failing pair, if any.
pub fn left_symmetric_witness(t: &ProductTable<'_>) -> Option<(usize, usize)> {
    let n = t.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| t.left_basis(i)).collect();
    let rights: Vec<Matrix> = (0..n).map(|i| t.right_basis(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let r_prod = combine(n, t.product_basis(i, j), |k| rights[k].clone());
            let lhs = &r_prod - &(&rights[j] * &rights[i]);
            let rhs = lefts[i].commutator(&rights[j]);
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn left_symmetric_check(t: &ProductTable<'_>) -> bool {
    left_symmetric_witness(t).is_none()
}

/// True iff every `L_u` is skew and `u·v − v·u = [u,v]` on basis vectors.
pub fn is_levi_civita(t: &ProductTable<'_>) -> bool {
    let g = t.algebra();
    let n = g.dim();
    (0..n).all(|i| g.gram().is_skew(&t.left_basis(i)))
        && (0..n).all(|i| {
            (0..n).all(|j| &(t.product_basis(i, j) - t.product_basis(j, i)) == g.bracket_basis(i, j))
        })
}

/// Basis of `{u : R_u = R_u*}`, obtained by solving the linear system in `u`.
pub fn symmetric_right_space(t: &ProductTable<'_>) -> Vec<Vector> {
    let n = t.dim();
    if n == 0 {
        return Vec::new();
    }
    let gram = t.algebra().gram();
    let defects: Vec<Matrix> = (0..n)
        .map(|i| {
            let r = t.right_basis(i);
            &r - &gram.adjoint(&r)
        })
        .collect();
    let m = Matrix::from_fn(n * n, n, |row, i| defects[i][(row / n, row % n)].clone());
    m.nullspace()
}

/// Both descriptions of `[g,g]^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedPerpReport {
    pub orthogonal_of_derived: Vec<Vector>,
    pub symmetric_right: Vec<Vector>,
    pub agree: bool,
}

pub fn derived_perp_characterization(g: &MetricLieAlgebra) -> DerivedPerpReport {
    let n = g.dim();
    let orthogonal_of_derived = span_basis(n, &g.gram().orthogonal_complement(&derived_ideal(g)));
    let symmetric_right = span_basis(n, &symmetric_right_space(&koszul_product(g)));
    let agree = spans_equal(n, &orthogonal_of_derived, &symmetric_right);
    DerivedPerpReport { orthogonal_of_derived, symmetric_right, agree }
}

/// `R_u^dim = 0`.
pub fn right_nilpotent(t: &ProductTable<'_>, u: &Vector) -> bool {
    right_mult(t, u).pow(t.dim() as u32).is_zero()
}

/// Properties of the modular vector `h` of a flat metric Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularReport {
    pub h: Vector,
    pub h_norm: Scalar,
    pub in_derived: bool,
    pub orthogonal_to_derived: bool,
    pub right_symmetric: bool,
    pub right_nilpotent: bool,
}

impl ModularReport {
    pub fn all_hold(&self) -> bool {
        self.in_derived && self.orthogonal_to_derived && self.right_symmetric && self.right_nilpotent
    }
}

pub fn modular_properties_check(g: &MetricLieAlgebra) -> ModularReport {
    let t = koszul_product(g);
    let h = modular_vector(g);
    let derived = derived_ideal(g);
    let gram = g.gram();
    let r_h = right_mult(&t, &h);
    ModularReport {
        h_norm: gram.inner(&h, &h),
        in_derived: span_contains(&derived, &h),
        orthogonal_to_derived: derived.iter().all(|d| num_traits::Zero::is_zero(&gram.inner(&h, d))),
        right_symmetric: gram.is_self_adjoint(&r_h),
        right_nilpotent: r_h.pow(g.dim() as u32).is_zero(),
        h,
    }
}
