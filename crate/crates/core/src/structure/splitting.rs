use crate::error::{Error, Result};
use crate::levi_civita::{is_flat, koszul_product};
use crate::linalg::{span_basis, span_intersection, spans_equal, GramMatrix, Matrix, Scalar, Vector};
use crate::metric_lie::{ad_basis, center, classify_signature, derived_ideal, jacobi_check, MetricLieAlgebra, SignatureClass};

/// Semidirect product of an abelian algebra `b` (basis `b1…`) acting on an
/// abelian ideal `u` (basis `u1…`) through commuting skew matrices, with the
/// Euclidean metric in which both bases are orthonormal.
pub fn milnor_build(dim_b: usize, dim_u: usize, generators: &[Matrix]) -> Result<MetricLieAlgebra> {
    if generators.len() != dim_b {
        return Err(Error::DimensionMismatch { expected: dim_b, found: generators.len() });
    }
    for m in generators {
        if m.rows() != dim_u || m.cols() != dim_u {
            return Err(Error::DimensionMismatch { expected: dim_u, found: m.rows() });
        }
        if !(m + &m.transpose()).is_zero() {
            return Err(Error::NotSkew);
        }
    }
    for i in 0..dim_b {
        for j in i + 1..dim_b {
            if !generators[i].commutator(&generators[j]).is_zero() {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    let n = dim_b + dim_u;
    let mut entries = Vec::new();
    for (i, m) in generators.iter().enumerate() {
        for j in 0..dim_u {
            let mut v = Vector::zeros(n);
            for k in 0..dim_u {
                v[dim_b + k] = m[(k, j)].clone();
            }
            entries.push((i, dim_b + j, v));
        }
    }
    let mut names: Vec<String> = (1..=dim_b).map(|i| format!("b{i}")).collect();
    names.extend((1..=dim_u).map(|i| format!("u{i}")));
    let g = MetricLieAlgebra::from_brackets(names, GramMatrix::identity(n), entries)?;
    if !is_flat(&g).is_flat() {
        return Err(Error::Invariant("semidirect product is not flat".into()));
    }
    Ok(g)
}

/// Verdicts on the structure of a Riemannian flat algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplittingChecks {
    /// `[B,B]^⊥ = {R_b = 0} = {ad_b + ad_b* = 0}`.
    pub routes_agree: bool,
    /// `L_b = 0` on `Z(B) ⊕ [B,B]`.
    pub left_mult_vanishes: bool,
    pub derived_even: bool,
    /// `span(B·B) = [B,B]`.
    pub product_spans_derived: bool,
    /// The three summands are mutually orthogonal and fill `B`.
    pub orthogonal_sum: bool,
}

impl SplittingChecks {
    pub fn all_hold(&self) -> bool {
        self.routes_agree && self.left_mult_vanishes && self.derived_even && self.product_spans_derived && self.orthogonal_sum
    }
}

/// Orthogonal splitting `B = S(B) ⊕ Z(B) ⊕ [B,B]` of a Riemannian flat
/// algebra; `S(B)` is taken as the orthogonal of `Z(B)` inside `[B,B]^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiemannianSplitting {
    pub s_basis: Vec<Vector>,
    pub z_basis: Vec<Vector>,
    pub derived_basis: Vec<Vector>,
    pub checks: SplittingChecks,
}

fn stacked_kernel(n: usize, ops: &[Matrix]) -> Vec<Vector> {
    if n == 0 {
        return Vec::new();
    }
    Matrix::from_fn(n * n, n, |row, i| ops[i][(row / n, row % n)].clone()).nullspace()
}

pub fn riemannian_splitting(g: &MetricLieAlgebra) -> Result<RiemannianSplitting> {
    if classify_signature(g) != SignatureClass::Euclidean || !jacobi_check(g).holds() || !is_flat(g).is_flat() {
        return Err(Error::NotRiemannianFlat);
    }
    let n = g.dim();
    let gram = g.gram();
    let t = koszul_product(g);

    let derived = derived_ideal(g);
    let perp = gram.orthogonal_complement(&derived);
    let rights: Vec<Matrix> = (0..n).map(|i| t.right_basis(i)).collect();
    let right_kernel = stacked_kernel(n, &rights);
    let ad_sym: Vec<Matrix> = (0..n)
        .map(|i| {
            let a = ad_basis(g, i);
            &a + &gram.adjoint(&a)
        })
        .collect();
    let skew_ad = stacked_kernel(n, &ad_sym);
    let routes_agree = spans_equal(n, &perp, &right_kernel) && spans_equal(n, &perp, &skew_ad);

    let z = span_basis(n, &center(g));
    let mut z_perp_in_perp = span_intersection(n, &perp, &gram.orthogonal_complement(&z));
    z_perp_in_perp = span_basis(n, &z_perp_in_perp);

    let mut lz = z.clone();
    lz.extend(derived.iter().cloned());
    let left_mult_vanishes = lz.iter().all(|v| crate::levi_civita::left_mult(&t, v).is_zero());

    let products: Vec<Vector> = (0..n * n).map(|ij| t.product_basis(ij / n, ij % n).clone()).collect();
    let product_spans_derived = spans_equal(n, &products, &derived);

    let summands = [&z_perp_in_perp, &z, &derived];
    let zero = Scalar::from_integer(0.into());
    let mut orthogonal_sum = summands.iter().map(|s| s.len()).sum::<usize>() == n;
    for a in 0..3 {
        for b in a + 1..3 {
            orthogonal_sum &= summands[a].iter().all(|x| summands[b].iter().all(|y| gram.inner(x, y) == zero));
        }
    }

    let checks = SplittingChecks {
        routes_agree,
        left_mult_vanishes,
        derived_even: derived.len().is_multiple_of(2),
        product_spans_derived,
        orthogonal_sum,
    };
    Ok(RiemannianSplitting { s_basis: z_perp_in_perp, z_basis: z, derived_basis: derived, checks })
}

/// Joint eigenspace `{x : rho_i x = lambda_i x for all i}`.
pub fn weight_space(rho: &[Matrix], lambda: &[Scalar]) -> Result<Vec<Vector>> {
    if rho.len() != lambda.len() {
        return Err(Error::DimensionMismatch { expected: rho.len(), found: lambda.len() });
    }
    let Some(first) = rho.first() else {
        return Ok(Vec::new());
    };
    let n = first.rows();
    if let Some(bad) = rho.iter().find(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.rows() });
    }
    let shifted: Vec<Matrix> = rho.iter().zip(lambda).map(|(m, l)| m - &Matrix::identity(n).scale(l)).collect();
    let stacked = Matrix::from_fn(n * rho.len(), n, |row, c| shifted[row / n][(row % n, c)].clone());
    Ok(stacked.nullspace())
}
