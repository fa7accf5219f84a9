//! Seeded generators of test data: catalog parameter points, admissible
//! tuples, perturbed metrics and skew operators with known canonical forms.
//!
//! Every generator draws from a caller-supplied [`ChaCha8Rng`], so a seed
//! pins the whole corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{abelian_base, solve_admissible_dim1, solve_admissible_dim2, CatalogFamily, FamilyId};
use crate::double_extension::AdmissibleTuple;
use crate::error::{Error, Result};
use crate::linalg::{cayley_isometry, frac, int, GramMatrix, Matrix, Scalar, Vector};
use crate::metric_lie::MetricLieAlgebra;
use crate::structure::{milnor_build, LorentzKind};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 5`.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let p = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    frac(p, rng.gen_range(1..=5))
}

fn random_positive_rational(rng: &mut ChaCha8Rng) -> Scalar {
    frac(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

/// The six families of the catalog, with both values of `ε` for `G4P`.
pub fn catalog_kinds() -> Vec<(FamilyId, Option<i64>)> {
    vec![
        (FamilyId::G2, None),
        (FamilyId::G3, None),
        (FamilyId::G3P, None),
        (FamilyId::G4, None),
        (FamilyId::G4P, Some(0)),
        (FamilyId::G4P, Some(1)),
    ]
}

pub fn random_family(rng: &mut ChaCha8Rng, id: FamilyId, eps: Option<i64>) -> CatalogFamily {
    let mu = random_nonzero_rational(rng);
    let mut r = || random_rational(rng);
    match id {
        FamilyId::G2 => CatalogFamily::g2(mu),
        FamilyId::G3 => CatalogFamily::g3(mu, r()),
        FamilyId::G3P => CatalogFamily::g3p(mu, r()),
        FamilyId::G4 => CatalogFamily::g4(mu, r(), r(), r()),
        FamilyId::G4P => CatalogFamily::g4p(int(eps.unwrap_or(1)), mu, r(), r(), r()),
    }
}

/// `per_family` parameter points for each of the six families.
pub fn catalog_corpus(seed: u64, per_family: usize) -> Vec<CatalogFamily> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for (id, eps) in catalog_kinds() {
        for _ in 0..per_family {
            out.push(random_family(&mut rng, id, eps));
        }
    }
    out
}

/// Antisymmetric integer matrix with entries in `[-bound, bound]`.
pub fn random_antisymmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = int(rng.gen_range(-bound..=bound));
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    m
}

/// Exact isometry of `g`, a Cayley transform of a random `g`-skew operator.
pub fn random_isometry(rng: &mut ChaCha8Rng, g: &GramMatrix) -> Matrix {
    loop {
        let k = random_antisymmetric(rng, g.dim(), 2);
        match cayley_isometry(g, &k) {
            Ok(p) => return p,
            Err(_) => continue,
        }
    }
}

pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    random_isometry(rng, &GramMatrix::identity(n))
}

/// A branch instantiation on the abelian Euclidean base of dimension
/// `dim ∈ {1, 2}`, optionally rotated by a random rational orthogonal map.
pub fn random_abelian_tuple(rng: &mut ChaCha8Rng, dim: usize, rotate: bool) -> Result<AdmissibleTuple> {
    let mu = random_nonzero_rational(rng);
    let branches = match dim {
        1 => solve_admissible_dim1(&mu)?,
        2 => solve_admissible_dim2(&mu)?,
        _ => return Err(Error::BadParameters(format!("abelian tuples only in dim 1 or 2, got {dim}"))),
    };
    let branch = branches.choose(rng).expect("nonempty").clone();
    let params: Vec<Scalar> = branch.free_parameters().iter().map(|_| random_rational(rng)).collect();
    let b0 = Vector::new((0..dim).map(|_| random_rational(rng)).collect());
    let t = branch.instantiate(&params, &b0)?;
    if !rotate {
        return Ok(t);
    }
    let r = random_orthogonal(rng, dim);
    let rt = r.transpose();
    let conj = |m: &Matrix| &(&r * m) * &rt;
    AdmissibleTuple::new(t.base, conj(&t.xi), conj(&t.dee), t.mu, r.mul_vec(&t.b0))
}

/// Admissible data on the Milnor algebra `[b, u] = θ J u` (basis `b, u1, u2`):
/// either `ξ = 0, D = 0 ⊕ cJ` or `ξ = μ P_u, D = μ P_u + 0 ⊕ cJ`, with
/// `b₀ = t b` in both cases.
pub fn random_milnor_tuple(rng: &mut ChaCha8Rng) -> Result<AdmissibleTuple> {
    let theta = random_nonzero_rational(rng);
    let j = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
    let base = milnor_build(1, 2, &[j.scale(&theta)])?;
    let mu = random_nonzero_rational(rng);
    let c = random_rational(rng);
    let rot = Matrix::zeros(1, 1).direct_sum(&j.scale(&c));
    let pu = Matrix::from_diagonal(&[int(0), int(1), int(1)]).scale(&mu);
    let (xi, dee) = if rng.gen_bool(0.5) { (Matrix::zeros(3, 3), rot) } else { (pu.clone(), &pu + &rot) };
    let b0 = Vector::new(vec![random_rational(rng), int(0), int(0)]);
    AdmissibleTuple::new(base, xi, dee, mu, b0)
}

/// A candidate `(ξ, D)` for the refutation of solver completeness. Samples
/// concentrate near the branches so both verdicts occur.
pub fn refutation_sample(rng: &mut ChaCha8Rng, dim: usize, mu: &Scalar) -> (Matrix, Matrix) {
    let small = |rng: &mut ChaCha8Rng| -> Scalar {
        let pool = [int(0), mu.clone(), -mu.clone(), int(1), int(-1), frac(1, 2)];
        pool.choose(rng).expect("nonempty").clone()
    };
    if dim == 1 {
        let xi = Matrix::from_diagonal(&[small(rng)]);
        let dee = if rng.gen_bool(0.5) { xi.clone() } else { Matrix::from_diagonal(&[small(rng)]) };
        return (xi, dee);
    }
    let r = random_orthogonal(rng, 2);
    let rot = |m: Matrix| &(&r * &m) * &r.transpose();
    let xi = match rng.gen_range(0..6) {
        0 => Matrix::zeros(2, 2),
        1 => Matrix::identity(2).scale(mu),
        2 => rot(Matrix::from_rows(vec![vec![mu.clone(), int(0)], vec![random_rational(rng), int(0)]]).expect("2x2")),
        3 => rot(Matrix::from_diagonal(&[mu.clone(), int(0)])),
        4 => {
            let (a, b, c) = (small(rng), small(rng), small(rng));
            Matrix::from_rows(vec![vec![a, b.clone()], vec![b, c]]).expect("2x2")
        }
        _ => Matrix::from_fn(2, 2, |_, _| small(rng)),
    };
    let a = match rng.gen_range(0..4) {
        0 | 1 => Matrix::zeros(2, 2),
        2 => {
            let g = small(rng);
            Matrix::from_rows(vec![vec![int(0), -g.clone()], vec![g, int(0)]]).expect("2x2")
        }
        _ => Matrix::from_fn(2, 2, |_, _| small(rng)),
    };
    let mut dee = &xi + &a;
    if rng.gen_bool(0.15) {
        let (i, j) = (rng.gen_range(0..2), rng.gen_range(0..2));
        dee[(i, j)] = &dee[(i, j)] + small(rng);
    }
    (xi, dee)
}

/// The tuple on the abelian base carrying a refutation sample.
pub fn abelian_tuple(mu: &Scalar, xi: Matrix, dee: Matrix) -> Result<AdmissibleTuple> {
    let m = xi.rows();
    AdmissibleTuple::new(abelian_base(m), xi, dee, mu.clone(), Vector::zeros(m))
}

/// Same brackets, metric moved by a small symmetric perturbation; `None` if
/// the perturbed form is degenerate.
pub fn perturb_metric(rng: &mut ChaCha8Rng, g: &MetricLieAlgebra) -> Option<MetricLieAlgebra> {
    let n = g.dim();
    let mut m = g.gram().matrix().clone();
    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let d = random_nonzero_rational(rng) / int(4);
    m[(i, j)] = &m[(i, j)] + &d;
    if i != j {
        m[(j, i)] = &m[(j, i)] + &d;
    }
    GramMatrix::new(m).ok().and_then(|gram| g.with_gram(gram).ok())
}

/// A skew operator built from known canonical data.
#[derive(Clone, Debug)]
pub struct SkewSample {
    pub f: Matrix,
    pub metric: GramMatrix,
    /// `None` for the Euclidean class.
    pub kind: Option<LorentzKind>,
    /// The `α` of case II.
    pub lorentz_alpha: Option<Scalar>,
    /// Sorted angle rates of the rotation planes.
    pub rates: Vec<Scalar>,
}

fn rotation_blocks(rates: &[Scalar], kernel: usize) -> Matrix {
    let mut m = Matrix::zeros(0, 0);
    for a in rates {
        m = m.direct_sum(&Matrix::from_rows(vec![vec![int(0), -a.clone()], vec![a.clone(), int(0)]]).expect("2x2"));
    }
    m.direct_sum(&Matrix::zeros(kernel, kernel))
}

fn random_rates(rng: &mut ChaCha8Rng, planes: usize) -> Vec<Scalar> {
    let mut rates: Vec<Scalar> = Vec::new();
    for _ in 0..planes {
        if !rates.is_empty() && rng.gen_bool(0.2) {
            let r = rates.choose(rng).expect("nonempty").clone();
            rates.push(r);
        } else {
            rates.push(random_positive_rational(rng));
        }
    }
    rates.sort();
    rates
}

/// Euclidean skew operator of dimension `2..=6`: planes plus kernel,
/// conjugated by a random rational orthogonal matrix.
pub fn euclidean_skew_sample(rng: &mut ChaCha8Rng) -> SkewSample {
    let n = rng.gen_range(2..=6);
    let planes = rng.gen_range(0..=n / 2);
    let rates = random_rates(rng, planes);
    let f0 = rotation_blocks(&rates, n - 2 * planes);
    let q = random_orthogonal(rng, n);
    let f = &(&q * &f0) * &q.transpose();
    SkewSample { f, metric: GramMatrix::identity(n), kind: None, lorentz_alpha: None, rates }
}

/// Lorentzian skew operator of the requested case, with up to three extra
/// Euclidean dimensions, conjugated by a random exact isometry.
pub fn lorentz_skew_sample(rng: &mut ChaCha8Rng, kind: LorentzKind) -> SkewSample {
    let extra = rng.gen_range(0..=3);
    let planes = rng.gen_range(0..=extra / 2);
    let rates = random_rates(rng, planes);
    let euclid = rotation_blocks(&rates, extra - 2 * planes);
    let hyp = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    let (gv, fv, alpha) = match kind {
        LorentzKind::CaseI => (Matrix::from_ints(&[&[-1]]), Matrix::zeros(1, 1), None),
        LorentzKind::CaseII => {
            let a = random_positive_rational(rng);
            (hyp, Matrix::from_diagonal(&[a.clone(), -a.clone()]), Some(a))
        }
        LorentzKind::CaseIII => {
            let a = random_nonzero_rational(rng);
            (hyp.direct_sum(&Matrix::identity(1)), Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[0, -1, 0]]).scale(&a), None)
        }
    };
    let g = GramMatrix::new(gv.direct_sum(&Matrix::identity(extra))).expect("nondegenerate");
    let f0 = fv.direct_sum(&euclid);
    let p = random_isometry(rng, &g);
    let f = &(&p * &f0) * &p.inverse().expect("isometry");
    SkewSample { f, metric: g, kind: Some(kind), lorentz_alpha: alpha, rates }
}
