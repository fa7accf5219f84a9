//! Canonical forms of skew-symmetric endomorphisms.
//!
//! The case analysis is exact; only the adapted bases (which need square
//! roots) are computed in `f64`. Inputs are normalized to unit max entry
//! before any spectral routine runs.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    congruence_diagonalize, span_basis, span_intersection, to_dmatrix, to_dvector, to_f64, GramMatrix, Matrix, Scalar,
    Vector,
};

/// Reconstruction tolerance, relative to the max entry of the operator.
pub const RECONSTRUCTION_TOL: f64 = 1e-9;
/// Tolerance on the orthonormality of the Euclidean part of an adapted basis.
pub const ORTHONORMAL_TOL: f64 = 1e-12;

const KERNEL_TOL: f64 = 1e-6;
const CLUSTER_TOL: f64 = 1e-6;
const DROP_TOL: f64 = 1e-12;

/// A rotation plane: `F(e) = α f`, `F(f) = −α e`, `(e, f)` orthonormal.
///
/// Gauge: `e` is the normalized projection onto the plane of the first
/// standard basis vector that is not orthogonal to it.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationBlock {
    pub alpha: f64,
    pub e: DVector<f64>,
    pub f: DVector<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LorentzKind {
    CaseI,
    CaseII,
    CaseIII,
}

impl std::fmt::Display for LorentzKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LorentzKind::CaseI => "case I",
            LorentzKind::CaseII => "case II",
            LorentzKind::CaseIII => "case III",
        })
    }
}

/// The nondegenerate Lorentzian invariant summand `V` with its adapted basis.
#[derive(Clone, Debug, PartialEq)]
pub enum LorentzCase {
    /// `V = span{v}` with `F v = 0`, `⟨v,v⟩ = −1`.
    CaseI { v: DVector<f64> },
    /// Null basis with `⟨e,ē⟩ = 1`, `F e = α e`, `F ē = −α ē`, `α > 0`.
    CaseII { alpha: f64, e: DVector<f64>, ebar: DVector<f64> },
    /// Null pair `(e, ē)` plus unit `f ⊥ e, ē`, with `F e = 0`, `F f = α e`,
    /// `F ē = −α f`. The boost freedom is fixed by `α = 1`.
    CaseIII { alpha: f64, e: DVector<f64>, ebar: DVector<f64>, f: DVector<f64> },
}

impl LorentzCase {
    pub fn kind(&self) -> LorentzKind {
        match self {
            LorentzCase::CaseI { .. } => LorentzKind::CaseI,
            LorentzCase::CaseII { .. } => LorentzKind::CaseII,
            LorentzCase::CaseIII { .. } => LorentzKind::CaseIII,
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match self {
            LorentzCase::CaseI { .. } => None,
            LorentzCase::CaseII { alpha, .. } | LorentzCase::CaseIII { alpha, .. } => Some(*alpha),
        }
    }

    fn basis(&self) -> Vec<&DVector<f64>> {
        match self {
            LorentzCase::CaseI { v } => vec![v],
            LorentzCase::CaseII { e, ebar, .. } => vec![e, ebar],
            LorentzCase::CaseIII { e, ebar, f, .. } => vec![e, ebar, f],
        }
    }
}

/// Orthogonal decomposition `V ⊕ (⊕ planes) ⊕ kernel` of a skew operator.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewCanonicalForm {
    pub dim: usize,
    pub metric: DMatrix<f64>,
    pub lorentz: Option<LorentzCase>,
    pub blocks: Vec<RotationBlock>,
    pub kernel: Vec<DVector<f64>>,
}

fn inner(g: &DMatrix<f64>, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
    x.dot(&(g * y))
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, x| a.max(x.abs()))
}

impl SkewCanonicalForm {
    /// Adapted basis (as columns) and the matrix of the operator in it.
    pub fn adapted_basis(&self) -> (DMatrix<f64>, DMatrix<f64>) {
        let n = self.dim;
        let mut cols: Vec<DVector<f64>> = Vec::with_capacity(n);
        let mut c = DMatrix::zeros(n, n);
        match &self.lorentz {
            None => {}
            Some(LorentzCase::CaseI { v }) => cols.push(v.clone()),
            Some(LorentzCase::CaseII { alpha, e, ebar }) => {
                c[(0, 0)] = *alpha;
                c[(1, 1)] = -alpha;
                cols.extend([e.clone(), ebar.clone()]);
            }
            Some(LorentzCase::CaseIII { alpha, e, ebar, f }) => {
                c[(2, 1)] = -alpha;
                c[(0, 2)] = *alpha;
                cols.extend([e.clone(), ebar.clone(), f.clone()]);
            }
        }
        for b in &self.blocks {
            let k = cols.len();
            c[(k + 1, k)] = b.alpha;
            c[(k, k + 1)] = -b.alpha;
            cols.extend([b.e.clone(), b.f.clone()]);
        }
        cols.extend(self.kernel.iter().cloned());
        let p = if n == 0 { DMatrix::zeros(0, 0) } else { DMatrix::from_columns(&cols) };
        (p, c)
    }

    /// `P C P⁻¹` for the adapted basis `P`.
    pub fn reconstruct(&self) -> Result<DMatrix<f64>> {
        let (p, c) = self.adapted_basis();
        if self.dim == 0 {
            return Ok(p);
        }
        let inv = p.clone().try_inverse().ok_or_else(|| Error::Numerical("adapted basis is singular".into()))?;
        Ok(p * c * inv)
    }

    /// Max-norm distance between `f` and the reconstruction, relative to the
    /// max entry of `f` (absolute when `f` vanishes).
    pub fn reconstruction_error(&self, f: &DMatrix<f64>) -> f64 {
        match self.reconstruct() {
            Ok(r) => {
                let scale = max_abs(f);
                max_abs(&(f - r)) / if scale == 0.0 { 1.0 } else { scale }
            }
            Err(_) => f64::INFINITY,
        }
    }

    /// Largest deviation of the Euclidean part (planes and kernel) from being
    /// orthonormal, including orthogonality to the Lorentzian summand.
    pub fn orthonormality_error(&self) -> f64 {
        let g = &self.metric;
        let mut euclid: Vec<&DVector<f64>> = Vec::new();
        for b in &self.blocks {
            euclid.push(&b.e);
            euclid.push(&b.f);
        }
        euclid.extend(self.kernel.iter());
        let mut err: f64 = 0.0;
        for (i, x) in euclid.iter().enumerate() {
            for (j, y) in euclid.iter().enumerate().skip(i) {
                let target = if i == j { 1.0 } else { 0.0 };
                err = err.max((inner(g, x, y) - target).abs());
            }
        }
        if let Some(l) = &self.lorentz {
            for v in l.basis() {
                for x in &euclid {
                    err = err.max(inner(g, v, x).abs() / v.amax().max(1.0));
                }
            }
        }
        err
    }

    /// Largest residual among the defining relations: Gram relations of the
    /// Lorentzian basis and `F x = expected` for every adapted vector. Gram
    /// residuals are scaled by the max entries of both vectors, action
    /// residuals by those of `f` and `x`.
    pub fn relation_error(&self, f: &DMatrix<f64>) -> f64 {
        let g = &self.metric;
        let s = max_abs(f).max(f64::MIN_POSITIVE);
        let act = |x: &DVector<f64>, y: &DVector<f64>| (f * x - y).amax() / (s * x.amax().max(1.0));
        let gram = |x: &DVector<f64>, y: &DVector<f64>, target: f64| {
            (inner(g, x, y) - target).abs() / (x.amax() * y.amax()).max(1.0)
        };
        let mut err: f64 = 0.0;
        let zero = DVector::zeros(self.dim);
        match &self.lorentz {
            None => {}
            Some(LorentzCase::CaseI { v }) => {
                err = err.max(gram(v, v, -1.0)).max(act(v, &zero));
            }
            Some(LorentzCase::CaseII { alpha, e, ebar }) => {
                err = err
                    .max(gram(e, e, 0.0))
                    .max(gram(ebar, ebar, 0.0))
                    .max(gram(e, ebar, 1.0))
                    .max(act(e, &(e * *alpha)))
                    .max(act(ebar, &(ebar * -alpha)));
            }
            Some(LorentzCase::CaseIII { alpha, e, ebar, f: fv }) => {
                err = err
                    .max(gram(e, e, 0.0))
                    .max(gram(ebar, ebar, 0.0))
                    .max(gram(e, ebar, 1.0))
                    .max(gram(fv, fv, 1.0))
                    .max(gram(e, fv, 0.0))
                    .max(gram(ebar, fv, 0.0))
                    .max(act(e, &zero))
                    .max(act(fv, &(e * *alpha)))
                    .max(act(ebar, &(fv * -alpha)));
            }
        }
        for b in &self.blocks {
            err = err.max(act(&b.e, &(&b.f * b.alpha))).max(act(&b.f, &(&b.e * -b.alpha)));
        }
        for k in &self.kernel {
            err = err.max(act(k, &zero));
        }
        err
    }

    /// All invariants of the form, at the pinned tolerances.
    pub fn invariants_hold(&self, f: &DMatrix<f64>) -> bool {
        let alphas_ok = self.blocks.iter().all(|b| b.alpha > 0.0)
            && match &self.lorentz {
                Some(LorentzCase::CaseII { alpha, .. }) => *alpha > 0.0,
                Some(LorentzCase::CaseIII { alpha, .. }) => *alpha != 0.0,
                _ => true,
            };
        let count = self.lorentz.as_ref().map_or(0, |l| l.basis().len()) + 2 * self.blocks.len() + self.kernel.len();
        alphas_ok
            && count == self.dim
            && self.reconstruction_error(f) <= RECONSTRUCTION_TOL
            && self.relation_error(f) <= RECONSTRUCTION_TOL
            && self.orthonormality_error() <= ORTHONORMAL_TOL
    }

    /// Sorted angle rates of the rotation planes.
    pub fn angle_rates(&self) -> Vec<f64> {
        let mut r: Vec<f64> = self.blocks.iter().map(|b| b.alpha).collect();
        r.sort_by(f64::total_cmp);
        r
    }
}

/// Planes and kernel of a skew-symmetric matrix in an orthonormal frame.
/// `scale` bounds the size of `m`'s entries: rates below `KERNEL_TOL · scale`
/// count as zero.
fn euclidean_core(m: &DMatrix<f64>, scale: f64) -> Result<(Vec<RotationBlock>, Vec<DVector<f64>>)> {
    let n = m.nrows();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let s = max_abs(m).max(scale);
    if s == 0.0 {
        return Ok((Vec::new(), (0..n).map(|i| DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 })).collect()));
    }
    let mh = m / s;
    let eig = SymmetricEigen::new(mh.transpose() * &mh);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let rate = |i: usize| eig.eigenvalues[i].max(0.0).sqrt();

    let mut kernel = Vec::new();
    let mut clusters: Vec<Vec<DVector<f64>>> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for &i in &order {
        let r = rate(i);
        let v = eig.eigenvectors.column(i).into_owned();
        if r < KERNEL_TOL {
            kernel.push(v);
        } else if (r - last).abs() <= CLUSTER_TOL * r.max(1.0) && !clusters.is_empty() {
            clusters.last_mut().expect("nonempty").push(v);
            last = r;
        } else {
            clusters.push(vec![v]);
            last = r;
        }
    }

    let mut blocks = Vec::new();
    for mut w in clusters {
        if w.len() % 2 == 1 {
            return Err(Error::Numerical("odd-dimensional rotation eigenspace".into()));
        }
        while !w.is_empty() {
            let proj = |k: usize| w.iter().fold(DVector::zeros(n), |acc: DVector<f64>, v| acc + v * v[k]);
            let e = (0..n)
                .map(proj)
                .find(|p| p.norm() > 1e-8)
                .ok_or_else(|| Error::Numerical("empty rotation eigenspace".into()))?
                .normalize();
            let fe = &mh * &e;
            let mut f = fe.clone();
            f -= &e * f.dot(&e);
            let f = f.normalize();
            let alpha = fe.dot(&f) * s;
            let residual: Vec<DVector<f64>> = w.iter().map(|v| v - &e * v.dot(&e) - &f * v.dot(&f)).collect();
            blocks.push(RotationBlock { alpha, e, f });
            let target = w.len() - 2;
            w = if target == 0 { Vec::new() } else { orthonormal_columns(&residual)? };
            if w.len() != target {
                return Err(Error::Numerical("rotation eigenspace did not deflate cleanly".into()));
            }
        }
    }
    Ok((blocks, kernel))
}

/// Orthonormal basis of the span of projected orthonormal vectors, by
/// Gram–Schmidt pivoting on the largest residual.
fn orthonormal_columns(vs: &[DVector<f64>]) -> Result<Vec<DVector<f64>>> {
    let mut rest: Vec<DVector<f64>> = vs.to_vec();
    let mut out: Vec<DVector<f64>> = Vec::new();
    while let Some((i, norm)) = rest.iter().map(|x| x.norm()).enumerate().max_by(|a, b| a.1.total_cmp(&b.1)) {
        if norm < KERNEL_TOL {
            break;
        }
        let q = rest.swap_remove(i) / norm;
        for x in rest.iter_mut() {
            for _ in 0..2 {
                *x -= &q * q.dot(x);
            }
        }
        out.push(q);
    }
    Ok(out)
}

/// Gram–Schmidt with respect to `g`, pivoting on the largest residual and
/// stopping once every residual is negligible against the largest candidate.
/// `g` must be positive on the span of the candidates.
fn g_orthonormalize(g: &DMatrix<f64>, candidates: &[DVector<f64>]) -> Vec<DVector<f64>> {
    let mut rest: Vec<DVector<f64>> = candidates.to_vec();
    let n0 = rest.iter().map(|c| inner(g, c, c).abs().max(c.norm_squared())).fold(0.0, f64::max);
    let mut out: Vec<DVector<f64>> = Vec::new();
    while let Some((i, nx)) = rest.iter().map(|x| inner(g, x, x)).enumerate().max_by(|a, b| a.1.total_cmp(&b.1)) {
        if nx <= DROP_TOL * n0 {
            break;
        }
        let q = rest.swap_remove(i) / nx.sqrt();
        for x in rest.iter_mut() {
            for _ in 0..2 {
                let t = inner(g, &q, x);
                *x -= &q * t;
            }
        }
        out.push(q);
    }
    out
}

fn check_square(f: &Matrix, n: usize) -> Result<()> {
    if f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.rows() });
    }
    Ok(())
}

/// Canonical form of an operator that is skew for the standard inner product.
pub fn skew_canonical_euclidean(f: &Matrix) -> Result<SkewCanonicalForm> {
    check_square(f, f.rows())?;
    if !(f + &f.transpose()).is_zero() {
        return Err(Error::NotSkew);
    }
    let n = f.rows();
    let (blocks, kernel) = euclidean_core(&to_dmatrix(f), 0.0)?;
    Ok(SkewCanonicalForm { dim: n, metric: DMatrix::identity(n, n), lorentz: None, blocks, kernel })
}

/// Characteristic polynomial coefficients `[c_0, …, c_{n−1}, 1]` (Faddeev–LeVerrier).
fn charpoly(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::from_integer(1.into());
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = &(a * &m) + &Matrix::identity(n).scale(&c[n - k + 1]);
        let am = a * &m;
        c[n - k] = -am.trace() / Scalar::from_integer((k as i64).into());
    }
    c
}

/// Number of sign changes in the coefficient sequence. For a polynomial with
/// only real roots this counts its positive roots.
fn sign_changes(coeffs: &[Scalar]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn check_lorentz(f: &Matrix, g: &GramMatrix) -> Result<()> {
    let n = g.dim();
    check_square(f, n)?;
    let (neg, pos) = g.signature();
    if neg != 1 {
        return Err(Error::WrongSignature { neg, pos });
    }
    if !g.is_skew(f) {
        return Err(Error::NotSkew);
    }
    Ok(())
}

/// Exact case identification for a skew operator on a Lorentzian space.
///
/// `F²` has only real eigenvalues, and a positive one occurs exactly in
/// case II; case III is detected by `rank F² > rank F³`.
pub fn lorentz_case(f: &Matrix, g: &GramMatrix) -> Result<LorentzKind> {
    check_lorentz(f, g)?;
    let f2 = f * f;
    if sign_changes(&charpoly(&f2)) > 0 {
        return Ok(LorentzKind::CaseII);
    }
    if f2.rank() > (&f2 * f).rank() {
        return Ok(LorentzKind::CaseIII);
    }
    Ok(LorentzKind::CaseI)
}

fn null_vector(m: &DMatrix<f64>) -> Result<DVector<f64>> {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::Numerical("SVD failed".into()))?;
    let idx = svd.singular_values.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).map(|(i, _)| i).unwrap_or(0);
    Ok(v_t.row(idx).transpose())
}

fn sign_gauge(v: DVector<f64>) -> DVector<f64> {
    let scale = v.amax();
    match v.iter().find(|x| x.abs() > 1e-8 * scale) {
        Some(x) if *x < 0.0 => -v,
        _ => v,
    }
}

/// Canonical form of an operator that is skew for a Lorentzian metric.
pub fn skew_canonical_lorentz(f: &Matrix, g: &GramMatrix) -> Result<SkewCanonicalForm> {
    let kind = lorentz_case(f, g)?;
    let n = g.dim();
    let gf = to_dmatrix(g.matrix());
    let ff = to_dmatrix(f);

    let (lorentz, e_candidates, dim_v) = match kind {
        LorentzKind::CaseI => {
            let kerf = f.nullspace();
            let c = congruence_diagonalize(&g.restrict(&kerf))?;
            let idx = c
                .diagonal
                .iter()
                .position(|d| d.is_negative())
                .ok_or_else(|| Error::Invariant("kernel has no timelike vector".into()))?;
            let v = Vector::combination(n, c.p.column(idx).as_slice(), &kerf);
            let vv = to_f64(&g.inner(&v, &v));
            let vf = to_dvector(&v) / (-vv).sqrt();
            let e: Vec<DVector<f64>> = g.orthogonal_complement(&[v]).iter().map(to_dvector).collect();
            (LorentzCase::CaseI { v: sign_gauge(vf) }, e, 1)
        }
        LorentzKind::CaseII => {
            let s = max_abs(&ff);
            let fh = &ff / s;
            let ev = fh.clone().complex_eigenvalues();
            let ah = ev.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
            if ah <= 0.0 {
                return Err(Error::Numerical("no positive real eigenvalue".into()));
            }
            let id = DMatrix::<f64>::identity(n, n);
            let mut ah = ah;
            let mut e = null_vector(&(&fh - &id * ah))?;
            let mut eb = null_vector(&(&fh + &id * ah))?;
            // ⟨Fe, ē⟩ = α⟨e, ē⟩ pairs the two eigenvectors, so this quotient
            // converges quadratically.
            for _ in 0..3 {
                let pairing = inner(&gf, &e, &eb);
                if pairing.abs() < 1e-12 {
                    break;
                }
                ah = inner(&gf, &(&fh * &e), &eb) / pairing;
                e = null_vector(&(&fh - &id * ah))?;
                eb = null_vector(&(&fh + &id * ah))?;
            }
            let e = sign_gauge(e.normalize());
            let pairing = inner(&gf, &e, &eb);
            if pairing.abs() < 1e-12 {
                return Err(Error::Numerical("null eigenvectors are orthogonal".into()));
            }
            let ebar = eb / pairing;
            let cands: Vec<DVector<f64>> = (0..n)
                .map(|i| {
                    let x = DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 });
                    let xe = inner(&gf, &x, &e);
                    let xb = inner(&gf, &x, &ebar);
                    &x - &e * xb - &ebar * xe
                })
                .collect();
            (LorentzCase::CaseII { alpha: ah * s, e, ebar }, cands, 2)
        }
        LorentzKind::CaseIII => {
            let f2 = f * f;
            let ker3 = (&f2 * f).nullspace();
            let im2 = span_basis(n, &f2.columns());
            let e0s = span_intersection(n, &ker3, &im2);
            if e0s.len() != 1 {
                return Err(Error::Invariant("nilpotent summand is not of index three".into()));
            }
            let e0 = &e0s[0];
            let k = g.lower(e0).leading_index().ok_or_else(|| Error::Invariant("zero null vector".into()))?;
            let y = Vector::basis(n, k);
            let e0p = span_intersection(n, &f.nullspace(), &g.orthogonal_complement(&[y]));
            let vp = span_intersection(n, &ker3, &g.orthogonal_complement(&e0p));
            let xb = vp
                .iter()
                .find(|v| !g.inner(e0, v).is_zero())
                .ok_or_else(|| Error::Invariant("degenerate Lorentzian summand".into()))?;
            let x = xb.scale(&(Scalar::from_integer(1.into()) / g.inner(e0, xb)));
            let half = Scalar::new(1.into(), 2.into());
            let ebar_p = x.axpy(&(-(half * g.inner(&x, &x))), e0);
            let w = f.mul_vec(&ebar_p);
            let a = to_f64(&g.inner(&w, &w)).sqrt();
            let e = to_dvector(e0) * a;
            let ebar = to_dvector(&ebar_p) / a;
            let fv = to_dvector(&w) / -a;
            let cands: Vec<DVector<f64>> = g.orthogonal_complement(&vp).iter().map(to_dvector).collect();
            (LorentzCase::CaseIII { alpha: 1.0, e, ebar, f: fv }, cands, 3)
        }
    };

    let q = g_orthonormalize(&gf, &e_candidates);
    if q.len() != n - dim_v {
        return Err(Error::Numerical(format!("Euclidean summand has {} of {} directions", q.len(), n - dim_v)));
    }
    let (blocks, kernel) = if q.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let qm = DMatrix::from_columns(&q);
        let c = qm.transpose() * &gf * &ff * &qm;
        let c = (&c - c.transpose()) / 2.0;
        let col = qm.column_iter().map(|c| c.norm()).fold(0.0, f64::max);
        let (blocks, kernel) = euclidean_core(&c, max_abs(&gf) * max_abs(&ff) * col * col)?;
        let blocks = blocks.into_iter().map(|b| RotationBlock { alpha: b.alpha, e: &qm * b.e, f: &qm * b.f }).collect();
        (blocks, kernel.into_iter().map(|k| &qm * k).collect())
    };
    Ok(SkewCanonicalForm { dim: n, metric: gf, lorentz: Some(lorentz), blocks, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cayley_isometry, frac, int};

    fn block_diag(alphas: &[Scalar], kernel: usize) -> Matrix {
        let mut m = Matrix::zeros(0, 0);
        for a in alphas {
            m = m.direct_sum(&Matrix::from_rows(vec![vec![int(0), -a.clone()], vec![a.clone(), int(0)]]).unwrap());
        }
        m.direct_sum(&Matrix::zeros(kernel, kernel))
    }

    fn conj(p: &Matrix, f: &Matrix) -> Matrix {
        &(p * f) * &p.inverse().unwrap()
    }

    #[test]
    fn euclidean_zero_and_single_block() {
        let z = skew_canonical_euclidean(&Matrix::zeros(3, 3)).unwrap();
        assert!(z.blocks.is_empty());
        assert_eq!(z.kernel.len(), 3);
        assert!(z.invariants_hold(&DMatrix::zeros(3, 3)));

        let f = Matrix::from_ints(&[&[0, 2], &[-2, 0]]);
        let c = skew_canonical_euclidean(&f).unwrap();
        assert_eq!(c.blocks.len(), 1);
        assert!((c.blocks[0].alpha - 2.0).abs() < 1e-12);
        assert!((c.blocks[0].e[0] - 1.0).abs() < 1e-12);
        assert!(c.invariants_hold(&to_dmatrix(&f)));
    }

    #[test]
    fn euclidean_rejects_non_skew() {
        assert_eq!(skew_canonical_euclidean(&Matrix::from_ints(&[&[0, 1], &[0, 0]])), Err(Error::NotSkew));
    }

    #[test]
    fn euclidean_recovers_conjugated_blocks() {
        let alphas = [frac(1, 2), int(3), int(3)];
        let f0 = block_diag(&alphas, 0);
        let k = Matrix::from_ints(&[
            &[0, 1, -1, 2, 0, 1],
            &[-1, 0, 1, 0, 1, -2],
            &[1, -1, 0, 1, 1, 0],
            &[-2, 0, -1, 0, 2, 1],
            &[0, -1, -1, -2, 0, 1],
            &[-1, 2, 0, -1, -1, 0],
        ]);
        let q = cayley_isometry(&GramMatrix::identity(6), &k).unwrap();
        let f = conj(&q, &f0);
        let c = skew_canonical_euclidean(&f).unwrap();
        let rates = c.angle_rates();
        for (r, want) in rates.iter().zip([0.5, 3.0, 3.0]) {
            assert!((r - want).abs() < 1e-9, "{rates:?}");
        }
        assert!(c.invariants_hold(&to_dmatrix(&f)));
    }

    #[test]
    fn euclidean_repeated_rate_deflates() {
        let f = Matrix::from_rows(
            [
                ["0", "-7/297", "2/297", "194/297", "-103/297", "-49/33"],
                ["7/297", "0", "224/297", "-182/297", "-116/297", "-89/99"],
                ["-2/297", "-224/297", "0", "23/297", "475/594", "-235/198"],
                ["-194/297", "182/297", "-23/297", "0", "5/9", "-5/99"],
                ["103/297", "116/297", "-475/594", "-5/9", "0", "79/396"],
                ["49/33", "89/99", "235/198", "5/99", "-79/396", "0"],
            ]
            .iter()
            .map(|r| r.iter().map(|x| crate::linalg::parse_scalar(x).unwrap()).collect())
            .collect(),
        )
        .unwrap();
        let q_f = to_dmatrix(&f);
        let c = skew_canonical_euclidean(&f).unwrap();
        assert!(c.invariants_hold(&q_f), "{}", c.reconstruction_error(&q_f));
        assert_eq!(c.angle_rates().len(), 3);
        assert!((c.angle_rates()[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn lorentz_case_two_with_rotation_plane() {
        // Projecting e2 off span{e, ē} leaves pure rounding noise here.
        let g = GramMatrix::new(Matrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])).unwrap();
        let f = Matrix::from_rows(vec![
            vec![frac(-3, 2), int(0), int(0), int(0)],
            vec![int(0), frac(3, 2), frac(7, 2), int(3)],
            vec![frac(-7, 2), int(0), int(0), frac(7, 4)],
            vec![int(-3), int(0), frac(-7, 4), int(0)],
        ])
        .unwrap();
        let c = skew_canonical_lorentz(&f, &g).unwrap();
        let ff = to_dmatrix(&f);
        assert!(c.invariants_hold(&ff), "{} {}", c.reconstruction_error(&ff), c.relation_error(&ff));
        assert!((c.lorentz.as_ref().unwrap().alpha().unwrap() - 1.5).abs() < 1e-12);
        assert!((c.angle_rates()[0] - 1.75).abs() < 1e-12);
    }

    #[test]
    fn charpoly_and_sign_changes() {
        let m = Matrix::from_ints(&[&[2, 0], &[0, -3]]);
        assert_eq!(charpoly(&m), vec![int(-6), int(1), int(1)]);
        assert_eq!(sign_changes(&charpoly(&m)), 1);
    }

    #[test]
    fn lorentz_case_one_on_minkowski_plane() {
        let g = GramMatrix::new(Matrix::from_diagonal(&[int(-1), int(1)])).unwrap();
        let f = Matrix::zeros(2, 2);
        assert_eq!(lorentz_case(&f, &g), Ok(LorentzKind::CaseI));
        let c = skew_canonical_lorentz(&f, &g).unwrap();
        assert_eq!(c.lorentz.as_ref().map(LorentzCase::kind), Some(LorentzKind::CaseI));
        assert_eq!(c.kernel.len(), 1);
        assert!(c.invariants_hold(&DMatrix::zeros(2, 2)));
    }

    #[test]
    fn lorentz_case_two_on_hyperbolic_plane() {
        let g = GramMatrix::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        let f = Matrix::from_diagonal(&[frac(5, 2), frac(-5, 2)]);
        let c = skew_canonical_lorentz(&f, &g).unwrap();
        match &c.lorentz {
            Some(LorentzCase::CaseII { alpha, .. }) => assert!((alpha - 2.5).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        assert!(c.invariants_hold(&to_dmatrix(&f)));
    }

    #[test]
    fn lorentz_case_three_recovered_after_isometry() {
        let g = GramMatrix::new(Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])).unwrap();
        // Basis (e, ebar, f): F e = 0, F ebar = -f, F f = e.
        let f0 = Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[0, -1, 0]]);
        let p = cayley_isometry(&g, &Matrix::from_ints(&[&[0, 1, -2], &[-1, 0, 1], &[2, -1, 0]])).unwrap();
        let f = conj(&p, &f0);
        assert!(g.is_skew(&f));
        let c = skew_canonical_lorentz(&f, &g).unwrap();
        assert_eq!(c.lorentz.as_ref().and_then(LorentzCase::alpha), Some(1.0));
        assert_eq!(c.lorentz.as_ref().map(LorentzCase::kind), Some(LorentzKind::CaseIII));
        assert!(c.invariants_hold(&to_dmatrix(&f)));

        // With a rotation plane and a kernel line alongside.
        let g5 = GramMatrix::new(g.matrix().direct_sum(&Matrix::identity(3))).unwrap();
        let f5 = f0.scale(&int(3)).direct_sum(&block_diag(&[frac(2, 3)], 1));
        let c = skew_canonical_lorentz(&f5, &g5).unwrap();
        assert_eq!(c.lorentz.as_ref().map(LorentzCase::kind), Some(LorentzKind::CaseIII));
        assert_eq!((c.blocks.len(), c.kernel.len()), (1, 1));
        assert!(c.invariants_hold(&to_dmatrix(&f5)));
    }

    #[test]
    fn lorentz_rejects_bad_inputs() {
        let g = GramMatrix::identity(2);
        assert_eq!(skew_canonical_lorentz(&Matrix::zeros(2, 2), &g), Err(Error::WrongSignature { neg: 0, pos: 2 }));
        let h = GramMatrix::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(skew_canonical_lorentz(&Matrix::identity(2), &h), Err(Error::NotSkew));
    }
}
