//! Double extensions of Riemannian flat Lie algebras.
//!
//! Given a flat metric Lie algebra `(B, [,]₀, ⟨,⟩₀)` and data `(ξ, D, μ, b₀)`
//! the space `g = ℝe ⊕ B ⊕ ℝē` carries the metric extending `⟨,⟩₀` with
//! `⟨e,e⟩ = ⟨ē,ē⟩ = 0`, `⟨e,ē⟩ = 1`, `span{e,ē} ⊥ B`, and the bracket
//!
//! ```text
//! [ē,e] = μe,  [ē,a] = D(a) − ⟨b₀,a⟩₀ e,  [a,b] = [a,b]₀ + ⟨(ξ−ξ*)(a),b⟩₀ e.
//! ```
//!
//! The data is admissible when
//!
//! 1. `ξ([a,b]₀) = L_a ξ(b) − L_b ξ(a)`,
//! 2. `D − ξ` is skew and `[D,ξ] = ξ² − μξ − R_{b₀}`,
//! 3. `a·ξ(b) − ξ(a·b) = D(a)·b + a·D(b) − D(a·b)`,
//!
//! and then `g` is flat. Every nonunimodular Lorentzian flat Lie algebra
//! arises this way from a Riemannian flat base with `tr D ≠ −μ`;
//! [`factorize`] recovers such data. Basis order of the extension is
//! `(e, ē, b_1, …, b_m)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::levi_civita::{is_flat, koszul_product, left_mult, right_mult};
use crate::linalg::{frac, span_contains, GramMatrix, Matrix, Scalar, Vector};
use crate::metric_lie::{classify_signature, jacobi_check, modular_vector, MetricLieAlgebra, SignatureClass};

/// Candidate data `(B, ξ, D, μ, b₀)` for a double extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTuple {
    pub base: MetricLieAlgebra,
    pub xi: Matrix,
    pub dee: Matrix,
    pub mu: Scalar,
    pub b0: Vector,
}

impl AdmissibleTuple {
    pub fn new(base: MetricLieAlgebra, xi: Matrix, dee: Matrix, mu: Scalar, b0: Vector) -> Result<Self> {
        let m = base.dim();
        for (rows, cols) in [(xi.rows(), xi.cols()), (dee.rows(), dee.cols())] {
            if rows != m || cols != m {
                return Err(Error::DimensionMismatch { expected: m, found: if rows != m { rows } else { cols } });
            }
        }
        if b0.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: b0.len() });
        }
        Ok(AdmissibleTuple { base, xi, dee, mu, b0 })
    }

    /// `A = D − ξ`.
    pub fn skew_part(&self) -> Matrix {
        &self.dee - &self.xi
    }

    /// The extension is nonunimodular iff `tr D ≠ −μ`.
    pub fn is_nonunimodular(&self) -> bool {
        self.dee.trace() + &self.mu != Scalar::zero()
    }
}

/// One exact verdict per admissibility condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// `ξ` is a 1-cocycle for the left multiplication representation.
    pub cocycle: bool,
    /// `D − ξ` is skew-symmetric.
    pub skew: bool,
    /// `[D,ξ] = ξ² − μξ − R_{b₀}`.
    pub bracket_relation: bool,
    /// `a·ξ(b) − ξ(a·b) = D(a)·b + a·D(b) − D(a·b)`.
    pub derivation_compatibility: bool,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.cocycle && self.skew && self.bracket_relation && self.derivation_compatibility
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.cocycle {
            out.push("cocycle");
        }
        if !self.skew {
            out.push("D - xi skew");
        }
        if !self.bracket_relation {
            out.push("[D,xi] = xi^2 - mu xi - R_b0");
        }
        if !self.derivation_compatibility {
            out.push("derivation compatibility");
        }
        out
    }
}

fn ensure_riemannian_flat(base: &MetricLieAlgebra) -> Result<()> {
    if classify_signature(base) != SignatureClass::Euclidean
        || !jacobi_check(base).holds()
        || !is_flat(base).is_flat()
    {
        return Err(Error::BaseNotRiemannianFlat);
    }
    Ok(())
}

pub fn is_admissible(t: &AdmissibleTuple) -> Result<AdmissibilityReport> {
    ensure_riemannian_flat(&t.base)?;
    let b = &t.base;
    let m = b.dim();
    let table = koszul_product(b);
    let basis = |i: usize| Vector::basis(m, i);
    let xi_of = |i: usize| t.xi.column(i);
    let d_of = |i: usize| t.dee.column(i);

    let cocycle = (0..m).all(|i| {
        (0..m).all(|j| {
            let lhs = t.xi.mul_vec(b.bracket_basis(i, j));
            let rhs = &table.product(&basis(i), &xi_of(j)) - &table.product(&basis(j), &xi_of(i));
            lhs == rhs
        })
    });

    let skew = b.gram().is_skew(&t.skew_part());

    let bracket_relation = {
        let lhs = t.dee.commutator(&t.xi);
        let rhs = &(&(&t.xi * &t.xi) - &t.xi.scale(&t.mu)) - &right_mult(&table, &t.b0);
        lhs == rhs
    };

    let derivation_compatibility = (0..m).all(|i| {
        (0..m).all(|j| {
            let ab = table.product_basis(i, j);
            let lhs = &table.product(&basis(i), &xi_of(j)) - &t.xi.mul_vec(ab);
            let rhs = &(&table.product(&d_of(i), &basis(j)) + &table.product(&basis(i), &d_of(j))) - &t.dee.mul_vec(ab);
            lhs == rhs
        })
    });

    Ok(AdmissibilityReport { cocycle, skew, bracket_relation, derivation_compatibility })
}

/// The extended algebra together with the positions of `e` and `ē`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    pub algebra: MetricLieAlgebra,
    pub index_e: usize,
    pub index_ebar: usize,
}

/// Assembles the extension without checking admissibility or re-verifying
/// the result.
pub fn extend_unchecked(t: &AdmissibleTuple) -> Result<ExtensionResult> {
    let b = &t.base;
    let m = b.dim();
    let n = m + 2;
    let g0 = b.gram();
    let embed = |v: &Vector, e_coeff: Scalar| -> Vector {
        let mut out = Vector::zeros(n);
        out[0] = e_coeff;
        for k in 0..m {
            out[k + 2] = v[k].clone();
        }
        out
    };
    let lowered_b0 = g0.lower(&t.b0);
    let omega = &t.xi - &g0.adjoint(&t.xi);
    let g0_omega = g0.matrix() * &omega;

    let mut entries = Vec::new();
    let mut mu_e = Vector::zeros(n);
    mu_e[0] = t.mu.clone();
    entries.push((1, 0, mu_e));
    for a in 0..m {
        entries.push((1, a + 2, embed(&t.dee.column(a), -lowered_b0[a].clone())));
        for c in a + 1..m {
            entries.push((a + 2, c + 2, embed(b.bracket_basis(a, c), g0_omega[(c, a)].clone())));
        }
    }

    let hyperbolic = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    let gram = GramMatrix::new(hyperbolic.direct_sum(g0.matrix()))?;
    let mut names = vec!["e".to_string(), "ebar".to_string()];
    names.extend(b.names().iter().cloned());
    let algebra = MetricLieAlgebra::from_brackets(names, gram, entries)?;
    Ok(ExtensionResult { algebra, index_e: 0, index_ebar: 1 })
}

/// Builds the double extension of an admissible tuple and re-verifies that
/// the result is a Lorentzian flat Lie algebra.
pub fn extend(t: &AdmissibleTuple) -> Result<ExtensionResult> {
    let report = is_admissible(t)?;
    if !report.admissible() {
        return Err(Error::NotAdmissible(report.failures().join(", ")));
    }
    let out = extend_unchecked(t)?;
    if let Some(v) = jacobi_check(&out.algebra).violation {
        return Err(Error::Invariant(format!("extension violates Jacobi on {:?}", v.triple)));
    }
    if !is_flat(&out.algebra).is_flat() {
        return Err(Error::Invariant("extension is not flat".into()));
    }
    if classify_signature(&out.algebra) != SignatureClass::Lorentzian {
        return Err(Error::Invariant("extension is not Lorentzian".into()));
    }
    Ok(out)
}

/// Checks of the structure of a nonunimodular Lorentzian flat algebra
/// around its modular vector `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTheoremReport {
    pub h: Vector,
    /// `L_h = 0`.
    pub left_h_vanishes: bool,
    /// `u·h, h·u ∈ H = span{h}` for all `u`.
    pub h_two_sided_ideal: bool,
    /// `u·w, w·u ∈ H^⊥` for all `u` and `w ∈ H^⊥`.
    pub h_perp_two_sided_ideal: bool,
}

impl StructureTheoremReport {
    pub fn all_pass(&self) -> bool {
        self.left_h_vanishes && self.h_two_sided_ideal && self.h_perp_two_sided_ideal
    }
}

pub(crate) fn ensure_nonunimodular_lorentzian_flat(g: &MetricLieAlgebra) -> Result<Vector> {
    match classify_signature(g) {
        SignatureClass::Lorentzian => {}
        _ => {
            let (neg, pos) = g.gram().signature();
            return Err(Error::WrongSignature { neg, pos });
        }
    }
    if !jacobi_check(g).holds() {
        return Err(Error::NotLie);
    }
    if !is_flat(g).is_flat() {
        return Err(Error::NotFlat);
    }
    let h = modular_vector(g);
    if h.is_zero() {
        return Err(Error::Unimodular);
    }
    Ok(h)
}

pub fn verify_structure_theorem(g: &MetricLieAlgebra) -> Result<StructureTheoremReport> {
    let h = ensure_nonunimodular_lorentzian_flat(g)?;
    let n = g.dim();
    let t = koszul_product(g);
    let h_span = vec![h.clone()];
    let h_perp = g.gram().orthogonal_complement(&h_span);
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();

    let left_h_vanishes = left_mult(&t, &h).is_zero();
    let h_two_sided_ideal = basis
        .iter()
        .all(|u| span_contains(&h_span, &t.product(u, &h)) && span_contains(&h_span, &t.product(&h, u)));
    let h_perp_two_sided_ideal = basis.iter().all(|u| {
        h_perp
            .iter()
            .all(|w| span_contains(&h_perp, &t.product(u, w)) && span_contains(&h_perp, &t.product(w, u)))
    });
    Ok(StructureTheoremReport { h, left_h_vanishes, h_two_sided_ideal, h_perp_two_sided_ideal })
}

/// A double-extension witness for a nonunimodular Lorentzian flat algebra.
///
/// The columns of `change_of_basis` are `e, ē, b_1, …, b_m` written in the
/// input basis; re-extending `tuple` gives the input rewritten in that basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub tuple: AdmissibleTuple,
    pub change_of_basis: Matrix,
}

impl FactorizationResult {
    /// Exact comparison of `extend(tuple)` with `g` conjugated by the recorded basis.
    pub fn reproduces(&self, g: &MetricLieAlgebra) -> Result<bool> {
        let rebuilt = extend_unchecked(&self.tuple)?.algebra;
        Ok(rebuilt == g.change_basis(&self.change_of_basis)?)
    }
}

/// Writes a nonunimodular Lorentzian flat algebra as a double extension of
/// a Riemannian flat algebra.
///
/// `e` is the modular vector itself. `ē` is the isotropic correction of the
/// solution of `⟨e,x⟩ = 1` supported on the first coordinate where `g·e` is
/// nonzero, and `B = span{e,ē}^⊥` with its canonical kernel basis.
pub fn factorize(g: &MetricLieAlgebra) -> Result<FactorizationResult> {
    let e = ensure_nonunimodular_lorentzian_flat(g)?;
    let n = g.dim();
    let m = n - 2;
    let gram = g.gram();

    let lowered = gram.lower(&e);
    let k = lowered.leading_index().ok_or(Error::Degenerate)?;
    let x = Vector::basis(n, k).scale(&lowered[k].recip());
    let ebar = x.axpy(&(-frac(1, 2) * gram.inner(&x, &x)), &e);
    let b_basis = gram.orthogonal_complement(&[e.clone(), ebar.clone()]);
    debug_assert_eq!(b_basis.len(), m);

    let mut columns = vec![e, ebar];
    columns.extend(b_basis);
    let p = Matrix::from_columns(n, &columns);
    let adapted = g.change_basis(&p)?;

    let only_e = |v: &Vector| (1..n).all(|i| v[i].is_zero());
    let ebar_e = adapted.bracket_basis(1, 0);
    if !only_e(ebar_e) {
        return Err(Error::Invariant("[ē,e] is not a multiple of e".into()));
    }
    let mu = ebar_e[0].clone();
    for a in 0..n {
        if !adapted.bracket_basis(0, a).iter().skip(1).all(Zero::is_zero) || (a >= 2 && !adapted.bracket_basis(0, a).is_zero()) {
            return Err(Error::Invariant("e does not bracket as the extension requires".into()));
        }
    }

    let base_gram = GramMatrix::new(Matrix::from_fn(m, m, |i, j| adapted.gram().matrix()[(i + 2, j + 2)].clone()))?;
    let restrict = |v: &Vector| -> Vector { (2..n).map(|i| v[i].clone()).collect() };

    let mut base_entries = Vec::new();
    let mut omega_lowered = Matrix::zeros(m, m);
    for a in 0..m {
        for c in a + 1..m {
            let v = adapted.bracket_basis(a + 2, c + 2);
            if !v[1].is_zero() {
                return Err(Error::Invariant("[B,B] has an ē component".into()));
            }
            base_entries.push((a, c, restrict(v)));
            // ⟨Ω e_a, e_c⟩₀ = ω(a,c): row c, column a of g₀·Ω.
            omega_lowered[(c, a)] = v[0].clone();
            omega_lowered[(a, c)] = -v[0].clone();
        }
    }
    let mut dee_cols = Vec::with_capacity(m);
    let mut b0_lowered = Vector::zeros(m);
    for a in 0..m {
        let v = adapted.bracket_basis(1, a + 2);
        if !v[1].is_zero() {
            return Err(Error::Invariant("[ē,B] has an ē component".into()));
        }
        dee_cols.push(restrict(v));
        b0_lowered[a] = -v[0].clone();
    }
    let dee = Matrix::from_columns(m, &dee_cols);
    let b0 = base_gram.raise(&b0_lowered);
    let omega = base_gram.inverse() * &omega_lowered;
    let skew = (&(&dee - &base_gram.adjoint(&dee)) - &omega).scale(&frac(1, 2));
    let xi = &dee - &skew;

    let names = (1..=m).map(|i| format!("b{i}")).collect();
    let base = MetricLieAlgebra::from_brackets(names, base_gram, base_entries)?;
    let tuple = AdmissibleTuple::new(base, xi, dee, mu, b0)?;

    let report = is_admissible(&tuple)?;
    if !report.admissible() {
        return Err(Error::Invariant(format!("recovered tuple fails {}", report.failures().join(", "))));
    }
    if !tuple.is_nonunimodular() {
        return Err(Error::Invariant("recovered tuple has tr D = -mu".into()));
    }
    Ok(FactorizationResult { tuple, change_of_basis: p })
}
