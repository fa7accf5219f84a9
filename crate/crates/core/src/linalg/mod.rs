//! Exact rational linear algebra.
//!
//! Everything here works over [`Scalar`], an arbitrary-precision rational.
//! The only floating point code is the conversion helpers at the bottom,
//! used by the skew canonical form routines.

mod gram;
mod matrix;
mod span;
mod vector;

pub use gram::{adjoint_wrt, cayley_isometry, congruence_diagonalize, orthogonal_complement, signature, Congruence, GramMatrix};
pub use matrix::{solve, Matrix};
pub use span::{span_basis, span_contains, span_contains_all, span_intersection, span_rank, spans_equal};
pub use vector::Vector;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"` or `"p"` with optional sign. Rejects zero denominators,
/// decimals and surrounding garbage.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return None;
    }
    let n: BigInt = num.trim_start_matches('+').parse().ok()?;
    let d: BigInt = den.trim_start_matches('+').parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Huge numerators or denominators: fall back to a ratio of f64s.
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

pub fn to_dmatrix(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| to_f64(&m[(i, j)]))
}

pub fn to_dvector(v: &Vector) -> DVector<f64> {
    DVector::from_iterator(v.len(), v.iter().map(to_f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_scalar("3/6"), Some(frac(1, 2)));
        assert_eq!(parse_scalar("-7"), Some(int(-7)));
        assert_eq!(parse_scalar(" 4/-8 "), Some(frac(-1, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("0.5"), None);
        assert_eq!(parse_scalar(""), None);
        assert_eq!(parse_scalar("1/"), None);
        assert_eq!(parse_scalar("a/b"), None);
    }

    #[test]
    fn canonical_form_is_reduced() {
        let x = frac(6, -4);
        assert_eq!(format_scalar(&x), "-3/2");
        assert_eq!(format_scalar(&frac(4, 2)), "2");
    }
}
