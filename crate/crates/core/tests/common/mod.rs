//! Small standalone reference implementation used as an oracle: plain
//! `Vec<Vec<BigRational>>` arithmetic straight from the definitions, with no
//! calls into the library's linear algebra.

#![allow(dead_code)]

use lorflat::linalg::{Matrix, Scalar};
use lorflat::metric_lie::MetricLieAlgebra;
use num_traits::{One, Signed, Zero};

pub type M = Vec<Vec<Scalar>>;

pub fn mat(m: &Matrix) -> M {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect()).collect()
}

/// `c[i][j][k]`: coefficient of `e_k` in `[e_i, e_j]`.
pub fn constants(g: &MetricLieAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let n = g.dim();
    (0..n).map(|i| (0..n).map(|j| g.bracket_basis(i, j).iter().cloned().collect()).collect()).collect()
}

fn zeros(r: usize, c: usize) -> M {
    vec![vec![Scalar::zero(); c]; r]
}

pub fn mul(a: &M, b: &M) -> M {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = zeros(r, c);
    for i in 0..r {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                out[i][j] = &out[i][j] + &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn is_zero(a: &M) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Gauss-Jordan inverse.
pub fn inverse(a: &M) -> M {
    let n = a.len();
    let mut w: M = a.iter().enumerate().map(|(i, r)| {
        let mut row = r.clone();
        row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
        row
    }).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !w[r][col].is_zero()).expect("invertible");
        w.swap(col, p);
        let inv = w[col][col].recip();
        for x in w[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !w[r][col].is_zero() {
                let f = w[r][col].clone();
                let pivot = w[col].clone();
                for (x, p) in w[r].iter_mut().zip(&pivot) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    w.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Levi-Civita products `p[i][j] = e_i·e_j` from Koszul's formula.
pub fn koszul(g: &MetricLieAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let n = g.dim();
    let c = constants(g);
    let gm = mat(g.gram().matrix());
    let ginv = inverse(&gm);
    let ip = |v: &[Scalar], k: usize| -> Scalar { (0..n).map(|l| &v[l] * &gm[l][k]).sum() };
    let half = Scalar::new(1.into(), 2.into());
    let mut p = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            // lowered[k] = <e_i·e_j, e_k>
            let lowered: Vec<Scalar> = (0..n)
                .map(|k| &half * (ip(&c[i][j], k) + ip(&c[k][i], j) + ip(&c[k][j], i)))
                .collect();
            p[i][j] = (0..n).map(|a| (0..n).map(|k| &ginv[a][k] * &lowered[k]).sum()).collect();
        }
    }
    p
}

/// Matrix of `L_{e_i}`.
pub fn left(p: &[Vec<Vec<Scalar>>], i: usize) -> M {
    let n = p.len();
    (0..n).map(|r| (0..n).map(|j| p[i][j][r].clone()).collect()).collect()
}

/// Matrix of `R_u`.
pub fn right(p: &[Vec<Vec<Scalar>>], u: &[Scalar]) -> M {
    let n = p.len();
    let mut out = zeros(n, n);
    for j in 0..n {
        for (k, uk) in u.iter().enumerate() {
            if uk.is_zero() {
                continue;
            }
            for r in 0..n {
                out[r][j] = &out[r][j] + uk * &p[j][k][r];
            }
        }
    }
    out
}

pub fn jacobi_holds(g: &MetricLieAlgebra) -> bool {
    let n = g.dim();
    let c = constants(g);
    let br = |v: &[Scalar], k: usize| -> Vec<Scalar> {
        (0..n).map(|l| (0..n).map(|a| &v[a] * &c[a][k][l]).sum()).collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s1 = br(&c[i][j], k);
                let s2 = br(&c[j][k], i);
                let s3 = br(&c[k][i], j);
                if (0..n).any(|l| !(&s1[l] + &s2[l] + &s3[l]).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// `K(e_i, e_j) = L_{[e_i,e_j]} - [L_i, L_j]` vanishes for all pairs.
pub fn flat(g: &MetricLieAlgebra) -> bool {
    let n = g.dim();
    let c = constants(g);
    let p = koszul(g);
    let ls: Vec<M> = (0..n).map(|i| left(&p, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut k = zeros(n, n);
            for (a, coef) in c[i][j].iter().enumerate() {
                for r in 0..n {
                    for s in 0..n {
                        k[r][s] = &k[r][s] + coef * &ls[a][r][s];
                    }
                }
            }
            let ab = mul(&ls[i], &ls[j]);
            let ba = mul(&ls[j], &ls[i]);
            for r in 0..n {
                for s in 0..n {
                    k[r][s] = &k[r][s] - (&ab[r][s] - &ba[r][s]);
                }
            }
            if !is_zero(&k) {
                return false;
            }
        }
    }
    true
}

/// Metric dual of `u ↦ tr ad_u`.
pub fn modular(g: &MetricLieAlgebra) -> Vec<Scalar> {
    let n = g.dim();
    let c = constants(g);
    let tr: Vec<Scalar> = (0..n).map(|i| (0..n).map(|j| c[i][j][j].clone()).sum()).collect();
    let ginv = inverse(&mat(g.gram().matrix()));
    (0..n).map(|a| (0..n).map(|k| &ginv[a][k] * &tr[k]).sum()).collect()
}

pub fn inner(g: &MetricLieAlgebra, u: &[Scalar], v: &[Scalar]) -> Scalar {
    let gm = mat(g.gram().matrix());
    let n = u.len();
    (0..n).map(|i| (0..n).map(|j| &u[i] * &gm[i][j] * &v[j]).sum::<Scalar>()).sum()
}

/// Characteristic polynomial coefficients `[1, c1, …, cn]` (Faddeev–LeVerrier).
fn charpoly(a: &M) -> Vec<Scalar> {
    let n = a.len();
    let mut coeffs = vec![Scalar::one()];
    let mut mk = zeros(n, n);
    for k in 1..=n {
        let mut next = mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &coeffs[k - 1];
        }
        mk = next;
        let am = mul(a, &mk);
        let tr: Scalar = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs.push(-tr / Scalar::from_integer((k as i64).into()));
    }
    coeffs
}

fn sign_changes(c: &[Scalar]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(negative, positive)` eigenvalue counts of a symmetric matrix, by
/// Descartes' rule on its (real-rooted) characteristic polynomial.
pub fn signature(a: &M) -> (usize, usize) {
    let c = charpoly(a);
    let pos = sign_changes(&c);
    let flipped: Vec<Scalar> = c.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    (sign_changes(&flipped), pos)
}

/// Rank by row reduction.
pub fn rank(a: &M) -> usize {
    let mut w = a.clone();
    let cols = w.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..w.len()).find(|&i| !w[i][c].is_zero()) else { continue };
        w.swap(r, p);
        for i in 0..w.len() {
            if i != r && !w[i][c].is_zero() {
                let f = &w[i][c] / &w[r][c];
                let pivot = w[r].clone();
                for (x, p) in w[i].iter_mut().zip(&pivot) {
                    *x = &*x - &f * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim [g, g]`.
pub fn derived_dim(g: &MetricLieAlgebra) -> usize {
    let c = constants(g);
    let rows: M = c.iter().flat_map(|r| r.iter().cloned()).collect();
    rank(&rows)
}
