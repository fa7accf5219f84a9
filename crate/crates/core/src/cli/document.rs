//! JSON documents exchanged by the command-line tool.
//!
//! Rationals travel as strings (`"p/q"` or `"p"`). Brackets are listed for
//! `i < j` only, with the nonzero coefficients keyed by basis index.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::double_extension::AdmissibleTuple;
use crate::linalg::{format_scalar, parse_scalar, GramMatrix, Matrix, Scalar, Vector};
use crate::metric_lie::MetricLieAlgebra;

/// A malformed document, with the path of the offending field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError {
    pub path: String,
    pub message: String,
}

impl DocError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        DocError { path: path.into(), message: message.into() }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            f.write_str(&self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for DocError {}

type DocResult<T> = std::result::Result<T, DocError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub metric: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleDocument {
    pub base: AlgebraDocument,
    pub xi: Vec<Vec<String>>,
    pub dee: Vec<Vec<String>>,
    pub mu: String,
    pub b0: Vec<String>,
    /// Columns are `e, ē, b_1, …` in the basis of the factored algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub change_of_basis: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CanonDocument {
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<String>>>,
}

fn scalar(path: &str, s: &str) -> DocResult<Scalar> {
    parse_scalar(s).ok_or_else(|| DocError::new(path, format!("invalid rational {s:?}")))
}

pub fn emit_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| format_scalar(&m[(i, j)])).collect()).collect()
}

pub fn emit_vector(v: &Vector) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

/// Parses a `rows × cols` array of rationals.
pub fn parse_matrix(path: &str, rows: &[Vec<String>], n_rows: usize, n_cols: usize) -> DocResult<Matrix> {
    if rows.len() != n_rows {
        return Err(DocError::new(path, format!("expected {n_rows} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n_rows);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n_cols {
            return Err(DocError::new(format!("{path}[{i}]"), format!("expected {n_cols} entries, found {}", row.len())));
        }
        let parsed: DocResult<Vec<Scalar>> =
            row.iter().enumerate().map(|(j, s)| scalar(&format!("{path}[{i}][{j}]"), s)).collect();
        out.push(parsed?);
    }
    Ok(Matrix::from_fn(n_rows, n_cols, |i, j| out[i][j].clone()))
}

/// Parses a square array whose size is not known in advance.
pub fn parse_square(path: &str, rows: &[Vec<String>]) -> DocResult<Matrix> {
    parse_matrix(path, rows, rows.len(), rows.len())
}

pub fn parse_vector(path: &str, entries: &[String], n: usize) -> DocResult<Vector> {
    if entries.len() != n {
        return Err(DocError::new(path, format!("expected {n} entries, found {}", entries.len())));
    }
    entries.iter().enumerate().map(|(i, s)| scalar(&format!("{path}[{i}]"), s)).collect()
}

fn parse_gram(path: &str, rows: &[Vec<String>], n: usize) -> DocResult<GramMatrix> {
    let m = parse_matrix(path, rows, n, n)?;
    GramMatrix::new(m).map_err(|e| DocError::new(path, e.to_string()))
}

impl AlgebraDocument {
    pub fn from_algebra(g: &MetricLieAlgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = g.bracket_basis(i, j);
                if b.is_zero() {
                    continue;
                }
                let coeffs = b
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k.to_string(), format_scalar(c)))
                    .collect();
                brackets.push(BracketEntry { i, j, coeffs });
            }
        }
        AlgebraDocument { dim: n, basis: g.names().to_vec(), brackets, metric: emit_matrix(g.gram().matrix()) }
    }

    pub fn to_algebra(&self) -> DocResult<MetricLieAlgebra> {
        self.to_algebra_at("")
    }

    fn to_algebra_at(&self, prefix: &str) -> DocResult<MetricLieAlgebra> {
        let field = |name: &str| if prefix.is_empty() { name.to_string() } else { format!("{prefix}.{name}") };
        let n = self.dim;
        if self.basis.len() != n {
            return Err(DocError::new(field("basis"), format!("expected {n} names, found {}", self.basis.len())));
        }
        let gram = parse_gram(&field("metric"), &self.metric, n)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (idx, b) in self.brackets.iter().enumerate() {
            let path = format!("{}[{idx}]", field("brackets"));
            if b.i >= b.j {
                return Err(DocError::new(path, format!("only i < j entries are allowed, got i={} j={}", b.i, b.j)));
            }
            if b.j >= n {
                return Err(DocError::new(path, format!("index {} out of range for dim {n}", b.j)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(DocError::new(path, format!("duplicate entry for ({}, {})", b.i, b.j)));
            }
            let mut v = Vector::zeros(n);
            for (k, c) in &b.coeffs {
                let kpath = format!("{path}.coeffs.{k}");
                let k: usize =
                    k.parse().map_err(|_| DocError::new(kpath.clone(), format!("invalid basis index {k:?}")))?;
                if k >= n {
                    return Err(DocError::new(kpath, format!("index {k} out of range for dim {n}")));
                }
                v[k] = scalar(&kpath, c)?;
            }
            entries.push((b.i, b.j, v));
        }
        MetricLieAlgebra::from_brackets(self.basis.clone(), gram, entries).map_err(|e| DocError::new(field("brackets"), e.to_string()))
    }
}

impl TupleDocument {
    pub fn from_tuple(t: &AdmissibleTuple, change_of_basis: Option<&Matrix>) -> Self {
        TupleDocument {
            base: AlgebraDocument::from_algebra(&t.base),
            xi: emit_matrix(&t.xi),
            dee: emit_matrix(&t.dee),
            mu: format_scalar(&t.mu),
            b0: emit_vector(&t.b0),
            change_of_basis: change_of_basis.map(emit_matrix),
        }
    }

    pub fn to_tuple(&self) -> DocResult<(AdmissibleTuple, Option<Matrix>)> {
        let base = self.base.to_algebra_at("base")?;
        let m = base.dim();
        let xi = parse_matrix("xi", &self.xi, m, m)?;
        let dee = parse_matrix("dee", &self.dee, m, m)?;
        let mu = scalar("mu", &self.mu)?;
        let b0 = parse_vector("b0", &self.b0, m)?;
        let p = match &self.change_of_basis {
            Some(rows) => Some(parse_matrix("change_of_basis", rows, m + 2, m + 2)?),
            None => None,
        };
        let t = AdmissibleTuple::new(base, xi, dee, mu, b0).map_err(|e| DocError::new("", e.to_string()))?;
        Ok((t, p))
    }
}

impl CanonDocument {
    pub fn to_parts(&self) -> DocResult<(Matrix, Option<GramMatrix>)> {
        let f = parse_square("matrix", &self.matrix)?;
        let g = match &self.metric {
            Some(rows) => Some(parse_gram("metric", rows, f.rows())?),
            None => None,
        };
        Ok((f, g))
    }
}

/// Deserializes a document, reporting the line and column of syntax errors.
pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> DocResult<T> {
    serde_json::from_str(text).map_err(|e| DocError::new(format!("line {} column {}", e.line(), e.column()), e.to_string()))
}
