//! Nonunimodular Lorentzian flat Lie algebras of dimension 2 to 4.
//!
//! Every family lives on the basis `(e, ē, e1, e2)` (truncated to its
//! dimension) with `⟨e,ē⟩ = 1`, `⟨e,e⟩ = ⟨ē,ē⟩ = 0` and `e1, e2` orthonormal
//! and orthogonal to the null pair.

mod solver;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::double_extension::ensure_nonunimodular_lorentzian_flat;
use crate::error::{Error, Result};
use crate::levi_civita::{koszul_product, right_mult};
use crate::linalg::{GramMatrix, Matrix, Scalar, Vector};
use crate::metric_lie::{center, derived_ideal, MetricLieAlgebra};

pub use solver::{abelian_base, in_branch_union, solve_admissible_dim1, solve_admissible_dim2, BranchKind, SolutionBranch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    G2,
    G3,
    G3P,
    G4,
    G4P,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::G2, FamilyId::G3, FamilyId::G3P, FamilyId::G4, FamilyId::G4P];

    pub fn dim(self) -> usize {
        match self {
            FamilyId::G2 => 2,
            FamilyId::G3 | FamilyId::G3P => 3,
            FamilyId::G4 | FamilyId::G4P => 4,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::G2 => "G2",
            FamilyId::G3 => "G3",
            FamilyId::G3P => "G3P",
            FamilyId::G4 => "G4",
            FamilyId::G4P => "G4P",
        })
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('\'', "P").as_str() {
            "G2" => Ok(FamilyId::G2),
            "G3" => Ok(FamilyId::G3),
            "G3P" => Ok(FamilyId::G3P),
            "G4" => Ok(FamilyId::G4),
            "G4P" => Ok(FamilyId::G4P),
            _ => Err(Error::BadParameters(format!("unknown family {s:?}"))),
        }
    }
}

/// A catalog family at a parameter point. Parameters a family does not use
/// are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogFamily {
    pub id: FamilyId,
    pub mu: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub lambda: Scalar,
    pub gamma: Scalar,
    pub eps: Scalar,
}

impl CatalogFamily {
    fn base(id: FamilyId, mu: Scalar) -> Self {
        CatalogFamily {
            id,
            mu,
            alpha: Scalar::zero(),
            beta: Scalar::zero(),
            lambda: Scalar::zero(),
            gamma: Scalar::zero(),
            eps: Scalar::zero(),
        }
    }

    pub fn g2(mu: Scalar) -> Self {
        Self::base(FamilyId::G2, mu)
    }

    pub fn g3(mu: Scalar, alpha: Scalar) -> Self {
        CatalogFamily { alpha, ..Self::base(FamilyId::G3, mu) }
    }

    pub fn g3p(mu: Scalar, alpha: Scalar) -> Self {
        CatalogFamily { alpha, ..Self::base(FamilyId::G3P, mu) }
    }

    pub fn g4(mu: Scalar, lambda: Scalar, alpha: Scalar, beta: Scalar) -> Self {
        CatalogFamily { lambda, alpha, beta, ..Self::base(FamilyId::G4, mu) }
    }

    pub fn g4p(eps: Scalar, mu: Scalar, gamma: Scalar, alpha: Scalar, beta: Scalar) -> Self {
        CatalogFamily { eps, gamma, alpha, beta, ..Self::base(FamilyId::G4P, mu) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mu.is_zero() {
            return Err(Error::BadParameters("mu must be nonzero".into()));
        }
        if self.id == FamilyId::G4P && !(self.eps.is_zero() || self.eps.is_one()) {
            return Err(Error::BadParameters(format!("eps must be 0 or 1, got {}", self.eps)));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.id.dim()
    }

    pub fn instantiate(&self) -> Result<MetricLieAlgebra> {
        self.validate()?;
        let n = self.dim();
        let (e, eb, e1, e2) = (0, 1, 2, 3);
        let vec = |pairs: &[(usize, &Scalar)]| {
            let mut v = Vector::zeros(n);
            for (k, c) in pairs {
                v[*k] = (*c).clone();
            }
            v
        };
        let mu = &self.mu;
        let mut brackets = vec![(eb, e, vec(&[(e, mu)]))];
        match self.id {
            FamilyId::G2 => {}
            FamilyId::G3 => brackets.push((eb, e1, vec(&[(e, &self.alpha)]))),
            FamilyId::G3P => brackets.push((eb, e1, vec(&[(e1, mu), (e, &self.alpha)]))),
            FamilyId::G4 => {
                brackets.push((eb, e1, vec(&[(e1, mu), (e2, &self.lambda), (e, &self.alpha)])));
                brackets.push((eb, e2, vec(&[(e, &self.beta)])));
                brackets.push((e1, e2, vec(&[(e, &self.lambda)])));
            }
            FamilyId::G4P => {
                let em = &self.eps * mu;
                let neg_gamma = -&self.gamma;
                brackets.push((eb, e1, vec(&[(e1, &em), (e2, &self.gamma), (e, &self.alpha)])));
                brackets.push((eb, e2, vec(&[(e1, &neg_gamma), (e2, &em), (e, &self.beta)])));
            }
        }
        let names = ["e", "ebar", "e1", "e2"][..n].iter().map(|s| s.to_string()).collect();
        MetricLieAlgebra::from_brackets(names, catalog_metric(n), brackets)
    }
}

impl fmt::Display for CatalogFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(mu={}", self.id, self.mu)?;
        match self.id {
            FamilyId::G2 => {}
            FamilyId::G3 | FamilyId::G3P => write!(f, ", alpha={}", self.alpha)?,
            FamilyId::G4 => write!(f, ", lambda={}, alpha={}, beta={}", self.lambda, self.alpha, self.beta)?,
            FamilyId::G4P => {
                write!(f, ", eps={}, gamma={}, alpha={}, beta={}", self.eps, self.gamma, self.alpha, self.beta)?
            }
        }
        f.write_str(")")
    }
}

/// Hyperbolic pair followed by an identity block.
pub fn catalog_metric(n: usize) -> GramMatrix {
    let hyp = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    GramMatrix::new(hyp.direct_sum(&Matrix::identity(n.saturating_sub(2)))).expect("nondegenerate")
}

/// Isomorphism invariants of a nonunimodular Lorentzian flat algebra and the
/// catalog families compatible with them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminant {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    /// Least `k` with `R_h^k = 0`.
    pub rh_nilpotency: usize,
    pub matches: Vec<FamilyId>,
}

pub fn discriminate(g: &MetricLieAlgebra) -> Result<Discriminant> {
    let h = ensure_nonunimodular_lorentzian_flat(g)?;
    let n = g.dim();
    let derived_dim = derived_ideal(g).len();
    let center_dim = center(g).len();
    let rh = right_mult(&koszul_product(g), &h);
    let mut power = Matrix::identity(n);
    let mut rh_nilpotency = 0;
    while !power.is_zero() && rh_nilpotency <= n {
        power = &power * &rh;
        rh_nilpotency += 1;
    }
    let matches = match (n, derived_dim) {
        (2, 1) => vec![FamilyId::G2],
        (3, 1) => vec![FamilyId::G3],
        (3, 2) => vec![FamilyId::G3P],
        (4, 2) => vec![FamilyId::G4],
        (4, 1) | (4, 3) => vec![FamilyId::G4P],
        _ => return Err(Error::NoMatch(format!("dim {n} with derived ideal of dim {derived_dim}"))),
    };
    Ok(Discriminant { dim: n, derived_dim, center_dim, rh_nilpotency, matches })
}
