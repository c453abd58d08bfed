use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::index::DoubleIndex;
use crate::error::{Error, Result};
use crate::rootsys::LieType;

/// `coeffs · t + constant ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>, constant: i64) -> Self {
        LinearForm { coeffs, constant }
    }

    pub fn homogeneous(coeffs: Vec<i64>) -> Self {
        LinearForm {
            coeffs,
            constant: 0,
        }
    }

    /// `t_k ≥ 0`.
    pub fn nonnegative(dim: usize, k: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[k] = 1;
        LinearForm {
            coeffs,
            constant: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, t: &[i64]) -> i64 {
        self.coeffs.iter().zip(t).map(|(a, b)| a * b).sum::<i64>() + self.constant
    }

    pub fn holds(&self, t: &[i64]) -> bool {
        self.eval(t) >= 0
    }

    /// Lowest position with a nonzero coefficient.
    pub fn first_support(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Label of a cone coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoordLabel {
    Double(DoubleIndex),
    /// 1-based position in an arbitrary word.
    Position(usize),
}

impl fmt::Display for CoordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordLabel::Double(d) => d.fmt(f),
            CoordLabel::Position(k) => write!(f, "t_{k}"),
        }
    }
}

/// A cone given by homogeneous inequalities, nonnegativity included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeH {
    pub ty: LieType,
    pub labels: Vec<CoordLabel>,
    pub forms: Vec<LinearForm>,
}

impl ConeH {
    /// Appends nonnegativity and removes duplicate and zero forms.
    pub fn new(ty: LieType, labels: Vec<CoordLabel>, forms: Vec<LinearForm>) -> Result<Self> {
        let dim = labels.len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let nonneg = (0..dim).map(|k| LinearForm::nonnegative(dim, k));
        for f in forms.into_iter().chain(nonneg) {
            if f.dim() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    found: f.dim(),
                });
            }
            if f.constant != 0 {
                return Err(Error::Internal("cone forms must be homogeneous".into()));
            }
            if !f.is_zero() && seen.insert(f.clone()) {
                out.push(f);
            }
        }
        Ok(ConeH {
            ty,
            labels,
            forms: out,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn contains(&self, t: &[i64]) -> bool {
        t.len() == self.dim() && self.forms.iter().all(|f| f.holds(t))
    }

    /// Forms other than plain coordinate nonnegativity.
    pub fn non_trivial_forms(&self) -> impl Iterator<Item = &LinearForm> {
        self.forms.iter().filter(|f| {
            let nz: Vec<_> = f.coeffs.iter().filter(|&&c| c != 0).collect();
            !(nz.len() == 1 && *nz[0] > 0)
        })
    }
}

/// `upper_coeff · t_upper ≥ lower_coeff · t_lower`, drawn as an edge
/// `lower → upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relation {
    pub upper: DoubleIndex,
    pub upper_coeff: i64,
    pub lower: DoubleIndex,
    pub lower_coeff: i64,
}

impl Relation {
    pub fn ge(upper: DoubleIndex, lower: DoubleIndex) -> Self {
        Relation {
            upper,
            upper_coeff: 1,
            lower,
            lower_coeff: 1,
        }
    }

    pub fn weighted(
        upper_coeff: i64,
        upper: DoubleIndex,
        lower_coeff: i64,
        lower: DoubleIndex,
    ) -> Self {
        Relation {
            upper,
            upper_coeff,
            lower,
            lower_coeff,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |c: i64, d: DoubleIndex| {
            if c == 1 {
                d.to_string()
            } else {
                format!("{c}{d}")
            }
        };
        write!(
            f,
            "{} >= {}",
            side(self.upper_coeff, self.upper),
            side(self.lower_coeff, self.lower)
        )
    }
}
