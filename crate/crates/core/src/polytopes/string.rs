use serde::{Deserialize, Serialize};

use super::enumerate::ChainEnumerator;
use crate::cones::{a_string_cone, string_cone_explicit, ConeH, LittelmannChecker};
use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, Family, LieType, Weight};
use crate::weyl::{canonical_word, ReducedWord};

/// Bound on `t_k` given `t_{k+1}, …, t_N` (`k` is 1-based).
pub fn weight_bound(w: &ReducedWord, lambda: &Weight, suffix: &[i64], k: usize) -> Result<i64> {
    let n = w.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, rank: n });
    }
    if suffix.len() != n - k {
        return Err(Error::LengthMismatch {
            expected: n - k,
            found: suffix.len(),
        });
    }
    if lambda.lie_type() != w.lie_type() {
        return Err(Error::Internal(
            "weight and word have different types".into(),
        ));
    }
    let a = cartan_matrix(w.lie_type());
    let letters = w.letters();
    let ik = letters[k - 1];
    let load: i64 = suffix
        .iter()
        .zip(&letters[k..])
        .map(|(t, &ij)| t * a.get(ik, ij))
        .sum();
    Ok(lambda.fund()[ik - 1] - load)
}

/// The canonical cone of a type: explicit for B, C, D and the
/// consecutive-difference system for A.
pub fn canonical_cone(ty: LieType) -> Result<ConeH> {
    match ty.family() {
        Family::A => a_string_cone(ty.rank()),
        _ => string_cone_explicit(ty),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StringPolytope {
    pub ty: LieType,
    pub lambda: Weight,
    pub cone: ConeH,
    pub word: ReducedWord,
}

impl StringPolytope {
    /// The polytope of the canonical word.
    pub fn new(lambda: &Weight) -> Result<Self> {
        lambda.require_dominant()?;
        let ty = lambda.lie_type();
        Ok(StringPolytope {
            ty,
            lambda: lambda.clone(),
            cone: canonical_cone(ty)?,
            word: canonical_word(ty),
        })
    }

    pub fn dim(&self) -> usize {
        self.word.len()
    }

    /// Lattice points, sorted lexicographically.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let cartan = cartan_matrix(self.ty);
        ChainEnumerator::new(
            self.word.letters(),
            &cartan,
            self.lambda.fund(),
            &self.cone.forms,
        )
        .points()
    }

    /// Points re-filtered by Littelmann's recursion; an error means the
    /// explicit cone admitted a point the recursion rejects.
    pub fn points_verified(&self) -> Result<Vec<Vec<i64>>> {
        let pts = self.points();
        let checker = LittelmannChecker::new(&self.word)?;
        if let Some(bad) = pts.iter().find(|t| !checker.accepts(t)) {
            return Err(Error::Internal(format!(
                "explicit cone admits non-member {bad:?}"
            )));
        }
        Ok(pts)
    }

    /// Whether `t` satisfies the cone and every chain bound.
    pub fn contains(&self, t: &[i64]) -> bool {
        if t.len() != self.dim() || !self.cone.contains(t) {
            return false;
        }
        let a = cartan_matrix(self.ty);
        let letters = self.word.letters();
        let mut load = vec![0i64; self.ty.rank()];
        for k in (0..t.len()).rev() {
            let ik = letters[k];
            if t[k] > self.lambda.fund()[ik - 1] - load[ik - 1] {
                return false;
            }
            for (i, l) in load.iter_mut().enumerate() {
                *l += t[k] * a.get(i + 1, ik);
            }
        }
        true
    }
}

/// All lattice points of the string polytope of the canonical word.
pub fn string_polytope_points(ty: LieType, lambda: &Weight) -> Result<Vec<Vec<i64>>> {
    if lambda.lie_type() != ty {
        return Err(Error::Internal(format!(
            "weight of type {} used with {ty}",
            lambda.lie_type()
        )));
    }
    Ok(StringPolytope::new(lambda)?.points())
}
