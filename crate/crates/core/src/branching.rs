//! Branching from `B_n`, `C_n`, `D_n` to the Levi factor `A_{n-1}` through
//! the string branching polytope of the tilde word.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cones::{tilde_string_cone, IndexMap};
use crate::error::{Error, Result};
use crate::polytopes::{string_polytope_points, ChainEnumerator};
use crate::rootsys::{cartan_matrix, int_pairing, EpsVector, Family, LieType, RootSystem, Weight};
use crate::weyl::tilde_word;

fn check(ty: LieType, lambda: &Weight) -> Result<()> {
    if ty.family() == Family::A {
        return Err(Error::UnsupportedFamily(Family::A));
    }
    if lambda.lie_type() != ty {
        return Err(Error::Internal(format!(
            "weight of type {} used with {ty}",
            lambda.lie_type()
        )));
    }
    lambda.require_dominant()
}

/// Lattice points of the string branching polytope, sorted.
///
/// Enumerated over the plus block alone: the tilde inequalities and the
/// weight bounds of the tilde positions never involve the `A_{n-1}` block.
pub fn branching_points(ty: LieType, lambda: &Weight) -> Result<Vec<Vec<i64>>> {
    check(ty, lambda)?;
    let letters = tilde_word(ty)?;
    let cone = tilde_string_cone(ty)?;
    let cartan = cartan_matrix(ty);
    Ok(ChainEnumerator::new(&letters, &cartan, lambda.fund(), &cone.forms).points())
}

/// `μ = λ - Σ_k t_k α_{i_k}` over the tilde positions, in `A_{n-1}`
/// fundamental coordinates `⟨μ, ε_i - ε_{i+1}⟩`.
pub fn branch_weight(ty: LieType, lambda: &Weight, t: &[i64]) -> Result<Vec<i64>> {
    let letters = tilde_word(ty)?;
    if t.len() != letters.len() {
        return Err(Error::LengthMismatch {
            expected: letters.len(),
            found: t.len(),
        });
    }
    let rs = RootSystem::new(ty);
    let mut mu = lambda.eps().clone();
    for (&c, &l) in t.iter().zip(&letters) {
        mu.add_scaled(rs.simple_root(l), -c);
    }
    let n = ty.rank();
    (1..n)
        .map(|i| int_pairing(&mu, &(&EpsVector::unit(n, i) - &EpsVector::unit(n, i + 1))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchEntry {
    /// `A_{n-1}` fundamental coordinates.
    pub mu: Vec<i64>,
    pub multiplicity: u64,
    /// Branching points with this `μ`, sorted.
    pub witnesses: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingResult {
    pub lambda: Weight,
    /// Sorted by `μ`.
    pub entries: Vec<BranchEntry>,
}

impl BranchingResult {
    pub fn multiplicities(&self) -> BTreeMap<Vec<i64>, u64> {
        self.entries
            .iter()
            .map(|e| (e.mu.clone(), e.multiplicity))
            .collect()
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.entries
            .iter()
            .find(|e| e.mu == mu)
            .map_or(0, |e| e.multiplicity)
    }
}

/// Groups the branching points by their highest weight `μ`.
pub fn branch_multiplicities(ty: LieType, lambda: &Weight) -> Result<BranchingResult> {
    let mut groups: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    for t in branching_points(ty, lambda)? {
        let mu = branch_weight(ty, lambda, &t)?;
        if mu.iter().any(|&c| c < 0) {
            return Err(Error::Internal(format!(
                "branching point {t:?} gives non-dominant {mu:?}"
            )));
        }
        groups.entry(mu).or_default().push(t);
    }
    let entries = groups
        .into_iter()
        .map(|(mu, witnesses)| BranchEntry {
            mu,
            multiplicity: witnesses.len() as u64,
            witnesses,
        })
        .collect();
    Ok(BranchingResult {
        lambda: lambda.clone(),
        entries,
    })
}

/// Multiplicity of `μ` by filtering: counts full string polytope points
/// whose `A_{n-1}` block vanishes and whose tilde block lands on `μ`.
pub fn multiplicity_by_filter(ty: LieType, lambda: &Weight, mu: &[i64]) -> Result<u64> {
    check(ty, lambda)?;
    let cut = IndexMap::new(ty).minus_len();
    let mut count = 0;
    for p in string_polytope_points(ty, lambda)? {
        if p[..cut].iter().all(|&c| c == 0) && branch_weight(ty, lambda, &p[cut..])? == mu {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    /// Tilde coordinates.
    pub t: Vec<i64>,
    pub mu: Vec<i64>,
    /// Points of the `A_{n-1}` string polytope of `μ`, sorted.
    pub points: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub lambda: Weight,
    /// Sorted by `t`.
    pub fibers: Vec<Fiber>,
}

impl DecompositionReport {
    pub fn total(&self) -> usize {
        self.fibers.iter().map(|f| f.points.len()).sum()
    }

    /// Full coordinate vectors of all fibers, placed through the IndexMap
    /// of the type, sorted.
    pub fn reassemble(&self) -> Vec<Vec<i64>> {
        let ty = self.lambda.lie_type();
        let map = IndexMap::new(ty);
        let cut = map.minus_len();
        let mut out = Vec::with_capacity(self.total());
        for fiber in &self.fibers {
            for p in &fiber.points {
                let mut full = vec![0; map.len()];
                for (k, label) in map.labels().iter().enumerate() {
                    let pos = map.position(*label).expect("label of this map");
                    full[pos] = if k < cut { p[k] } else { fiber.t[k - cut] };
                }
                out.push(full);
            }
        }
        out.sort();
        out
    }

    /// Whether no full point arises from two fibers.
    pub fn is_disjoint(&self) -> bool {
        let all = self.reassemble();
        all.iter().collect::<BTreeSet<_>>().len() == all.len()
    }
}

/// Fibers over every branching point; each is the `A_{n-1}` string polytope
/// of the corresponding `μ`.
pub fn decomposition_report(ty: LieType, lambda: &Weight) -> Result<DecompositionReport> {
    let levi = ty.levi()?;
    let fibers = branching_points(ty, lambda)?
        .into_par_iter()
        .map(|t| {
            let mu = branch_weight(ty, lambda, &t)?;
            let points = string_polytope_points(levi, &Weight::new(levi, &mu)?)?;
            Ok(Fiber { t, mu, points })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionReport {
        lambda: lambda.clone(),
        fibers,
    })
}
