//! Independent reference computations: the Weyl dimension formula,
//! Freudenthal's multiplicity recursion, restriction to the Levi `gl_n`, and
//! exhaustive box scans over the Littelmann recursion.
//!
//! Nothing here uses the string cone inequalities or the canonical words, so
//! the results can referee the rest of the crate.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::cones::LittelmannChecker;
use crate::error::{Error, Result};
use crate::rootsys::{EpsVector, LieType, RootSystem, Weight};
use crate::weyl::{generator, ReducedWord};

/// Dimension cap used when none is configured.
pub const DEFAULT_DIM_CAP: u128 = 20_000;

/// Environment variable overriding [`DEFAULT_DIM_CAP`].
pub const DIM_CAP_ENV: &str = "STRINGCONE_DIM_CAP";

/// Largest box scanned by [`brute_force_cone`] unless told otherwise.
pub const DEFAULT_SCAN_BUDGET: u128 = 50_000_000;

/// The dimension cap from the environment, or the default.
pub fn dim_cap_from_env() -> u128 {
    std::env::var(DIM_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

/// `Π_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`.
pub fn weyl_dim(ty: LieType, lambda: &Weight) -> Result<u128> {
    check_type(ty, lambda)?;
    lambda.require_dominant()?;
    let rs = RootSystem::new(ty);
    let rho = rs.rho();
    let shifted = lambda.eps() + &rho;
    let mut acc = Ratio::<i128>::from_integer(1);
    for alpha in rs.positive_roots() {
        // the factor 2/(α, α) cancels between numerator and denominator
        let num = i128::from(shifted.ip4(alpha));
        let den = i128::from(rho.ip4(alpha));
        acc *= Ratio::new(num, den);
    }
    if !acc.is_integer() || *acc.numer() <= 0 {
        return Err(Error::Internal(format!("Weyl formula gave {acc}")));
    }
    Ok(*acc.numer() as u128)
}

fn check_type(ty: LieType, lambda: &Weight) -> Result<()> {
    if lambda.lie_type() != ty {
        return Err(Error::Internal(format!(
            "weight of type {} used with {ty}",
            lambda.lie_type()
        )));
    }
    Ok(())
}

/// The weights of `V(λ)` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    ty: LieType,
    weights: BTreeMap<EpsVector, u64>,
}

impl WeightMultiset {
    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn multiplicity(&self, mu: &EpsVector) -> u64 {
        self.weights.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EpsVector, u64)> {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn mass(&self) -> u128 {
        self.weights.values().map(|&m| u128::from(m)).sum()
    }

    /// Whether every simple reflection preserves the multiplicities.
    pub fn is_weyl_invariant(&self) -> bool {
        (1..=self.ty.rank()).all(|i| {
            let s = generator(self.ty, i).expect("index in range");
            self.weights
                .iter()
                .all(|(w, &m)| self.multiplicity(&s.act(w).expect("same ambient dimension")) == m)
        })
    }
}

/// Weight multiplicities by Freudenthal's formula, with the cap from the
/// environment.
pub fn freudenthal_multiplicities(ty: LieType, lambda: &Weight) -> Result<WeightMultiset> {
    freudenthal_with_cap(ty, lambda, dim_cap_from_env())
}

/// Weight multiplicities by Freudenthal's formula.
///
/// Weights are visited by depth `ht(λ - μ)`; every weight other than `λ` is
/// `ν - α_i` for a weight `ν` one level up, so only those candidates are
/// evaluated.
pub fn freudenthal_with_cap(ty: LieType, lambda: &Weight, cap: u128) -> Result<WeightMultiset> {
    let dim = weyl_dim(ty, lambda)?;
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let rs = RootSystem::new(ty);
    let roots: Vec<(EpsVector, usize)> = rs
        .positive_roots()
        .iter()
        .map(|a| Ok((a.clone(), rs.height(a)? as usize)))
        .collect::<Result<_>>()?;
    let rho = rs.rho();
    let top = lambda.eps() + &rho;
    let top_norm = top.ip4(&top);

    let mut mult: HashMap<EpsVector, (u64, usize)> = HashMap::new();
    mult.insert(lambda.eps().clone(), (1, 0));
    let mut level = vec![lambda.eps().clone()];
    let mut depth = 0;
    while !level.is_empty() {
        depth += 1;
        let candidates: BTreeSet<EpsVector> = level
            .iter()
            .flat_map(|nu| rs.simple_roots().iter().map(move |a| nu - a))
            .collect();
        let mut next = Vec::new();
        for mu in candidates {
            let shifted = &mu + &rho;
            let gap = top_norm - shifted.ip4(&shifted);
            let mut sum: i64 = 0;
            for (alpha, h) in &roots {
                let mut k = 1;
                let mut probe = &mu + alpha;
                while k * h <= depth {
                    if let Some(&(m, _)) = mult.get(&probe) {
                        sum += probe.ip4(alpha) * m as i64;
                    }
                    probe = &probe + alpha;
                    k += 1;
                }
            }
            let num = 2 * sum;
            if gap == 0 {
                if num != 0 {
                    return Err(Error::Internal(format!(
                        "Freudenthal: zero gap at {mu} with nonzero sum"
                    )));
                }
                continue;
            }
            if num % gap != 0 {
                return Err(Error::NonIntegral);
            }
            let m = num / gap;
            if m < 0 {
                return Err(Error::NegativeMultiplicity(mu.to_string()));
            }
            if m > 0 {
                mult.insert(mu.clone(), (m as u64, depth));
                next.push(mu);
            }
        }
        level = next;
    }
    Ok(WeightMultiset {
        ty,
        weights: mult.into_iter().map(|(w, (m, _))| (w, m)).collect(),
    })
}

/// Restriction of `V(λ)` to `gl_n ⊂ g`, decomposed into irreducibles and
/// reported by the `A_{n-1}` highest weight `μ`.
///
/// Constituents are stripped off one at a time: the next highest weight is a
/// maximiser of `(ν, ρ_{gl_n})` over the remaining support, ties broken by
/// the lexicographically largest `A_{n-1}` coordinates.
pub fn restrict_and_decompose(ty: LieType, lambda: &Weight) -> Result<BTreeMap<Vec<i64>, u64>> {
    restrict_and_decompose_with_cap(ty, lambda, dim_cap_from_env())
}

pub fn restrict_and_decompose_with_cap(
    ty: LieType,
    lambda: &Weight,
    cap: u128,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let levi = ty.levi()?;
    let n = ty.rank();
    let full = freudenthal_with_cap(ty, lambda, cap)?;
    let mut remaining: BTreeMap<EpsVector, i64> =
        full.iter().map(|(w, m)| (w.clone(), m as i64)).collect();
    let mut characters: HashMap<Vec<i64>, WeightMultiset> = HashMap::new();
    let mut out = BTreeMap::new();
    let key = |w: &EpsVector| -> i64 {
        w.doubled()
            .iter()
            .enumerate()
            .map(|(i, &c)| (n - 1 - i) as i64 * c)
            .sum()
    };

    while let Some(best_key) = remaining.keys().map(key).max() {
        let nu = remaining
            .keys()
            .filter(|w| key(w) == best_key)
            .max_by_key(|w| (gl_fund(w), (*w).clone()))
            .expect("nonempty")
            .clone();
        let mu = gl_fund(&nu);
        if mu.iter().any(|&c| c < 0) {
            return Err(Error::Internal(format!(
                "maximal weight {nu} is not dominant for {levi}"
            )));
        }
        let count = remaining[&nu];
        if !characters.contains_key(&mu) {
            let ch = freudenthal_with_cap(levi, &Weight::new(levi, &mu)?, u128::MAX)?;
            characters.insert(mu.clone(), ch);
        }
        let ch = &characters[&mu];
        let shift = &nu - Weight::new(levi, &mu)?.eps();
        if shift.doubled().windows(2).any(|p| p[0] != p[1]) {
            return Err(Error::Internal(format!(
                "highest weight {nu} differs from {mu:?} off the centre"
            )));
        }
        for (w, m) in ch.iter() {
            let target = w + &shift;
            let slot = remaining.entry(target.clone()).or_insert(0);
            *slot -= count * m as i64;
            if *slot < 0 {
                return Err(Error::NegativeMultiplicity(target.to_string()));
            }
            if *slot == 0 {
                remaining.remove(&target);
            }
        }
        *out.entry(mu).or_insert(0) += count as u64;
    }
    Ok(out)
}

/// `A_{n-1}` fundamental coordinates `⟨ν, ε_i - ε_{i+1}⟩` of a `gl_n` weight.
fn gl_fund(w: &EpsVector) -> Vec<i64> {
    w.doubled().windows(2).map(|p| (p[0] - p[1]) / 2).collect()
}

/// Every point of `[0, box_bound]^N` accepted by the Littelmann recursion,
/// in lexicographic order.
pub fn brute_force_cone(w: &ReducedWord, box_bound: u32) -> Result<Vec<Vec<i64>>> {
    brute_force_cone_with_budget(w, box_bound, DEFAULT_SCAN_BUDGET)
}

pub fn brute_force_cone_with_budget(
    w: &ReducedWord,
    box_bound: u32,
    budget: u128,
) -> Result<Vec<Vec<i64>>> {
    let checker = LittelmannChecker::new(w)?;
    let base = u128::from(box_bound) + 1;
    let n = w.len() as u32;
    let points = base.checked_pow(n).unwrap_or(u128::MAX);
    if points > budget {
        return Err(Error::BudgetExceeded { points, budget });
    }
    let base = base as u64;
    Ok((0..points as u64)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut t = vec![0i64; n as usize];
            for c in t.iter_mut().rev() {
                *c = (idx % base) as i64;
                idx /= base;
            }
            checker.accepts(&t).then_some(t)
        })
        .collect())
}
