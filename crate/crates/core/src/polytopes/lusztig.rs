use serde::{Deserialize, Serialize};

use super::enumerate::enumerate_h_rep;
use super::string::StringPolytope;
use crate::cones::{DoubleIndex, IndexMap, LinearForm, Sign};
use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, coroot, int_pairing, Family, LieType, RootSystem, Weight};
use crate::weyl::{canonical_word, longest_element, positive_root_order};

/// Exponents of a PBW monomial; nonnegative by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LusztigPoint {
    u: Vec<i64>,
}

impl LusztigPoint {
    pub fn new(u: Vec<i64>) -> Result<Self> {
        if u.iter().any(|&x| x < 0) {
            return Err(Error::OutsidePolytope);
        }
        Ok(LusztigPoint { u })
    }

    pub fn coords(&self) -> &[i64] {
        &self.u
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.u
    }
}

/// `λ* = -ω_0 λ`, the highest weight of the dual module.
pub fn dual_weight(lambda: &Weight) -> Result<Weight> {
    let ty = lambda.lie_type();
    let image = longest_element(ty).act(lambda.eps())?;
    Weight::from_eps(ty, &-&image)
}

/// `φ(t)_k = ⟨λ, α_{i_k}^∨⟩ - t_k - Σ_{j>k} a_{i_k i_j} t_j`.
pub fn string_to_lusztig(ty: LieType, lambda: &Weight, pt: &[i64]) -> Result<LusztigPoint> {
    let poly = StringPolytope::new(lambda)?;
    if poly.ty != ty {
        return Err(Error::Internal(format!(
            "weight of type {} used with {ty}",
            lambda.lie_type()
        )));
    }
    if pt.len() != poly.dim() {
        return Err(Error::LengthMismatch {
            expected: poly.dim(),
            found: pt.len(),
        });
    }
    if !poly.cone.contains(pt) {
        return Err(Error::OutsidePolytope);
    }
    LusztigPoint::new(phi(ty, lambda, pt))
}

pub(crate) fn phi(ty: LieType, lambda: &Weight, t: &[i64]) -> Vec<i64> {
    let a = cartan_matrix(ty);
    let w = canonical_word(ty);
    let letters = w.letters();
    (0..t.len())
        .map(|k| {
            let ik = letters[k];
            let tail: i64 = (k + 1..t.len()).map(|j| a.get(ik, letters[j]) * t[j]).sum();
            lambda.fund()[ik - 1] - t[k] - tail
        })
        .collect()
}

/// Data for `ψ`: `l_k = ⟨λ*, β_k^∨⟩` and `d_{k,j} = ⟨β_j, β_k^∨⟩`.
#[derive(Debug, Clone)]
pub struct PsiData {
    pub l: Vec<i64>,
    pub d: Vec<Vec<i64>>,
}

impl PsiData {
    pub fn new(lambda: &Weight) -> Result<Self> {
        let ty = lambda.lie_type();
        let betas = positive_root_order(&canonical_word(ty))?;
        let coroots = betas.iter().map(coroot).collect::<Result<Vec<_>>>()?;
        let dual = dual_weight(lambda)?;
        let l = coroots
            .iter()
            .map(|c| int_pairing(dual.eps(), c))
            .collect::<Result<_>>()?;
        let d = coroots
            .iter()
            .map(|c| {
                betas
                    .iter()
                    .map(|b| int_pairing(b, c))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(PsiData { l, d })
    }

    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        let n = u.len();
        (0..n)
            .map(|k| self.l[k] - u[k] - (k + 1..n).map(|j| self.d[k][j] * u[j]).sum::<i64>())
            .collect()
    }
}

/// `ψ(u)_k = l_k - u_k - Σ_{j>k} d_{k,j} u_j`.
pub fn lusztig_to_string(ty: LieType, lambda: &Weight, u: &LusztigPoint) -> Result<Vec<i64>> {
    let poly = StringPolytope::new(lambda)?;
    if poly.ty != ty {
        return Err(Error::Internal(format!(
            "weight of type {} used with {ty}",
            lambda.lie_type()
        )));
    }
    if u.coords().len() != poly.dim() {
        return Err(Error::LengthMismatch {
            expected: poly.dim(),
            found: u.coords().len(),
        });
    }
    let t = PsiData::new(lambda)?.apply(u.coords());
    if !poly.contains(&t) {
        return Err(Error::OutsidePolytope);
    }
    Ok(t)
}

/// `coeffs · u + lambda · (λ_1, …, λ_n) ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicForm {
    pub coeffs: Vec<i64>,
    pub lambda: Vec<i64>,
}

impl SymbolicForm {
    pub fn instantiate(&self, lambda: &Weight) -> LinearForm {
        let c = self
            .lambda
            .iter()
            .zip(lambda.fund())
            .map(|(a, b)| a * b)
            .sum();
        LinearForm::new(self.coeffs.clone(), c)
    }
}

/// Builder for `LHS ≤ RHS` forms over a range of double indices. Indices that
/// do not name a coordinate contribute nothing.
struct FormBuilder<'a> {
    map: &'a IndexMap,
    offset: usize,
    coeffs: Vec<i64>,
    lambda: Vec<i64>,
}

impl<'a> FormBuilder<'a> {
    fn new(map: &'a IndexMap, offset: usize, dim: usize) -> Self {
        FormBuilder {
            map,
            offset,
            coeffs: vec![0; dim],
            lambda: vec![0; map.lie_type().rank()],
        }
    }

    fn term(&mut self, sign: Sign, i: usize, j: usize, c: i64) {
        if i == 0 || j == 0 {
            return;
        }
        if let Some(p) = self.map.position(DoubleIndex { sign, i, j }) {
            if p >= self.offset {
                self.coeffs[p - self.offset] += c;
            }
        }
    }

    /// `Σ_{k=lo}^{hi} u_{f(k)}` on the given side.
    fn sum(
        &mut self,
        sign: Sign,
        lo: usize,
        hi: usize,
        lhs: bool,
        f: impl Fn(usize) -> (usize, usize),
    ) {
        let c = if lhs { -1 } else { 1 };
        for k in lo..=hi {
            let (i, j) = f(k);
            self.term(sign, i, j, c);
        }
    }

    fn lam(&mut self, i: usize) {
        self.lambda[i - 1] += 1;
    }

    fn finish(self) -> SymbolicForm {
        SymbolicForm {
            coeffs: self.coeffs,
            lambda: self.lambda,
        }
    }
}

use Sign::{Minus as M, Plus as P};

/// Plus-block systems shared by the branching and full polytopes.
fn plus_forms(
    ty: LieType,
    map: &IndexMap,
    offset: usize,
    dim: usize,
    branching: bool,
) -> Vec<SymbolicForm> {
    let n = ty.rank();
    let top = map.plus_blocks();
    let mut out = Vec::new();
    for j in 1..=top {
        for i in 1..j {
            let mut b = FormBuilder::new(map, offset, dim);
            b.sum(P, j, top, true, |k| (i, k));
            b.sum(P, j + 1, top, false, |k| (i + 1, k));
            b.lam(i);
            out.push(b.finish());
        }
    }
    for j in 1..top {
        for i in 1..=j {
            let mut b = FormBuilder::new(map, offset, dim);
            b.sum(P, i, j, true, |k| (k, j));
            match (ty.family(), branching) {
                (Family::D, true) => {
                    b.sum(P, j + 2, top, true, |k| (j + 1, k));
                    b.sum(P, i + 1, j, false, |k| (k, j + 1));
                    b.sum(P, j + 2, top, false, |k| (j + 2, k));
                    b.lam(j + 1);
                }
                (Family::D, false) => {
                    b.sum(P, j + 1, top, true, |k| (j + 1, k));
                    b.sum(P, i + 1, j + 1, false, |k| (k, j + 1));
                    b.sum(P, j + 2, top, false, |k| (j + 2, k));
                    b.lam(j + 1);
                }
                (Family::B, _) => {
                    b.sum(P, j + 1, top, true, |k| (j, k));
                    b.sum(P, i + 1, j + 1, false, |k| (k, j + 1));
                    b.sum(P, j + 2, top, false, |k| (j + 1, k));
                    b.lam(j);
                }
                (Family::C, _) => {
                    b.sum(P, j, top, true, |k| (j, k));
                    b.sum(P, i + 1, j + 1, false, |k| (k, j + 1));
                    b.sum(P, j + 1, top, false, |k| (j + 1, k));
                    b.lam(j);
                }
                (Family::A, _) => unreachable!("type A has no plus block"),
            }
            out.push(b.finish());
        }
    }
    let mut b = FormBuilder::new(map, offset, dim);
    b.term(P, top, top, -1);
    b.lam(n);
    out.push(b.finish());
    out
}

fn minus_forms(ty: LieType, map: &IndexMap) -> Vec<SymbolicForm> {
    let n = ty.rank();
    let dim = map.len();
    let mut out = Vec::new();
    for j in 1..n {
        for i in 1..=j {
            let mut b = FormBuilder::new(map, 0, dim);
            b.sum(M, j, n - 1, true, |k| (i, k));
            b.sum(M, j + 1, n - 1, false, |k| (i + 1, k));
            b.lam(n - i);
            let r = n - i;
            match ty.family() {
                Family::D => {
                    b.sum(P, r, n - 1, true, |k| (r, k));
                    b.sum(P, 1, r.saturating_sub(1), true, |k| (k, r - 1));
                    b.sum(P, r + 1, n - 1, false, |k| (r + 1, k));
                    b.sum(P, 1, r, false, |k| (k, r));
                }
                Family::B => {
                    b.sum(P, r + 1, n, true, |k| (r, k));
                    b.sum(P, 1, r, true, |k| (k, r));
                    b.sum(P, r + 2, n, false, |k| (r + 1, k));
                    b.sum(P, 1, r + 1, false, |k| (k, r + 1));
                }
                Family::C => {
                    b.sum(P, r, n, true, |k| (r, k));
                    b.sum(P, 1, r, true, |k| (k, r));
                    b.sum(P, r + 1, n, false, |k| (r + 1, k));
                    b.sum(P, 1, r + 1, false, |k| (k, r + 1));
                }
                Family::A => unreachable!("type A rejected earlier"),
            }
            out.push(b.finish());
        }
    }
    out
}

fn nonnegativity(rank: usize, dim: usize) -> impl Iterator<Item = SymbolicForm> {
    (0..dim).map(move |k| {
        let mut coeffs = vec![0; dim];
        coeffs[k] = 1;
        SymbolicForm {
            coeffs,
            lambda: vec![0; rank],
        }
    })
}

fn check_bcd(ty: LieType) -> Result<()> {
    if ty.family() == Family::A {
        return Err(Error::UnsupportedFamily(Family::A));
    }
    Ok(())
}

/// The full Lusztig polytope system of the canonical word, symbolic in `λ`.
pub fn lusztig_polytope_symbolic(ty: LieType) -> Result<Vec<SymbolicForm>> {
    check_bcd(ty)?;
    let map = IndexMap::new(ty);
    let mut out = minus_forms(ty, &map);
    out.extend(plus_forms(ty, &map, 0, map.len(), false));
    out.extend(nonnegativity(ty.rank(), map.len()));
    Ok(out)
}

/// The Lusztig branching polytope system over the plus block, symbolic in `λ`.
pub fn lusztig_branching_symbolic(ty: LieType) -> Result<Vec<SymbolicForm>> {
    check_bcd(ty)?;
    let map = IndexMap::new(ty);
    let mut out = plus_forms(ty, &map, map.minus_len(), map.plus_len(), true);
    out.extend(nonnegativity(ty.rank(), map.plus_len()));
    Ok(out)
}

fn instantiate(forms: Vec<SymbolicForm>, lambda: &Weight) -> Result<Vec<LinearForm>> {
    lambda.require_dominant()?;
    Ok(forms.iter().map(|f| f.instantiate(lambda)).collect())
}

/// The λ-dependent forms of both Lusztig systems are evaluated at `λ*`; for
/// all types except D of odd rank this equals `λ`.
pub fn lusztig_polytope_h_rep(ty: LieType, lambda: &Weight) -> Result<Vec<LinearForm>> {
    instantiate(lusztig_polytope_symbolic(ty)?, &dual_weight(lambda)?)
}

pub fn lusztig_branching_h_rep(ty: LieType, lambda: &Weight) -> Result<Vec<LinearForm>> {
    instantiate(lusztig_branching_symbolic(ty)?, &dual_weight(lambda)?)
}

/// Upper bounds `u_k ≤ ht(λ - ω_0 λ) / ht(β_k)` from the weight of a PBW
/// monomial, which lies between `ω_0 λ` and `λ`.
pub fn lusztig_box(lambda: &Weight) -> Result<Vec<i64>> {
    let ty = lambda.lie_type();
    let rs = RootSystem::new(ty);
    let low = longest_element(ty).act(lambda.eps())?;
    let span = rs.height(&(lambda.eps() - &low))?;
    let betas = positive_root_order(&canonical_word(ty))?;
    betas.iter().map(|b| Ok(span / rs.height(b)?)).collect()
}

/// Lattice points of the explicit Lusztig polytope, sorted.
pub fn lusztig_polytope_points(ty: LieType, lambda: &Weight) -> Result<Vec<Vec<i64>>> {
    let forms = lusztig_polytope_h_rep(ty, lambda)?;
    Ok(enumerate_h_rep(&forms, &lusztig_box(lambda)?))
}

/// Lattice points of the Lusztig branching polytope, sorted.
pub fn lusztig_branching_points(ty: LieType, lambda: &Weight) -> Result<Vec<Vec<i64>>> {
    let forms = lusztig_branching_h_rep(ty, lambda)?;
    let full = lusztig_box(lambda)?;
    let minus = IndexMap::new(ty).minus_len();
    Ok(enumerate_h_rep(&forms, &full[minus..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::string_polytope_points;

    fn ty(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    #[test]
    fn phi_at_zero() {
        let d3 = ty(Family::D, 3);
        let l = Weight::new(d3, &[1, 0, 2]).unwrap();
        let u = string_to_lusztig(d3, &l, &[0; 6]).unwrap();
        let w = canonical_word(d3);
        let expect: Vec<i64> = w.letters().iter().map(|&i| l.fund()[i - 1]).collect();
        assert_eq!(u.coords(), &expect[..]);
        let z = Weight::zero(d3);
        assert_eq!(
            string_to_lusztig(d3, &z, &[0; 6]).unwrap().coords(),
            &[0; 6]
        );
    }

    #[test]
    fn psi_at_zero() {
        let b2 = ty(Family::B, 2);
        let z = Weight::zero(b2);
        let u = LusztigPoint::new(vec![0; 4]).unwrap();
        assert_eq!(lusztig_to_string(b2, &z, &u).unwrap(), vec![0; 4]);
    }

    #[test]
    fn round_trips() {
        let d3 = ty(Family::D, 3);
        let l = Weight::fundamental(d3, 1).unwrap();
        for t in string_polytope_points(d3, &l).unwrap() {
            let u = string_to_lusztig(d3, &l, &t).unwrap();
            assert_eq!(lusztig_to_string(d3, &l, &u).unwrap(), t);
        }
        let b2 = ty(Family::B, 2);
        let l = Weight::fundamental(b2, 1).unwrap();
        let pts = lusztig_polytope_points(b2, &l).unwrap();
        assert_eq!(pts.len(), 5);
        for u in pts {
            let t = lusztig_to_string(b2, &l, &LusztigPoint::new(u.clone()).unwrap()).unwrap();
            assert_eq!(string_to_lusztig(b2, &l, &t).unwrap().coords(), &u[..]);
        }
    }

    #[test]
    fn outside_detected() {
        let d3 = ty(Family::D, 3);
        let l = Weight::fundamental(d3, 1).unwrap();
        assert_eq!(
            string_to_lusztig(d3, &l, &[0, 0, 0, 0, 0, 5]),
            Err(Error::OutsidePolytope)
        );
        assert_eq!(
            string_to_lusztig(d3, &l, &[0, 0, 0, 0, 1, 0]),
            Err(Error::OutsidePolytope)
        );
        assert_eq!(LusztigPoint::new(vec![-1]), Err(Error::OutsidePolytope));
    }

    #[test]
    fn dual_weights() {
        let d3 = ty(Family::D, 3);
        assert_eq!(
            dual_weight(&Weight::new(d3, &[1, 2, 3]).unwrap())
                .unwrap()
                .fund(),
            &[1, 3, 2]
        );
        let d4 = ty(Family::D, 4);
        assert_eq!(
            dual_weight(&Weight::new(d4, &[1, 2, 3, 4]).unwrap())
                .unwrap()
                .fund(),
            &[1, 2, 3, 4]
        );
        let a3 = ty(Family::A, 3);
        assert_eq!(
            dual_weight(&Weight::new(a3, &[1, 2, 3]).unwrap())
                .unwrap()
                .fund(),
            &[3, 2, 1]
        );
    }

    #[test]
    fn h_rep_contains_top_bounds() {
        let d4 = ty(Family::D, 4);
        let forms = lusztig_polytope_symbolic(d4).unwrap();
        let map = IndexMap::new(d4);
        let mut coeffs = vec![0; 12];
        coeffs[map.position(DoubleIndex::plus(3, 3)).unwrap()] = -1;
        assert!(forms.contains(&SymbolicForm {
            coeffs,
            lambda: vec![0, 0, 0, 1]
        }));
        for f in [Family::B, Family::C] {
            let t = ty(f, 3);
            let map = IndexMap::new(t);
            let mut coeffs = vec![0; 9];
            coeffs[map.position(DoubleIndex::plus(3, 3)).unwrap()] = -1;
            assert!(lusztig_polytope_symbolic(t)
                .unwrap()
                .contains(&SymbolicForm {
                    coeffs,
                    lambda: vec![0, 0, 1]
                }));
        }
    }

    #[test]
    fn zero_weight_polytopes() {
        for (f, r) in [(Family::B, 3), (Family::C, 2), (Family::D, 4)] {
            let t = ty(f, r);
            let z = Weight::zero(t);
            assert_eq!(
                lusztig_polytope_points(t, &z).unwrap(),
                vec![vec![0; t.num_positive_roots()]]
            );
            assert_eq!(lusztig_branching_points(t, &z).unwrap().len(), 1);
        }
    }

    #[test]
    fn d3_spin_branching() {
        let d3 = ty(Family::D, 3);
        let l = Weight::fundamental(d3, 3).unwrap();
        assert_eq!(lusztig_branching_points(d3, &l).unwrap().len(), 2);
    }
}
