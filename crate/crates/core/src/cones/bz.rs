use super::explicit::double_labels;
use super::form::{ConeH, CoordLabel, LinearForm};
use super::index::IndexMap;
use crate::error::Result;
use crate::rootsys::{int_pairing, RootSystem};
use crate::weyl::{
    canonical_word, generator, minimal_coset_rep, reduced_subwords, ReducedWord, SignedPermutation,
};

/// IndexMap labels for the canonical word, positional labels otherwise.
pub fn word_labels(w: &ReducedWord) -> Vec<CoordLabel> {
    let ty = w.lie_type();
    if *w == canonical_word(ty) {
        double_labels(IndexMap::new(ty).labels())
    } else {
        (1..=w.len()).map(CoordLabel::Position).collect()
    }
}

/// The form attached to the index `i` and a subword given by its positions.
pub fn bz_form(
    rs: &RootSystem,
    w: &ReducedWord,
    i: usize,
    subword: &[usize],
) -> Result<LinearForm> {
    let ty = rs.lie_type();
    let coweight = &rs.fundamental_coweights()[i - 1];
    let mut prefix = SignedPermutation::identity(ty.ambient_dim());
    let mut next = subword.iter().peekable();
    let mut coeffs = Vec::with_capacity(w.len());
    for (k, &l) in w.letters().iter().enumerate() {
        if next.peek() == Some(&&k) {
            next.next();
            prefix = prefix.compose(&generator(ty, l)?);
            coeffs.push(0);
        } else {
            let root = prefix.act(rs.simple_root(l))?;
            coeffs.push(int_pairing(&root, coweight)?);
        }
    }
    Ok(LinearForm::homogeneous(coeffs))
}

/// All subwords of `w` that are reduced words of `z^{(i)}`, per `i`.
pub fn bz_subwords(w: &ReducedWord) -> Result<Vec<(usize, Vec<Vec<usize>>)>> {
    let ty = w.lie_type();
    (1..=ty.rank())
        .map(|i| Ok((i, reduced_subwords(w, &minimal_coset_rep(ty, i)?))))
        .collect()
}

/// The cone cut out by the Berenstein–Zelevinsky inequalities of `w`.
pub fn bz_inequalities(w: &ReducedWord) -> Result<ConeH> {
    w.require_longest()?;
    let rs = RootSystem::new(w.lie_type());
    let mut forms = Vec::new();
    for (i, subs) in bz_subwords(w)? {
        for s in subs {
            forms.push(bz_form(&rs, w, i, &s)?);
        }
    }
    ConeH::new(w.lie_type(), word_labels(w), forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, LieType};

    #[test]
    fn zero_satisfies_every_form() {
        for (f, r) in [(Family::D, 3), (Family::B, 2), (Family::C, 3)] {
            let w = canonical_word(LieType::new(f, r).unwrap());
            let cone = bz_inequalities(&w).unwrap();
            assert!(cone.forms.iter().all(|g| g.eval(&vec![0; w.len()]) == 0));
        }
    }

    #[test]
    fn d3_implies_plus_column_relation() {
        let ty = LieType::new(Family::D, 3).unwrap();
        let cone = bz_inequalities(&canonical_word(ty)).unwrap();
        // t+_{1,2} - t+_{2,2} >= 0
        assert!(cone
            .forms
            .contains(&LinearForm::homogeneous(vec![0, 0, 0, 0, 1, -1])));
    }

    #[test]
    fn a2_bz_equals_string_cone() {
        let ty = LieType::new(Family::A, 2).unwrap();
        let w = ReducedWord::new(ty, vec![2, 1, 2]).unwrap();
        let cone = bz_inequalities(&w).unwrap();
        let nontrivial: Vec<_> = cone.non_trivial_forms().cloned().collect();
        assert_eq!(nontrivial, vec![LinearForm::homogeneous(vec![0, 1, -1])]);
    }

    #[test]
    fn no_duplicates() {
        let ty = LieType::new(Family::D, 4).unwrap();
        let cone = bz_inequalities(&canonical_word(ty)).unwrap();
        let set: std::collections::HashSet<_> = cone.forms.iter().collect();
        assert_eq!(set.len(), cone.forms.len());
    }
}
