//! Weyl groups of the classical types as signed permutations of the ε-basis.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{positive_roots, simple_roots, EpsVector, Family, LieType};

/// Resolves a `±`/`∓` clause: `upper` when `k` is even, its negation when odd.
pub fn parity_sign(k: usize, upper: i64) -> i64 {
    if k.is_multiple_of(2) {
        upper
    } else {
        -upper
    }
}

/// `image[k-1] = ±m` means `ε_k ↦ ±ε_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    image: Vec<i64>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            image: (1..=n as i64).collect(),
        }
    }

    pub fn from_image(image: Vec<i64>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &m in &image {
            let a = m.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::Internal(format!(
                    "not a signed permutation: {image:?}"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { image })
    }

    pub fn image(&self) -> &[i64] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.image.iter().filter(|&&m| m < 0).count()
    }

    /// Whether the element lies in the Weyl group of `t`.
    pub fn belongs_to(&self, t: LieType) -> bool {
        if self.len() != t.ambient_dim() {
            return false;
        }
        match t.family() {
            Family::A => self.negative_count() == 0,
            Family::D => self.negative_count().is_multiple_of(2),
            _ => true,
        }
    }

    pub fn act(&self, v: &EpsVector) -> Result<EpsVector> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: v.len(),
            });
        }
        Ok(self.act_unchecked(v))
    }

    pub(crate) fn act_unchecked(&self, v: &EpsVector) -> EpsVector {
        let mut out = vec![0; self.len()];
        for (k, &m) in self.image.iter().enumerate() {
            let target = m.unsigned_abs() as usize - 1;
            out[target] = m.signum() * v.doubled()[k];
        }
        EpsVector::from_doubled(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let image = other
            .image
            .iter()
            .map(|&m| m.signum() * self.image[m.unsigned_abs() as usize - 1])
            .collect();
        SignedPermutation { image }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.len()];
        for (k, &m) in self.image.iter().enumerate() {
            image[m.unsigned_abs() as usize - 1] = m.signum() * (k as i64 + 1);
        }
        SignedPermutation { image }
    }

    /// Number of positive roots of `t` sent to negative roots.
    pub fn length(&self, t: LieType) -> usize {
        positive_roots(t)
            .iter()
            .filter(|a| !self.act_unchecked(a).is_positive())
            .count()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The simple reflection `s_i` of `t`.
pub fn generator(t: LieType, i: usize) -> Result<SignedPermutation> {
    t.check_index(i)?;
    let n = t.ambient_dim();
    let mut image: Vec<i64> = (1..=n as i64).collect();
    if t.family() == Family::A || i < n {
        image.swap(i - 1, i);
    } else {
        match t.family() {
            Family::D => {
                image[n - 2] = -(n as i64);
                image[n - 1] = -(n as i64 - 1);
            }
            _ => image[n - 1] = -(n as i64),
        }
    }
    Ok(SignedPermutation { image })
}

/// The longest element `ω_0`.
pub fn longest_element(t: LieType) -> SignedPermutation {
    let n = t.ambient_dim();
    let image = match t.family() {
        Family::A => (1..=n as i64).rev().collect(),
        Family::D => {
            let mut v: Vec<i64> = (1..=n as i64).map(|k| -k).collect();
            v[n - 1] = parity_sign(n, -1) * n as i64;
            v
        }
        _ => (1..=n as i64).map(|k| -k).collect(),
    };
    SignedPermutation { image }
}

/// A word in the simple reflections of a type. Not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    ty: LieType,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(ty: LieType, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l > ty.rank() {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    rank: ty.rank(),
                });
            }
        }
        Ok(ReducedWord { ty, letters })
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        word_to_element(self).length(self.ty) == self.len()
    }

    /// Reduced and evaluating to `ω_0`.
    pub fn is_longest(&self) -> bool {
        self.len() == self.ty.num_positive_roots() && self.is_reduced()
    }

    pub(crate) fn require_longest(&self) -> Result<()> {
        if !self.is_reduced() {
            return Err(Error::NotReduced);
        }
        if self.len() != self.ty.num_positive_roots() {
            return Err(Error::NotLongestWord);
        }
        Ok(())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `s_{i_1} ∘ … ∘ s_{i_k}`.
pub fn word_to_element(w: &ReducedWord) -> SignedPermutation {
    let t = w.lie_type();
    let gens: Vec<_> = (1..=t.rank())
        .map(|i| generator(t, i).expect("index in range"))
        .collect();
    w.letters()
        .iter()
        .fold(SignedPermutation::identity(t.ambient_dim()), |acc, &l| {
            acc.compose(&gens[l - 1])
        })
}

/// The word `i^{A_r}`: blocks `(r+1-k, …, r)` for `k = 1..r`.
pub fn a_word(r: usize) -> Vec<usize> {
    (1..=r).flat_map(|k| r + 1 - k..=r).collect()
}

/// The suffix `i^{\tilde g}` following the `A_{n-1}` prefix.
pub fn tilde_word(t: LieType) -> Result<Vec<usize>> {
    let n = t.rank();
    match t.family() {
        Family::A => Err(Error::UnsupportedFamily(Family::A)),
        Family::D => Ok((1..n)
            .flat_map(|k| {
                let last = if k % 2 == 1 { n } else { n - 1 };
                (n - k..=n - 2).chain(std::iter::once(last))
            })
            .collect()),
        Family::B | Family::C => Ok((1..=n).flat_map(|k| n + 1 - k..=n).collect()),
    }
}

pub fn canonical_word(t: LieType) -> ReducedWord {
    let letters = match t.family() {
        Family::A => a_word(t.rank()),
        _ => {
            let mut l = a_word(t.rank() - 1);
            l.extend(tilde_word(t).expect("not type A"));
            l
        }
    };
    ReducedWord::new(t, letters).expect("letters in range")
}

/// `β_k = s_{i_1} … s_{i_{k-1}}(α_{i_k})` for a reduced word of `ω_0`.
pub fn positive_root_order(w: &ReducedWord) -> Result<Vec<EpsVector>> {
    w.require_longest()?;
    let t = w.lie_type();
    let roots = simple_roots(t);
    let mut prefix = SignedPermutation::identity(t.ambient_dim());
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        out.push(prefix.act_unchecked(&roots[l - 1]));
        prefix = prefix.compose(&generator(t, l)?);
    }
    Ok(out)
}

/// Whether `s_j` is a left descent of `v`, i.e. `v^{-1}(α_j) < 0`.
pub fn is_left_descent(t: LieType, v: &SignedPermutation, j: usize) -> bool {
    let alpha = &simple_roots(t)[j - 1];
    !v.inverse().act_unchecked(alpha).is_positive()
}

fn parabolic_descent(t: LieType, i: usize, mut w: SignedPermutation) -> SignedPermutation {
    let gens: Vec<_> = (1..=t.rank())
        .map(|j| generator(t, j).expect("index in range"))
        .collect();
    let roots = simple_roots(t);
    loop {
        let inv = w.inverse();
        let step =
            (1..=t.rank()).find(|&j| j != i && !inv.act_unchecked(&roots[j - 1]).is_positive());
        match step {
            Some(j) => w = gens[j - 1].compose(&w),
            None => return w,
        }
    }
}

/// `z^{(i)}`, the minimal element of `W_{î} s_i ω_0`, by descending through
/// left descents in `W_{î}`.
pub fn minimal_coset_rep(t: LieType, i: usize) -> Result<SignedPermutation> {
    t.check_index(i)?;
    let start = generator(t, i)?.compose(&longest_element(t));
    Ok(parabolic_descent(t, i, start))
}

/// Enumerates the parabolic subgroup `W_{î}`.
pub fn parabolic_subgroup(t: LieType, i: usize) -> Result<Vec<SignedPermutation>> {
    t.check_index(i)?;
    let gens: Vec<_> = (1..=t.rank())
        .filter(|&j| j != i)
        .map(|j| generator(t, j))
        .collect::<Result<_>>()?;
    let id = SignedPermutation::identity(t.ambient_dim());
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(u) = queue.pop_front() {
        for g in &gens {
            let v = g.compose(&u);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `z^{(i)}` by exhaustive minimization over the coset.
pub fn minimal_coset_rep_brute(t: LieType, i: usize) -> Result<SignedPermutation> {
    let base = generator(t, i)?.compose(&longest_element(t));
    let coset: Vec<_> = parabolic_subgroup(t, i)?
        .iter()
        .map(|u| u.compose(&base))
        .collect();
    let min_len = coset
        .iter()
        .map(|w| w.length(t))
        .min()
        .expect("coset is nonempty");
    let mut minimal: Vec<_> = coset
        .into_iter()
        .filter(|w| w.length(t) == min_len)
        .collect();
    if minimal.len() != 1 {
        return Err(Error::Internal(format!(
            "{} minimal coset elements",
            minimal.len()
        )));
    }
    Ok(minimal.pop().expect("one element"))
}

/// Closed forms for `z^{(i)}`: D for all `i`, B and C for `i < n`.
///
/// `z^{(n)}` in type D is the image of `z^{(n-1)}` under the diagram
/// automorphism exchanging `α_{n-1}` and `α_n`.
pub fn minimal_coset_rep_closed_form(t: LieType, i: usize) -> Option<SignedPermutation> {
    let n = t.rank();
    if i == 0 || i > n {
        return None;
    }
    let ni = n as i64;
    let ii = i as i64;
    let generic = |last: i64| {
        let mut image: Vec<i64> = (2..=ii).rev().map(|k| -k).collect();
        image.push(ii + 1);
        image.push(-1);
        image.extend(ii + 2..ni);
        if image.len() < n {
            image.push(last);
        }
        image
    };
    let image = match t.family() {
        Family::A => return None,
        Family::B | Family::C if i < n => generic(ni),
        Family::D if i + 1 < n => generic(parity_sign(i, 1) * ni),
        Family::D => {
            let mut image = vec![ni];
            image.extend((3..ni).rev().map(|k| -k));
            image.push(1);
            image.push(parity_sign(n, -1) * 2);
            if i == n {
                // conjugate by the sign change of ε_n
                for m in image.iter_mut() {
                    if m.unsigned_abs() == n as u64 {
                        *m = -*m;
                    }
                }
                image[n - 1] = -image[n - 1];
            }
            image
        }
        _ => return None,
    };
    SignedPermutation::from_image(image).ok()
}

/// Position lists (0-based, increasing) of subwords of `word` that are
/// reduced words for `target`.
pub fn reduced_subwords(word: &ReducedWord, target: &SignedPermutation) -> Vec<Vec<usize>> {
    let t = word.lie_type();
    let gens: Vec<_> = (1..=t.rank())
        .map(|j| generator(t, j).expect("index in range"))
        .collect();
    let roots = simple_roots(t);
    let mut out = Vec::new();
    let mut picked = Vec::new();
    let len = target.length(t);
    subword_dfs(
        word.letters(),
        0,
        target.clone(),
        len,
        &gens,
        &roots,
        &mut picked,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn subword_dfs(
    letters: &[usize],
    pos: usize,
    remaining: SignedPermutation,
    len: usize,
    gens: &[SignedPermutation],
    roots: &[EpsVector],
    picked: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if len == 0 {
        out.push(picked.clone());
        return;
    }
    if letters.len() - pos < len {
        return;
    }
    let l = letters[pos];
    if !remaining
        .inverse()
        .act_unchecked(&roots[l - 1])
        .is_positive()
    {
        picked.push(pos);
        let next = gens[l - 1].compose(&remaining);
        subword_dfs(letters, pos + 1, next, len - 1, gens, roots, picked, out);
        picked.pop();
    }
    subword_dfs(letters, pos + 1, remaining, len, gens, roots, picked, out);
}

/// Every reduced word of `w`, in lexicographic order.
pub fn all_reduced_words(t: LieType, w: &SignedPermutation) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    all_words_dfs(t, w.clone(), &mut prefix, &mut out);
    out.into_iter()
        .map(|l| ReducedWord::new(t, l).expect("letters in range"))
        .collect()
}

fn all_words_dfs(
    t: LieType,
    w: SignedPermutation,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if w == SignedPermutation::identity(t.ambient_dim()) {
        out.push(prefix.clone());
        return;
    }
    for j in 1..=t.rank() {
        if is_left_descent(t, &w, j) {
            prefix.push(j);
            let next = generator(t, j).expect("index in range").compose(&w);
            all_words_dfs(t, next, prefix, out);
            prefix.pop();
        }
    }
}

/// A reduced word for `w` built by repeatedly stripping a left descent;
/// `choose` picks among the available descents.
pub fn reduced_word_by_descents(
    t: LieType,
    w: &SignedPermutation,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> ReducedWord {
    let mut w = w.clone();
    let mut letters = Vec::new();
    let id = SignedPermutation::identity(t.ambient_dim());
    while w != id {
        let descents: Vec<usize> = (1..=t.rank())
            .filter(|&j| is_left_descent(t, &w, j))
            .collect();
        let j = descents[choose(&descents) % descents.len()];
        letters.push(j);
        w = generator(t, j).expect("index in range").compose(&w);
    }
    ReducedWord::new(t, letters).expect("letters in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    #[test]
    fn parity_sign_table() {
        assert_eq!(parity_sign(4, 1), 1);
        assert_eq!(parity_sign(3, 1), -1);
        assert_eq!(parity_sign(4, -1), -1);
        assert_eq!(parity_sign(3, -1), 1);
    }

    #[test]
    fn generator_actions() {
        let v = EpsVector::from_integers(&[1, 2, 3]);
        let d3 = ty(Family::D, 3);
        assert_eq!(
            generator(d3, 3).unwrap().act(&v).unwrap(),
            EpsVector::from_integers(&[1, -3, -2])
        );
        let b2 = ty(Family::B, 2);
        let w = EpsVector::from_integers(&[4, 5]);
        assert_eq!(
            generator(b2, 2).unwrap().act(&w).unwrap(),
            EpsVector::from_integers(&[4, -5])
        );
        assert_eq!(SignedPermutation::identity(3).act(&v).unwrap(), v);
    }

    #[test]
    fn act_length_mismatch() {
        let e = SignedPermutation::identity(2);
        assert!(e.act(&EpsVector::zero(3)).is_err());
    }

    #[test]
    fn word_elements() {
        let d3 = ty(Family::D, 3);
        let w = ReducedWord::new(d3, vec![2, 1, 2, 3, 1, 2]).unwrap();
        assert_eq!(canonical_word(d3), w);
        assert_eq!(word_to_element(&w).image(), &[-1, -2, 3]);
        let b2 = ty(Family::B, 2);
        let w = ReducedWord::new(b2, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(canonical_word(b2), w);
        assert_eq!(word_to_element(&w).image(), &[-1, -2]);
        assert_eq!(
            word_to_element(&ReducedWord::new(b2, vec![]).unwrap()),
            SignedPermutation::identity(2)
        );
    }

    #[test]
    fn letters_validated() {
        assert!(matches!(
            ReducedWord::new(ty(Family::B, 2), vec![3]),
            Err(Error::LetterOutOfRange { letter: 3, rank: 2 })
        ));
    }

    #[test]
    fn reducedness() {
        let b2 = ty(Family::B, 2);
        assert!(!ReducedWord::new(b2, vec![1, 1]).unwrap().is_reduced());
        let b3 = canonical_word(ty(Family::B, 3));
        assert_eq!(b3.len(), 9);
        assert!(b3.is_longest());
        let d4 = canonical_word(ty(Family::D, 4));
        assert_eq!(d4.len(), 12);
        assert!(d4.is_longest());
    }

    #[test]
    fn tilde_parts() {
        assert_eq!(
            tilde_word(ty(Family::D, 4)).unwrap(),
            vec![4, 2, 3, 1, 2, 4]
        );
        assert_eq!(
            tilde_word(ty(Family::D, 5)).unwrap(),
            vec![5, 3, 4, 2, 3, 5, 1, 2, 3, 4]
        );
        assert_eq!(
            tilde_word(ty(Family::B, 3)).unwrap(),
            vec![3, 2, 3, 1, 2, 3]
        );
        assert_eq!(a_word(3), vec![3, 2, 3, 1, 2, 3]);
    }

    #[test]
    fn canonical_words_evaluate_to_longest() {
        for (f, r) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 4),
            (Family::D, 5),
            (Family::D, 6),
        ] {
            let t = ty(f, r);
            let w = canonical_word(t);
            assert_eq!(word_to_element(&w), longest_element(t), "{t}");
            assert!(w.is_longest(), "{t}");
        }
        assert_eq!(
            longest_element(ty(Family::D, 5)).image(),
            &[-1, -2, -3, -4, 5]
        );
        assert_eq!(longest_element(ty(Family::D, 4)).image(), &[-1, -2, -3, -4]);
    }

    #[test]
    fn d3_root_order() {
        let order = positive_root_order(&canonical_word(ty(Family::D, 3))).unwrap();
        let expect = [
            [0, 1, -1],
            [1, 0, -1],
            [1, -1, 0],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
        ];
        let expect: Vec<_> = expect.iter().map(|c| EpsVector::from_integers(c)).collect();
        assert_eq!(order, expect);
    }

    #[test]
    fn b_root_order_tail() {
        let t = ty(Family::B, 3);
        let order = positive_root_order(&canonical_word(t)).unwrap();
        assert_eq!(order[7], EpsVector::from_integers(&[0, 1, 1]));
        assert_eq!(order[8], EpsVector::from_integers(&[0, 0, 1]));
        assert_eq!(order[6], EpsVector::from_integers(&[1, 0, 1]));
    }

    #[test]
    fn root_order_rejects_non_longest() {
        let t = ty(Family::B, 2);
        assert_eq!(
            positive_root_order(&ReducedWord::new(t, vec![1, 1]).unwrap()),
            Err(Error::NotReduced)
        );
        assert_eq!(
            positive_root_order(&ReducedWord::new(t, vec![1, 2]).unwrap()),
            Err(Error::NotLongestWord)
        );
    }

    #[test]
    fn coset_rep_examples() {
        let a1 = ty(Family::A, 1);
        assert_eq!(
            minimal_coset_rep(a1, 1).unwrap(),
            SignedPermutation::identity(2)
        );
        let d3 = ty(Family::D, 3);
        assert_eq!(minimal_coset_rep(d3, 1).unwrap().image(), &[2, -1, -3]);
        assert_eq!(
            minimal_coset_rep_brute(d3, 1).unwrap().image(),
            &[2, -1, -3]
        );
        let b2 = ty(Family::B, 2);
        assert_eq!(
            minimal_coset_rep(b2, 1).unwrap(),
            minimal_coset_rep_closed_form(b2, 1).unwrap()
        );
        assert!(minimal_coset_rep(d3, 4).is_err());
    }

    #[test]
    fn coset_reps_agree() {
        for (f, r) in [
            (Family::B, 2),
            (Family::B, 3),
            (Family::B, 4),
            (Family::C, 2),
            (Family::C, 3),
            (Family::C, 4),
            (Family::D, 3),
            (Family::D, 4),
        ] {
            let t = ty(f, r);
            for i in 1..=r {
                let descent = minimal_coset_rep(t, i).unwrap();
                assert_eq!(descent, minimal_coset_rep_brute(t, i).unwrap(), "{t} i={i}");
                if let Some(closed) = minimal_coset_rep_closed_form(t, i) {
                    assert_eq!(descent, closed, "{t} i={i}");
                }
                let parabolic = parabolic_subgroup(t, i).unwrap().len();
                let lw0 = generator(t, i)
                    .unwrap()
                    .compose(&longest_element(t))
                    .length(t);
                let u = generator(t, i)
                    .unwrap()
                    .compose(&longest_element(t))
                    .compose(&descent.inverse());
                assert_eq!(descent.length(t) + u.length(t), lw0);
                assert!(parabolic >= 1);
            }
        }
    }

    #[test]
    fn closed_forms_at_larger_rank() {
        for (f, r) in [(Family::D, 5), (Family::D, 6), (Family::B, 5)] {
            let t = ty(f, r);
            for i in 1..=r {
                if let Some(closed) = minimal_coset_rep_closed_form(t, i) {
                    assert_eq!(minimal_coset_rep(t, i).unwrap(), closed, "{t} i={i}");
                }
            }
        }
    }

    #[test]
    fn a_prefix_is_longest_for_levi() {
        for n in 3..=6 {
            let a = ty(Family::A, n - 1);
            assert!(ReducedWord::new(a, a_word(n - 1)).unwrap().is_longest());
        }
    }

    #[test]
    fn subwords_for_d3() {
        let d3 = ty(Family::D, 3);
        let w = canonical_word(d3);
        let z = minimal_coset_rep(d3, 1).unwrap();
        let subs = reduced_subwords(&w, &z);
        assert!(!subs.is_empty());
        for s in &subs {
            let letters = s.iter().map(|&p| w.letters()[p]).collect();
            let sw = ReducedWord::new(d3, letters).unwrap();
            assert!(sw.is_reduced());
            assert_eq!(word_to_element(&sw), z);
        }
    }

    #[test]
    fn reduced_word_counts() {
        let a2 = ty(Family::A, 2);
        assert_eq!(all_reduced_words(a2, &longest_element(a2)).len(), 2);
        let a3 = ty(Family::A, 3);
        assert_eq!(all_reduced_words(a3, &longest_element(a3)).len(), 16);
        let b2 = ty(Family::B, 2);
        assert_eq!(all_reduced_words(b2, &longest_element(b2)).len(), 2);
    }
}
