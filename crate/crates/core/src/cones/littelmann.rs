use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::cartan_matrix;
use crate::weyl::ReducedWord;

/// The vectors `m^j` and values `Δ^j(k)` of the recursion.
///
/// `m[j-1]` is `m^j`; `delta[j-1][k-1]` is `Δ^j(k)` for `k < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaTable {
    pub m: Vec<Vec<i64>>,
    pub delta: Vec<Vec<i64>>,
}

/// Membership test for the string cone of an arbitrary reduced word of `ω_0`.
#[derive(Debug, Clone)]
pub struct LittelmannChecker {
    letters: Vec<usize>,
    /// `coupling[j][s] = ⟨α_{i_s}, α_{i_j}^∨⟩`, 0-based positions.
    coupling: Vec<Vec<i64>>,
}

impl LittelmannChecker {
    pub fn new(word: &ReducedWord) -> Result<Self> {
        word.require_longest()?;
        let a = cartan_matrix(word.lie_type());
        let letters = word.letters().to_vec();
        let coupling = letters
            .iter()
            .map(|&ij| letters.iter().map(|&is| a.get(ij, is)).collect())
            .collect();
        Ok(LittelmannChecker { letters, coupling })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// One step `m^j → m^{j-1}`, writing `Δ^j(k)` into `delta[..j-1]`.
    /// Returns false as soon as a negative `Δ` appears if `stop_early`.
    fn step(&self, j: usize, m: &mut [i64], delta: &mut [i64], stop_early: bool) -> bool {
        let ij = self.letters[j];
        let row = &self.coupling[j];
        // prefix[x] = Σ_{s<x} m_s a[i_j][i_s]
        let mut prefix = vec![0i64; j + 2];
        for s in 0..=j {
            prefix[s + 1] = prefix[s] + m[s] * row[s];
        }
        let mut ok = true;
        let mut best = i64::MIN;
        for k in (0..j).rev() {
            let l = k + 1;
            if self.letters[l] == ij {
                best = best.max(m[l] - prefix[l + 1]);
            }
            delta[k] = if self.letters[k] == ij {
                best + prefix[k + 1]
            } else {
                m[k]
            };
            if delta[k] < 0 {
                ok = false;
                if stop_early {
                    return false;
                }
            }
        }
        for k in 0..j {
            m[k] = m[k].min(delta[k]);
        }
        ok
    }

    pub fn accepts(&self, t: &[i64]) -> bool {
        if t.len() != self.len() || t.iter().any(|&x| x < 0) {
            return false;
        }
        let mut m = t.to_vec();
        let mut delta = vec![0i64; t.len()];
        (1..t.len())
            .rev()
            .all(|j| self.step(j, &mut m, &mut delta, true))
    }

    pub fn table(&self, t: &[i64]) -> Result<(bool, DeltaTable)> {
        if t.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: t.len(),
            });
        }
        let n = t.len();
        let mut ms = vec![Vec::new(); n];
        let mut deltas = vec![Vec::new(); n];
        let mut m = t.to_vec();
        let mut ok = t.iter().all(|&x| x >= 0);
        if n > 0 {
            ms[n - 1] = m.clone();
        }
        for j in (1..n).rev() {
            let mut delta = vec![0i64; j];
            let mut full = vec![0i64; n];
            ok &= self.step(j, &mut m, &mut full, false);
            delta.copy_from_slice(&full[..j]);
            deltas[j] = delta;
            ms[j - 1] = m[..].to_vec();
        }
        Ok((
            ok,
            DeltaTable {
                m: ms,
                delta: deltas,
            },
        ))
    }
}

/// Membership of `t` in the string cone of `w` with the full table.
///
/// Besides `Δ^j(k) ≥ 0` the coordinates themselves must be nonnegative;
/// the sign of `t_N` is otherwise never tested.
pub fn littelmann_member(w: &ReducedWord, t: &[i64]) -> Result<(bool, DeltaTable)> {
    LittelmannChecker::new(w)?.table(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, LieType};
    use crate::weyl::canonical_word;

    fn word(f: Family, r: usize, letters: &[usize]) -> ReducedWord {
        ReducedWord::new(LieType::new(f, r).unwrap(), letters.to_vec()).unwrap()
    }

    /// Direct transcription of the recursion without prefix sums.
    fn naive(w: &ReducedWord, t: &[i64]) -> bool {
        let a = cartan_matrix(w.lie_type());
        let i = w.letters();
        let n = t.len();
        if t.iter().any(|&x| x < 0) {
            return false;
        }
        let mut m = t.to_vec();
        for j in (1..n).rev() {
            let mut next = m.clone();
            for k in 0..j {
                let d = if i[k] == i[j] {
                    (k + 1..=j)
                        .filter(|&l| i[l] == i[j])
                        .map(|l| m[l] - (k + 1..=l).map(|s| m[s] * a.get(i[j], i[s])).sum::<i64>())
                        .max()
                        .unwrap()
                } else {
                    m[k]
                };
                if d < 0 {
                    return false;
                }
                next[k] = m[k].min(d);
            }
            m = next;
        }
        true
    }

    #[test]
    fn zero_is_member() {
        let w = canonical_word(LieType::new(Family::D, 4).unwrap());
        assert!(littelmann_member(&w, &[0; 12]).unwrap().0);
    }

    #[test]
    fn a2_examples() {
        let w = word(Family::A, 2, &[1, 2, 1]);
        assert!(littelmann_member(&w, &[5, 3, 3]).unwrap().0);
        assert!(!littelmann_member(&w, &[5, 3, 4]).unwrap().0);
    }

    #[test]
    fn d3_single_violation() {
        let w = canonical_word(LieType::new(Family::D, 3).unwrap());
        assert!(!littelmann_member(&w, &[0, 0, 0, 0, 1, 0]).unwrap().0);
        assert!(littelmann_member(&w, &[0, 0, 0, 1, 1, 0]).unwrap().0);
    }

    #[test]
    fn table_shape() {
        let w = word(Family::A, 2, &[1, 2, 1]);
        let (ok, table) = littelmann_member(&w, &[1, 2, 1]).unwrap();
        assert!(ok);
        assert_eq!(table.m[2], vec![1, 2, 1]);
        assert_eq!(table.delta[2].len(), 2);
        assert_eq!(table.delta[1].len(), 1);
        for j in 1..3 {
            for k in 0..j {
                assert_eq!(table.m[j - 1][k], table.m[j][k].min(table.delta[j][k]));
            }
        }
    }

    #[test]
    fn errors() {
        let w = word(Family::A, 2, &[1, 2, 1]);
        assert!(matches!(
            littelmann_member(&w, &[1, 2]),
            Err(Error::LengthMismatch { .. })
        ));
        let not_longest = word(Family::A, 2, &[1, 2]);
        assert!(littelmann_member(&not_longest, &[0, 0]).is_err());
    }

    #[test]
    fn matches_naive_on_small_boxes() {
        for (f, r) in [
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 3),
            (Family::A, 3),
        ] {
            let w = canonical_word(LieType::new(f, r).unwrap());
            let checker = LittelmannChecker::new(&w).unwrap();
            let n = w.len();
            let mut t = vec![0i64; n];
            loop {
                assert_eq!(checker.accepts(&t), naive(&w, &t), "{w} {t:?}");
                assert_eq!(checker.table(&t).unwrap().0, naive(&w, &t));
                let mut k = 0;
                while k < n && t[k] == 2 {
                    t[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                t[k] += 1;
            }
        }
    }
}
