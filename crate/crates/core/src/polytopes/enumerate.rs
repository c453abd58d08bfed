use rayon::prelude::*;

use crate::cones::LinearForm;
use crate::rootsys::CartanMatrix;

/// Lattice points of a cone cut by the weight-bound chain of a word.
///
/// `letters` are the word letters of the enumerated coordinates, `fund` the
/// fundamental coordinates of `λ`, and `forms` are homogeneous inequalities
/// over those coordinates. The chain for position `k` only involves later
/// positions, so every suffix of a word can be enumerated on its own.
pub(crate) struct ChainEnumerator<'a> {
    letters: &'a [usize],
    cartan: &'a CartanMatrix,
    fund: &'a [i64],
    /// Forms indexed by their lowest supported coordinate.
    forms_at: Vec<Vec<&'a LinearForm>>,
}

impl<'a> ChainEnumerator<'a> {
    pub fn new(
        letters: &'a [usize],
        cartan: &'a CartanMatrix,
        fund: &'a [i64],
        forms: &'a [LinearForm],
    ) -> Self {
        let mut forms_at = vec![Vec::new(); letters.len()];
        for f in forms {
            if let Some(k) = f.first_support() {
                forms_at[k].push(f);
            }
        }
        ChainEnumerator {
            letters,
            cartan,
            fund,
            forms_at,
        }
    }

    /// `⟨λ - Σ_{j>k} t_j α_{i_j}, α_{i_k}^∨⟩` from the running load.
    fn bound(&self, k: usize, load: &[i64]) -> i64 {
        let i = self.letters[k];
        self.fund[i - 1] - load[i - 1]
    }

    fn assign(&self, k: usize, v: i64, load: &mut [i64]) {
        let ik = self.letters[k];
        for (i, l) in load.iter_mut().enumerate() {
            *l += v * self.cartan.get(i + 1, ik);
        }
    }

    fn dfs(&self, k: usize, t: &mut [i64], load: &mut [i64], out: &mut Vec<Vec<i64>>) {
        let b = self.bound(k, load);
        for v in 0..=b {
            t[k] = v;
            if !self.forms_at[k].iter().all(|f| f.holds(t)) {
                continue;
            }
            if k == 0 {
                out.push(t.to_vec());
                continue;
            }
            self.assign(k, v, load);
            self.dfs(k - 1, t, load, out);
            self.assign(k, -v, load);
        }
        t[k] = 0;
    }

    /// All points, sorted lexicographically.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let n = self.letters.len();
        if n == 0 {
            return vec![Vec::new()];
        }
        let top = self.bound(n - 1, &vec![0; self.fund.len()]);
        let mut out: Vec<Vec<i64>> = (0..=top.max(-1))
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut t = vec![0; n];
                let mut load = vec![0; self.fund.len()];
                let mut found = Vec::new();
                t[n - 1] = v;
                if self.forms_at[n - 1].iter().all(|f| f.holds(&t)) {
                    if n == 1 {
                        found.push(t.clone());
                    } else {
                        self.assign(n - 1, v, &mut load);
                        self.dfs(n - 2, &mut t, &mut load, &mut found);
                    }
                }
                found
            })
            .collect();
        out.sort();
        out
    }
}

/// Lattice points of `{x : 0 ≤ x ≤ upper, forms(x) ≥ 0}`, sorted.
///
/// Coordinates are fixed from the last to the first; at every node the range
/// of the next coordinate is narrowed by each form's best case over the
/// coordinates still free.
pub fn enumerate_h_rep(forms: &[LinearForm], upper: &[i64]) -> Vec<Vec<i64>> {
    let n = upper.len();
    let upper = tighten(forms, upper);
    if upper.iter().any(|&u| u < 0) {
        return Vec::new();
    }
    let order: Vec<usize> = (0..n).rev().collect();
    // optimistic[f][d]: largest contribution to form f of order[d..]
    let optimistic: Vec<Vec<i64>> = forms
        .iter()
        .map(|f| {
            let mut acc = vec![0; n + 1];
            for d in (0..n).rev() {
                let c = order[d];
                acc[d] = acc[d + 1] + (f.coeffs[c] * upper[c]).max(0);
            }
            acc
        })
        .collect();
    let search = HRepSearch {
        forms,
        upper: &upper,
        order: &order,
        optimistic: &optimistic,
    };
    let mut partial: Vec<i64> = forms.iter().map(|f| f.constant).collect();
    let mut t = vec![0; n];
    let mut out = Vec::new();
    search.dfs(0, &mut partial, &mut t, &mut out);
    out.sort();
    out
}

/// Propagates the box through the forms until nothing changes.
fn tighten(forms: &[LinearForm], upper: &[i64]) -> Vec<i64> {
    let mut upper = upper.to_vec();
    loop {
        let mut changed = false;
        for f in forms {
            let best: i64 = f.constant
                + f.coeffs
                    .iter()
                    .zip(&upper)
                    .map(|(a, u)| (a * u).max(0))
                    .sum::<i64>();
            for (c, &a) in f.coeffs.iter().enumerate() {
                if a < 0 {
                    let cap = best.div_euclid(-a);
                    if cap < upper[c] {
                        upper[c] = cap;
                        changed = true;
                    }
                }
            }
        }
        if !changed || upper.iter().any(|&u| u < 0) {
            return upper;
        }
    }
}

struct HRepSearch<'a> {
    forms: &'a [LinearForm],
    upper: &'a [i64],
    order: &'a [usize],
    optimistic: &'a [Vec<i64>],
}

impl HRepSearch<'_> {
    fn dfs(&self, d: usize, partial: &mut [i64], t: &mut [i64], out: &mut Vec<Vec<i64>>) {
        if d == self.order.len() {
            if partial.iter().all(|&p| p >= 0) {
                out.push(t.to_vec());
            }
            return;
        }
        let c = self.order[d];
        let (mut lo, mut hi) = (0, self.upper[c]);
        for (f, form) in self.forms.iter().enumerate() {
            let a = form.coeffs[c];
            let rest = partial[f] + self.optimistic[f][d + 1];
            if a < 0 {
                hi = hi.min(rest.div_euclid(-a));
            } else if a > 0 && rest < 0 {
                lo = lo.max((-rest + a - 1) / a);
            } else if a == 0 && rest < 0 {
                return;
            }
        }
        for v in lo..=hi {
            t[c] = v;
            for (f, form) in self.forms.iter().enumerate() {
                partial[f] += form.coeffs[c] * v;
            }
            self.dfs(d + 1, partial, t, out);
            for (f, form) in self.forms.iter().enumerate() {
                partial[f] -= form.coeffs[c] * v;
            }
        }
        t[c] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_rep_box_and_simplex() {
        let forms = vec![LinearForm::new(vec![-1, -1], 2)];
        let pts = enumerate_h_rep(&forms, &[2, 2]);
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0]
            ]
        );
        assert_eq!(enumerate_h_rep(&[], &[1, 1]).len(), 4);
    }
}
