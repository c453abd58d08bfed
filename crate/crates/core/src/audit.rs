//! Verification sweeps shared by the acceptance tests and the command line.
//!
//! Each check returns a [`CriterionReport`] with the number of cases examined
//! and a description of the first failures.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::branching::{
    branch_multiplicities, branching_points, decomposition_report, multiplicity_by_filter,
};
use crate::cones::{
    a_string_cone, bz_inequalities, cone_from_relations, cone_poset, lemma_b_literal_relations,
    poset_edges, product_split, string_cone_explicit, tilde_string_cone, Block, DoubleIndex,
    LittelmannChecker, PosetLevel,
};
use crate::error::Result;
use crate::oracle::{
    freudenthal_with_cap, restrict_and_decompose_with_cap, weyl_dim, DEFAULT_DIM_CAP,
};
use crate::polytopes::{
    lusztig_branching_points, lusztig_polytope_points, string_polytope_points, string_to_lusztig,
    PsiData,
};
use crate::rootsys::{Family, LieType, Weight};
use crate::weyl::{a_word, all_reduced_words, canonical_word, longest_element, ReducedWord};

const MAX_REPORTED: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: String,
    pub statement: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    fn new(id: usize, name: &str, statement: &str) -> Self {
        CriterionReport {
            id,
            name: name.into(),
            statement: statement.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn absorb(&mut self, r: Result<()>, ctx: impl FnOnce() -> String) {
        self.cases += 1;
        if let Err(e) = r {
            self.fail(format!("{}: {e}", ctx()));
        }
    }

    /// One summary line, `PASS`/`FAIL` first.
    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} [{}] {}: {} ({} cases)",
            self.id, self.name, self.statement, self.cases
        );
        if !self.passed() {
            let shown: Vec<_> = self.failures.iter().take(MAX_REPORTED).cloned().collect();
            s.push_str(&format!(
                "; {} failures, first: {}",
                self.failures.len(),
                shown.join(" | ")
            ));
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub max_rank: usize,
    pub max_coeff: i64,
    pub dim_cap: u128,
    pub box_bound: i64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_rank: 4,
            max_coeff: 2,
            dim_cap: DEFAULT_DIM_CAP,
            box_bound: 2,
        }
    }
}

/// `B_2.., C_2.., D_3..` up to the given rank.
pub fn sweep_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (f, lo) in [(Family::B, 2), (Family::C, 2), (Family::D, 3)] {
        for r in lo..=max_rank {
            out.push(LieType::new(f, r).expect("valid rank"));
        }
    }
    out
}

/// Dominant weights with coefficients `≤ max_coeff` and dimension at most
/// the cap, plus the fundamental weights when their dimension allows.
pub fn sweep_weights(ty: LieType, max_coeff: i64, dim_cap: u128) -> Vec<Weight> {
    let r = ty.rank();
    let mut fund = vec![0i64; r];
    let mut out = BTreeSet::new();
    loop {
        out.insert(fund.clone());
        let mut k = 0;
        while k < r && fund[k] == max_coeff {
            fund[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
        fund[k] += 1;
    }
    for i in 0..r {
        let mut v = vec![0; r];
        v[i] = 1;
        out.insert(v);
    }
    out.into_iter()
        .map(|f| Weight::new(ty, &f).expect("length matches"))
        .filter(|l| weyl_dim(ty, l).is_ok_and(|d| d <= dim_cap))
        .collect()
}

/// Runs `f` over every `(type, λ)` of the sweep in parallel, in sweep order.
fn over_sweep<F>(cfg: &AuditConfig, rep: &mut CriterionReport, f: F)
where
    F: Fn(LieType, &Weight) -> Result<()> + Sync,
{
    let cases: Vec<(LieType, Weight)> = sweep_types(cfg.max_rank)
        .into_iter()
        .flat_map(|ty| {
            sweep_weights(ty, cfg.max_coeff, cfg.dim_cap)
                .into_iter()
                .map(move |l| (ty, l))
        })
        .collect();
    let results: Vec<Result<()>> = cases.par_iter().map(|(ty, l)| f(*ty, l)).collect();
    for ((ty, l), r) in cases.iter().zip(results) {
        rep.absorb(r, || format!("{ty} {:?}", l.fund()));
    }
}

/// Calls `f` on every point of `[0, bound]^n` in parallel and collects the
/// messages it returns.
fn scan_box<F>(n: usize, bound: i64, f: F) -> (usize, Vec<String>)
where
    F: Fn(&[i64]) -> Option<String> + Sync,
{
    let base = (bound + 1) as u64;
    let total = base.pow(n as u32);
    let mut bad: Vec<(u64, String)> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let key = idx;
            let mut t = vec![0i64; n];
            for c in t.iter_mut().rev() {
                *c = (idx % base) as i64;
                idx /= base;
            }
            f(&t).map(|m| (key, m))
        })
        .collect();
    bad.sort();
    (total as usize, bad.into_iter().map(|(_, m)| m).collect())
}

fn cone_types() -> Vec<LieType> {
    [
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 3),
        (Family::D, 4),
    ]
    .into_iter()
    .map(|(f, r)| LieType::new(f, r).expect("valid rank"))
    .collect()
}

fn box_for(n: usize, bound: i64) -> i64 {
    if n >= 14 {
        bound.min(1)
    } else {
        bound
    }
}

/// Explicit cone membership agrees with the Littelmann recursion on a box.
pub fn cone_equivalence(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        1,
        "cone equivalence",
        "explicit inequalities define the same lattice cone as the Littelmann recursion",
    );
    for ty in cone_types() {
        let w = canonical_word(ty);
        let cone = string_cone_explicit(ty)?;
        let checker = LittelmannChecker::new(&w)?;
        let (n, bad) = scan_box(w.len(), box_for(w.len(), cfg.box_bound), |t| {
            let (a, b) = (cone.contains(t), checker.accepts(t));
            (a != b).then(|| format!("{ty} {t:?}: explicit={a} recursion={b}"))
        });
        rep.cases += n;
        rep.failures.extend(bad);
    }
    Ok(rep)
}

/// Cone points satisfy the Berenstein–Zelevinsky inequalities; for type A
/// the two systems coincide for every reduced word.
pub fn bz_containment(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        2,
        "BZ containment",
        "cone points satisfy every Berenstein-Zelevinsky form; equality for A_2, A_3",
    );
    for ty in cone_types() {
        let w = canonical_word(ty);
        let cone = string_cone_explicit(ty)?;
        let bz = bz_inequalities(&w)?;
        let (n, bad) = scan_box(w.len(), box_for(w.len(), cfg.box_bound), |t| {
            (cone.contains(t) && !bz.contains(t)).then(|| format!("{ty} {t:?} violates a BZ form"))
        });
        rep.cases += n;
        rep.failures.extend(bad);
    }
    for r in [2, 3] {
        let ty = LieType::new(Family::A, r)?;
        for w in all_reduced_words(ty, &longest_element(ty)) {
            let bz = bz_inequalities(&w)?;
            let checker = LittelmannChecker::new(&w)?;
            let (n, bad) = scan_box(w.len(), cfg.box_bound, |t| {
                let (a, b) = (bz.contains(t), checker.accepts(t));
                (a != b).then(|| format!("{w} {t:?}: bz={a} recursion={b}"))
            });
            rep.cases += n;
            rep.failures.extend(bad);
        }
    }
    Ok(rep)
}

/// `|S(λ)| = dim V(λ)` over the weight sweep.
pub fn dimension_counts(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        3,
        "dimension counts",
        "string polytope lattice points count dim V(lambda)",
    );
    let d4 = LieType::new(Family::D, 4)?;
    let d3 = LieType::new(Family::D, 3)?;
    for (ty, i, dim) in [(d4, 2, 28u128), (d3, 1, 6)] {
        let l = Weight::fundamental(ty, i)?;
        rep.absorb(check_eq(weyl_dim(ty, &l)?, dim, "Weyl dimension"), || {
            format!("{ty} {l}")
        });
    }
    over_sweep(cfg, &mut rep, |ty, l| {
        check_eq(
            string_polytope_points(ty, l)?.len() as u128,
            weyl_dim(ty, l)?,
            "points vs dim",
        )
    });
    Ok(rep)
}

fn check_eq<T: PartialEq + std::fmt::Debug>(a: T, b: T, what: &str) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(crate::Error::Internal(format!("{what}: {a:?} != {b:?}")))
    }
}

fn mismatch(what: String) -> crate::Error {
    crate::Error::Internal(what)
}

/// Branching multiplicities against character restriction, the dimension
/// sum and the fiber decomposition.
pub fn branching_oracle(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        4,
        "branching oracle",
        "branching polytope multiplicities equal character restriction; fibers reassemble the polytope",
    );
    let d3 = LieType::new(Family::D, 3)?;
    let b2 = LieType::new(Family::B, 2)?;
    let known = [
        (d3, vec![(vec![0, 1], 1), (vec![1, 0], 1)]),
        (b2, vec![(vec![0], 1), (vec![1], 2)]),
    ];
    for (ty, expected) in known {
        let l = Weight::fundamental(ty, 1)?;
        let r = (|| {
            check_eq(
                branch_multiplicities(ty, &l)?.multiplicities(),
                expected.into_iter().collect(),
                "known",
            )
        })();
        rep.absorb(r, || format!("{ty} ω_1"));
    }
    over_sweep(cfg, &mut rep, |ty, l| {
        let levi = ty.levi()?;
        let res = branch_multiplicities(ty, l)?;
        let oracle = restrict_and_decompose_with_cap(ty, l, cfg.dim_cap)?;
        check_eq(&res.multiplicities(), &oracle, "branching vs restriction")?;
        let mut sum = 0u128;
        for e in &res.entries {
            sum += u128::from(e.multiplicity) * weyl_dim(levi, &Weight::new(levi, &e.mu)?)?;
        }
        check_eq(sum, weyl_dim(ty, l)?, "dimension sum")?;
        let full = string_polytope_points(ty, l)?;
        let report = decomposition_report(ty, l)?;
        if !report.is_disjoint() {
            return Err(mismatch("fibers overlap".into()));
        }
        check_eq(report.reassemble(), full.clone(), "reassembly")?;
        let projected: BTreeSet<Vec<i64>> = full
            .iter()
            .map(|p| product_split(ty, p).map(|(_, t)| t))
            .collect::<Result<_>>()?;
        check_eq(
            branching_points(ty, l)?,
            projected.into_iter().collect(),
            "branching points vs projection",
        )?;
        if let Some(e) = res.entries.first() {
            check_eq(
                multiplicity_by_filter(ty, l, &e.mu)?,
                e.multiplicity,
                "filter route",
            )?;
        }
        Ok(())
    });
    Ok(rep)
}

/// `φ` is a bijection onto the Lusztig H-representation with inverse `ψ`.
pub fn phi_psi_bijection(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        5,
        "phi/psi bijection",
        "phi maps string points onto the Lusztig polytope and psi inverts it",
    );
    over_sweep(cfg, &mut rep, |ty, l| {
        let cut = ty.rank() * (ty.rank() - 1) / 2;
        let string = string_polytope_points(ty, l)?;
        let psi = PsiData::new(l)?;
        let mut image = Vec::with_capacity(string.len());
        for t in &string {
            let u = string_to_lusztig(ty, l, t)?.into_coords();
            if psi.apply(&u) != *t {
                return Err(mismatch(format!("psi(phi({t:?})) != {t:?}")));
            }
            image.push(u);
        }
        image.sort();
        let lusztig = lusztig_polytope_points(ty, l)?;
        check_eq(&image, &lusztig, "phi image vs Lusztig H-rep")?;
        for u in &lusztig {
            let t = psi.apply(u);
            if string_to_lusztig(ty, l, &t)?.coords() != u.as_slice() {
                return Err(mismatch(format!("phi(psi({u:?})) != {u:?}")));
            }
        }
        let projected: BTreeSet<Vec<i64>> = lusztig.iter().map(|u| u[cut..].to_vec()).collect();
        check_eq(
            lusztig_branching_points(ty, l)?,
            projected.into_iter().collect(),
            "Lusztig branching",
        )?;
        Ok(())
    });
    Ok(rep)
}

/// Membership in the full cone is membership of both factors.
pub fn product_decomposition(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        6,
        "product decomposition",
        "the string cone is the product of the A_{n-1} cone and the tilde cone",
    );
    for ty in cone_types() {
        let w = canonical_word(ty);
        let full = LittelmannChecker::new(&w)?;
        let a_rank = ty.rank() - 1;
        let a_checker = LittelmannChecker::new(&ReducedWord::new(
            LieType::new(Family::A, a_rank)?,
            a_word(a_rank),
        )?)?;
        let a_cone = a_string_cone(a_rank)?;
        let tilde = tilde_string_cone(ty)?;
        let (n, bad) = scan_box(w.len(), box_for(w.len(), cfg.box_bound), |t| {
            let (minus, plus) = product_split(ty, t).expect("length matches");
            let whole = full.accepts(t);
            let a_ok = a_checker.accepts(&minus);
            let split = a_ok && tilde.contains(&plus);
            (whole != split || a_ok != a_cone.contains(&minus))
                .then(|| format!("{ty} {t:?}: full={whole} factors={split}"))
        });
        rep.cases += n;
        rep.failures.extend(bad);
    }
    Ok(rep)
}

/// Cover relations of the `D_6` plus block, transcribed by hand. An entry
/// `(y, x)` is the edge `y → x`, i.e. `t^+_x ≥ t^+_y`.
pub const D6_PLUS_EDGES: [((usize, usize), (usize, usize)); 20] = [
    ((1, 2), (1, 1)),
    ((1, 3), (1, 2)),
    ((2, 2), (1, 2)),
    ((1, 4), (1, 3)),
    ((2, 3), (1, 3)),
    ((2, 3), (2, 2)),
    ((1, 5), (1, 4)),
    ((2, 4), (1, 4)),
    ((2, 4), (2, 3)),
    ((3, 3), (2, 3)),
    ((2, 5), (1, 5)),
    ((2, 5), (2, 4)),
    ((3, 4), (2, 4)),
    ((3, 4), (3, 3)),
    ((3, 5), (2, 5)),
    ((3, 5), (3, 4)),
    ((4, 4), (3, 4)),
    ((5, 5), (4, 5)),
    ((4, 5), (3, 5)),
    ((4, 5), (4, 4)),
];

/// The `D_6` plus-block poset equals the hand transcription.
pub fn poset_fidelity() -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        7,
        "poset fidelity",
        "D_6 plus-block poset has the 20 transcribed cover relations",
    );
    let d6 = LieType::new(Family::D, 6)?;
    let got = poset_edges(&cone_poset(d6, PosetLevel::Theorem)?, Block::Plus);
    let want: BTreeSet<(DoubleIndex, DoubleIndex)> = D6_PLUS_EDGES
        .iter()
        .map(|&((a, b), (c, d))| (DoubleIndex::plus(a, b), DoubleIndex::plus(c, d)))
        .collect();
    rep.cases = want.len();
    for e in got.symmetric_difference(&want) {
        let side = if got.contains(e) { "extra" } else { "missing" };
        rep.fail(format!("{side} edge {} -> {}", e.0, e.1));
    }
    if want.len() != 20 {
        rep.fail(format!("transcription has {} edges", want.len()));
    }
    Ok(rep)
}

/// Freudenthal mass equals the Weyl dimension and the weight multisets are
/// Weyl invariant.
pub fn oracle_consistency(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        8,
        "oracle self-consistency",
        "Freudenthal mass equals the Weyl dimension; multiplicities are Weyl invariant",
    );
    let mut types = sweep_types(cfg.max_rank);
    types.extend((1..=cfg.max_rank).map(|r| LieType::new(Family::A, r).expect("valid rank")));
    for ty in types {
        let weights = if ty.family() == Family::A {
            let mut v = vec![Weight::zero(ty)];
            v.extend((1..=ty.rank()).map(|i| Weight::fundamental(ty, i).expect("index in range")));
            v.push(Weight::new(ty, &vec![1; ty.rank()]).expect("length matches"));
            v
        } else {
            sweep_weights(ty, cfg.max_coeff, cfg.dim_cap)
        };
        let results: Vec<(String, Result<()>)> = weights
            .par_iter()
            .map(|l| {
                let r = (|| {
                    let ws = freudenthal_with_cap(ty, l, cfg.dim_cap)?;
                    check_eq(ws.mass(), weyl_dim(ty, l)?, "mass")?;
                    if !ws.is_weyl_invariant() {
                        return Err(mismatch("not Weyl invariant".into()));
                    }
                    Ok(())
                })();
                (format!("{ty} {:?}", l.fund()), r)
            })
            .collect();
        for (ctx, r) in results {
            rep.absorb(r, || ctx);
        }
    }
    Ok(rep)
}

/// The lemma-level relation systems hold on every explicit cone point of the
/// box, for B with both readings of its index range.
pub fn lemma_relations_hold(cfg: &AuditConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(
        0,
        "lemma relations",
        "lemma-level relation systems hold on the explicit cone",
    );
    for ty in cone_types() {
        let w = canonical_word(ty);
        let cone = string_cone_explicit(ty)?;
        let mut systems = vec![cone_from_relations(
            ty,
            &cone_poset(ty, PosetLevel::Lemma)?,
        )?];
        if ty.family() == Family::B {
            systems.push(cone_from_relations(ty, &lemma_b_literal_relations(ty)?)?);
        }
        let (n, bad) = scan_box(w.len(), box_for(w.len(), cfg.box_bound), |t| {
            (cone.contains(t) && systems.iter().any(|s| !s.contains(t)))
                .then(|| format!("{ty} {t:?}"))
        });
        rep.cases += n;
        rep.failures.extend(bad);
    }
    Ok(rep)
}

/// Runs the selected criteria (1 to 8) in order.
pub fn run_criteria(cfg: &AuditConfig, ids: &[usize]) -> Result<Vec<CriterionReport>> {
    ids.iter()
        .map(|&id| match id {
            1 => cone_equivalence(cfg),
            2 => bz_containment(cfg),
            3 => dimension_counts(cfg),
            4 => branching_oracle(cfg),
            5 => phi_psi_bijection(cfg),
            6 => product_decomposition(cfg),
            7 => poset_fidelity(),
            8 => oracle_consistency(cfg),
            other => Err(crate::Error::IndexOutOfRange {
                index: other,
                rank: 8,
            }),
        })
        .collect()
}
