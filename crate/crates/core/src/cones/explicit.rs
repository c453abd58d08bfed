use std::collections::BTreeSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::form::{ConeH, CoordLabel, LinearForm, Relation};
use super::index::{DoubleIndex, IndexMap, Sign};
use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType};

type D = DoubleIndex;

/// Which inequality system a poset describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PosetLevel {
    /// The full string cone.
    Theorem,
    /// The weaker system obtained from the BZ inequalities alone.
    Lemma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    All,
    Minus,
    Plus,
}

/// `t^-_{i,j} ≥ t^-_{i+1,j}` for `i < j ≤ blocks`.
fn minus_relations(blocks: usize) -> Vec<Relation> {
    (1..=blocks)
        .flat_map(|j| (1..j).map(move |i| Relation::ge(D::minus(i, j), D::minus(i + 1, j))))
        .collect()
}

fn column(last: usize) -> impl Iterator<Item = Relation> {
    (1..=last).flat_map(|j| (1..j).map(move |i| Relation::ge(D::plus(i, j), D::plus(i + 1, j))))
}

fn row(last: usize) -> impl Iterator<Item = Relation> {
    (1..=last).flat_map(|j| (1..=j).map(move |i| Relation::ge(D::plus(i, j), D::plus(i, j + 1))))
}

fn plus_theorem_relations(ty: LieType) -> Vec<Relation> {
    let n = ty.rank();
    match ty.family() {
        Family::A => Vec::new(),
        Family::D => column(n - 1).chain(row(n - 2)).collect(),
        Family::B => column(n).chain(row(n - 1)).collect(),
        Family::C => {
            let mut out = Vec::new();
            for j in 1..=n {
                for i in 1..j {
                    if i + 1 < j {
                        out.push(Relation::ge(D::plus(i, j), D::plus(i + 1, j)));
                    } else {
                        out.push(Relation::weighted(1, D::plus(i, j), 2, D::plus(j, j)));
                    }
                }
            }
            for j in 1..n {
                for i in 1..=j {
                    if i < j {
                        out.push(Relation::ge(D::plus(i, j), D::plus(i, j + 1)));
                    } else {
                        out.push(Relation::weighted(2, D::plus(i, i), 1, D::plus(i, i + 1)));
                    }
                }
            }
            out
        }
    }
}

fn plus_lemma_relations(ty: LieType) -> Vec<Relation> {
    let n = ty.rank();
    match ty.family() {
        Family::A => Vec::new(),
        Family::D => column(n - 1)
            .chain((1..=n - 2).map(|i| Relation::ge(D::plus(i, n - 2), D::plus(i, n - 1))))
            .collect(),
        Family::B => column(n)
            .chain((1..n).map(|i| Relation::ge(D::plus(i, i), D::plus(i, i + 1))))
            .collect(),
        Family::C => {
            let mut out = Vec::new();
            for j in 1..=n {
                for i in 1..j {
                    if i + 1 < j {
                        out.push(Relation::ge(D::plus(i, j), D::plus(i + 1, j)));
                    }
                }
            }
            for i in 1..n {
                out.push(Relation::weighted(
                    1,
                    D::plus(i, i + 1),
                    2,
                    D::plus(i + 1, i + 1),
                ));
                out.push(Relation::weighted(2, D::plus(i, i), 1, D::plus(i, i + 1)));
            }
            out
        }
    }
}

/// Cover relations of the poset whose order polyhedron is the cone.
pub fn cone_poset(ty: LieType, level: PosetLevel) -> Result<Vec<Relation>> {
    if ty.family() == Family::A {
        return Err(Error::UnsupportedFamily(Family::A));
    }
    let mut rels = minus_relations(ty.rank() - 1);
    rels.extend(match level {
        PosetLevel::Theorem => plus_theorem_relations(ty),
        PosetLevel::Lemma => plus_lemma_relations(ty),
    });
    Ok(rels)
}

/// The Lemma-level system of type B with the bounds the way they are printed,
/// `1 < i ≤ j`, which drops the `i = 1` column relations.
pub fn lemma_b_literal_relations(ty: LieType) -> Result<Vec<Relation>> {
    if ty.family() != Family::B {
        return Err(Error::UnsupportedFamily(ty.family()));
    }
    let n = ty.rank();
    let keep = |r: &Relation| r.upper.i > 1 && r.upper.i < r.upper.j;
    let mut rels: Vec<_> = minus_relations(n - 1).into_iter().filter(keep).collect();
    rels.extend(column(n).filter(keep));
    rels.extend((1..n).map(|i| Relation::ge(D::plus(i, i), D::plus(i, i + 1))));
    Ok(rels)
}

fn relation_form(map: &IndexMap, r: &Relation, offset: usize, dim: usize) -> LinearForm {
    let mut coeffs = vec![0; dim];
    coeffs[map.pos(r.upper) - offset] += r.upper_coeff;
    coeffs[map.pos(r.lower) - offset] -= r.lower_coeff;
    LinearForm::homogeneous(coeffs)
}

pub(crate) fn double_labels<'a>(it: impl IntoIterator<Item = &'a DoubleIndex>) -> Vec<CoordLabel> {
    it.into_iter().map(|&d| CoordLabel::Double(d)).collect()
}

/// Cone of a relation system over the full coordinate set of `ty`.
pub fn cone_from_relations(ty: LieType, rels: &[Relation]) -> Result<ConeH> {
    let map = IndexMap::new(ty);
    let forms = rels
        .iter()
        .map(|r| relation_form(&map, r, 0, map.len()))
        .collect();
    ConeH::new(ty, double_labels(map.labels()), forms)
}

/// The explicit string cone of the canonical word.
pub fn string_cone_explicit(ty: LieType) -> Result<ConeH> {
    cone_from_relations(ty, &cone_poset(ty, PosetLevel::Theorem)?)
}

/// The string cone of `i^{A_r}`: `t_{i,j} ≥ t_{i+1,j}` and nonnegativity.
pub fn a_string_cone(rank: usize) -> Result<ConeH> {
    let ty = LieType::new(Family::A, rank)?;
    cone_from_relations(ty, &minus_relations(rank))
}

/// The cone of the tilde word over the plus-block coordinates only.
pub fn tilde_string_cone(ty: LieType) -> Result<ConeH> {
    if ty.family() == Family::A {
        return Err(Error::UnsupportedFamily(Family::A));
    }
    let map = IndexMap::new(ty);
    let offset = map.minus_len();
    let forms = plus_theorem_relations(ty)
        .iter()
        .map(|r| relation_form(&map, r, offset, map.plus_len()))
        .collect();
    ConeH::new(ty, double_labels(&map.labels()[offset..]), forms)
}

/// Splits a point of the full cone into its `A_{n-1}` and tilde parts.
pub fn product_split(ty: LieType, point: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    if ty.family() == Family::A {
        return Err(Error::UnsupportedFamily(Family::A));
    }
    let n = ty.num_positive_roots();
    if point.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: point.len(),
        });
    }
    let cut = ty.rank() * (ty.rank() - 1) / 2;
    Ok((point[..cut].to_vec(), point[cut..].to_vec()))
}

/// DOT rendering of a poset. Every coordinate of the selected block is a
/// node; coefficients other than 1 appear as edge end labels.
pub fn poset_dot(ty: LieType, rels: &[Relation], block: Block) -> String {
    let map = IndexMap::new(ty);
    let wanted = |d: &DoubleIndex| match block {
        Block::All => true,
        Block::Minus => d.sign == Sign::Minus,
        Block::Plus => d.sign == Sign::Plus,
    };
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{ty}\" {{");
    let _ = writeln!(out, "  rankdir=BT;");
    for d in map.labels().iter().filter(|d| wanted(d)) {
        let _ = writeln!(out, "  \"{d}\";");
    }
    for r in rels.iter().filter(|r| wanted(&r.upper) && wanted(&r.lower)) {
        let mut attrs = Vec::new();
        if r.lower_coeff != 1 {
            attrs.push(format!("taillabel=\"{}\"", r.lower_coeff));
        }
        if r.upper_coeff != 1 {
            attrs.push(format!("headlabel=\"{}\"", r.upper_coeff));
        }
        let attrs = if attrs.is_empty() {
            String::new()
        } else {
            format!(" [{}]", attrs.join(", "))
        };
        let _ = writeln!(out, "  \"{}\" -> \"{}\"{attrs};", r.lower, r.upper);
    }
    out.push_str("}\n");
    out
}

/// Edges `(lower, upper)` of a poset restricted to one block.
pub fn poset_edges(rels: &[Relation], block: Block) -> BTreeSet<(DoubleIndex, DoubleIndex)> {
    let wanted = |d: &DoubleIndex| match block {
        Block::All => true,
        Block::Minus => d.sign == Sign::Minus,
        Block::Plus => d.sign == Sign::Plus,
    };
    rels.iter()
        .filter(|r| wanted(&r.upper) && wanted(&r.lower))
        .map(|r| (r.lower, r.upper))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    fn rel_strings(rels: &[Relation]) -> Vec<String> {
        rels.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn d3_theorem_system() {
        let rels = cone_poset(ty(Family::D, 3), PosetLevel::Theorem).unwrap();
        assert_eq!(
            rel_strings(&rels),
            [
                "t-_{1,2} >= t-_{2,2}",
                "t+_{1,2} >= t+_{2,2}",
                "t+_{1,1} >= t+_{1,2}"
            ]
        );
        let cone = string_cone_explicit(ty(Family::D, 3)).unwrap();
        assert_eq!(cone.forms.len(), 3 + 6);
    }

    #[test]
    fn b2_and_c2_systems() {
        let rels = cone_poset(ty(Family::B, 2), PosetLevel::Theorem).unwrap();
        assert_eq!(
            rel_strings(&rels),
            ["t+_{1,2} >= t+_{2,2}", "t+_{1,1} >= t+_{1,2}"]
        );
        let rels = cone_poset(ty(Family::C, 2), PosetLevel::Theorem).unwrap();
        assert_eq!(
            rel_strings(&rels),
            ["t+_{1,2} >= 2t+_{2,2}", "2t+_{1,1} >= t+_{1,2}"]
        );
        let cone = string_cone_explicit(ty(Family::C, 2)).unwrap();
        assert_eq!(cone.non_trivial_forms().count(), 2);
        assert_eq!(cone.forms.len(), 2 + 4);
    }

    #[test]
    fn type_a_rejected() {
        assert!(matches!(
            string_cone_explicit(ty(Family::A, 2)),
            Err(Error::UnsupportedFamily(Family::A))
        ));
        assert!(a_string_cone(2).is_ok());
    }

    #[test]
    fn b2_lemma_equals_theorem() {
        let b2 = ty(Family::B, 2);
        let lemma: BTreeSet<_> = cone_poset(b2, PosetLevel::Lemma)
            .unwrap()
            .into_iter()
            .collect();
        let theorem: BTreeSet<_> = cone_poset(b2, PosetLevel::Theorem)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(lemma, theorem);
        let b3 = ty(Family::B, 3);
        let lemma: BTreeSet<_> = cone_poset(b3, PosetLevel::Lemma)
            .unwrap()
            .into_iter()
            .collect();
        let theorem: BTreeSet<_> = cone_poset(b3, PosetLevel::Theorem)
            .unwrap()
            .into_iter()
            .collect();
        let extra: Vec<_> = theorem.difference(&lemma).map(|r| r.to_string()).collect();
        assert_eq!(extra, ["t+_{1,2} >= t+_{1,3}"]);
        assert!(lemma.is_subset(&theorem));
    }

    #[test]
    fn product_split_examples() {
        let d3 = ty(Family::D, 3);
        let (m, p) = product_split(d3, &[0; 6]).unwrap();
        assert_eq!((m, p), (vec![0; 3], vec![0; 3]));
        let (m, p) = product_split(d3, &[1, 0, 0, 0, 0, 0]).unwrap();
        assert!(a_string_cone(2).unwrap().contains(&m));
        assert_eq!(p, vec![0; 3]);
        let bad = [0, 0, 0, 0, 1, 0];
        let (_, p) = product_split(d3, &bad).unwrap();
        assert!(!tilde_string_cone(d3).unwrap().contains(&p));
        assert!(!string_cone_explicit(d3).unwrap().contains(&bad));
        assert!(product_split(d3, &[0; 5]).is_err());
    }

    #[test]
    fn d3_dot() {
        let d3 = ty(Family::D, 3);
        let dot = poset_dot(
            d3,
            &cone_poset(d3, PosetLevel::Theorem).unwrap(),
            Block::All,
        );
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_end().ends_with("\";") && !l.contains("->"))
                .count(),
            6
        );
        assert!(dot.contains("\"t+_{2,2}\" -> \"t+_{1,2}\";"));
    }

    #[test]
    fn c2_dot_labels() {
        let c2 = ty(Family::C, 2);
        let dot = poset_dot(
            c2,
            &cone_poset(c2, PosetLevel::Theorem).unwrap(),
            Block::Plus,
        );
        assert!(dot.contains("\"t+_{2,2}\" -> \"t+_{1,2}\" [taillabel=\"2\"];"));
        assert!(dot.contains("\"t+_{1,2}\" -> \"t+_{1,1}\" [headlabel=\"2\"];"));
    }
}
