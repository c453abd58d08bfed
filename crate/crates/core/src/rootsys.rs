//! Root data for the classical types in the ε-basis.
//!
//! Type `A` of rank `r` lives in an ambient space with `r + 1` ε-coordinates.
//! All other types use `rank` coordinates. Coordinates are stored doubled so
//! that spin weights stay integral.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLieType", into = "RawLieType")]
pub struct LieType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct RawLieType {
    family: Family,
    rank: usize,
}

impl TryFrom<RawLieType> for LieType {
    type Error = Error;

    fn try_from(raw: RawLieType) -> Result<Self> {
        LieType::new(raw.family, raw.rank)
    }
}

impl From<LieType> for RawLieType {
    fn from(t: LieType) -> Self {
        RawLieType {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let floor = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        };
        if rank < floor {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of ε-coordinates of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }

    /// The type `A_{n-1}` of the Levi factor used for branching.
    pub fn levi(&self) -> Result<LieType> {
        match self.family {
            Family::A => Err(Error::UnsupportedFamily(Family::A)),
            _ => LieType::new(Family::A, self.rank - 1),
        }
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A vector in ε-coordinates, stored as twice its true coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EpsVector {
    doubled: Vec<i64>,
}

impl EpsVector {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        EpsVector { doubled }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        EpsVector {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        EpsVector {
            doubled: vec![0; n],
        }
    }

    /// `ε_k`, 1-based.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.doubled[k - 1] = 2;
        v
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    /// The `k`-th coordinate (1-based).
    pub fn coord(&self, k: usize) -> Rational {
        Rational::new(self.doubled[k - 1], 2)
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&c| c == 0)
    }

    /// True for vectors whose first nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.doubled
            .iter()
            .find(|&&c| c != 0)
            .is_some_and(|&c| c > 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        EpsVector {
            doubled: self.doubled.iter().map(|c| c * k).collect(),
        }
    }

    /// Four times the standard inner product; always an integer.
    pub fn ip4(&self, other: &Self) -> i64 {
        self.doubled
            .iter()
            .zip(&other.doubled)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add_scaled(&mut self, other: &Self, k: i64) {
        for (a, b) in self.doubled.iter_mut().zip(&other.doubled) {
            *a += k * b;
        }
    }
}

impl Add for &EpsVector {
    type Output = EpsVector;

    fn add(self, rhs: Self) -> EpsVector {
        let doubled = self
            .doubled
            .iter()
            .zip(&rhs.doubled)
            .map(|(a, b)| a + b)
            .collect();
        EpsVector { doubled }
    }
}

impl Sub for &EpsVector {
    type Output = EpsVector;

    fn sub(self, rhs: Self) -> EpsVector {
        let doubled = self
            .doubled
            .iter()
            .zip(&rhs.doubled)
            .map(|(a, b)| a - b)
            .collect();
        EpsVector { doubled }
    }
}

impl Neg for &EpsVector {
    type Output = EpsVector;

    fn neg(self) -> EpsVector {
        self.scaled(-1)
    }
}

impl fmt::Display for EpsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.doubled.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        f.write_str(")")
    }
}

/// Standard inner product `(w, c)`, exact.
pub fn pairing(w: &EpsVector, coroot: &EpsVector) -> Result<Rational> {
    if w.len() != coroot.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            found: coroot.len(),
        });
    }
    Ok(Rational::new(w.ip4(coroot), 4))
}

/// Pairing that must be an integer, such as a weight against a coroot.
pub fn int_pairing(w: &EpsVector, coroot: &EpsVector) -> Result<i64> {
    let p = pairing(w, coroot)?;
    if !p.is_integer() {
        return Err(Error::NonIntegral);
    }
    Ok(p.to_integer())
}

/// `β^∨ = 2β / (β, β)`.
pub fn coroot(beta: &EpsVector) -> Result<EpsVector> {
    let norm4 = beta.ip4(beta);
    if norm4 == 0 {
        return Err(Error::Internal("coroot of the zero vector".into()));
    }
    let mut doubled = Vec::with_capacity(beta.len());
    for &b in beta.doubled() {
        let num = 8 * b;
        if num % norm4 != 0 {
            return Err(Error::NonIntegral);
        }
        doubled.push(num / norm4);
    }
    Ok(EpsVector::from_doubled(doubled))
}

/// Entries `a[i][j] = ⟨α_j, α_i^∨⟩`, 1-based accessors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.rank + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(|r| r.to_vec()).collect()
    }
}

pub fn simple_roots(t: LieType) -> Vec<EpsVector> {
    let n = t.ambient_dim();
    let diff = |i: usize| &EpsVector::unit(n, i) - &EpsVector::unit(n, i + 1);
    match t.family() {
        Family::A => (1..=t.rank()).map(diff).collect(),
        family => {
            let mut roots: Vec<_> = (1..n).map(diff).collect();
            let last = match family {
                Family::B => EpsVector::unit(n, n),
                Family::C => EpsVector::unit(n, n).scaled(2),
                _ => &EpsVector::unit(n, n - 1) + &EpsVector::unit(n, n),
            };
            roots.push(last);
            roots
        }
    }
}

pub fn simple_coroots(t: LieType) -> Vec<EpsVector> {
    simple_roots(t)
        .iter()
        .map(|a| coroot(a).expect("simple roots have integral coroots"))
        .collect()
}

pub fn cartan_matrix(t: LieType) -> CartanMatrix {
    let roots = simple_roots(t);
    let coroots = simple_coroots(t);
    let r = t.rank();
    let mut entries = Vec::with_capacity(r * r);
    for ci in &coroots {
        for aj in &roots {
            entries.push(int_pairing(aj, ci).expect("Cartan entries are integers"));
        }
    }
    CartanMatrix { rank: r, entries }
}

fn leading_ones(n: usize, i: usize) -> EpsVector {
    let mut v = EpsVector::zero(n);
    for k in 0..i {
        v.doubled[k] = 2;
    }
    v
}

fn half_spin(n: usize, last_sign: i64) -> EpsVector {
    let mut v = EpsVector::from_doubled(vec![1; n]);
    v.doubled[n - 1] = last_sign;
    v
}

pub fn fundamental_weights(t: LieType) -> Vec<EpsVector> {
    let n = t.ambient_dim();
    let r = t.rank();
    (1..=r)
        .map(|i| match t.family() {
            Family::A | Family::C => leading_ones(n, i),
            Family::B if i == r => half_spin(n, 1),
            Family::D if i == r - 1 => half_spin(n, -1),
            Family::D if i == r => half_spin(n, 1),
            _ => leading_ones(n, i),
        })
        .collect()
}

/// Fundamental coweights: `⟨β, ω_i^∨⟩` is the `α_i`-coefficient of a root `β`.
///
/// For type A they are correct on the trace-zero subspace only, which contains
/// the root lattice.
pub fn fundamental_coweights(t: LieType) -> Vec<EpsVector> {
    let n = t.ambient_dim();
    let r = t.rank();
    (1..=r)
        .map(|i| match t.family() {
            Family::A | Family::B => leading_ones(n, i),
            Family::C if i == r => half_spin(n, 1),
            Family::D if i == r - 1 => half_spin(n, -1),
            Family::D if i == r => half_spin(n, 1),
            _ => leading_ones(n, i),
        })
        .collect()
}

/// All positive roots in a fixed deterministic order.
pub fn positive_roots(t: LieType) -> Vec<EpsVector> {
    let n = t.ambient_dim();
    let e = |k: usize| EpsVector::unit(n, k);
    let mut roots = Vec::with_capacity(t.num_positive_roots());
    for i in 1..=n {
        for j in i + 1..=n {
            roots.push(&e(i) - &e(j));
            if t.family() != Family::A {
                roots.push(&e(i) + &e(j));
            }
        }
        match t.family() {
            Family::B => roots.push(e(i)),
            Family::C => roots.push(e(i).scaled(2)),
            _ => {}
        }
    }
    roots
}

pub fn rho(t: LieType) -> EpsVector {
    let n = t.ambient_dim();
    fundamental_weights(t)
        .iter()
        .fold(EpsVector::zero(n), |acc, w| &acc + w)
}

/// Precomputed root data of one type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: LieType,
    simple_roots: Vec<EpsVector>,
    simple_coroots: Vec<EpsVector>,
    fundamental_weights: Vec<EpsVector>,
    fundamental_coweights: Vec<EpsVector>,
    cartan: CartanMatrix,
    positive_roots: Vec<EpsVector>,
}

impl RootSystem {
    pub fn new(ty: LieType) -> Self {
        RootSystem {
            ty,
            simple_roots: simple_roots(ty),
            simple_coroots: simple_coroots(ty),
            fundamental_weights: fundamental_weights(ty),
            fundamental_coweights: fundamental_coweights(ty),
            cartan: cartan_matrix(ty),
            positive_roots: positive_roots(ty),
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ty.ambient_dim()
    }

    /// `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &EpsVector {
        &self.simple_roots[i - 1]
    }

    pub fn simple_coroot(&self, i: usize) -> &EpsVector {
        &self.simple_coroots[i - 1]
    }

    pub fn simple_roots(&self) -> &[EpsVector] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[EpsVector] {
        &self.simple_coroots
    }

    pub fn fundamental_weights(&self) -> &[EpsVector] {
        &self.fundamental_weights
    }

    pub fn fundamental_coweights(&self) -> &[EpsVector] {
        &self.fundamental_coweights
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[EpsVector] {
        &self.positive_roots
    }

    pub fn rho(&self) -> EpsVector {
        rho(self.ty)
    }

    /// Coordinates `⟨v, α_i^∨⟩` for `i = 1..rank`.
    pub fn fund_coords(&self, v: &EpsVector) -> Result<Vec<i64>> {
        self.simple_coroots
            .iter()
            .map(|c| int_pairing(v, c))
            .collect()
    }

    /// Coefficients of a root-lattice vector in the simple roots.
    pub fn root_coords(&self, v: &EpsVector) -> Result<Vec<i64>> {
        self.fundamental_coweights
            .iter()
            .map(|c| int_pairing(v, c))
            .collect()
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self, v: &EpsVector) -> Result<i64> {
        Ok(self.root_coords(v)?.iter().sum())
    }

    pub fn weight_from_fund(&self, fund: &[i64]) -> EpsVector {
        let mut v = EpsVector::zero(self.ambient_dim());
        for (w, &c) in self.fundamental_weights.iter().zip(fund) {
            v.add_scaled(w, c);
        }
        v
    }
}

/// An integral weight in fundamental and ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    ty: LieType,
    fund: Vec<i64>,
    eps: EpsVector,
}

impl Weight {
    pub fn new(ty: LieType, fund: &[i64]) -> Result<Self> {
        if fund.len() != ty.rank() {
            return Err(Error::LengthMismatch {
                expected: ty.rank(),
                found: fund.len(),
            });
        }
        let mut eps = EpsVector::zero(ty.ambient_dim());
        for (w, &c) in fundamental_weights(ty).iter().zip(fund) {
            eps.add_scaled(w, c);
        }
        Ok(Weight {
            ty,
            fund: fund.to_vec(),
            eps,
        })
    }

    pub fn zero(ty: LieType) -> Self {
        Self::new(ty, &vec![0; ty.rank()]).expect("length matches")
    }

    /// `ω_i`, 1-based.
    pub fn fundamental(ty: LieType, i: usize) -> Result<Self> {
        ty.check_index(i)?;
        let mut fund = vec![0; ty.rank()];
        fund[i - 1] = 1;
        Self::new(ty, &fund)
    }

    /// Recovers fundamental coordinates by pairing with the simple coroots.
    pub fn from_eps(ty: LieType, eps: &EpsVector) -> Result<Self> {
        if eps.len() != ty.ambient_dim() {
            return Err(Error::LengthMismatch {
                expected: ty.ambient_dim(),
                found: eps.len(),
            });
        }
        let fund = simple_coroots(ty)
            .iter()
            .map(|c| int_pairing(eps, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ty, &fund)
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn fund(&self) -> &[i64] {
        &self.fund
    }

    pub fn eps(&self) -> &EpsVector {
        &self.eps
    }

    pub fn is_dominant(&self) -> bool {
        self.fund.iter().all(|&c| c >= 0)
    }

    pub(crate) fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NonDominant)
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .fund
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("ω_{}", i + 1)
                } else {
                    format!("{c}ω_{}", i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}
