use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

/// The coordinate `t^±_{i,j}`: entry `i` of block `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleIndex {
    pub sign: Sign,
    pub i: usize,
    pub j: usize,
}

impl DoubleIndex {
    pub fn minus(i: usize, j: usize) -> Self {
        DoubleIndex {
            sign: Sign::Minus,
            i,
            j,
        }
    }

    pub fn plus(i: usize, j: usize) -> Self {
        DoubleIndex {
            sign: Sign::Plus,
            i,
            j,
        }
    }
}

impl fmt::Display for DoubleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Minus => '-',
            Sign::Plus => '+',
        };
        write!(f, "t{s}_{{{},{}}}", self.i, self.j)
    }
}

/// Block-major addressing of the coordinates of the canonical word:
/// `t^-_{1,1}, t^-_{1,2}, t^-_{2,2}, …` followed by the plus block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    ty: LieType,
    labels: Vec<DoubleIndex>,
    positions: HashMap<DoubleIndex, usize>,
    minus_len: usize,
}

fn triangle(sign: Sign, blocks: usize) -> impl Iterator<Item = DoubleIndex> {
    (1..=blocks).flat_map(move |j| (1..=j).map(move |i| DoubleIndex { sign, i, j }))
}

impl IndexMap {
    pub fn new(ty: LieType) -> Self {
        let n = ty.rank();
        let (minus_blocks, plus_blocks) = match ty.family() {
            Family::A => (n, 0),
            Family::D => (n - 1, n - 1),
            Family::B | Family::C => (n - 1, n),
        };
        let labels: Vec<_> = triangle(Sign::Minus, minus_blocks)
            .chain(triangle(Sign::Plus, plus_blocks))
            .collect();
        let positions = labels.iter().enumerate().map(|(p, &l)| (l, p)).collect();
        IndexMap {
            ty,
            labels,
            positions,
            minus_len: minus_blocks * (minus_blocks + 1) / 2,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    /// Total number of coordinates `N`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn minus_len(&self) -> usize {
        self.minus_len
    }

    pub fn plus_len(&self) -> usize {
        self.len() - self.minus_len
    }

    /// Number of blocks in the plus part.
    pub fn plus_blocks(&self) -> usize {
        match self.ty.family() {
            Family::A => 0,
            Family::D => self.ty.rank() - 1,
            _ => self.ty.rank(),
        }
    }

    pub fn minus_blocks(&self) -> usize {
        match self.ty.family() {
            Family::A => self.ty.rank(),
            _ => self.ty.rank() - 1,
        }
    }

    /// 0-based position of a double index.
    pub fn position(&self, idx: DoubleIndex) -> Option<usize> {
        self.positions.get(&idx).copied()
    }

    pub(crate) fn pos(&self, idx: DoubleIndex) -> usize {
        self.position(idx)
            .unwrap_or_else(|| panic!("{idx} not in index map of {}", self.ty))
    }

    /// Label of a 0-based position.
    pub fn label(&self, pos: usize) -> Result<DoubleIndex> {
        self.labels.get(pos).copied().ok_or(Error::IndexOutOfRange {
            index: pos + 1,
            rank: self.len(),
        })
    }

    pub fn labels(&self) -> &[DoubleIndex] {
        &self.labels
    }
}
