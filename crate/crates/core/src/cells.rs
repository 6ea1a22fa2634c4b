//! Combinatorial left, right and two-sided cells of `W_n` in rank `r`.
//!
//! `x ≈_L y` iff `T_r(x) = MT(T_r(y), C)` for some set `C` of non-core open
//! cycles; `≈_R` is the same on `S_r`; `≈_LR` is generated by both.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::DisjointSets;
use crate::partition::{Partition, Square};
use crate::rs::{g_r, SignedPermutation, TableauPair};
use crate::tableau::DominoTableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two-sided" | "twosided" => Ok(Side::TwoSided),
            _ => Err(format!("unknown side {s:?} (expected left, right or two-sided)")),
        }
    }
}

/// A partition of `W_n` into cells. Blocks are sorted and ordered by their
/// smallest element, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    pub n: usize,
    /// The tableau rank, for combinatorial cells.
    pub rank: Option<u32>,
    pub side: Side,
    pub blocks: Vec<Vec<SignedPermutation>>,
}

impl CellPartition {
    pub fn new(n: usize, rank: Option<u32>, side: Side, mut blocks: Vec<Vec<SignedPermutation>>) -> Self {
        for b in &mut blocks {
            b.sort();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        CellPartition { n, rank, side, blocks }
    }

    /// Same blocks, ignoring rank and side labels.
    pub fn same_blocks(&self, other: &CellPartition) -> bool {
        self.n == other.n && self.blocks == other.blocks
    }

    /// The partition obtained by inverting every element.
    pub fn inverted(&self, side: Side) -> CellPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(SignedPermutation::inverse).collect())
            .collect();
        CellPartition::new(self.n, self.rank, side, blocks)
    }

    /// Whether each block of `self` is a union of blocks of `finer`.
    pub fn is_coarsening_of(&self, finer: &CellPartition) -> bool {
        let mut block_of = BTreeMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for w in b {
                block_of.insert(w, i);
            }
        }
        finer
            .blocks
            .iter()
            .all(|b| b.iter().all(|w| block_of.get(w) == block_of.get(&b[0])))
    }
}

/// Shape data of a two-sided cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedShapeData {
    pub hc: Vec<Square>,
    pub holes: Vec<Square>,
    pub corners: Vec<Square>,
    pub heart: Partition,
    pub kappa: u32,
    /// `π(𝔡)`, sorted.
    pub shapes: Vec<Partition>,
    /// `π(𝔠)` for each left cell `𝔠 ⊆ 𝔡`, sorted.
    pub left_cell_shapes: Vec<Vec<Partition>>,
    /// `I_𝔡`: the shapes common to every left cell of the block.
    pub intersection: Vec<Partition>,
}

/// The tableaux of all of `W_n` in one rank, with the cell relations built on them.
#[derive(Debug, Clone)]
pub struct CellAnalysis {
    n: usize,
    rank: u32,
    elements: Vec<SignedPermutation>,
    pairs: Vec<TableauPair>,
    index: BTreeMap<SignedPermutation, usize>,
}

/// The least tableau reachable from `t` by moving through non-core open cycles.
pub fn orbit_key(t: &DominoTableau) -> DominoTableau {
    mt_orbit(t).into_iter().min().unwrap()
}

/// `{ MT(T, C) : C ⊆ OC*(T) }`, indexed by the bitmask of `C` over `OC*(T)`.
pub fn mt_orbit(t: &DominoTableau) -> Vec<DominoTableau> {
    let star = t.noncore_open_cycles();
    (0u32..1 << star.len())
        .map(|mask| {
            let chosen: Vec<_> = star
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect();
            t.move_through(&chosen).expect("non-core open cycles can always be moved through")
        })
        .collect()
}

impl CellAnalysis {
    pub fn new(n: usize, rank: u32) -> Self {
        let elements = SignedPermutation::all(n);
        let pairs = elements.iter().map(|w| g_r(w, rank)).collect();
        CellAnalysis::from_pairs(n, rank, elements, pairs)
    }

    /// Builds from precomputed `G_r` images (`pairs[i] = g_r(elements[i], rank)`).
    pub fn from_pairs(n: usize, rank: u32, elements: Vec<SignedPermutation>, pairs: Vec<TableauPair>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        CellAnalysis { n, rank, elements, pairs, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn pair(&self, w: &SignedPermutation) -> Option<&TableauPair> {
        self.index.get(w).map(|&i| &self.pairs[i])
    }

    fn group_by<K: Ord>(&self, key: impl Fn(&TableauPair) -> K) -> Vec<Vec<usize>> {
        let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.pairs.iter().enumerate() {
            groups.entry(key(p)).or_default().push(i);
        }
        groups.into_values().collect()
    }

    fn to_partition(&self, side: Side, blocks: Vec<Vec<usize>>) -> CellPartition {
        let blocks = blocks
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.elements[i].clone()).collect())
            .collect();
        CellPartition::new(self.n, Some(self.rank), side, blocks)
    }

    fn left_groups(&self) -> Vec<Vec<usize>> {
        self.group_by(|p| orbit_key(&p.right))
    }

    fn right_groups(&self) -> Vec<Vec<usize>> {
        self.group_by(|p| orbit_key(&p.left))
    }

    fn two_sided_groups(&self) -> Vec<Vec<usize>> {
        let mut sets = DisjointSets::new(self.elements.len());
        for b in self.left_groups().into_iter().chain(self.right_groups()) {
            for &i in &b[1..] {
                sets.union(b[0], i);
            }
        }
        sets.blocks()
    }

    pub fn cells(&self, side: Side) -> CellPartition {
        let blocks = match side {
            Side::Left => self.left_groups(),
            Side::Right => self.right_groups(),
            Side::TwoSided => self.two_sided_groups(),
        };
        self.to_partition(side, blocks)
    }

    /// Classes of equal right tableau `T_r`, without moving through.
    pub fn equal_right_tableau(&self) -> CellPartition {
        let blocks = self.group_by(|p| p.right.clone());
        self.to_partition(Side::Left, blocks)
    }

    /// The partition generated by equal `T_r` and equal `T_{r+1}`.
    pub fn cells_via_double_rank(&self, higher: &CellAnalysis) -> CellPartition {
        assert_eq!(higher.rank, self.rank + 1);
        assert_eq!(higher.elements, self.elements);
        let mut sets = DisjointSets::new(self.elements.len());
        for groups in [self.group_by(|p| p.right.clone()), higher.group_by(|p| p.right.clone())] {
            for b in groups {
                for &i in &b[1..] {
                    sets.union(b[0], i);
                }
            }
        }
        self.to_partition(Side::Left, sets.blocks())
    }

    /// Shape data of the two-sided cell `block`, or a description of how it
    /// violates the common-heart/common-`HC` property.
    pub fn two_sided_shape_data(&self, block: &[SignedPermutation]) -> Result<TwoSidedShapeData, String> {
        let shape_of = |w: &SignedPermutation| -> Result<Partition, String> {
            self.pair(w)
                .map(|p| p.right.shape().clone())
                .ok_or_else(|| format!("{w} is not an element of W_{}", self.n))
        };
        let shapes: BTreeSet<Partition> = block.iter().map(shape_of).collect::<Result<_, _>>()?;
        let first = shapes.iter().next().ok_or_else(|| String::from("empty block"))?;
        for q in &shapes {
            if q.hc() != first.hc() || q.heart() != first.heart() {
                return Err(format!(
                    "shapes {} and {} in one two-sided cell differ in HC or heart",
                    first.exponent_notation(),
                    q.exponent_notation()
                ));
            }
        }
        let members: BTreeSet<&SignedPermutation> = block.iter().collect();
        let mut left_cell_shapes = Vec::new();
        for cell in self.cells(Side::Left).blocks {
            if !members.contains(&cell[0]) {
                continue;
            }
            let s: BTreeSet<Partition> = cell.iter().map(shape_of).collect::<Result<_, _>>()?;
            left_cell_shapes.push(s.into_iter().collect::<Vec<_>>());
        }
        left_cell_shapes.sort();
        left_cell_shapes.dedup();
        let intersection: Vec<Partition> = shapes
            .iter()
            .filter(|q| left_cell_shapes.iter().all(|s| s.contains(q)))
            .cloned()
            .collect();
        let data = first.corner_hole_data();
        Ok(TwoSidedShapeData {
            hc: data.hc.clone(),
            holes: data.holes.clone(),
            corners: data.corners.clone(),
            heart: first.heart(),
            kappa: data.kappa,
            shapes: shapes.into_iter().collect(),
            left_cell_shapes,
            intersection,
        })
    }
}

/// Combinatorial cells of `W_n` in rank `r`.
pub fn combinatorial_cells(n: usize, rank: u32, side: Side) -> CellPartition {
    CellAnalysis::new(n, rank).cells(side)
}

/// The left cells generated by equal right tableaux in ranks `r` and `r + 1`.
pub fn cells_via_double_rank(n: usize, rank: u32) -> CellPartition {
    CellAnalysis::new(n, rank).cells_via_double_rank(&CellAnalysis::new(n, rank + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn b2_rank_zero_left_cells() {
        let cells = combinatorial_cells(2, 0, Side::Left);
        let mut sizes: Vec<usize> = cells.blocks.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 3, 3]);
        assert!(cells.blocks.iter().any(|b| b == &vec![w("1,2")]));
    }

    #[test]
    fn w1_has_two_singletons() {
        for rank in 0..=2 {
            assert_eq!(combinatorial_cells(1, rank, Side::Left).blocks.len(), 2);
            assert_eq!(cells_via_double_rank(1, rank).blocks.len(), 2);
        }
    }

    #[test]
    fn left_and_right_exchanged_by_inversion() {
        for rank in 0..=2 {
            let a = CellAnalysis::new(3, rank);
            assert_eq!(a.cells(Side::Left).inverted(Side::Right), a.cells(Side::Right));
            let two = a.cells(Side::TwoSided);
            assert!(two.is_coarsening_of(&a.cells(Side::Left)));
            assert!(two.is_coarsening_of(&a.cells(Side::Right)));
        }
    }

    #[test]
    fn side_parsing() {
        assert_eq!("two-sided".parse::<Side>(), Ok(Side::TwoSided));
        assert_eq!(Side::Left.to_string(), "left");
        assert!("up".parse::<Side>().is_err());
    }
}
