//! Standard domino tableaux of rank `r`.
//!
//! A tableau of rank `r` is a Young diagram whose staircase core
//! `(r, r-1, ..., 1)` is labeled 0 and whose remaining squares are tiled by
//! dominoes labeled `1..=n`, weakly increasing along rows and columns.

mod construct;
mod cs;
mod cycles;
mod enumerate;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{rows_from_squares, Partition, PartitionError, Square};

pub use construct::{complete_to_cs, complete_to_cs_forcing, construct_with_cs};
pub use cs::{all_cycle_structure_sets, CycleStructureSet};
pub use cycles::{Cycle, CycleKind};
pub use enumerate::{enumerate_sdt, SdtCounter, SdtIter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("domino {label}: squares {a} and {b} are not adjacent")]
    NotADomino { label: u32, a: Square, b: Square },
    #[error("square {square} is covered twice")]
    Overlap { square: Square },
    #[error("domino {label} covers the core square {square}")]
    CoversCore { label: u32, square: Square },
    #[error("the core and the dominoes do not form a Young diagram")]
    NotADiagram,
    #[error("labels decrease at square {square}")]
    NotMonotone { square: Square },
    #[error("shape {shape} has rank {found}, expected {expected}")]
    RankMismatch { shape: String, expected: u32, found: u32 },
    #[error("tableau shapes differ: {left} and {right}")]
    ShapeMismatch { left: String, right: String },
    #[error("label {0} is not a label of this tableau")]
    UnknownLabel(u32),
    #[error("the given cycle is not a cycle of this tableau")]
    UnknownCycle,
    #[error("moving through these cycles does not give a tableau: {0}")]
    BadMove(String),
    #[error("invalid cycle-structure set: {0}")]
    InvalidCycleStructure(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A domino: its label and its two squares, the smaller square first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    pub label: u32,
    pub squares: [Square; 2],
}

impl Domino {
    pub fn is_horizontal(&self) -> bool {
        self.squares[0].row == self.squares[1].row
    }
}

/// Whether a square keeps its label under moving-through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareClass {
    Fixed,
    Variable,
}

/// A standard domino tableau of rank `r`. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoTableau {
    rank: u32,
    /// `squares[k - 1]` is the support of the domino labeled `k`, sorted.
    squares: Vec<[Square; 2]>,
    shape: Partition,
    /// Row-major labels of the shape; core squares hold 0.
    grid: Vec<Vec<u32>>,
}

pub(crate) const INFINITY: u32 = u32::MAX;

impl DominoTableau {
    /// Builds and validates a tableau whose `k`-th entry is the domino labeled `k`.
    pub fn new(rank: u32, squares: Vec<[Square; 2]>) -> Result<Self, TableauError> {
        let squares: Vec<[Square; 2]> = squares
            .into_iter()
            .map(|[a, b]| if a <= b { [a, b] } else { [b, a] })
            .collect();
        let mut cells: Vec<Square> = Vec::new();
        for i in 1..=rank {
            for j in 1..=rank + 1 - i {
                cells.push(Square::new(i, j));
            }
        }
        for (idx, &[a, b]) in squares.iter().enumerate() {
            let label = idx as u32 + 1;
            if !a.is_adjacent(b) {
                return Err(TableauError::NotADomino { label, a, b });
            }
            for s in [a, b] {
                if s.diagonal() < rank + 2 {
                    return Err(TableauError::CoversCore { label, square: s });
                }
            }
            cells.push(a);
            cells.push(b);
        }
        let mut sorted = cells.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(TableauError::Overlap { square: w[0] });
        }
        let rows = rows_from_squares(&sorted).ok_or(TableauError::NotADiagram)?;
        let mut grid: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len as usize]).collect();
        for (idx, sq) in squares.iter().enumerate() {
            for s in sq {
                grid[s.row as usize - 1][s.col as usize - 1] = idx as u32 + 1;
            }
        }
        for (i, row) in grid.iter().enumerate() {
            for (j, &label) in row.iter().enumerate() {
                let right = row.get(j + 1).copied();
                let below = grid.get(i + 1).and_then(|r| r.get(j)).copied();
                if right.is_some_and(|x| x < label) || below.is_some_and(|x| x < label) {
                    return Err(TableauError::NotMonotone {
                        square: Square::new(i as u32 + 1, j as u32 + 1),
                    });
                }
            }
        }
        let shape = Partition::new(rows)?;
        if shape.rank() != rank {
            return Err(TableauError::RankMismatch {
                shape: alloc::format!("{shape}"),
                expected: rank,
                found: shape.rank(),
            });
        }
        Ok(DominoTableau { rank, squares, shape, grid })
    }

    /// The tableau with no dominoes: the bare core.
    pub fn empty(rank: u32) -> Self {
        DominoTableau::new(rank, Vec::new()).unwrap()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of dominoes.
    pub fn len(&self) -> u32 {
        self.squares.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// The support of the domino labeled `k`.
    pub fn domino(&self, k: u32) -> Option<[Square; 2]> {
        self.squares.get((k as usize).wrapping_sub(1)).copied()
    }

    pub fn dominoes(&self) -> impl Iterator<Item = Domino> + '_ {
        self.squares
            .iter()
            .enumerate()
            .map(|(i, &squares)| Domino { label: i as u32 + 1, squares })
    }

    /// Domino supports indexed by `label - 1`.
    pub fn supports(&self) -> &[[Square; 2]] {
        &self.squares
    }

    /// The label of `s`, 0 on the core, `None` outside the shape.
    pub fn label_at(&self, s: Square) -> Option<u32> {
        if s.row == 0 || s.col == 0 {
            return None;
        }
        self.grid
            .get(s.row as usize - 1)
            .and_then(|r| r.get(s.col as usize - 1))
            .copied()
    }

    /// Label used in the `D′` comparisons: 0 above/left of the diagram and on
    /// the core, `INFINITY` outside the shape to the lower right.
    pub(crate) fn boundary_label(&self, row: i64, col: i64) -> u32 {
        if row <= 0 || col <= 0 {
            return 0;
        }
        self.label_at(Square::new(row as u32, col as u32)).unwrap_or(INFINITY)
    }

    pub fn classify_square(&self, s: Square) -> SquareClass {
        classify_square(self.rank, s)
    }

    /// `T` with its labels above `k` dropped.
    pub fn restrict(&self, k: u32) -> DominoTableau {
        DominoTableau::new(self.rank, self.squares[..k as usize].to_vec())
            .expect("a prefix of a tableau is a tableau")
    }

    /// The unique filling of `shape` if it is a bare core, used as recursion base.
    pub(crate) fn from_parts_unchecked(rank: u32, squares: Vec<[Square; 2]>) -> Self {
        DominoTableau::new(rank, squares).expect("internal construction produced an invalid tableau")
    }
}

/// Square `s` is variable in rank `r` iff `row + col ≡ r (mod 2)`.
pub fn classify_square(rank: u32, s: Square) -> SquareClass {
    if s.is_variable(rank) {
        SquareClass::Variable
    } else {
        SquareClass::Fixed
    }
}

/// Checks all tableau invariants, naming the first violated one.
pub fn validate(rank: u32, dominoes: &[[Square; 2]]) -> Result<(), TableauError> {
    DominoTableau::new(rank, dominoes.to_vec()).map(|_| ())
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominoTableau(rank {}, ", self.rank)?;
        fmt::Display::fmt(self, f)?;
        f.write_str(")")
    }
}

/// Rows of labels separated by `/`, e.g. `0 1 1/2/2` for rank 1.
impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.grid.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, label) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{label}")?;
            }
        }
        Ok(())
    }
}
