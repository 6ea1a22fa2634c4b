//! Combinatorics of cells in the hyperoctahedral group `W_n` (type `B_n`) under
//! unequal parameters.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! * [`partition`]: partitions, rank (2-core) decomposition, corners and holes.
//! * [`tableau`]: standard domino tableaux of rank `r`, cycles, moving-through,
//!   cycle-structure sets.
//! * [`rs`]: signed permutations and the rank-`r` domino Robinson–Schensted maps.
//! * [`symbol`]: symbols of defect `s` and the partition/bipartition bijections.
//! * [`cells`]: combinatorial left, right and two-sided cells.
//! * [`constructible`]: admissible involutions and constructible modules.
//! * [`hecke`]: exact Iwahori–Hecke algebra of type `B_n`, Kazhdan–Lusztig basis
//!   and Kazhdan–Lusztig cells.
//!
//! IO, serialization and the command line live in the `domino-cells` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cells;
pub mod constructible;
pub mod graph;
pub mod hecke;
pub mod partition;
pub mod rs;
pub mod symbol;
pub mod tableau;

pub use cells::{CellAnalysis, CellPartition, Side};
pub use constructible::{AdmissibleInvolution, ConstructibleModule};
pub use hecke::{HeckeAlgebra, HeckeElement, KlBasis, KlCellData, LaurentPolynomial, WeightFunction};
pub use partition::{CornerHoleData, Partition, PartitionError, Square};
pub use rs::{SignedPermutation, TableauPair};
pub use symbol::{Bipartition, Symbol};
pub use tableau::{Cycle, CycleKind, CycleStructureSet, Domino, DominoTableau, TableauError};
