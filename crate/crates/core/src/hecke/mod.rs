//! The Iwahori–Hecke algebra of `W_n` with unequal parameters, its
//! Kazhdan–Lusztig basis and Kazhdan–Lusztig cells.
//!
//! Generators are numbered `0` (`t`, negating the value 1) and `i ≥ 1`
//! (`s_i`, swapping the values `i` and `i + 1`), so `s · w` acts on values.

mod algebra;
mod group;
mod kl;
mod laurent;

use alloc::string::String;

pub use algebra::{Basis, HeckeAlgebra, HeckeElement};
pub use group::{generator, length, WeightFunction, WeylGroupB};
pub use kl::{kl_cells, Expansion, KlBasis, KlCellData};
pub use laurent::LaurentPolynomial;

use crate::rs::SignedPermutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("C_{0} does not have the triangular form T_w + lower terms in v⁻¹ℤ[v⁻¹]")]
    NotTriangular(SignedPermutation),
    #[error("stored basis does not fit: {0}")]
    Mismatch(String),
}
