use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{Basis, HeckeAlgebra, HeckeElement};
use super::group::{WeightFunction, WeylGroupB};
use super::laurent::LaurentPolynomial;
use super::HeckeError;
use crate::cells::{CellPartition, Side};
use crate::graph::strongly_connected_components;

/// Sparse `T`-expansion, sorted by group index.
pub type Expansion = Vec<(usize, LaurentPolynomial)>;

/// The Kazhdan–Lusztig basis `{C_w}`: `C_w` is bar-invariant and lies in
/// `T_w + Σ_{y<w} v⁻¹ℤ[v⁻¹] T_y`.
#[derive(Debug, Clone)]
pub struct KlBasis {
    algebra: HeckeAlgebra,
    c: Vec<Expansion>,
}

fn sparse(x: Vec<LaurentPolynomial>) -> Expansion {
    x.into_iter().enumerate().filter(|(_, a)| !a.is_zero()).collect()
}

impl KlBasis {
    /// Computes `C_w` by induction on length: `C_s C_{sw}` is bar-invariant
    /// with leading term `T_w`, and subtracting `m·C_y` for the bar-invariant
    /// part `m` of each offending coefficient, longest `y` first, leaves `C_w`.
    pub fn compute(n: usize, weight: WeightFunction) -> Result<Self, HeckeError> {
        let algebra = HeckeAlgebra::new(n, weight);
        let group = algebra.group();
        let order = group.order();
        let mut c: Vec<Expansion> = Vec::with_capacity(order);
        c.push(vec![(0, LaurentPolynomial::one())]);
        for w in 1..order {
            let g = (0..n).find(|&g| group.is_left_descent(g, w)).expect("w ≠ e has a descent");
            let x = algebra.multiply_ts_dense(g, &dense(&c[group.lmul(g, w)], order));
            let v_inv = LaurentPolynomial::monomial(1, -(weight.of_generator(g) as i32));
            let mut x = add_dense(x, &c[group.lmul(g, w)], &v_inv);
            reduce(&mut x, &c, w, |_, _| {});
            let exp = sparse(x);
            check_shape(group, w, &exp)?;
            c.push(exp);
        }
        Ok(KlBasis { algebra, c })
    }

    /// Rebuilds a basis from stored expansions, checking their triangular shape.
    pub fn from_expansions(n: usize, weight: WeightFunction, c: Vec<Expansion>) -> Result<Self, HeckeError> {
        let algebra = HeckeAlgebra::new(n, weight);
        if c.len() != algebra.group().order() {
            return Err(HeckeError::Mismatch(alloc::format!(
                "{} expansions for a group of order {}",
                c.len(),
                algebra.group().order()
            )));
        }
        for (w, exp) in c.iter().enumerate() {
            check_shape(algebra.group(), w, exp)?;
        }
        Ok(KlBasis { algebra, c })
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &WeylGroupB {
        self.algebra.group()
    }

    pub fn expansion(&self, w: usize) -> &[(usize, LaurentPolynomial)] {
        &self.c[w]
    }

    pub fn expansions(&self) -> &[Expansion] {
        &self.c
    }

    /// `C_w` in the `T`-basis.
    pub fn c(&self, w: usize) -> HeckeElement {
        HeckeElement { basis: Basis::T, terms: self.c[w].iter().cloned().collect() }
    }

    /// `h_{s,w,z}` for all `z` with a nonzero coefficient in `C_s C_w = Σ_z h_{s,w,z} C_z`.
    pub fn structure_constants(&self, g: usize, w: usize) -> Expansion {
        let group = self.group();
        let l = self.algebra.weight().of_generator(g) as i32;
        if group.is_left_descent(g, w) {
            return vec![(w, LaurentPolynomial::from_terms([(l, 1), (-l, 1)]))];
        }
        let order = group.order();
        let x = self.algebra.multiply_ts_dense(g, &dense(&self.c[w], order));
        let mut x = add_dense(x, &self.c[w], &LaurentPolynomial::monomial(1, -l));
        let top = group.lmul(g, w);
        let mut out = vec![(top, LaurentPolynomial::one())];
        subtract(&mut x, &self.c[top], &LaurentPolynomial::one());
        reduce(&mut x, &self.c, top, |y, m| out.push((y, m.clone())));
        assert!(x.iter().all(LaurentPolynomial::is_zero), "C_s C_w is not a combination of C_z");
        out.sort_by_key(|(z, _)| *z);
        out
    }

    /// Edges `w → z` whenever `C_z` occurs in some `C_s C_w`, so `z ≤_L w`.
    pub fn left_edges(&self) -> Vec<Vec<usize>> {
        (0..self.group().order()).map(|w| self.left_edges_from(w)).collect()
    }

    pub fn left_edges_from(&self, w: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.group().rank())
            .flat_map(|g| self.structure_constants(g, w).into_iter().map(|(z, _)| z))
            .filter(|&z| z != w)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The matrix of `C_s` on `[𝔠]_𝒜` in the basis `e_w`, `w ∈ cell`: entry
    /// `(i, j)` is `h_{s, cell[j], cell[i]}`.
    pub fn cell_module_action(&self, cell: &[usize], g: usize) -> Vec<Vec<LaurentPolynomial>> {
        let mut m = vec![vec![LaurentPolynomial::zero(); cell.len()]; cell.len()];
        for (j, &w) in cell.iter().enumerate() {
            for (z, h) in self.structure_constants(g, w) {
                if let Some(i) = cell.iter().position(|&y| y == z) {
                    m[i][j] = h;
                }
            }
        }
        m
    }
}

fn dense(x: &[(usize, LaurentPolynomial)], order: usize) -> Vec<LaurentPolynomial> {
    let mut out = vec![LaurentPolynomial::zero(); order];
    for (w, a) in x {
        out[*w] = a.clone();
    }
    out
}

fn add_dense(mut x: Vec<LaurentPolynomial>, y: &[(usize, LaurentPolynomial)], c: &LaurentPolynomial) -> Vec<LaurentPolynomial> {
    for (w, a) in y {
        x[*w] += &(a * c);
    }
    x
}

fn subtract(x: &mut [LaurentPolynomial], y: &[(usize, LaurentPolynomial)], c: &LaurentPolynomial) {
    for (w, a) in y {
        x[*w] -= &(a * c);
    }
}

/// Clears the non-negative-degree part of every coefficient below `top`,
/// longest first, reporting each subtracted `m·C_y`.
fn reduce(x: &mut [LaurentPolynomial], c: &[Expansion], top: usize, mut report: impl FnMut(usize, &LaurentPolynomial)) {
    for y in (0..top).rev() {
        if x[y].is_strictly_negative() {
            continue;
        }
        let m = x[y].bar_invariant_part();
        subtract(x, &c[y], &m);
        report(y, &m);
    }
}

fn check_shape(group: &WeylGroupB, w: usize, exp: &[(usize, LaurentPolynomial)]) -> Result<(), HeckeError> {
    let ok = exp.iter().all(|(y, a)| {
        if *y == w {
            *a == LaurentPolynomial::one()
        } else {
            group.length(*y) < group.length(w) && a.is_strictly_negative()
        }
    }) && exp.iter().any(|(y, _)| *y == w);
    if ok {
        Ok(())
    } else {
        Err(HeckeError::NotTriangular(group.element(w).clone()))
    }
}

/// Kazhdan–Lusztig cells of `W_n` for one weight function.
#[derive(Debug, Clone)]
pub struct KlCellData {
    pub weight: WeightFunction,
    pub left: CellPartition,
    pub right: CellPartition,
    pub two_sided: CellPartition,
    /// Left cells as sorted lists of group indices.
    pub left_index_blocks: Vec<Vec<usize>>,
}

impl KlCellData {
    /// Cells from the `≤_L` generating edges; `≤_R` uses `x ≤_R y ⇔ x⁻¹ ≤_L y⁻¹`.
    pub fn from_left_edges(group: &WeylGroupB, weight: WeightFunction, edges: &[Vec<usize>]) -> Self {
        let n = group.rank();
        let right_edges = {
            let mut r = vec![Vec::new(); edges.len()];
            for (w, out) in edges.iter().enumerate() {
                r[group.inverse(w)].extend(out.iter().map(|&z| group.inverse(z)));
            }
            r
        };
        let both: Vec<Vec<usize>> = edges.iter().zip(&right_edges).map(|(a, b)| [&a[..], &b[..]].concat()).collect();
        let to_partition = |side: Side, blocks: &[Vec<usize>]| {
            let blocks = blocks
                .iter()
                .map(|b| b.iter().map(|&i| group.element(i).clone()).collect())
                .collect();
            CellPartition::new(n, None, side, blocks)
        };
        let left_index_blocks = strongly_connected_components(edges);
        KlCellData {
            weight,
            left: to_partition(Side::Left, &left_index_blocks),
            right: to_partition(Side::Right, &strongly_connected_components(&right_edges)),
            two_sided: to_partition(Side::TwoSided, &strongly_connected_components(&both)),
            left_index_blocks,
        }
    }

    pub fn cells(&self, side: Side) -> &CellPartition {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
            Side::TwoSided => &self.two_sided,
        }
    }
}

/// Computes the basis and the cells of `W_n` for weight `L`.
pub fn kl_cells(n: usize, weight: WeightFunction) -> Result<KlCellData, HeckeError> {
    let basis = KlBasis::compute(n, weight)?;
    Ok(KlCellData::from_left_edges(basis.group(), weight, &basis.left_edges()))
}
