//! Signed permutations and the rank-`r` domino Robinson–Schensted maps `G_r`.
//!
//! `G_r(w) = (S_r(w), T_r(w))` inserts `w(1), ..., w(n)` into the rank-`r`
//! core: `S_r(w)` is the insertion tableau, `T_r(w)` records where each step
//! grew the shape. A positive value enters as a horizontal domino at the end
//! of the first row, a negative one as a vertical domino at the bottom of the
//! first column.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partition::Square;
use crate::tableau::{DominoTableau, TableauError};

/// An element of `W_n` in window notation `w(1), ..., w(n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("{0:?} is not the window of a signed permutation")]
    NotSignedPermutation(Vec<i32>),
    #[error("cannot parse {0:?} as a window")]
    Parse(String),
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self, PermutationError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(PermutationError::NotSignedPermutation(window));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i ∈ {±1, ..., ±n}`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            inv[x.unsigned_abs() as usize - 1] = x.signum() * (i as i32 + 1);
        }
        SignedPermutation { window: inv }
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &SignedPermutation) -> Self {
        SignedPermutation { window: other.window.iter().map(|&x| self.apply(x)).collect() }
    }

    /// All `2^n n!` elements of `W_n`: permutations of `1..=n` in lexicographic
    /// order, each with every sign pattern.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms = Vec::new();
        let mut cur: Vec<i32> = (1..=n as i32).collect();
        loop {
            perms.push(cur.clone());
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0u32..1 << n {
                let window = p
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                    .collect();
                out.push(SignedPermutation { window });
            }
        }
        out
    }
}

/// Comma-separated window, e.g. `2,-1,3`.
impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() {
            return Ok(SignedPermutation::identity(0));
        }
        let window = t
            .split(',')
            .map(|x| x.trim().parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermutationError::Parse(s.to_string()))?;
        SignedPermutation::new(window)
    }
}

/// `(S_r(w), T_r(w))`: the insertion and recording tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauPair {
    pub left: DominoTableau,
    pub right: DominoTableau,
}

impl TableauPair {
    pub fn swap(&self) -> TableauPair {
        TableauPair { left: self.right.clone(), right: self.left.clone() }
    }
}

/// A partial domino filling over the rank-`r` core, labels not necessarily consecutive.
struct Filling {
    rank: u32,
    cells: Vec<Option<[Square; 2]>>,
}

impl Filling {
    fn new(rank: u32, n: usize) -> Self {
        Filling { rank, cells: vec![None; n + 1] }
    }

    fn from_tableau(t: &DominoTableau) -> Self {
        let mut f = Filling::new(t.rank(), t.len() as usize);
        for d in t.dominoes() {
            f.cells[d.label as usize] = Some(d.squares);
        }
        f
    }

    /// Row lengths of the core plus all dominoes labeled below `l`.
    fn rows_below(&self, l: usize) -> Vec<u32> {
        let mut rows: Vec<u32> = (1..=self.rank).rev().collect();
        for d in self.cells[..l.min(self.cells.len())].iter().flatten() {
            for s in d {
                let i = s.row as usize - 1;
                if rows.len() <= i {
                    rows.resize(i + 1, 0);
                }
                rows[i] += 1;
            }
        }
        rows
    }

    fn into_tableau(self) -> DominoTableau {
        let squares = self.cells.into_iter().skip(1).map(|c| c.expect("label missing")).collect();
        DominoTableau::new(self.rank, squares).expect("domino insertion produced an invalid tableau")
    }
}

fn contains(rows: &[u32], s: Square) -> bool {
    rows.get(s.row as usize - 1).is_some_and(|&len| s.col <= len)
}

fn col_len(rows: &[u32], j: u32) -> u32 {
    rows.iter().take_while(|&&len| len >= j).count() as u32
}

fn add_cells(rows: &mut Vec<u32>, d: [Square; 2]) {
    for s in d {
        let i = s.row as usize - 1;
        if rows.len() <= i {
            rows.resize(i + 1, 0);
        }
        rows[i] += 1;
    }
}

fn horizontal(row: u32, first_col: u32) -> [Square; 2] {
    [Square::new(row, first_col), Square::new(row, first_col + 1)]
}

fn vertical(first_row: u32, col: u32) -> [Square; 2] {
    [Square::new(first_row, col), Square::new(first_row + 1, col)]
}

/// Inserts `x` and returns the two squares by which the shape grew.
fn insert(p: &mut Filling, x: i32) -> [Square; 2] {
    let k = x.unsigned_abs() as usize;
    let old_rows = p.rows_below(p.cells.len());
    let mut mu = p.rows_below(k);
    let placed = if x > 0 {
        horizontal(1, mu.first().copied().unwrap_or(0) + 1)
    } else {
        vertical(col_len(&mu, 1) + 1, 1)
    };
    p.cells[k] = Some(placed);
    add_cells(&mut mu, placed);
    for l in k + 1..p.cells.len() {
        let Some(delta) = p.cells[l] else { continue };
        let inside: Vec<bool> = delta.iter().map(|&s| contains(&mu, s)).collect();
        let moved = match (inside[0], inside[1]) {
            (false, false) => delta,
            (true, true) => {
                let [a, b] = delta;
                if a.row == b.row {
                    let row = a.row + 1;
                    horizontal(row, mu.get(row as usize - 1).copied().unwrap_or(0) + 1)
                } else {
                    let col = a.col + 1;
                    vertical(col_len(&mu, col) + 1, col)
                }
            }
            (true, false) => {
                let [a, b] = delta;
                if a.row == b.row {
                    vertical(a.row, b.col)
                } else {
                    horizontal(b.row, b.col)
                }
            }
            (false, true) => unreachable!("domino insertion overlapped a bottom-right square"),
        };
        p.cells[l] = Some(moved);
        add_cells(&mut mu, moved);
    }
    let mut grown = Vec::new();
    for (i, &len) in mu.iter().enumerate() {
        let before = old_rows.get(i).copied().unwrap_or(0);
        for j in before + 1..=len {
            grown.push(Square::new(i as u32 + 1, j));
        }
    }
    debug_assert!(grown.len() == 2 && grown[0].is_adjacent(grown[1]), "growth {grown:?} is not a domino");
    [grown[0], grown[1]]
}

/// Undoes the insertion that grew the shape by `grown`, returning the inserted value.
fn uninsert(p: &mut Filling, grown: [Square; 2]) -> Result<i32, TableauError> {
    let bad = || TableauError::ConstructionFailed(String::from("tableau pair is not in the image of G_r"));
    let mut cur = grown;
    for l in (1..p.cells.len()).rev() {
        let Some(moved) = p.cells[l] else { continue };
        let overlap: Vec<Square> = moved.iter().copied().filter(|s| cur.contains(s)).collect();
        match overlap.len() {
            0 => {}
            2 => {
                let [a, b] = moved;
                let is_h = a.row == b.row;
                if is_h && a.row == 1 {
                    p.cells[l] = None;
                    return Ok(l as i32);
                }
                if !is_h && a.col == 1 {
                    p.cells[l] = None;
                    return Ok(-(l as i32));
                }
                let mu = p.rows_below(l);
                let delta = if is_h {
                    let len = mu.get(a.row as usize - 2).copied().unwrap_or(0);
                    if len < 2 {
                        return Err(bad());
                    }
                    horizontal(a.row - 1, len - 1)
                } else {
                    let len = col_len(&mu, a.col - 1);
                    if len < 2 {
                        return Err(bad());
                    }
                    vertical(len - 1, a.col - 1)
                };
                p.cells[l] = Some(delta);
                cur = delta;
            }
            _ => {
                let x = overlap[0];
                let other = if moved[0] == x { moved[1] } else { moved[0] };
                if x.diagonal() < other.diagonal() || x.row < 2 || x.col < 2 {
                    return Err(bad());
                }
                let c = Square::new(x.row - 1, x.col - 1);
                let mut delta = [other, c];
                delta.sort();
                p.cells[l] = Some(delta);
                let rest = if cur[0] == x { cur[1] } else { cur[0] };
                cur = [c, rest];
                cur.sort();
            }
        }
    }
    Err(bad())
}

/// `G_r(w) = (S_r(w), T_r(w))`.
pub fn g_r(w: &SignedPermutation, rank: u32) -> TableauPair {
    let n = w.rank();
    let mut p = Filling::new(rank, n);
    let mut q = Filling::new(rank, n);
    for (i, &x) in w.window().iter().enumerate() {
        q.cells[i + 1] = Some(insert(&mut p, x));
    }
    TableauPair { left: p.into_tableau(), right: q.into_tableau() }
}

/// The right tableau `T_r(w)` alone.
pub fn right_tableau(w: &SignedPermutation, rank: u32) -> DominoTableau {
    g_r(w, rank).right
}

/// Inverse of [`g_r`].
pub fn g_r_inverse(pair: &TableauPair) -> Result<SignedPermutation, TableauError> {
    let (s, t) = (&pair.left, &pair.right);
    if s.shape() != t.shape() || s.rank() != t.rank() {
        return Err(TableauError::ShapeMismatch {
            left: alloc::format!("{}", s.shape()),
            right: alloc::format!("{}", t.shape()),
        });
    }
    let n = t.len() as usize;
    let mut p = Filling::from_tableau(s);
    let mut window = vec![0; n];
    for i in (1..=n).rev() {
        let grown = t.domino(i as u32).unwrap();
        window[i - 1] = uninsert(&mut p, grown)?;
    }
    SignedPermutation::new(window)
        .map_err(|e| TableauError::ConstructionFailed(e.to_string()))
}
