//! Partitions, their rank under domino stripping, and the corner/hole squares
//! `HC(p)` that govern open cycles.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

/// The square in row `row` and column `col` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: u32,
    pub col: u32,
}

impl Square {
    pub const fn new(row: u32, col: u32) -> Self {
        Square { row, col }
    }

    /// `row + col`, the anti-diagonal the square sits on.
    pub const fn diagonal(self) -> u32 {
        self.row + self.col
    }

    /// Variable squares of a rank `r` diagram are those with `row + col ≡ r (mod 2)`.
    pub const fn is_variable(self, rank: u32) -> bool {
        (self.row + self.col) % 2 == rank % 2
    }

    pub(crate) fn is_adjacent(self, other: Square) -> bool {
        (self.row == other.row && self.col.abs_diff(other.col) == 1)
            || (self.col == other.col && self.row.abs_diff(other.row) == 1)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Square {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let (r, c) = inner.split_once(',').ok_or_else(err)?;
        let row: u32 = r.trim().parse().map_err(|_| err())?;
        let col: u32 = c.trim().parse().map_err(|_| err())?;
        if row == 0 || col == 0 {
            return Err(err());
        }
        Ok(Square::new(row, col))
    }
}

/// `m` lies between `a` and `b` when its row lies between their rows and its
/// column between their columns, endpoints included and in either orientation.
pub fn between(a: Square, b: Square, m: Square) -> bool {
    let within = |x: u32, lo: u32, hi: u32| (lo.min(hi)..=lo.max(hi)).contains(&x);
    within(m.row, a.row, b.row) && within(m.col, a.col, b.col)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("square {0} cannot be filled: the result is not a Young diagram")]
    NotADiagram(Square),
    #[error("filled shape has rank {found}, expected {expected}")]
    WrongRank { expected: u32, found: u32 },
    #[error("square {0} is not a member of HC(p)")]
    NotInHc(Square),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// The corner and hole squares of a partition of rank `r`.
///
/// All square lists are sorted by increasing row; in that order corners (odd
/// rows) and holes (even rows) alternate, starting with a corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerHoleData {
    /// `HC(p)`: squares with `i + j ≡ r (mod 2)`, `i + j > r + 1`, addable or removable.
    pub hc: Vec<Square>,
    /// `C(p)`: members of `HC(p)` in odd rows.
    pub corners: Vec<Square>,
    /// `H(p)`: members of `HC(p)` in even rows.
    pub holes: Vec<Square>,
    pub corners_star: Vec<Square>,
    pub holes_star: Vec<Square>,
    /// Members of `HC(p)` lying inside the diagram.
    pub filled: Vec<Square>,
    /// Number of squares of the diagram on the diagonal `i + j = r + 2`.
    pub gamma: u32,
    /// Number of filled members of `HC(p)`.
    pub kappa: u32,
}

impl CornerHoleData {
    fn compute(parts: &[u32], rank: u32) -> Self {
        let row_len = |i: u32| -> u32 { parts.get(i as usize - 1).copied().unwrap_or(0) };
        let mut hc = Vec::new();
        let mut filled = Vec::new();
        for i in 1..=(parts.len() as u32 + 1) {
            let len = row_len(i);
            // addable square at the end of row i
            if i == 1 || row_len(i - 1) > len {
                hc.push((Square::new(i, len + 1), false));
            }
            // removable square ending row i
            if len > 0 && row_len(i + 1) < len {
                hc.push((Square::new(i, len), true));
            }
        }
        hc.retain(|(s, _)| s.is_variable(rank) && s.diagonal() > rank + 1);
        hc.sort();

        let mut data = CornerHoleData {
            hc: Vec::with_capacity(hc.len()),
            corners: Vec::new(),
            holes: Vec::new(),
            corners_star: Vec::new(),
            holes_star: Vec::new(),
            filled: Vec::new(),
            gamma: 0,
            kappa: 0,
        };
        for (s, is_filled) in hc {
            data.hc.push(s);
            let starred = s.diagonal() > rank + 2;
            if s.row % 2 == 1 {
                data.corners.push(s);
                if starred {
                    data.corners_star.push(s);
                }
            } else {
                data.holes.push(s);
                if starred {
                    data.holes_star.push(s);
                }
            }
            if is_filled {
                filled.push(s);
            }
        }
        data.kappa = filled.len() as u32;
        data.filled = filled;
        data.gamma = (1..=rank + 1)
            .filter(|&i| row_len(i) >= rank + 2 - i)
            .count() as u32;
        data
    }

    /// `HC*(p)`, sorted by row.
    pub fn hc_star(&self) -> Vec<Square> {
        let mut v: Vec<Square> = self.corners_star.iter().chain(&self.holes_star).copied().collect();
        v.sort();
        v
    }

    pub fn is_filled(&self, s: Square) -> bool {
        self.filled.contains(&s)
    }

    pub fn is_corner(&self, s: Square) -> bool {
        self.corners.contains(&s)
    }

    pub fn is_hole(&self, s: Square) -> bool {
        self.holes.contains(&s)
    }

    pub fn in_hc_star(&self, s: Square) -> bool {
        self.corners_star.contains(&s) || self.holes_star.contains(&s)
    }

    /// `a` and `b` are adjacent in `HC(p)` when no other member lies between them.
    pub fn adjacent(&self, a: Square, b: Square) -> bool {
        !self
            .hc
            .iter()
            .any(|&m| m != a && m != b && between(a, b, m))
    }
}

/// A partition with its rank-`r` data cached at construction.
///
/// Equality, ordering and hashing only look at the parts.
#[derive(Clone)]
pub struct Partition {
    parts: Vec<u32>,
    rank: u32,
    data: CornerHoleData,
}

impl Partition {
    /// Builds a partition; trailing zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        let core = strip_dominoes(parts.clone());
        let rank = core.len() as u32;
        debug_assert!(core.iter().rev().copied().eq(1..=rank), "2-core {core:?} is not a staircase");
        let data = CornerHoleData::compute(&parts, rank);
        Ok(Partition { parts, rank, data })
    }

    pub fn empty() -> Self {
        Partition::new(Vec::new()).unwrap()
    }

    /// The staircase `(r, r-1, ..., 1)`.
    pub fn staircase(rank: u32) -> Self {
        Partition::new((1..=rank).rev().collect()).unwrap()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of squares.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn core(&self) -> Partition {
        Partition::staircase(self.rank)
    }

    /// Number of dominoes a rank-`r` tableau of this shape carries.
    pub fn domino_count(&self) -> u32 {
        (self.size() - self.rank * (self.rank + 1) / 2) / 2
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, i: u32) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.parts.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn col_len(&self, j: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p >= j).count() as u32
    }

    pub fn contains(&self, s: Square) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.row_len(s.row)
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Square::new(i as u32 + 1, j)))
    }

    pub fn corner_hole_data(&self) -> &CornerHoleData {
        &self.data
    }

    pub fn hc(&self) -> &[Square] {
        &self.data.hc
    }

    pub fn gamma(&self) -> u32 {
        self.data.gamma
    }

    pub fn kappa(&self) -> u32 {
        self.data.kappa
    }

    /// The partition obtained by removing every filled square of `HC*(p)`.
    pub fn heart(&self) -> Partition {
        let mut parts = self.parts.clone();
        for s in &self.data.filled {
            if s.diagonal() > self.rank + 2 {
                parts[s.row as usize - 1] -= 1;
            }
        }
        Partition::new(parts).expect("removing removable squares keeps a diagram")
    }

    /// `p_Y`: the heart of `p` with exactly the squares `y ⊆ HC(p)` filled.
    pub fn fill(&self, y: &[Square]) -> Result<Partition, PartitionError> {
        if let Some(&s) = y.iter().find(|s| !self.data.hc.contains(s)) {
            return Err(PartitionError::NotInHc(s));
        }
        fill_squares(&self.heart(), y, self.rank)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition::new((1..=cols).map(|j| self.col_len(j)).collect()).unwrap()
    }

    /// Notation with repeated parts as exponents, e.g. `(4,3^2,1)`.
    pub fn exponent_notation(&self) -> String {
        let mut out = String::from("(");
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if i > 0 {
                out.push(',');
            }
            out.push_str(&p.to_string());
            if run > 1 {
                out.push('^');
                out.push_str(&run.to_string());
            }
            i += run;
        }
        out.push(')');
        out
    }

    /// All partitions of `m`, in reverse lexicographic order.
    pub fn all_of_size(m: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(m, m, &mut cur, &mut |p| out.push(Partition::new(p.to_vec()).unwrap()));
        out
    }

    /// `P_r(n)`: partitions of rank `r` whose rank-`r` tableaux carry `n` dominoes.
    pub fn all_of_rank(n: u32, rank: u32) -> Vec<Partition> {
        let m = 2 * n + rank * (rank + 1) / 2;
        Partition::all_of_size(m)
            .into_iter()
            .filter(|p| p.rank == rank)
            .collect()
    }
}

fn gen_partitions(m: u32, max: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if m == 0 {
        f(cur);
        return;
    }
    for part in (1..=max.min(m)).rev() {
        cur.push(part);
        gen_partitions(m - part, part, cur, f);
        cur.pop();
    }
}

/// Removes dominoes until none can be removed, returning the 2-core.
fn strip_dominoes(mut parts: Vec<u32>) -> Vec<u32> {
    'outer: loop {
        for i in (0..parts.len()).rev() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] >= next + 2 {
                parts[i] -= 2;
            } else if parts[i] == next && parts.get(i + 2).copied().unwrap_or(0) < next {
                parts[i] -= 1;
                parts[i + 1] -= 1;
            } else {
                continue;
            }
            while parts.last() == Some(&0) {
                parts.pop();
            }
            continue 'outer;
        }
        return parts;
    }
}

/// Returns the rank `r` of `parts` and its staircase core.
pub fn rank_decompose(parts: &[u32]) -> Result<(u32, Partition), PartitionError> {
    let p = Partition::new(parts.to_vec())?;
    Ok((p.rank, p.core()))
}

/// Adds the squares `y` to `heart`, requiring a Young diagram of rank `rank`.
pub fn fill_squares(heart: &Partition, y: &[Square], rank: u32) -> Result<Partition, PartitionError> {
    let mut squares = y.to_vec();
    squares.sort();
    let mut parts = heart.parts.clone();
    for s in squares {
        let i = s.row as usize;
        if i > parts.len() + 1 {
            return Err(PartitionError::NotADiagram(s));
        }
        if i == parts.len() + 1 {
            parts.push(0);
        }
        let above = if i == 1 { u32::MAX } else { parts[i - 2] };
        if parts[i - 1] + 1 != s.col || above < s.col {
            return Err(PartitionError::NotADiagram(s));
        }
        parts[i - 1] += 1;
    }
    let p = Partition::new(parts)?;
    if p.rank != rank {
        return Err(PartitionError::WrongRank { expected: rank, found: p.rank });
    }
    Ok(p)
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Partition {}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Comma-separated parts, e.g. `4,3,3,1`; the empty partition prints as nothing.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl Default for Partition {
    fn default() -> Self {
        Partition::empty()
    }
}

/// Builds row lengths from a set of squares, if they form a Young diagram.
pub(crate) fn rows_from_squares(squares: &[Square]) -> Option<Vec<u32>> {
    let max_row = squares.iter().map(|s| s.row).max().unwrap_or(0) as usize;
    let mut rows = vec![0u32; max_row];
    let mut counts = vec![0u32; max_row];
    for s in squares {
        let i = s.row as usize - 1;
        rows[i] = rows[i].max(s.col);
        counts[i] += 1;
    }
    let contiguous = rows.iter().zip(&counts).all(|(&r, &c)| r == c);
    let decreasing = rows.windows(2).all(|w| w[0] >= w[1]);
    let no_empty = rows.iter().all(|&r| r > 0);
    (contiguous && decreasing && no_empty).then_some(rows)
}
