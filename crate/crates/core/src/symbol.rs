//! Symbols of defect `s` and the bijections between rank-`r` partitions,
//! symbols of defect `r + 1`, and bipartitions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partition::{Partition, PartitionError, Square};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("symbol rows must be strictly increasing")]
    NotIncreasing,
    #[error("the top row must be at least as long as the bottom row")]
    NegativeDefect,
    #[error("cannot parse {0:?} as a symbol")]
    Parse(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A two-row symbol, stored as the minimal representative of its shift class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Symbol {
    /// Normalizes by undoing the shift `(λ, μ) ↦ (0, λ + 1; 0, μ + 1)` as often as possible.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, SymbolError> {
        let increasing = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&top) || !increasing(&bottom) {
            return Err(SymbolError::NotIncreasing);
        }
        if top.len() < bottom.len() {
            return Err(SymbolError::NegativeDefect);
        }
        let mut drop = 0;
        while drop < bottom.len() && top[drop] == drop as u32 && bottom[drop] == drop as u32 {
            drop += 1;
        }
        let shift = |v: &[u32]| v[drop..].iter().map(|&x| x - drop as u32).collect();
        Ok(Symbol { top: shift(&top), bottom: shift(&bottom) })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn defect(&self) -> u32 {
        (self.top.len() - self.bottom.len()) as u32
    }

    /// `Λ_p`, of defect `r + 1` for `p` of rank `r`.
    pub fn from_partition(p: &Partition) -> Symbol {
        let mut sharp = p.parts().to_vec();
        if p.rank() % 2 == sharp.len() as u32 % 2 {
            sharp.push(0);
        }
        let k = sharp.len() as u32;
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for (i, &part) in sharp.iter().enumerate() {
            let e = part + k - (i as u32 + 1);
            if e % 2 == 0 {
                top.push(e / 2);
            } else {
                bottom.push((e - 1) / 2);
            }
        }
        top.reverse();
        bottom.reverse();
        Symbol::new(top, bottom).expect("partition entries are distinct")
    }

    /// The partition `p` with `Λ_p` equivalent to `self`; it has rank `s - 1`.
    pub fn to_partition(&self) -> Result<Partition, SymbolError> {
        let mut entries: Vec<u32> = self
            .top
            .iter()
            .map(|&l| 2 * l)
            .chain(self.bottom.iter().map(|&m| 2 * m + 1))
            .collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let k = entries.len() as u32;
        let parts = entries
            .iter()
            .enumerate()
            .map(|(i, &e)| e + i as u32 + 1 - k)
            .collect();
        Ok(Partition::new(parts)?)
    }

    /// `(d_Λ, f_Λ)` with `d_i = λ_i - i + 1`, `f_i = μ_i - i + 1`.
    pub fn to_bipartition(&self) -> Bipartition {
        let part = |row: &[u32]| {
            let mut v: Vec<u32> = row.iter().enumerate().map(|(i, &x)| x - i as u32).collect();
            v.reverse();
            Partition::new(v).expect("strictly increasing rows give partitions")
        };
        Bipartition { first: part(&self.top), second: part(&self.bottom) }
    }

    /// The symbol of defect `s` with bipartition `bp`.
    pub fn from_bipartition(bp: &Bipartition, defect: u32) -> Symbol {
        let s = defect as usize;
        let n = bp.second.len().max(bp.first.len().saturating_sub(s));
        let row = |p: &Partition, len: usize| -> Vec<u32> {
            let mut parts = p.parts().to_vec();
            parts.resize(len, 0);
            parts.reverse();
            parts.iter().enumerate().map(|(i, &x)| x + i as u32).collect()
        };
        Symbol::new(row(&bp.first, n + s), row(&bp.second, n)).expect("rows built strictly increasing")
    }

    /// `Z₁` (entries appearing once) and `Z₂` (entries appearing in both rows).
    pub fn singles_doubles(&self) -> (Vec<u32>, Vec<u32>) {
        let mut singles = Vec::new();
        let mut doubles = Vec::new();
        for &x in &self.top {
            if self.bottom.binary_search(&x).is_ok() {
                doubles.push(x);
            } else {
                singles.push(x);
            }
        }
        singles.extend(self.bottom.iter().filter(|x| self.top.binary_search(x).is_err()));
        singles.sort_unstable();
        (singles, doubles)
    }

    /// All entries of both rows, sorted, with repetition.
    pub fn entries(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable();
        v
    }
}

/// Rows separated by ` / `, e.g. `0 1 3 4 / 2`.
impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let (t, b) = (row(&self.top), row(&self.bottom));
        match (t.is_empty(), b.is_empty()) {
            (true, true) => f.write_str("/"),
            (false, true) => write!(f, "{t} /"),
            _ => write!(f, "{t} / {b}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SymbolError::Parse(s.to_string());
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (top, bottom) = t.split_once('/').ok_or_else(err)?;
        let row = |r: &str| -> Result<Vec<u32>, SymbolError> {
            r.split_whitespace().map(|x| x.parse().map_err(|_| err())).collect()
        };
        Symbol::new(row(top)?, row(bottom)?)
    }
}

/// A pair of partitions `(d_Λ, f_Λ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// All bipartitions of `n`.
    pub fn all_of_size(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for a in 0..=n {
            for first in Partition::all_of_size(a) {
                for second in Partition::all_of_size(n - a) {
                    out.push(Bipartition { first: first.clone(), second });
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.first, self.second)
    }
}

/// The order-preserving bijection `Z₁(Λ_p) → HC(p)`, sorted by entry.
///
/// The square `s_ij` corresponds to `(j + k′ - i - 1) / 2`, where `k′` is the
/// length of the padded partition `p♯`; filled squares correspond to entries
/// of the bottom row.
pub fn z1_to_hc(p: &Partition) -> Vec<(u32, Square)> {
    let mut k = p.len() as u32;
    if p.rank() % 2 == k % 2 {
        k += 1;
    }
    let mut out: Vec<(u32, Square)> = p
        .hc()
        .iter()
        .map(|&s| ((s.col + k - s.row - 1) / 2, s))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sym(top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(sym(&[0, 1, 2, 4, 5], &[0, 3]), sym(&[0, 1, 3, 4], &[2]));
        assert_eq!(sym(&[0, 1, 3, 4], &[2]).top(), &[0, 1, 3, 4]);
        assert_eq!(sym(&[], &[]).defect(), 0);
        assert_eq!(Symbol::new(vec![1, 1], vec![]), Err(SymbolError::NotIncreasing));
        assert_eq!(Symbol::new(vec![], vec![1]), Err(SymbolError::NegativeDefect));
    }

    #[test]
    fn worked_example_symbol() {
        let s = Symbol::from_partition(&p(&[4, 3, 3, 1]));
        assert_eq!(s.to_string(), "0 1 3 4 / 2");
        assert_eq!(s.defect(), 3);
        assert_eq!(s.to_partition().unwrap(), p(&[4, 3, 3, 1]));
        let bp = s.to_bipartition();
        assert_eq!((bp.first.parts(), bp.second.parts()), (&[1, 1][..], &[2][..]));
        assert_eq!(Symbol::from_bipartition(&bp, 3), s);
        assert_eq!("0 1 3 4 / 2".parse::<Symbol>().unwrap(), s);
    }

    #[test]
    fn empty_partition_symbol() {
        let s = Symbol::from_partition(&Partition::empty());
        assert_eq!((s.top(), s.bottom()), (&[0][..], &[][..]));
        assert_eq!(s.to_string(), "0 /");
        assert_eq!(sym(&[], &[]).to_bipartition(), Bipartition { first: Partition::empty(), second: Partition::empty() });
    }

    #[test]
    fn singles_and_doubles() {
        assert_eq!(sym(&[0, 1, 3, 4], &[2]).singles_doubles(), (vec![0, 1, 2, 3, 4], vec![]));
        assert_eq!(sym(&[0, 1], &[1]).singles_doubles(), (vec![0], vec![1]));
        assert_eq!(sym(&[0], &[]).singles_doubles(), (vec![0], vec![]));
    }

    #[test]
    fn z1_correspondence_of_worked_example() {
        let got = z1_to_hc(&p(&[4, 3, 3, 1]));
        let sq = Square::new;
        assert_eq!(got, vec![(0, sq(5, 1)), (1, sq(4, 2)), (2, sq(3, 3)), (3, sq(2, 4)), (4, sq(1, 5))]);
        assert_eq!(z1_to_hc(&p(&[2, 1])).len(), 3);
    }
}
