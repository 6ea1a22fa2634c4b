//! Enumeration and counting of standard domino tableaux.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::DominoTableau;
use crate::partition::{Partition, Square};

/// Dominoes that can be removed from the diagram with row lengths `rows`
/// without touching the rank-`r` core, in order of increasing row.
pub(crate) fn removable_dominoes(rows: &[u32], rank: u32) -> Vec<[Square; 2]> {
    let mut out = Vec::new();
    for i in 0..rows.len() {
        let len = rows[i];
        let next = rows.get(i + 1).copied().unwrap_or(0);
        let row = i as u32 + 1;
        if len >= next + 2 {
            out.push([Square::new(row, len - 1), Square::new(row, len)]);
        }
        if len > 0 && next == len && rows.get(i + 2).copied().unwrap_or(0) < len {
            out.push([Square::new(row, len), Square::new(row + 1, len)]);
        }
    }
    out.retain(|d| d.iter().all(|s| s.diagonal() >= rank + 2));
    out
}

pub(crate) fn remove(rows: &mut Vec<u32>, d: [Square; 2]) {
    for s in d {
        rows[s.row as usize - 1] -= 1;
    }
    while rows.last() == Some(&0) {
        rows.pop();
    }
}

struct Frame {
    rows: Vec<u32>,
    candidates: Vec<[Square; 2]>,
    next: usize,
}

/// Streaming, deterministic enumeration of `SDT_r(n)` or `SDT_r(p)`.
///
/// Tableaux are produced by removing the domino with the largest label first;
/// shapes are visited in the order of [`Partition::all_of_rank`].
pub struct SdtIter {
    rank: u32,
    n: usize,
    shapes: Vec<Partition>,
    shape_idx: usize,
    stack: Vec<Frame>,
    assigned: Vec<[Square; 2]>,
}

/// All standard domino tableaux of rank `r` with `n` dominoes, optionally of a fixed shape.
///
/// A shape of the wrong rank or size yields nothing.
pub fn enumerate_sdt(n: u32, rank: u32, shape: Option<&Partition>) -> SdtIter {
    let shapes = match shape {
        Some(p) if p.rank() == rank && p.size() == 2 * n + rank * (rank + 1) / 2 => vec![p.clone()],
        Some(_) => Vec::new(),
        None => Partition::all_of_rank(n, rank),
    };
    SdtIter {
        rank,
        n: n as usize,
        shapes,
        shape_idx: 0,
        stack: Vec::new(),
        assigned: vec![[Square::new(1, 1); 2]; n as usize],
    }
}

impl Iterator for SdtIter {
    type Item = DominoTableau;

    fn next(&mut self) -> Option<DominoTableau> {
        loop {
            if self.stack.is_empty() {
                let shape = self.shapes.get(self.shape_idx)?;
                self.shape_idx += 1;
                if self.n == 0 {
                    return Some(DominoTableau::empty(self.rank));
                }
                let rows = shape.parts().to_vec();
                let candidates = removable_dominoes(&rows, self.rank);
                self.stack.push(Frame { rows, candidates, next: 0 });
            }
            let depth = self.stack.len() - 1;
            let frame = self.stack.last_mut().unwrap();
            if frame.next == frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            let d = frame.candidates[frame.next];
            frame.next += 1;
            self.assigned[self.n - depth - 1] = d;
            if depth + 1 == self.n {
                return Some(DominoTableau::from_parts_unchecked(self.rank, self.assigned.clone()));
            }
            let mut rows = frame.rows.clone();
            remove(&mut rows, d);
            let candidates = removable_dominoes(&rows, self.rank);
            self.stack.push(Frame { rows, candidates, next: 0 });
        }
    }
}

/// Memoized `|SDT_r(p)|`, keyed by the parts of `p`.
#[derive(Debug, Clone, Default)]
pub struct SdtCounter {
    cache: BTreeMap<(u32, Vec<u32>), u64>,
}

impl SdtCounter {
    pub fn new() -> Self {
        SdtCounter::default()
    }

    /// A cached count, without computing.
    pub fn get(&self, shape: &Partition) -> Option<u64> {
        self.cache.get(&(shape.rank(), shape.parts().to_vec())).copied()
    }

    pub fn count(&mut self, shape: &Partition) -> u64 {
        self.count_rows(shape.rank(), shape.parts().to_vec())
    }

    fn count_rows(&mut self, rank: u32, rows: Vec<u32>) -> u64 {
        if let Some(&c) = self.cache.get(&(rank, rows.clone())) {
            return c;
        }
        let candidates = removable_dominoes(&rows, rank);
        let total = if candidates.is_empty() {
            1
        } else {
            candidates
                .into_iter()
                .map(|d| {
                    let mut smaller = rows.clone();
                    remove(&mut smaller, d);
                    self.count_rows(rank, smaller)
                })
                .sum()
        };
        self.cache.insert((rank, rows), total);
        total
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }
}
