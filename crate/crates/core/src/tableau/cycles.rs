//! `D′`, cycles and moving-through.

use alloc::format;
use alloc::vec::Vec;

use super::{CycleStructureSet, DominoTableau, TableauError};
use crate::graph::DisjointSets;
use crate::partition::Square;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleKind {
    Closed,
    /// Open, with its beginning square on the diagonal next to the core.
    CoreOpen,
    /// Open, with both end squares in `HC*` of the shape.
    NoncoreOpen,
}

/// A cycle of a tableau: a set of labels closed under the `D`/`D′` overlap relation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    /// Sorted labels.
    pub labels: Vec<u32>,
    pub kind: CycleKind,
    /// `S_b`: the square vacated by moving through.
    pub start: Option<Square>,
    /// `S_f`: the square gained by moving through.
    pub finish: Option<Square>,
}

impl Cycle {
    pub fn is_open(&self) -> bool {
        self.kind != CycleKind::Closed
    }

    pub fn min_label(&self) -> u32 {
        self.labels[0]
    }
}

impl DominoTableau {
    /// `supp D′(k, T)`, the smaller square first.
    pub fn d_prime(&self, k: u32) -> Result<[Square; 2], TableauError> {
        let [a, b] = self.domino(k).ok_or(TableauError::UnknownLabel(k))?;
        let (fixed, other) = if a.is_variable(self.rank()) { (b, a) } else { (a, b) };
        let (i, j) = (fixed.row as i64, fixed.col as i64);
        let (or, oc) = (other.row as i64, other.col as i64);
        let partner = if (or, oc) == (i + 1, j) || (or, oc) == (i, j - 1) {
            if k < self.boundary_label(i - 1, j + 1) {
                (i - 1, j)
            } else {
                (i, j + 1)
            }
        } else if k < self.boundary_label(i + 1, j - 1) {
            (i, j - 1)
        } else {
            (i + 1, j)
        };
        let p = Square::new(partner.0 as u32, partner.1 as u32);
        Ok(if fixed <= p { [fixed, p] } else { [p, fixed] })
    }

    fn all_d_primes(&self) -> Vec<[Square; 2]> {
        (1..=self.len()).map(|k| self.d_prime(k).unwrap()).collect()
    }

    /// All cycles, ordered by smallest label.
    pub fn cycles(&self) -> Vec<Cycle> {
        let primes = self.all_d_primes();
        let n = self.len() as usize;
        let mut sets = DisjointSets::new(n);
        for (m, dp) in primes.iter().enumerate() {
            for &s in dp {
                if let Some(l) = self.label_at(s).filter(|&l| l > 0) {
                    sets.union(l as usize - 1, m);
                }
            }
        }
        sets.blocks()
            .into_iter()
            .map(|block| self.make_cycle(block.iter().map(|&i| i as u32 + 1).collect(), &primes))
            .collect()
    }

    fn make_cycle(&self, labels: Vec<u32>, primes: &[[Square; 2]]) -> Cycle {
        let mut before: Vec<Square> = labels.iter().flat_map(|&l| self.supports()[l as usize - 1]).collect();
        let mut after: Vec<Square> = labels.iter().flat_map(|&l| primes[l as usize - 1]).collect();
        before.sort();
        after.sort();
        let start: Vec<Square> = before.iter().filter(|s| after.binary_search(s).is_err()).copied().collect();
        let finish: Vec<Square> = after.iter().filter(|s| before.binary_search(s).is_err()).copied().collect();
        debug_assert!(start.len() == finish.len() && start.len() <= 1, "cycle {labels:?} is not a cycle");
        let (start, finish) = (start.first().copied(), finish.first().copied());
        let kind = match (start, finish) {
            (None, None) => CycleKind::Closed,
            (Some(b), Some(f)) => {
                let data = self.shape().corner_hole_data();
                if data.in_hc_star(b) && data.in_hc_star(f) {
                    CycleKind::NoncoreOpen
                } else {
                    CycleKind::CoreOpen
                }
            }
            _ => CycleKind::CoreOpen,
        };
        Cycle { labels, kind, start, finish }
    }

    /// The cycle containing label `k`.
    pub fn cycle_through(&self, k: u32) -> Result<Cycle, TableauError> {
        if k == 0 || k > self.len() {
            return Err(TableauError::UnknownLabel(k));
        }
        Ok(self.cycles().into_iter().find(|c| c.labels.contains(&k)).unwrap())
    }

    /// `OC(T)`.
    pub fn open_cycles(&self) -> Vec<Cycle> {
        self.cycles().into_iter().filter(Cycle::is_open).collect()
    }

    /// `OC*(T)`: the non-core open cycles.
    pub fn noncore_open_cycles(&self) -> Vec<Cycle> {
        self.cycles()
            .into_iter()
            .filter(|c| c.kind == CycleKind::NoncoreOpen)
            .collect()
    }

    /// `MT(T, C)`: replaces every domino of the cycles in `C` by its `D′`.
    ///
    /// Moving through non-core cycles keeps the rank. Once a core-open cycle is
    /// involved the result is read as a tableau of rank `r + 1`, which only
    /// succeeds when `C` contains every core-open cycle of `T`.
    pub fn move_through(&self, cycles: &[Cycle]) -> Result<DominoTableau, TableauError> {
        let own = self.cycles();
        let mut moved = alloc::vec![false; self.len() as usize];
        let mut raises_rank = false;
        for c in cycles {
            if !own.contains(c) {
                return Err(TableauError::UnknownCycle);
            }
            for &l in &c.labels {
                if core::mem::replace(&mut moved[l as usize - 1], true) {
                    return Err(TableauError::BadMove(format!("cycle through {l} given twice")));
                }
            }
            raises_rank |= c.kind == CycleKind::CoreOpen;
        }
        let mut squares = self.supports().to_vec();
        for (idx, sq) in squares.iter_mut().enumerate() {
            if moved[idx] {
                *sq = self.d_prime(idx as u32 + 1)?;
            }
        }
        let rank = self.rank() + raises_rank as u32;
        DominoTableau::new(rank, squares).map_err(|e| TableauError::BadMove(format!("{e}")))
    }

    /// `MT(T, OC(T) ∖ OC*(T))` read as a tableau of rank `r + 1`.
    pub fn move_through_core_open(&self) -> Result<DominoTableau, TableauError> {
        let core_open: Vec<Cycle> = self
            .cycles()
            .into_iter()
            .filter(|c| c.kind == CycleKind::CoreOpen)
            .collect();
        if core_open.is_empty() {
            return DominoTableau::new(self.rank() + 1, self.supports().to_vec())
                .map_err(|e| TableauError::BadMove(format!("{e}")));
        }
        self.move_through(&core_open)
    }

    /// `cs(T)` and `cs*(T)` as ordered `(S_b, S_f)` pairs, sorted.
    pub fn cycle_structure(&self) -> (Vec<(Square, Square)>, Vec<(Square, Square)>) {
        let mut cs = Vec::new();
        let mut cs_star = Vec::new();
        for c in self.open_cycles() {
            let pair = (c.start.unwrap(), c.finish.unwrap());
            cs.push(pair);
            if c.kind == CycleKind::NoncoreOpen {
                cs_star.push(pair);
            }
        }
        cs.sort();
        cs_star.sort();
        (cs, cs_star)
    }

    /// `c̃s*(T)`: the unordered non-core pairs.
    pub fn cs_star(&self) -> CycleStructureSet {
        CycleStructureSet::new(self.cycle_structure().1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sq(r: u32, c: u32) -> Square {
        Square::new(r, c)
    }

    #[test]
    fn single_domino_is_a_core_open_cycle() {
        let t = DominoTableau::new(0, vec![[sq(1, 1), sq(1, 2)]]).unwrap();
        assert_eq!(t.d_prime(1).unwrap(), [sq(1, 2), sq(1, 3)]);
        let c = t.cycle_through(1).unwrap();
        assert_eq!(c.labels, vec![1]);
        assert_eq!(c.kind, CycleKind::CoreOpen);
        assert_eq!(c.start, Some(sq(1, 1)));
        assert_eq!(c.finish, Some(sq(1, 3)));
        let raised = t.move_through_core_open().unwrap();
        assert_eq!(raised.rank(), 1);
        assert_eq!(raised.shape().parts(), &[3]);
    }

    #[test]
    fn rank_one_single_domino_moves_into_rank_two() {
        let t = DominoTableau::new(1, vec![[sq(1, 2), sq(1, 3)]]).unwrap();
        let c = t.cycle_through(1).unwrap();
        assert_eq!(c.kind, CycleKind::CoreOpen);
        assert!(t.noncore_open_cycles().is_empty());
        let raised = t.move_through(&[c]).unwrap();
        assert_eq!(raised.rank(), 2);
        assert_eq!(raised.domino(1), Some([sq(1, 3), sq(1, 4)]));
    }

    #[test]
    fn foreign_cycles_are_rejected() {
        let t = DominoTableau::new(1, vec![[sq(1, 2), sq(1, 3)]]).unwrap();
        let bogus = Cycle { labels: vec![2], kind: CycleKind::Closed, start: None, finish: None };
        assert_eq!(t.move_through(&[bogus]), Err(TableauError::UnknownCycle));
        assert_eq!(t.move_through(&[]).unwrap(), t);
    }
}
