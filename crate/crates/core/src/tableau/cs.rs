//! Cycle-structure sets of a partition.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::TableauError;
use crate::partition::{between, Partition, Square};

/// A set of unordered `{hole, corner}` pairs on `HC*(p)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleStructureSet {
    /// Each pair stored with its smaller square first.
    pairs: BTreeSet<(Square, Square)>,
}

impl CycleStructureSet {
    pub fn new(pairs: impl IntoIterator<Item = (Square, Square)>) -> Self {
        CycleStructureSet {
            pairs: pairs
                .into_iter()
                .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
                .collect(),
        }
    }

    pub fn empty() -> Self {
        CycleStructureSet::default()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Square, Square)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains_pair(&self, a: Square, b: Square) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.pairs.contains(&key)
    }

    /// The partner of `s`, if `s` is paired.
    pub fn partner(&self, s: Square) -> Option<Square> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == s {
                Some(b)
            } else if b == s {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Checks the defining conditions with respect to `p`.
    pub fn validate_for(&self, p: &Partition) -> Result<(), TableauError> {
        let data = p.corner_hole_data();
        let bad = |msg: alloc::string::String| Err(TableauError::InvalidCycleStructure(msg));
        let mut used = BTreeSet::new();
        for &(a, b) in &self.pairs {
            let hole_corner = (data.holes_star.contains(&a) && data.corners_star.contains(&b))
                || (data.corners_star.contains(&a) && data.holes_star.contains(&b));
            if !hole_corner {
                return bad(format!("{{{a},{b}}} does not join H*(p) to C*(p)"));
            }
            if !used.insert(a) || !used.insert(b) {
                return bad(format!("pairs overlap at {{{a},{b}}}"));
            }
        }
        let star = data.hc_star();
        let unpaired = star.len() - used.len();
        if unpaired != data.gamma as usize {
            return bad(format!("{unpaired} squares unpaired, expected {}", data.gamma));
        }
        for &(a, b) in &self.pairs {
            for &m in &star {
                if m == a || m == b || !between(a, b, m) {
                    continue;
                }
                match self.partner(m) {
                    Some(m2) if between(a, b, m2) => {}
                    _ => return bad(format!("{m} lies between {a} and {b} but is not paired inside")),
                }
            }
        }
        Ok(())
    }
}

/// Squares as `sIJ` when both coordinates are single digits, else `(i,j)`.
fn write_square(f: &mut fmt::Formatter<'_>, s: Square) -> fmt::Result {
    if s.row < 10 && s.col < 10 {
        write!(f, "s{}{}", s.row, s.col)
    } else {
        write!(f, "{s}")
    }
}

/// Pairs separated by commas, each as `s33-s42`.
impl fmt::Display for CycleStructureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_square(f, a)?;
            f.write_str("-")?;
            write_square(f, b)?;
        }
        Ok(())
    }
}

/// Reads one square, `sIJ` or `(i,j)`, from the front of `t`.
fn take_square(t: &str) -> Option<(Square, &str)> {
    let t = t.trim_start();
    if let Some(d) = t.strip_prefix('s') {
        let b = d.as_bytes();
        if b.len() >= 2 && b[0].is_ascii_digit() && b[1].is_ascii_digit() && b[0] != b'0' && b[1] != b'0' {
            return Some((Square::new((b[0] - b'0') as u32, (b[1] - b'0') as u32), &d[2..]));
        }
        return None;
    }
    let end = t.find(')')?;
    Some((t[..=end].parse().ok()?, &t[end + 1..]))
}

/// Parses the [`fmt::Display`] form; `(i,j)` is accepted for any square.
/// Pairs are not checked against a shape.
impl FromStr for CycleStructureSet {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || TableauError::InvalidCycleStructure(format!("cannot parse {s:?}"));
        let mut rest = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        let mut pairs = Vec::new();
        while !rest.is_empty() {
            let (a, r) = take_square(rest).ok_or_else(err)?;
            let r = r.trim_start().strip_prefix('-').ok_or_else(err)?;
            let (b, r) = take_square(r).ok_or_else(err)?;
            pairs.push((a, b));
            let r = r.trim_start();
            rest = match r.strip_prefix(',') {
                Some(more) if !more.trim().is_empty() => more.trim_start(),
                None if r.is_empty() => r,
                _ => return Err(err()),
            };
        }
        Ok(CycleStructureSet::new(pairs))
    }
}

/// Every cycle-structure set of `p`, sorted.
///
/// Scanning `HC*(p)` by row, each square either opens a pair, closes the most
/// recently opened one, or (outside every pair) stays unpaired.
pub fn all_cycle_structure_sets(p: &Partition) -> Vec<CycleStructureSet> {
    let data = p.corner_hole_data();
    let star = data.hc_star();
    let mut out = Vec::new();
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    scan(&star, 0, data.gamma as usize, &mut open, &mut pairs, &mut out);
    out.sort();
    out
}

fn scan(
    star: &[Square],
    idx: usize,
    unpaired_left: usize,
    open: &mut Vec<Square>,
    pairs: &mut Vec<(Square, Square)>,
    out: &mut Vec<CycleStructureSet>,
) {
    if idx == star.len() {
        if open.is_empty() && unpaired_left == 0 {
            out.push(CycleStructureSet::new(pairs.iter().copied()));
        }
        return;
    }
    // prune: squares remaining must cover the open pairs and the unpaired budget
    if star.len() - idx < open.len() + unpaired_left {
        return;
    }
    let s = star[idx];
    if open.is_empty() && unpaired_left > 0 {
        scan(star, idx + 1, unpaired_left - 1, open, pairs, out);
    }
    if let Some(top) = open.pop() {
        pairs.push((top, s));
        scan(star, idx + 1, unpaired_left, open, pairs, out);
        pairs.pop();
        open.push(top);
    }
    open.push(s);
    scan(star, idx + 1, unpaired_left, open, pairs, out);
    open.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn sq(r: u32, c: u32) -> Square {
        Square::new(r, c)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_display_form() {
        let sigma: CycleStructureSet = "s33-s42,s15-s24".parse().unwrap();
        assert_eq!(sigma, CycleStructureSet::new([(sq(3, 3), sq(4, 2)), (sq(1, 5), sq(2, 4))]));
        assert_eq!(sigma.to_string().parse::<CycleStructureSet>().unwrap(), sigma);
        assert_eq!("(10,1)-(9,2)".parse::<CycleStructureSet>().unwrap().to_string(), "s92-(10,1)");
        assert_eq!("".parse::<CycleStructureSet>().unwrap(), CycleStructureSet::empty());
        for bad in ["s33", "s33-", "s33-s42,", "s03-s12", "x"] {
            assert!(bad.parse::<CycleStructureSet>().is_err(), "{bad}");
        }
    }

    #[test]
    fn four_sets_for_worked_example() {
        let sets = all_cycle_structure_sets(&p(&[4, 3, 3, 1]));
        let expected: Vec<CycleStructureSet> = vec![
            CycleStructureSet::new([(sq(1, 5), sq(2, 4))]),
            CycleStructureSet::new([(sq(2, 4), sq(3, 3))]),
            CycleStructureSet::new([(sq(3, 3), sq(4, 2))]),
            CycleStructureSet::new([(sq(4, 2), sq(5, 1))]),
        ];
        assert_eq!(sets, expected);
        for s in &sets {
            s.validate_for(&p(&[4, 3, 3, 1])).unwrap();
        }
        assert_eq!(sets[2].to_string(), "s33-s42");
    }

    #[test]
    fn staircase_has_only_the_empty_set() {
        assert_eq!(all_cycle_structure_sets(&p(&[3, 2, 1])), vec![CycleStructureSet::empty()]);
    }

    #[test]
    fn invalid_sets_are_rejected() {
        let q = p(&[4, 3, 3, 1]);
        // two corners
        assert!(CycleStructureSet::new([(sq(1, 5), sq(3, 3))]).validate_for(&q).is_err());
        // wrong unpaired count
        assert!(CycleStructureSet::empty().validate_for(&q).is_err());
        // s24 and s42 lie between s15 and s51 but are unpaired
        assert!(CycleStructureSet::new([(sq(1, 5), sq(4, 2))]).validate_for(&q).is_err());
    }

    #[test]
    fn enumeration_agrees_with_validation_by_brute_force() {
        for m in 0..=10 {
            for q in Partition::all_of_size(m) {
                let star = q.corner_hole_data().hc_star();
                let enumerated = all_cycle_structure_sets(&q);
                // every set of disjoint pairs of HC* squares, filtered by validate_for
                let mut brute = Vec::new();
                let mut all_pairs = Vec::new();
                for i in 0..star.len() {
                    for j in i + 1..star.len() {
                        all_pairs.push((star[i], star[j]));
                    }
                }
                for mask in 0u64..(1 << all_pairs.len()) {
                    let chosen: Vec<_> = (0..all_pairs.len())
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| all_pairs[b])
                        .collect();
                    if chosen.len() != q.kappa() as usize {
                        continue;
                    }
                    let set = CycleStructureSet::new(chosen);
                    if set.validate_for(&q).is_ok() {
                        brute.push(set);
                    }
                }
                brute.sort();
                assert_eq!(enumerated, brute, "partition {q}");
                for s in &enumerated {
                    assert_eq!(s.len(), q.kappa() as usize);
                }
            }
        }
    }
}
