//! Tableaux with a prescribed cycle-structure set, and completion of a square
//! set to a cycle-structure set.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::enumerate::{remove, removable_dominoes};
use super::{CycleStructureSet, DominoTableau, TableauError};
use crate::partition::{fill_squares, Partition, Square};

/// A tableau `T` of rank `r` with `c̃s*(T) = σ`.
///
/// Each pair of `σ` is realized as one non-core open cycle laid along a rim
/// ribbon. The shape of `T` is the heart of `p` with one square of every pair
/// filled: the filled one when `p` fills exactly one, otherwise the member in
/// the smaller row. So `shape(T) = p` exactly when every pair of `σ` contains
/// one filled square of `p`.
pub fn construct_with_cs(p: &Partition, sigma: &CycleStructureSet) -> Result<DominoTableau, TableauError> {
    sigma.validate_for(p)?;
    let rank = p.rank();
    let data = p.corner_hole_data();
    let y: Vec<Square> = sigma
        .pairs()
        .map(|(a, b)| match (data.is_filled(a), data.is_filled(b)) {
            (false, true) => b,
            _ => a,
        })
        .collect();
    let q = fill_squares(&p.heart(), &y, rank)?;
    let pairs: Vec<(Square, Square)> = sigma.pairs().collect();
    let squares = build(&q, pairs)?;
    let t = DominoTableau::new(rank, squares)?;
    let got = t.cs_star();
    if &got != sigma {
        return Err(TableauError::ConstructionFailed(format!(
            "built a tableau with cycle structure {{{got}}} instead of {{{sigma}}}"
        )));
    }
    Ok(t)
}

fn build(q: &Partition, mut pairs: Vec<(Square, Square)>) -> Result<Vec<[Square; 2]>, TableauError> {
    let fail = |msg: alloc::string::String| Err(TableauError::ConstructionFailed(msg));
    if pairs.is_empty() {
        return Ok(standard_filling(q));
    }
    let hc = q.hc();
    let pos = |s: Square| hc.iter().position(|&h| h == s);
    let Some(idx) = pairs.iter().position(|&(a, b)| match (pos(a), pos(b)) {
        (Some(i), Some(j)) => i.abs_diff(j) == 1,
        _ => false,
    }) else {
        return fail(format!("no pair is adjacent in HC({q})"));
    };
    let (a, b) = pairs.remove(idx);
    let (filled, empty) = match (q.contains(a), q.contains(b)) {
        (true, false) => (a, b),
        (false, true) => (b, a),
        _ => return fail(format!("pair {a},{b} is not one filled and one empty square of {q}")),
    };
    let (start, end) = if empty.row > filled.row {
        (filled, Square::new(empty.row - 1, empty.col))
    } else {
        (Square::new(empty.row, empty.col - 1), filled)
    };
    let mut ribbon = Vec::new();
    let mut cur = start;
    loop {
        ribbon.push(cur);
        if cur == end {
            break;
        }
        let down = Square::new(cur.row + 1, cur.col);
        cur = if q.contains(down) {
            down
        } else if cur.col > 1 {
            Square::new(cur.row, cur.col - 1)
        } else {
            return fail(format!("rim walk from {start} misses {end}"));
        };
    }
    if ribbon.len() % 2 != 0 {
        return fail(format!("ribbon from {start} to {end} has odd length"));
    }
    let mut rows = q.parts().to_vec();
    for s in &ribbon {
        rows[s.row as usize - 1] -= 1;
    }
    let nu = Partition::new(rows)?;
    if nu.rank() != q.rank() {
        return fail(format!("removing the ribbon from {q} changes the rank"));
    }
    let mut squares = build(&nu, pairs)?;
    let dominoes: Vec<[Square; 2]> = ribbon.chunks(2).map(|c| [c[0], c[1]]).collect();
    squares.extend(order_ribbon(&dominoes).into_iter().map(|i| dominoes[i]));
    Ok(squares)
}

/// A linear extension of the ribbon dominoes under "left of or above",
/// preferring smaller ribbon positions.
fn order_ribbon(dominoes: &[[Square; 2]]) -> Vec<usize> {
    let m = dominoes.len();
    let precedes = |x: usize, y: usize| {
        dominoes[x].iter().any(|&s| {
            dominoes[y]
                .iter()
                .any(|&t| (t.row == s.row && t.col == s.col + 1) || (t.col == s.col && t.row == s.row + 1))
        })
    };
    let mut indegree: Vec<usize> = (0..m)
        .map(|y| (0..m).filter(|&x| x != y && precedes(x, y)).count())
        .collect();
    let mut done = alloc::vec![false; m];
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let next = (0..m)
            .find(|&i| !done[i] && indegree[i] == 0)
            .expect("ribbon order is acyclic");
        done[next] = true;
        out.push(next);
        for y in 0..m {
            if y != next && !done[y] && precedes(next, y) {
                indegree[y] -= 1;
            }
        }
    }
    out
}

/// A filling of `q` obtained by repeatedly removing the rightmost removable
/// domino and giving it the largest unused label.
pub(crate) fn standard_filling(q: &Partition) -> Vec<[Square; 2]> {
    let rank = q.rank();
    let mut rows = q.parts().to_vec();
    let mut peeled = Vec::new();
    loop {
        let candidates = removable_dominoes(&rows, rank);
        let Some(&d) = candidates.iter().max_by_key(|d| (d[1].col, Reverse(d[0].row))) else {
            break;
        };
        remove(&mut rows, d);
        peeled.push(d);
    }
    peeled.reverse();
    peeled
}

/// A cycle-structure set for `p` each of whose pairs contains exactly one
/// element of `s`.
///
/// Scanning `HC*(p)` by row, the first consecutive pair with exactly one
/// member in `s` is paired and removed, until `s` is exhausted. An element of
/// `s` is therefore paired with its adjacent non-`s` square of smaller row when
/// both neighbours qualify.
pub fn complete_to_cs(p: &Partition, s: &[Square]) -> Result<CycleStructureSet, TableauError> {
    complete_to_cs_forcing(p, s, None)
}

/// As [`complete_to_cs`], but with the pair `forced` (adjacent in `HC*(p)`,
/// exactly one member in `s`) required to appear in the result.
pub fn complete_to_cs_forcing(
    p: &Partition,
    s: &[Square],
    forced: Option<(Square, Square)>,
) -> Result<CycleStructureSet, TableauError> {
    let data = p.corner_hole_data();
    let bad = |msg: alloc::string::String| Err(TableauError::InvalidCycleStructure(msg));
    let chosen: BTreeSet<Square> = s.iter().copied().collect();
    if chosen.len() != s.len() || chosen.len() != data.kappa as usize {
        return bad(format!("expected {} distinct squares, got {}", data.kappa, s.len()));
    }
    if let Some(x) = chosen.iter().find(|x| !data.in_hc_star(**x)) {
        return bad(format!("{x} is not in HC*({p})"));
    }
    let mut list = data.hc_star();
    let mut pairs = Vec::new();
    let mut left = chosen.len();
    if let Some((a, b)) = forced {
        if chosen.contains(&a) == chosen.contains(&b) {
            return bad(format!("forced pair {a},{b} must contain exactly one square of S"));
        }
        list.retain(|&x| x != a && x != b);
        pairs.push((a, b));
        left -= 1;
    }
    while left > 0 {
        let Some(i) = (0..list.len().saturating_sub(1))
            .find(|&i| chosen.contains(&list[i]) != chosen.contains(&list[i + 1]))
        else {
            return bad(format!("cannot pair the squares of S within HC*({p})"));
        };
        pairs.push((list[i], list[i + 1]));
        list.drain(i..i + 2);
        left -= 1;
    }
    let sigma = CycleStructureSet::new(pairs);
    sigma.validate_for(p)?;
    Ok(sigma)
}
