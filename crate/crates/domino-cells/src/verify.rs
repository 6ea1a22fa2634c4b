//! Exhaustive verification suites, one per proposition.
//!
//! Every suite walks its parameter range in increasing order and stops at
//! the first failure, so a failing report carries the smallest reproducer in
//! that order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use domino_cells_core::cells::{CellAnalysis, Side};
use domino_cells_core::constructible::{c_partition, c_symbol, families, involution_of, tableau_module};
use domino_cells_core::hecke::{KlBasis, WeightFunction};
use domino_cells_core::partition::Partition;
use domino_cells_core::rs::{g_r, g_r_inverse};
use domino_cells_core::symbol::z1_to_hc;
use domino_cells_core::tableau::{
    all_cycle_structure_sets, complete_to_cs, construct_with_cs, enumerate_sdt, Cycle, SquareClass,
};
use domino_cells_core::{Bipartition, DominoTableau, SignedPermutation, Symbol};
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::{self, CapExceeded, Workload};
use crate::kl_cache::kl_cells_parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Proposition {
    Exists,
    Cs2,
    TwoSided,
    Distinguished,
    Bijections,
    ConstructibleEquality,
    Families,
    ConjectureB,
    RsBijection,
    MtInvolution,
    Counting,
    DoubleRank,
}

impl Proposition {
    pub const ALL: [Proposition; 12] = [
        Proposition::Exists,
        Proposition::Cs2,
        Proposition::TwoSided,
        Proposition::Distinguished,
        Proposition::Bijections,
        Proposition::ConstructibleEquality,
        Proposition::Families,
        Proposition::ConjectureB,
        Proposition::RsBijection,
        Proposition::MtInvolution,
        Proposition::Counting,
        Proposition::DoubleRank,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Proposition::Exists => "exists",
            Proposition::Cs2 => "cs2",
            Proposition::TwoSided => "twosided",
            Proposition::Distinguished => "distinguished",
            Proposition::Bijections => "bijections",
            Proposition::ConstructibleEquality => "constructible-equality",
            Proposition::Families => "families",
            Proposition::ConjectureB => "conjectureB",
            Proposition::RsBijection => "rs-bijection",
            Proposition::MtInvolution => "mt-involution",
            Proposition::Counting => "counting",
            Proposition::DoubleRank => "double-rank",
        }
    }

    /// The default parameter range.
    pub fn default_bounds(self) -> Bounds {
        let b = |n, r, s, size| Bounds { n_max: n, r_max: r, s_max: s, size_max: size };
        match self {
            Proposition::Exists | Proposition::Cs2 => b(None, Some(3), None, Some(10)),
            Proposition::TwoSided | Proposition::Distinguished | Proposition::DoubleRank => b(Some(4), Some(4), None, None),
            Proposition::Bijections => b(Some(8), Some(4), None, Some(10)),
            Proposition::ConstructibleEquality => b(None, None, Some(4), Some(8)),
            Proposition::Families => b(Some(5), None, Some(4), None),
            Proposition::ConjectureB => b(Some(3), None, Some(3), None),
            Proposition::RsBijection => b(Some(5), Some(6), None, None),
            Proposition::MtInvolution => b(Some(4), Some(2), None, None),
            Proposition::Counting => b(Some(5), Some(5), None, None),
        }
    }

    fn workload(self) -> Option<Workload> {
        match self {
            Proposition::ConjectureB => Some(Workload::KazhdanLusztig),
            Proposition::TwoSided
            | Proposition::Distinguished
            | Proposition::DoubleRank
            | Proposition::Families
            | Proposition::RsBijection
            | Proposition::MtInvolution
            | Proposition::Counting => Some(Workload::Combinatorial),
            _ => None,
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Proposition {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Proposition::ALL
            .into_iter()
            .find(|p| p.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownProposition(s.to_string()))
    }
}

/// Upper bounds on the parameters; `None` keeps the proposition's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Rank of `W_n`, or number of dominoes.
    pub n_max: Option<u32>,
    /// Tableau rank.
    pub r_max: Option<u32>,
    /// Defect `s`.
    pub s_max: Option<u32>,
    /// Number of squares of a partition.
    pub size_max: Option<u32>,
}

impl Bounds {
    fn or(self, default: Bounds) -> Bounds {
        Bounds {
            n_max: self.n_max.or(default.n_max),
            r_max: self.r_max.or(default.r_max),
            s_max: self.s_max.or(default.s_max),
            size_max: self.size_max.or(default.size_max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub ranges: Bounds,
    /// `[a, b]` pairs, for the Kazhdan–Lusztig suite.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<[u32; 2]>,
    pub outcome: Outcome,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut ranges = Vec::new();
        for (name, v) in [("n", self.ranges.n_max), ("r", self.ranges.r_max), ("s", self.ranges.s_max), ("|p|", self.ranges.size_max)] {
            if let Some(v) = v {
                ranges.push(format!("{name} <= {v}"));
            }
        }
        write!(f, "{status} {} [{}] {} cases in {:.1} ms", self.id, ranges.join(", "), self.cases, self.wall_time_ms)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    UnknownProposition(String),
    Cap(CapExceeded),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::UnknownProposition(s) => {
                let ids: Vec<&str> = Proposition::ALL.iter().map(|p| p.id()).collect();
                write!(f, "unknown proposition {s:?}; expected one of {}", ids.join(", "))
            }
            VerifyError::Cap(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for VerifyError {}

/// The weights `(1, s)` for `s ≤ s_max`, plus `(2, 4)` as a non-coprime realization of `s = 2`.
pub fn conjecture_b_weights(s_max: u32) -> Vec<[u32; 2]> {
    let mut w: Vec<[u32; 2]> = (1..=s_max).map(|s| [1, s]).collect();
    if s_max >= 2 {
        w.push([2, 4]);
    }
    w
}

type Check = Result<u64, String>;

pub fn verify(prop: Proposition, bounds: Bounds) -> Result<VerificationReport, VerifyError> {
    let b = bounds.or(prop.default_bounds());
    let mut warnings = Vec::new();
    if let (Some(w), Some(n)) = (prop.workload(), b.n_max) {
        if let Some(msg) = caps::check(w, n as usize).map_err(VerifyError::Cap)? {
            warnings.push(msg);
        }
    }
    let (n, r, s, size) = (b.n_max.unwrap_or(0), b.r_max.unwrap_or(0), b.s_max.unwrap_or(1), b.size_max.unwrap_or(0));
    let weights = if prop == Proposition::ConjectureB { conjecture_b_weights(s) } else { Vec::new() };
    let start = Instant::now();
    let result = match prop {
        Proposition::Exists => check_exists(size, r),
        Proposition::Cs2 => check_cs2(size, r),
        Proposition::TwoSided => check_two_sided(n, r),
        Proposition::Distinguished => check_distinguished(n, r),
        Proposition::Bijections => check_bijections(n, r, size),
        Proposition::ConstructibleEquality => check_constructible(size, s),
        Proposition::Families => check_families(n, s),
        Proposition::ConjectureB => check_conjecture_b(n, &weights),
        Proposition::RsBijection => check_rs(n, r),
        Proposition::MtInvolution => check_mt(n, r),
        Proposition::Counting => check_counting(n, r),
        Proposition::DoubleRank => check_double_rank(n, r),
    };
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let (outcome, cases, counterexample) = match result {
        Ok(cases) => (Outcome::Pass, cases, None),
        Err(c) => (Outcome::Fail, 0, Some(c)),
    };
    Ok(VerificationReport { id: prop.id().to_string(), ranges: b, weights, outcome, cases, counterexample, warnings, wall_time_ms })
}

/// Runs the suites on the current rayon pool; reports come back in the order given.
pub fn verify_all(props: &[Proposition], bounds: Bounds) -> Result<Vec<VerificationReport>, VerifyError> {
    props.par_iter().map(|&p| verify(p, bounds)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn partitions_up_to(size: u32, r_max: u32) -> impl Iterator<Item = Partition> {
    (0..=size).flat_map(Partition::all_of_size).filter(move |p| p.rank() <= r_max)
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1u32 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x.clone()).collect())
        .collect()
}

fn check_exists(size: u32, r: u32) -> Check {
    let mut cases = 0;
    for p in partitions_up_to(size, r) {
        for sigma in all_cycle_structure_sets(&p) {
            let t = construct_with_cs(&p, &sigma).map_err(|e| format!("p = ({p}), sigma = {{{sigma}}}: {e}"))?;
            let rebuilt = DominoTableau::new(t.rank(), t.dominoes().map(|d| d.squares).collect());
            ensure(rebuilt.as_ref() == Ok(&t) && t.cs_star() == sigma && t.shape().heart() == p.heart(), || {
                format!("p = ({p}), sigma = {{{sigma}}}: constructed {t} fails post-verification")
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn check_cs2(size: u32, r: u32) -> Check {
    let mut cases = 0;
    for p in partitions_up_to(size, r) {
        let star = p.corner_hole_data().hc_star();
        for s in subsets(&star).into_iter().filter(|s| s.len() == p.kappa() as usize) {
            let show = || s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let sigma = complete_to_cs(&p, &s).map_err(|e| format!("p = ({p}), S = {{{}}}: {e}", show()))?;
            ensure(sigma.pairs().all(|(a, b)| s.contains(&a) != s.contains(&b)), || {
                format!("p = ({p}), S = {{{}}}: pair of {{{sigma}}} misses S", show())
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn check_two_sided(n_max: u32, r_max: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max {
        for r in 0..=r_max {
            let a = CellAnalysis::new(n as usize, r);
            let all_shapes = Partition::all_of_rank(n, r);
            let mut covered = BTreeSet::new();
            for block in a.cells(Side::TwoSided).blocks {
                let d = a.two_sided_shape_data(&block).map_err(|e| format!("n = {n}, r = {r}: {e}"))?;
                let mut same: Vec<Partition> =
                    all_shapes.iter().filter(|q| q.hc() == d.hc.as_slice() && q.heart() == d.heart).cloned().collect();
                same.sort();
                ensure(d.shapes == same, || {
                    format!("n = {n}, r = {r}: cell of {} misses shapes with the same HC and heart", block[0])
                })?;
                ensure(d.shapes.iter().all(|q| covered.insert(q.clone())), || {
                    format!("n = {n}, r = {r}: a shape lies in two two-sided cells")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn check_distinguished(n_max: u32, r_max: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max {
        for r in 0..=r_max {
            let a = CellAnalysis::new(n as usize, r);
            for block in a.cells(Side::TwoSided).blocks {
                let d = a.two_sided_shape_data(&block).map_err(|e| format!("n = {n}, r = {r}: {e}"))?;
                let ctx = || format!("n = {n}, r = {r}, cell of {}: kappa = {}, |H| = {}, |I| = {}", block[0], d.kappa, d.holes.len(), d.intersection.len());
                let distinguished = d.kappa == 0 || d.kappa as usize == d.holes.len();
                ensure(distinguished == !d.intersection.is_empty(), ctx)?;
                ensure(d.intersection.len() <= 1, ctx)?;
                if r == 0 || r + 2 > n {
                    ensure(d.intersection.len() == 1, ctx)?;
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn check_bijections(n_max: u32, r_max: u32, size: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max {
        let bips: BTreeSet<Bipartition> = Bipartition::all_of_size(n).into_iter().collect();
        for r in 0..=r_max {
            let mut images = BTreeSet::new();
            for p in Partition::all_of_rank(n, r) {
                let s = Symbol::from_partition(&p);
                let bp = s.to_bipartition();
                ensure(s.defect() == r + 1, || format!("({p}): symbol {s} has defect {}", s.defect()))?;
                ensure(s.to_partition().as_ref() == Ok(&p), || format!("({p}): symbol {s} maps back elsewhere"))?;
                ensure(Symbol::from_bipartition(&bp, r + 1) == s, || format!("({p}): bipartition {bp} maps back elsewhere"))?;
                ensure(images.insert(bp.clone()), || format!("({p}): bipartition {bp} hit twice"))?;
                cases += 1;
            }
            ensure(images == bips, || format!("n = {n}, r = {r}: not onto the bipartitions of n"))?;
        }
    }
    for p in (0..=size).flat_map(Partition::all_of_size) {
        let s = Symbol::from_partition(&p);
        let (z1, _) = s.singles_doubles();
        let map = z1_to_hc(&p);
        let keys: Vec<u32> = map.iter().map(|(z, _)| *z).collect();
        let squares: BTreeSet<_> = map.iter().map(|(_, q)| *q).collect();
        ensure(keys == z1 && squares.len() == p.hc().len() && p.hc().iter().all(|q| squares.contains(q)), || {
            format!("({p}): Z1 of {s} does not match HC")
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn check_constructible(size: u32, s_max: u32) -> Check {
    let mut cases = 0;
    for p in partitions_up_to(size, s_max.saturating_sub(1)) {
        let lambda = Symbol::from_partition(&p);
        for sigma in all_cycle_structure_sets(&p) {
            let ctx = |what: &str| format!("p = ({p}), sigma = {{{sigma}}}: {what}");
            let by_partition = c_partition(&p, &sigma).map_err(|e| ctx(&e.to_string()))?;
            let iota = involution_of(&p, &sigma);
            let by_symbol = c_symbol(&lambda, &iota).map_err(|e| ctx(&e.to_string()))?;
            let t = construct_with_cs(&p, &sigma).map_err(|e| ctx(&e.to_string()))?;
            let by_tableau = tableau_module(&t);
            ensure(by_partition == by_symbol && by_symbol == by_tableau, || {
                ctx(&format!("c(p, sigma) = {by_partition}, c(Lambda, iota) = {by_symbol}, [T] = {by_tableau}"))
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn check_families(n_max: u32, s_max: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max {
        for s in 1..=s_max {
            let a = CellAnalysis::new(n as usize, s - 1);
            let mut classes: Vec<Vec<Partition>> = a
                .cells(Side::TwoSided)
                .blocks
                .iter()
                .map(|b| {
                    let shapes: BTreeSet<Partition> = b.iter().map(|w| a.pair(w).unwrap().right.shape().clone()).collect();
                    shapes.into_iter().collect()
                })
                .collect();
            classes.sort();
            let fams = families(n, s);
            ensure(fams == classes, || format!("n = {n}, s = {s}: {} families, {} two-sided cells", fams.len(), classes.len()))?;
            cases += fams.len() as u64;
        }
    }
    Ok(cases)
}

fn check_conjecture_b(n_max: u32, weights: &[[u32; 2]]) -> Check {
    let mut cases = 0;
    for n in 1..=n_max {
        for &[a, b] in weights {
            let weight = WeightFunction::new(a, b).ok_or_else(|| format!("weight ({a},{b}) is not positive"))?;
            let s = weight.s_ratio().ok_or_else(|| format!("weight ({a},{b}) has non-integral s"))?;
            let basis = KlBasis::compute(n as usize, weight).map_err(|e| format!("n = {n}, L = ({a},{b}): {e}"))?;
            let kl = kl_cells_parallel(&basis);
            let comb = CellAnalysis::new(n as usize, s - 1);
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                let c = comb.cells(side);
                ensure(kl.cells(side).same_blocks(&c), || {
                    let first = kl.cells(side).blocks.iter().find(|b| !c.blocks.contains(b)).map(|b| b[0].to_string());
                    format!(
                        "n = {n}, L = ({a},{b}), {side} cells: {} Kazhdan-Lusztig vs {} combinatorial; first differing cell contains {}",
                        kl.cells(side).blocks.len(),
                        c.blocks.len(),
                        first.unwrap_or_default()
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn check_rs(n_max: u32, r_max: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max as usize {
        let all = SignedPermutation::all(n);
        for r in 0..=r_max {
            let mut seen = BTreeSet::new();
            for w in &all {
                let pair = g_r(w, r);
                let ctx = |what: &str| format!("w = {w}, r = {r}: {what}");
                ensure(pair.left.shape() == pair.right.shape(), || ctx("tableaux of different shapes"))?;
                ensure(g_r_inverse(&pair).as_ref() == Ok(w), || ctx("inverse map does not return w"))?;
                ensure(g_r(&w.inverse(), r) == pair.swap(), || ctx("G_r(w^-1) is not the swapped pair"))?;
                ensure(seen.insert((pair.left.to_string(), pair.right.to_string())), || ctx("pair already produced"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn same_labels_in(t: &DominoTableau, cycles: &[Cycle]) -> Option<Vec<Cycle>> {
    let own = t.noncore_open_cycles();
    cycles.iter().map(|c| own.iter().find(|o| o.labels == c.labels).cloned()).collect()
}

fn check_mt(n_max: u32, r_max: u32) -> Check {
    let mut cases = 0;
    for r in 0..=r_max {
        for n in 0..=n_max {
            for t in enumerate_sdt(n, r, None) {
                let star = t.noncore_open_cycles();
                let all = subsets(&star);
                for c1 in &all {
                    let ctx = |what: &str| {
                        let labels: Vec<String> = c1.iter().map(|c| format!("{:?}", c.labels)).collect();
                        format!("T = {t} (rank {r}), C = {{{}}}: {what}", labels.join(", "))
                    };
                    let once = t.move_through(c1).map_err(|e| ctx(&e.to_string()))?;
                    ensure(once.rank() == r, || ctx("rank changed"))?;
                    for sq in t.shape().squares() {
                        if t.classify_square(sq) == SquareClass::Fixed {
                            ensure(once.label_at(sq) == t.label_at(sq), || ctx(&format!("fixed square {sq} relabeled")))?;
                        }
                    }
                    let mut stepwise = t.clone();
                    for c in c1.iter().rev() {
                        let mine = same_labels_in(&stepwise, std::slice::from_ref(c)).ok_or_else(|| ctx("cycle lost when moving one at a time"))?;
                        stepwise = stepwise.move_through(&mine).map_err(|e| ctx(&e.to_string()))?;
                    }
                    ensure(stepwise == once, || ctx("moving one cycle at a time disagrees"))?;
                    for c2 in &all {
                        let mine = same_labels_in(&once, c2).ok_or_else(|| ctx("cycles of MT(T, C) differ from those of T"))?;
                        let twice = once.move_through(&mine).map_err(|e| ctx(&e.to_string()))?;
                        let sym_diff: Vec<Cycle> = star.iter().filter(|c| c1.contains(c) != c2.contains(c)).cloned().collect();
                        ensure(twice == t.move_through(&sym_diff).map_err(|e| ctx(&e.to_string()))?, || {
                            ctx("MT(MT(T, C1), C2) differs from MT(T, C1 xor C2)")
                        })?;
                        if c2 == c1 {
                            ensure(twice == t, || ctx("not an involution"))?;
                        }
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

fn check_counting(n_max: u32, r_max: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max {
        let order: u64 = (1..=n as u64).product::<u64>() << n;
        for r in 0..=r_max {
            let total: u64 = Partition::all_of_rank(n, r)
                .iter()
                .map(|p| {
                    let k = enumerate_sdt(n, r, Some(p)).count() as u64;
                    k * k
                })
                .sum();
            ensure(total == order, || format!("n = {n}, r = {r}: sum of squares {total}, expected {order}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn check_double_rank(n_max: u32, r_max: u32) -> Check {
    let mut cases = 0;
    for n in 0..=n_max as usize {
        let analyses: Vec<CellAnalysis> = (0..=r_max + 1).map(|r| CellAnalysis::new(n, r)).collect();
        for r in 0..=r_max as usize {
            let left = analyses[r].cells(Side::Left);
            ensure(analyses[r].cells_via_double_rank(&analyses[r + 1]) == left, || {
                format!("n = {n}, r = {r}: double-rank generation differs from moving-through cells")
            })?;
            if r + 1 >= n && r + 1 <= r_max as usize {
                for side in [Side::Left, Side::Right, Side::TwoSided] {
                    ensure(analyses[r + 1].cells(side).same_blocks(&analyses[r].cells(side)), || {
                        format!("n = {n}: {side} cells in ranks {r} and {} differ", r + 1)
                    })?;
                }
            }
            cases += 1;
        }
    }
    Ok(cases)
}
