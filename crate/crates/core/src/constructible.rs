//! Admissible involutions and constructible modules, in symbol, partition and
//! tableau form, and the families they generate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cells::mt_orbit;
use crate::graph::DisjointSets;
use crate::partition::{Partition, Square};
use crate::symbol::{z1_to_hc, Symbol};
use crate::tableau::{all_cycle_structure_sets, complete_to_cs_forcing, CycleStructureSet, DominoTableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructibleError {
    #[error("{size} singles cannot carry {s} fixed points")]
    Parity { size: usize, s: u32 },
    #[error("involution is not admissible on the singles of {0}")]
    NotAdmissible(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// An involution on `Z₁` with `s` fixed points and nested transpositions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleInvolution {
    /// Transpositions `(z, ι(z))` with `z < ι(z)`, sorted.
    pub transpositions: Vec<(u32, u32)>,
    /// Fixed points, sorted.
    pub fixed: Vec<u32>,
}

impl AdmissibleInvolution {
    pub fn apply(&self, z: u32) -> Option<u32> {
        if self.fixed.contains(&z) {
            return Some(z);
        }
        self.transpositions.iter().find_map(|&(a, b)| {
            if a == z {
                Some(b)
            } else if b == z {
                Some(a)
            } else {
                None
            }
        })
    }

    /// `S_ι`: one element from each transposition, in increasing order of the
    /// choices read as binary numbers (lower member = 0).
    pub fn choices(&self) -> Vec<Vec<u32>> {
        let t = self.transpositions.len();
        let mut out: Vec<Vec<u32>> = (0u32..1 << t)
            .map(|mask| {
                let mut y: Vec<u32> = self
                    .transpositions
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if mask >> i & 1 == 1 { b } else { a })
                    .collect();
                y.sort_unstable();
                y
            })
            .collect();
        out.sort();
        out
    }
}

/// Transpositions as `(a,b)` in sequence, e.g. `(2,3)`; the trivial involution is `()`.
impl fmt::Display for AdmissibleInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.transpositions.is_empty() {
            return f.write_str("()");
        }
        for (a, b) in &self.transpositions {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// All `s`-admissible involutions on the sorted set `z1`.
///
/// Scanning `z1` upwards, each entry opens a transposition, closes the most
/// recently opened one, or (outside every transposition) is fixed.
pub fn admissible_involutions(z1: &[u32], s: u32) -> Result<Vec<AdmissibleInvolution>, ConstructibleError> {
    let s_us = s as usize;
    if z1.len() < s_us || (z1.len() - s_us) % 2 != 0 {
        return Err(ConstructibleError::Parity { size: z1.len(), s });
    }
    let mut sorted = z1.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut state = (Vec::new(), Vec::new(), Vec::new());
    scan(&sorted, 0, s_us, &mut state, &mut out);
    out.sort();
    Ok(out)
}

type ScanState = (Vec<u32>, Vec<(u32, u32)>, Vec<u32>);

fn scan(z: &[u32], idx: usize, fixed_left: usize, st: &mut ScanState, out: &mut Vec<AdmissibleInvolution>) {
    if idx == z.len() {
        if st.0.is_empty() && fixed_left == 0 {
            let mut transpositions = st.1.clone();
            transpositions.sort_unstable();
            out.push(AdmissibleInvolution { transpositions, fixed: st.2.clone() });
        }
        return;
    }
    if z.len() - idx < st.0.len() + fixed_left {
        return;
    }
    let x = z[idx];
    if st.0.is_empty() && fixed_left > 0 {
        st.2.push(x);
        scan(z, idx + 1, fixed_left - 1, st, out);
        st.2.pop();
    }
    if let Some(top) = st.0.pop() {
        st.1.push((top, x));
        scan(z, idx + 1, fixed_left, st, out);
        st.1.pop();
        st.0.push(top);
    }
    st.0.push(x);
    scan(z, idx + 1, fixed_left, st, out);
    st.0.pop();
}

/// A direct sum of modules `[p]`, stored as its sorted component labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstructibleModule {
    pub components: Vec<Partition>,
}

impl ConstructibleModule {
    pub fn new(mut components: Vec<Partition>) -> Self {
        components.sort();
        ConstructibleModule { components }
    }
}

/// `[(4,3,2^2)] ⊕ [(4,3^2,1)]`.
impl fmt::Display for ConstructibleModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "[{}]", p.exponent_notation())?;
        }
        Ok(())
    }
}

/// `Λ_Y`: top row `Z₂ ⊔ (Z₁ ∖ Y)`, bottom row `Z₂ ⊔ Y`.
pub fn symbol_with_bottom_singles(lambda: &Symbol, y: &[u32]) -> Symbol {
    let (z1, z2) = lambda.singles_doubles();
    let mut top: Vec<u32> = z2.iter().copied().chain(z1.iter().copied().filter(|z| !y.contains(z))).collect();
    let mut bottom: Vec<u32> = z2.iter().chain(y).copied().collect();
    top.sort_unstable();
    bottom.sort_unstable();
    Symbol::new(top, bottom).expect("rows of Λ_Y are strictly increasing")
}

fn check_admissible(lambda: &Symbol, iota: &AdmissibleInvolution) -> Result<(), ConstructibleError> {
    let (z1, _) = lambda.singles_doubles();
    let ok = admissible_involutions(&z1, lambda.defect())
        .map(|all| all.contains(iota))
        .unwrap_or(false);
    if ok {
        Ok(())
    } else {
        Err(ConstructibleError::NotAdmissible(format!("{lambda}")))
    }
}

/// The terms `Λ_Y`, `Y ∈ S_ι`, of `c(Λ, ι)` in the order of [`AdmissibleInvolution::choices`].
pub fn c_symbol_terms(lambda: &Symbol, iota: &AdmissibleInvolution) -> Result<Vec<Symbol>, ConstructibleError> {
    check_admissible(lambda, iota)?;
    Ok(iota.choices().iter().map(|y| symbol_with_bottom_singles(lambda, y)).collect())
}

/// `c(Λ, ι) = ⊕_{Y ∈ S_ι} [Λ_Y]`.
pub fn c_symbol(lambda: &Symbol, iota: &AdmissibleInvolution) -> Result<ConstructibleModule, ConstructibleError> {
    let terms = c_symbol_terms(lambda, iota)?;
    Ok(ConstructibleModule::new(
        terms
            .iter()
            .map(|t| t.to_partition().expect("symbols of partitions map back to partitions"))
            .collect(),
    ))
}

/// `c(p, σ) = ⊕ [p_Y]` over the choices `Y` of one square per pair of `σ`.
pub fn c_partition(p: &Partition, sigma: &CycleStructureSet) -> Result<ConstructibleModule, ConstructibleError> {
    sigma.validate_for(p)?;
    let pairs: Vec<(Square, Square)> = sigma.pairs().collect();
    let mut components = Vec::with_capacity(1 << pairs.len());
    for mask in 0u32..1 << pairs.len() {
        let y: Vec<Square> = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { b } else { a })
            .collect();
        components.push(p.fill(&y).map_err(TableauError::from)?);
    }
    Ok(ConstructibleModule::new(components))
}

/// `ι_σ`: the involution of `Z₁(Λ_p)` matching `σ` under `Z₁ ↔ HC(p)`.
pub fn involution_of(p: &Partition, sigma: &CycleStructureSet) -> AdmissibleInvolution {
    let map = z1_to_hc(p);
    let z_of = |s: Square| map.iter().find(|(_, t)| *t == s).map(|(z, _)| *z).expect("pair squares lie in HC(p)");
    let mut transpositions: Vec<(u32, u32)> = sigma
        .pairs()
        .map(|(a, b)| {
            let (x, y) = (z_of(a), z_of(b));
            (x.min(y), x.max(y))
        })
        .collect();
    transpositions.sort_unstable();
    let fixed = map
        .iter()
        .map(|(z, _)| *z)
        .filter(|z| !transpositions.iter().any(|&(a, b)| a == *z || b == *z))
        .collect();
    AdmissibleInvolution { transpositions, fixed }
}

/// `σ_ι`: the cycle-structure set of `p` matching `ι` under `Z₁ ↔ HC(p)`.
pub fn cycle_structure_of(p: &Partition, iota: &AdmissibleInvolution) -> CycleStructureSet {
    let map: BTreeMap<u32, Square> = z1_to_hc(p).into_iter().collect();
    CycleStructureSet::new(iota.transpositions.iter().map(|(a, b)| (map[a], map[b])))
}

/// `[T] = ⊕_{C ⊆ OC*(T)} [shape MT(T, C)]`.
pub fn tableau_module(t: &DominoTableau) -> ConstructibleModule {
    ConstructibleModule::new(mt_orbit(t).iter().map(|m| m.shape().clone()).collect())
}

/// Families of `P_{s-1}(n)`: classes of partitions linked by sharing a
/// constructible module. Each family is sorted; families are ordered by
/// their least member.
pub fn families(n: u32, s: u32) -> Vec<Vec<Partition>> {
    assert!(s >= 1, "defect must be positive");
    let shapes = Partition::all_of_rank(n, s - 1);
    let index: BTreeMap<&Partition, usize> = shapes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut sets = DisjointSets::new(shapes.len());
    for p in &shapes {
        for sigma in all_cycle_structure_sets(p) {
            let module = c_partition(p, &sigma).expect("enumerated sets are valid");
            let first = index[&module.components[0]];
            for q in &module.components[1..] {
                sets.union(first, index[q]);
            }
        }
    }
    let mut out: Vec<Vec<Partition>> = sets
        .blocks()
        .into_iter()
        .map(|b| {
            let mut v: Vec<Partition> = b.into_iter().map(|i| shapes[i].clone()).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// The chain `p, p↑, p↑↑, ...` ending at the partition with the same heart
/// whose topmost `κ_p` squares of `HC(p)` are filled. Each step fills the last
/// empty square `s` before the last filled square and empties the filled
/// square `t` right after `s`; the returned cycle-structure set contains
/// `{s, t}` and has `p` and `p↑` among the components of `c(p, σ)`.
pub fn family_ladder(p: &Partition) -> Result<Vec<(Partition, CycleStructureSet)>, ConstructibleError> {
    let mut out = Vec::new();
    let mut cur = p.clone();
    loop {
        let data = cur.corner_hole_data();
        let hc = data.hc_star();
        let Some(last_filled) = hc.iter().rposition(|&x| data.is_filled(x)) else {
            break;
        };
        let Some(si) = hc[..last_filled].iter().rposition(|&x| !data.is_filled(x)) else {
            break;
        };
        let (s, t) = (hc[si], hc[si + 1]);
        let sigma = complete_to_cs_forcing(&cur, &data.filled, Some((s, t)))?;
        let mut y: Vec<Square> = data.filled.iter().copied().filter(|&x| x != t).collect();
        y.push(s);
        let next = cur.fill(&y).map_err(TableauError::from)?;
        out.push((cur.clone(), sigma));
        cur = next;
    }
    out.push((cur, CycleStructureSet::empty()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn iota(t: &[(u32, u32)], fixed: &[u32]) -> AdmissibleInvolution {
        AdmissibleInvolution { transpositions: t.to_vec(), fixed: fixed.to_vec() }
    }

    #[test]
    fn four_involutions_of_worked_example() {
        let all = admissible_involutions(&[0, 1, 2, 3, 4], 3).unwrap();
        let names: Vec<_> = all.iter().map(|i| i.to_string()).collect();
        assert_eq!(names, ["(0,1)", "(1,2)", "(2,3)", "(3,4)"]);
    }

    #[test]
    fn only_trivial_when_all_fixed() {
        assert_eq!(admissible_involutions(&[0, 2, 5], 3).unwrap(), vec![iota(&[], &[0, 2, 5])]);
        assert!(admissible_involutions(&[0, 2], 1).is_err());
    }

    #[test]
    fn nesting_excludes_crossing() {
        let all = admissible_involutions(&[0, 1, 2, 3], 0).unwrap();
        assert_eq!(all, vec![iota(&[(0, 1), (2, 3)], &[]), iota(&[(0, 3), (1, 2)], &[])]);
    }

    #[test]
    fn brute_force_filter_agrees() {
        // all involutions of {0..m-1} with s fixed points, filtered literally
        fn involutions(rest: &[u32], acc: &mut Vec<(u32, u32)>, fixed: &mut Vec<u32>, out: &mut Vec<AdmissibleInvolution>) {
            let Some((&x, tail)) = rest.split_first() else {
                let mut t = acc.clone();
                t.sort();
                out.push(AdmissibleInvolution { transpositions: t, fixed: fixed.clone() });
                return;
            };
            fixed.push(x);
            involutions(tail, acc, fixed, out);
            fixed.pop();
            for (i, &y) in tail.iter().enumerate() {
                let mut remaining = tail.to_vec();
                remaining.remove(i);
                acc.push((x, y));
                involutions(&remaining, acc, fixed, out);
                acc.pop();
            }
        }
        for m in 0..=7u32 {
            for s in 0..=m {
                if (m - s) % 2 != 0 {
                    continue;
                }
                let z: Vec<u32> = (0..m).collect();
                let mut all = Vec::new();
                involutions(&z, &mut Vec::new(), &mut Vec::new(), &mut all);
                let mut brute: Vec<AdmissibleInvolution> = all
                    .into_iter()
                    .filter(|i| i.fixed.len() == s as usize)
                    .filter(|i| {
                        i.transpositions.iter().all(|&(a, b)| {
                            (a + 1..b).all(|w| {
                                let iw = i.apply(w).unwrap();
                                iw != w && a < iw && iw < b
                            })
                        })
                    })
                    .collect();
                brute.sort();
                assert_eq!(admissible_involutions(&z, s).unwrap(), brute, "m = {m}, s = {s}");
            }
        }
    }

    #[test]
    fn worked_example_modules() {
        let lambda: Symbol = "0 1 3 4 / 2".parse().unwrap();
        let expected = [
            ("(0,1)", "1 2 3 4 / 0", "0 2 3 4 / 1", "[(4,3,2,1^2)] ⊕ [(4,3,2^2)]"),
            ("(1,2)", "0 2 3 4 / 1", "0 1 3 4 / 2", "[(4,3,2^2)] ⊕ [(4,3^2,1)]"),
            ("(2,3)", "0 1 3 4 / 2", "0 1 2 4 / 3", "[(4,3^2,1)] ⊕ [(4^2,2,1)]"),
            ("(3,4)", "0 1 2 4 / 3", "0 1 2 3 / 4", "[(4^2,2,1)] ⊕ [(5,3,2,1)]"),
        ];
        let all = admissible_involutions(&[0, 1, 2, 3, 4], 3).unwrap();
        for (i, (name, a, b, module)) in all.iter().zip(expected) {
            assert_eq!(i.to_string(), name);
            let terms: Vec<String> = c_symbol_terms(&lambda, i).unwrap().iter().map(|s| s.to_string()).collect();
            assert_eq!(terms, [a, b]);
            assert_eq!(c_symbol(&lambda, i).unwrap().to_string(), module);
        }
    }

    #[test]
    fn partition_form_matches_symbol_form() {
        let q = p(&[4, 3, 3, 1]);
        let lambda = Symbol::from_partition(&q);
        for sigma in all_cycle_structure_sets(&q) {
            let iota = involution_of(&q, &sigma);
            assert_eq!(cycle_structure_of(&q, &iota), sigma);
            assert_eq!(c_partition(&q, &sigma).unwrap(), c_symbol(&lambda, &iota).unwrap());
        }
        let sigma = CycleStructureSet::new([(Square::new(3, 3), Square::new(4, 2))]);
        assert_eq!(involution_of(&q, &sigma).to_string(), "(1,2)");
        assert_eq!(c_partition(&q, &sigma).unwrap().to_string(), "[(4,3,2^2)] ⊕ [(4,3^2,1)]");
    }

    #[test]
    fn trivial_modules() {
        let q = p(&[3, 2, 1]);
        assert_eq!(c_partition(&q, &CycleStructureSet::empty()).unwrap().components, vec![q.clone()]);
        let lambda = Symbol::from_partition(&q);
        let (z1, _) = lambda.singles_doubles();
        let i = admissible_involutions(&z1, lambda.defect()).unwrap();
        assert_eq!(i.len(), 1);
        assert_eq!(c_symbol(&lambda, &i[0]).unwrap().components, vec![q]);
    }

    #[test]
    fn worked_example_family_and_ladder() {
        let fams = families(4, 3);
        let fam = fams.iter().find(|f| f.contains(&p(&[4, 3, 3, 1]))).unwrap();
        let names: Vec<String> = fam.iter().map(Partition::exponent_notation).collect();
        assert_eq!(names, ["(4,3,2,1^2)", "(4,3,2^2)", "(4,3^2,1)", "(4^2,2,1)", "(5,3,2,1)"]);
        let ladder = family_ladder(&p(&[4, 3, 2, 1, 1])).unwrap();
        let steps: Vec<Partition> = ladder.iter().map(|(q, _)| q.clone()).collect();
        assert_eq!(steps, vec![p(&[4, 3, 2, 1, 1]), p(&[4, 3, 2, 2]), p(&[4, 3, 3, 1]), p(&[4, 4, 2, 1]), p(&[5, 3, 2, 1])]);
        for w in ladder.windows(2) {
            let module = c_partition(&w[0].0, &w[0].1).unwrap();
            assert!(module.components.contains(&w[0].0) && module.components.contains(&w[1].0));
        }
    }
}
