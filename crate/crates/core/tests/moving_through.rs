use domino_cells_core::partition::Partition;
use domino_cells_core::tableau::{
    all_cycle_structure_sets, complete_to_cs, construct_with_cs, enumerate_sdt, Cycle, CycleKind,
    DominoTableau, SquareClass,
};

fn same_labels_in(t: &DominoTableau, cycles: &[Cycle]) -> Vec<Cycle> {
    let own = t.noncore_open_cycles();
    cycles
        .iter()
        .map(|c| {
            own.iter()
                .find(|o| o.labels == c.labels)
                .unwrap_or_else(|| panic!("cycle {:?} is not non-core open in {t}", c.labels))
                .clone()
        })
        .collect()
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1u32 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

#[test]
fn cycles_partition_the_labels() {
    for rank in 0..=3 {
        for n in 0..=4 {
            for t in enumerate_sdt(n, rank, None) {
                let mut labels: Vec<u32> = t.cycles().into_iter().flat_map(|c| c.labels).collect();
                labels.sort();
                assert_eq!(labels, (1..=n).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn d_prime_shares_exactly_the_fixed_square() {
    for rank in 0..=2 {
        for n in 1..=4 {
            for t in enumerate_sdt(n, rank, None) {
                for k in 1..=n {
                    let d = t.domino(k).unwrap();
                    let dp = t.d_prime(k).unwrap();
                    let common: Vec<_> = d.iter().filter(|s| dp.contains(s)).collect();
                    assert_eq!(common.len(), 1, "{t} label {k}");
                    assert_eq!(t.classify_square(*common[0]), SquareClass::Fixed);
                }
            }
        }
    }
}

#[test]
fn moving_through_is_an_involution_preserving_fixed_labels() {
    for rank in 0..=2 {
        for n in 0..=4 {
            for t in enumerate_sdt(n, rank, None) {
                let star = t.noncore_open_cycles();
                for c in subsets(&star) {
                    let moved = t.move_through(&c).unwrap();
                    assert_eq!(moved.rank(), rank);
                    for s in t.shape().squares() {
                        if t.classify_square(s) == SquareClass::Fixed {
                            assert_eq!(moved.label_at(s), t.label_at(s));
                        }
                    }
                    let back = moved.move_through(&same_labels_in(&moved, &c)).unwrap();
                    assert_eq!(back, t);
                }
            }
        }
    }
}

#[test]
fn moving_through_one_cycle_at_a_time_agrees() {
    for rank in 0..=2 {
        for n in 0..=4 {
            for t in enumerate_sdt(n, rank, None) {
                let star = t.noncore_open_cycles();
                for c in subsets(&star) {
                    let at_once = t.move_through(&c).unwrap();
                    // forwards and backwards through the list
                    for order in [c.clone(), c.iter().rev().cloned().collect()] {
                        let mut cur = t.clone();
                        for cyc in &order {
                            cur = cur.move_through(&same_labels_in(&cur, &[cyc.clone()])).unwrap();
                        }
                        assert_eq!(cur, at_once);
                    }
                }
            }
        }
    }
}

#[test]
fn moving_through_composes_by_symmetric_difference() {
    for rank in 0..=2 {
        for n in 0..=4 {
            for t in enumerate_sdt(n, rank, None) {
                let star = t.noncore_open_cycles();
                let all = subsets(&star);
                for c1 in &all {
                    let once = t.move_through(c1).unwrap();
                    for c2 in &all {
                        let twice = once.move_through(&same_labels_in(&once, c2)).unwrap();
                        let sym_diff: Vec<Cycle> = star
                            .iter()
                            .filter(|c| c1.contains(c) != c2.contains(c))
                            .cloned()
                            .collect();
                        assert_eq!(twice, t.move_through(&sym_diff).unwrap(), "{t}");
                    }
                }
            }
        }
    }
}

#[test]
fn open_cycle_changes_shape_by_its_end_squares() {
    for rank in 0..=2 {
        for n in 1..=4 {
            for t in enumerate_sdt(n, rank, None) {
                for c in t.noncore_open_cycles() {
                    let moved = t.move_through(&[c.clone()]).unwrap();
                    let mut expected: Vec<_> = t.shape().squares().filter(|&s| Some(s) != c.start).collect();
                    expected.push(c.finish.unwrap());
                    expected.sort();
                    let mut got: Vec<_> = moved.shape().squares().collect();
                    got.sort();
                    assert_eq!(got, expected);
                }
            }
        }
    }
}

#[test]
fn core_open_cycles_raise_the_rank() {
    for rank in 0..=3 {
        for n in 1..=4 {
            for t in enumerate_sdt(n, rank, None) {
                let raised = t.move_through_core_open().unwrap();
                assert_eq!(raised.rank(), rank + 1);
                let core_open = t.cycles().iter().filter(|c| c.kind == CycleKind::CoreOpen).count();
                assert_eq!(core_open as u32, t.shape().gamma());
            }
        }
    }
}

#[test]
fn cycle_structure_is_valid_for_the_shape() {
    for rank in 0..=3 {
        for n in 0..=4 {
            for t in enumerate_sdt(n, rank, None) {
                t.cs_star().validate_for(t.shape()).unwrap();
            }
        }
    }
}

#[test]
fn prop_exists_and_cs2_up_to_ten_squares() {
    for m in 0..=10 {
        for p in Partition::all_of_size(m) {
            if p.rank() > 3 {
                continue;
            }
            for sigma in all_cycle_structure_sets(&p) {
                let t = construct_with_cs(&p, &sigma).unwrap_or_else(|e| panic!("{p} {sigma}: {e}"));
                assert_eq!(t.cs_star(), sigma);
                assert_eq!(t.shape().heart(), p.heart());
            }
            let star = p.corner_hole_data().hc_star();
            for s in subsets(&star) {
                if s.len() != p.kappa() as usize {
                    continue;
                }
                let sigma = complete_to_cs(&p, &s).unwrap();
                for (a, b) in sigma.pairs() {
                    assert!(s.contains(&a) != s.contains(&b));
                }
            }
        }
    }
}
