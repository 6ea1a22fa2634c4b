use std::collections::BTreeSet;

use domino_cells_core::cells::CellAnalysis;
use domino_cells_core::constructible::{
    admissible_involutions, c_partition, c_symbol, cycle_structure_of, families, involution_of, tableau_module,
};
use domino_cells_core::partition::Partition;
use domino_cells_core::symbol::z1_to_hc;
use domino_cells_core::tableau::{all_cycle_structure_sets, construct_with_cs};
use domino_cells_core::{Bipartition, Side, Symbol};

#[test]
fn partitions_symbols_and_bipartitions_correspond() {
    for n in 0..=8 {
        let bips: BTreeSet<Bipartition> = Bipartition::all_of_size(n).into_iter().collect();
        for rank in 0..=4 {
            let parts = Partition::all_of_rank(n, rank);
            let mut images = BTreeSet::new();
            for p in &parts {
                let s = Symbol::from_partition(p);
                assert_eq!(s.defect(), rank + 1);
                assert_eq!(&s.to_partition().unwrap(), p);
                let bp = s.to_bipartition();
                assert_eq!(bp.size(), n);
                assert_eq!(Symbol::from_bipartition(&bp, rank + 1), s);
                images.insert(bp);
            }
            assert_eq!(images, bips, "n = {n}, r = {rank}");
        }
    }
}

#[test]
fn singles_correspond_to_hc_squares() {
    for size in 0..=10 {
        for p in Partition::all_of_size(size) {
            let s = Symbol::from_partition(&p);
            let (z1, _) = s.singles_doubles();
            let map = z1_to_hc(&p);
            let keys: Vec<u32> = map.iter().map(|(z, _)| *z).collect();
            assert_eq!(keys, z1, "{p}");
            let squares: BTreeSet<_> = map.iter().map(|(_, sq)| *sq).collect();
            assert_eq!(squares, p.hc().iter().copied().collect::<BTreeSet<_>>());
            // order-preserving in the row index, filled squares on the bottom row
            assert!(map.windows(2).all(|w| w[0].1.row > w[1].1.row));
            let data = p.corner_hole_data();
            for (z, sq) in &map {
                assert_eq!(s.bottom().contains(z), data.is_filled(*sq), "{p} {sq}");
            }
        }
    }
}

#[test]
fn admissible_involutions_correspond_to_cycle_structure_sets() {
    for size in 0..=10 {
        for p in Partition::all_of_size(size) {
            if p.rank() > 3 {
                continue;
            }
            let lambda = Symbol::from_partition(&p);
            let (z1, _) = lambda.singles_doubles();
            let involutions: BTreeSet<_> = admissible_involutions(&z1, lambda.defect()).unwrap().into_iter().collect();
            let from_sets: BTreeSet<_> = all_cycle_structure_sets(&p).iter().map(|s| involution_of(&p, s)).collect();
            assert_eq!(involutions, from_sets, "{p}");
            for i in &involutions {
                assert_eq!(involution_of(&p, &cycle_structure_of(&p, i)), *i);
            }
        }
    }
}

#[test]
fn three_constructions_of_constructible_modules_agree() {
    for size in 0..=8 {
        for p in Partition::all_of_size(size) {
            if p.rank() > 3 {
                continue;
            }
            let lambda = Symbol::from_partition(&p);
            for sigma in all_cycle_structure_sets(&p) {
                let by_partition = c_partition(&p, &sigma).unwrap();
                let by_symbol = c_symbol(&lambda, &involution_of(&p, &sigma)).unwrap();
                let t = construct_with_cs(&p, &sigma).unwrap();
                assert_eq!(by_partition, by_symbol, "{p} {sigma}");
                assert_eq!(tableau_module(&t), by_partition, "{p} {sigma}");
            }
        }
    }
}

#[test]
fn families_are_shape_classes_of_two_sided_cells() {
    for n in 0..=5u32 {
        for s in 1..=4u32 {
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
            assert_eq!(families(n, s), classes, "n = {n}, s = {s}");
        }
    }
}
