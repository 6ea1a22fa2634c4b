use std::collections::BTreeSet;

use domino_cells_core::cells::CellAnalysis;
use domino_cells_core::partition::Partition;
use domino_cells_core::Side;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn double_rank_generation_matches_moving_through() {
    for n in 1..=4 {
        let analyses: Vec<CellAnalysis> = (0..=5).map(|r| CellAnalysis::new(n, r)).collect();
        for r in 0..=4 {
            let a = &analyses[r];
            let via = a.cells_via_double_rank(&analyses[r + 1]);
            assert_eq!(via, a.cells(Side::Left), "n = {n}, r = {r}");
        }
    }
}

#[test]
fn cells_are_stable_beyond_n_minus_two() {
    for n in 1..=4usize {
        let lo = n.saturating_sub(1) as u32;
        let reference = CellAnalysis::new(n, lo);
        assert_eq!(reference.cells(Side::Left), reference.equal_right_tableau());
        for r in lo + 1..=lo + 2 {
            let other = CellAnalysis::new(n, r);
            assert!(other.cells(Side::Left).same_blocks(&reference.cells(Side::Left)));
            assert!(other.cells(Side::TwoSided).same_blocks(&reference.cells(Side::TwoSided)));
        }
    }
}

#[test]
fn two_sided_cells_are_heart_classes_and_distinguished() {
    for n in 1..=4u32 {
        for r in 0..=4u32 {
            let a = CellAnalysis::new(n as usize, r);
            let all_shapes = Partition::all_of_rank(n, r);
            let mut covered = BTreeSet::new();
            for block in a.cells(Side::TwoSided).blocks {
                let d = a.two_sided_shape_data(&block).unwrap();
                // every shape with the same HC and heart lies in this cell
                let mut expected: Vec<Partition> = all_shapes
                    .iter()
                    .filter(|q| q.hc() == d.hc.as_slice() && q.heart() == d.heart)
                    .cloned()
                    .collect();
                expected.sort();
                assert_eq!(d.shapes, expected, "n = {n}, r = {r}");
                for q in &d.shapes {
                    assert!(covered.insert(q.clone()));
                }
                let hc = all_shapes.iter().find(|q| q == &&d.shapes[0]).unwrap();
                if hc.corner_hole_data().hc_star().len() == d.hc.len() {
                    assert_eq!(d.shapes.len() as u64, binomial(d.hc.len() as u64, d.kappa as u64));
                }
                let distinguished = d.kappa == 0 || d.kappa as usize == d.holes.len();
                assert_eq!(!d.intersection.is_empty(), distinguished, "n = {n}, r = {r}, {:?}", d.shapes);
                assert!(d.intersection.len() <= 1);
                if r == 0 || r + 2 > n {
                    assert_eq!(d.intersection.len(), 1);
                }
                for s in &d.left_cell_shapes {
                    assert!(s.len().is_power_of_two());
                }
            }
        }
    }
}

#[test]
fn worked_example_two_sided_cell() {
    let a = CellAnalysis::new(4, 2);
    let target: Partition = "4,3,3,1".parse().unwrap();
    let block = a
        .cells(Side::TwoSided)
        .blocks
        .into_iter()
        .find(|b| a.pair(&b[0]).is_some() && b.iter().any(|w| a.pair(w).unwrap().right.shape() == &target))
        .unwrap();
    let d = a.two_sided_shape_data(&block).unwrap();
    let names: Vec<String> = d.shapes.iter().map(Partition::exponent_notation).collect();
    assert_eq!(names, ["(4,3,2,1^2)", "(4,3,2^2)", "(4,3^2,1)", "(4^2,2,1)", "(5,3,2,1)"]);
    assert_eq!(d.kappa, 1);
    let pairs: Vec<Vec<String>> = d
        .left_cell_shapes
        .iter()
        .map(|s| s.iter().map(Partition::exponent_notation).collect())
        .collect();
    assert_eq!(
        pairs,
        [
            ["(4,3,2,1^2)", "(4,3,2^2)"],
            ["(4,3,2^2)", "(4,3^2,1)"],
            ["(4,3^2,1)", "(4^2,2,1)"],
            ["(4^2,2,1)", "(5,3,2,1)"],
        ]
    );
    assert!(d.intersection.is_empty());
}
