use domino_cells::format::{CellsJson, ModuleJson, RsJson, SymbolJson};
use domino_cells_core::cells::{combinatorial_cells, Side};
use domino_cells_core::constructible::{c_partition, ConstructibleModule};
use domino_cells_core::hecke::{kl_cells, WeightFunction};
use domino_cells_core::partition::Partition;
use domino_cells_core::rs::{g_r, g_r_inverse};
use domino_cells_core::tableau::all_cycle_structure_sets;
use domino_cells_core::{SignedPermutation, Symbol};
use domino_cells_core::hecke::WeylGroupB;

fn through_text<T: serde::Serialize + serde::de::DeserializeOwned>(v: &T) -> T {
    serde_json::from_str(&serde_json::to_string(v).unwrap()).unwrap()
}

#[test]
fn tableau_pairs() {
    for r in 0..3 {
        for w in WeylGroupB::new(3).elements() {
            let pair = g_r(w, r);
            let j = through_text(&RsJson::new(w, r, &pair));
            let back = j.pair().unwrap();
            assert_eq!(back, pair);
            assert_eq!(&g_r_inverse(&back).unwrap(), w);
            assert_eq!(SignedPermutation::new(j.word).unwrap(), *w);
        }
    }
}

#[test]
fn cell_partitions() {
    for side in [Side::Left, Side::Right, Side::TwoSided] {
        let cells = combinatorial_cells(3, 1, side);
        assert_eq!(through_text(&CellsJson::new(&cells, None)).cells().unwrap(), cells);
    }
    let kl = kl_cells(2, WeightFunction::new(1, 3).unwrap()).unwrap();
    let j = through_text(&CellsJson::new(kl.cells(Side::Left), Some([1, 3])));
    assert_eq!(j.weight, Some([1, 3]));
    assert!(j.cells().unwrap().same_blocks(kl.cells(Side::Left)));
}

#[test]
fn symbols_and_modules() {
    for p in Partition::all_of_size(8) {
        let s = Symbol::from_partition(&p);
        let j = through_text(&SymbolJson::from(&s));
        assert_eq!(j.text, s.to_string());
        assert_eq!(Symbol::try_from(&j).unwrap(), s);
        for sigma in all_cycle_structure_sets(&p) {
            let m = c_partition(&p, &sigma).unwrap();
            let j = through_text(&ModuleJson::from(&m));
            assert_eq!(ConstructibleModule::try_from(&j).unwrap(), m);
        }
    }
}
