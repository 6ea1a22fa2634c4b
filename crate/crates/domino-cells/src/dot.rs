//! Graphviz output for cell partitions.

use std::fmt::Write;

use domino_cells_core::cells::CellPartition;

/// One cluster per cell, nodes labeled by window, in the canonical block order.
/// `W_0` gives an empty graph.
pub fn emit_cells_dot(cells: &CellPartition) -> String {
    let mut out = String::new();
    let rank = cells.rank.map(|r| format!(", rank {r}")).unwrap_or_default();
    writeln!(out, "digraph cells {{").unwrap();
    writeln!(out, "  label=\"{} cells of W_{}{rank}\";", cells.side, cells.n).unwrap();
    writeln!(out, "  node [shape=box, fontname=monospace];").unwrap();
    if cells.n > 0 {
        for (i, block) in cells.blocks.iter().enumerate() {
            writeln!(out, "  subgraph cluster_{i} {{").unwrap();
            writeln!(out, "    label=\"{}\";", i + 1).unwrap();
            for w in block {
                writeln!(out, "    \"{w}\";").unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Number of `subgraph cluster_` entries in DOT text.
pub fn cluster_count(dot: &str) -> usize {
    dot.matches("subgraph cluster_").count()
}
