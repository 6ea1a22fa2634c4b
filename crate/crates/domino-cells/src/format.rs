//! JSON forms of the core values.

use domino_cells_core::cells::{CellPartition, Side};
use domino_cells_core::constructible::ConstructibleModule;
use domino_cells_core::hecke::LaurentPolynomial;
use domino_cells_core::partition::{Partition, Square};
use domino_cells_core::rs::TableauPair;
use domino_cells_core::{DominoTableau, SignedPermutation, Symbol};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

fn err(e: impl std::fmt::Display) -> FormatError {
    FormatError(e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominoJson {
    pub label: u32,
    pub squares: [[u32; 2]; 2],
}

/// `{"rank", "shape", "dominoes": [{"label", "squares": [[i,j],[i,j]]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub rank: u32,
    pub shape: Vec<u32>,
    pub dominoes: Vec<DominoJson>,
}

impl From<&DominoTableau> for TableauJson {
    fn from(t: &DominoTableau) -> Self {
        TableauJson {
            rank: t.rank(),
            shape: t.shape().parts().to_vec(),
            dominoes: t
                .dominoes()
                .map(|d| DominoJson {
                    label: d.label,
                    squares: d.squares.map(|s| [s.row, s.col]),
                })
                .collect(),
        }
    }
}

impl TryFrom<&TableauJson> for DominoTableau {
    type Error = FormatError;

    fn try_from(j: &TableauJson) -> Result<Self, FormatError> {
        let mut dominoes = j.dominoes.clone();
        dominoes.sort_by_key(|d| d.label);
        if dominoes.iter().enumerate().any(|(i, d)| d.label != i as u32 + 1) {
            return Err(FormatError("domino labels must be 1, 2, ..., n".into()));
        }
        let squares = dominoes
            .iter()
            .map(|d| d.squares.map(|[r, c]| Square::new(r, c)))
            .collect();
        let t = DominoTableau::new(j.rank, squares).map_err(err)?;
        if t.shape().parts() != j.shape.as_slice() {
            return Err(FormatError(format!("declared shape {:?} but the dominoes cover {}", j.shape, t.shape())));
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsJson {
    pub word: Vec<i32>,
    pub rank: u32,
    pub left: TableauJson,
    pub right: TableauJson,
}

impl RsJson {
    pub fn new(w: &SignedPermutation, rank: u32, pair: &TableauPair) -> Self {
        RsJson { word: w.window().to_vec(), rank, left: (&pair.left).into(), right: (&pair.right).into() }
    }

    pub fn pair(&self) -> Result<TableauPair, FormatError> {
        Ok(TableauPair { left: (&self.left).try_into()?, right: (&self.right).try_into()? })
    }
}

/// Cells of `W_n`, each element written as its window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellsJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<u32>,
    /// `[a, b]` for Kazhdan–Lusztig cells.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight: Option<[u32; 2]>,
    pub side: String,
    pub cell_count: usize,
    pub blocks: Vec<Vec<Vec<i32>>>,
}

impl CellsJson {
    pub fn new(cells: &CellPartition, weight: Option<[u32; 2]>) -> Self {
        CellsJson {
            n: cells.n,
            rank: cells.rank,
            weight,
            side: cells.side.to_string(),
            cell_count: cells.blocks.len(),
            blocks: cells
                .blocks
                .iter()
                .map(|b| b.iter().map(|w| w.window().to_vec()).collect())
                .collect(),
        }
    }

    pub fn cells(&self) -> Result<CellPartition, FormatError> {
        let side: Side = self.side.parse().map_err(FormatError)?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|w| SignedPermutation::new(w.clone()).map_err(err)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        let cells = CellPartition::new(self.n, self.rank, side, blocks);
        if cells.blocks.len() != self.cell_count {
            return Err(FormatError(format!("cell_count {} but {} blocks", self.cell_count, cells.blocks.len())));
        }
        Ok(cells)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolJson {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
    pub defect: u32,
    pub text: String,
}

impl From<&Symbol> for SymbolJson {
    fn from(s: &Symbol) -> Self {
        SymbolJson { top: s.top().to_vec(), bottom: s.bottom().to_vec(), defect: s.defect(), text: s.to_string() }
    }
}

impl TryFrom<&SymbolJson> for Symbol {
    type Error = FormatError;

    fn try_from(j: &SymbolJson) -> Result<Self, FormatError> {
        Symbol::new(j.top.clone(), j.bottom.clone()).map_err(err)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub components: Vec<Vec<u32>>,
    pub text: String,
}

impl From<&ConstructibleModule> for ModuleJson {
    fn from(m: &ConstructibleModule) -> Self {
        ModuleJson {
            components: m.components.iter().map(|p| p.parts().to_vec()).collect(),
            text: m.to_string(),
        }
    }
}

impl TryFrom<&ModuleJson> for ConstructibleModule {
    type Error = FormatError;

    fn try_from(j: &ModuleJson) -> Result<Self, FormatError> {
        let components = j
            .components
            .iter()
            .map(|p| Partition::new(p.clone()).map_err(err))
            .collect::<Result<_, _>>()?;
        Ok(ConstructibleModule::new(components))
    }
}

/// A Laurent polynomial as `[exponent, coefficient]` pairs.
pub fn laurent_to_json(p: &LaurentPolynomial) -> Vec<[i64; 2]> {
    p.terms().map(|(e, c)| [e as i64, c]).collect()
}

pub fn laurent_from_json(terms: &[[i64; 2]]) -> Result<LaurentPolynomial, FormatError> {
    terms
        .iter()
        .map(|&[e, c]| i32::try_from(e).map(|e| (e, c)).map_err(err))
        .collect::<Result<Vec<_>, _>>()
        .map(LaurentPolynomial::from_terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use domino_cells_core::cells::combinatorial_cells;
    use domino_cells_core::rs::g_r;

    #[test]
    fn tableau_json_shape() {
        let t = g_r(&"2,-1".parse().unwrap(), 0).right;
        let v = serde_json::to_value(TableauJson::from(&t)).unwrap();
        assert_eq!(v["rank"], 0);
        assert_eq!(v["dominoes"][0]["label"], 1);
        assert_eq!(v["dominoes"][0]["squares"][0], serde_json::json!([1, 1]));
    }

    #[test]
    fn rejects_inconsistent_input() {
        let t = g_r(&"2,-1".parse().unwrap(), 0).right;
        let mut j = TableauJson::from(&t);
        j.shape = vec![9];
        assert!(DominoTableau::try_from(&j).is_err());
        let mut j = TableauJson::from(&t);
        j.dominoes[0].label = 7;
        assert!(DominoTableau::try_from(&j).is_err());
        let mut c = CellsJson::new(&combinatorial_cells(2, 0, Side::Left), None);
        c.side = "diagonal".into();
        assert!(c.cells().is_err());
    }

    #[test]
    fn laurent_json() {
        let p = LaurentPolynomial::from_terms([(2, 1), (-1, -3)]);
        assert_eq!(laurent_to_json(&p), vec![[-1, -3], [2, 1]]);
        assert_eq!(laurent_from_json(&laurent_to_json(&p)).unwrap(), p);
    }
}
