//! The in-memory workbook model: sheets, cells, macros and metadata.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::addr::CellAddress;
use crate::formula::{format_number, FormulaAst};

/// The seven self-assessed importance labels a workbook may declare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Importance {
    NotImportant,
    LittleImportance,
    SomeImportance,
    ModerateImportance,
    Important,
    VeryImportant,
    DontKnow,
}

impl Importance {
    pub const ALL: [Importance; 7] = [
        Importance::NotImportant,
        Importance::LittleImportance,
        Importance::SomeImportance,
        Importance::ModerateImportance,
        Importance::Important,
        Importance::VeryImportant,
        Importance::DontKnow,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Importance::NotImportant => "Not important",
            Importance::LittleImportance => "Little importance",
            Importance::SomeImportance => "Some importance",
            Importance::ModerateImportance => "Moderate importance",
            Importance::Important => "Important",
            Importance::VeryImportant => "Very important",
            Importance::DontKnow => "Don't Know",
        }
    }

    pub fn from_label(label: &str) -> Option<Importance> {
        Importance::ALL.into_iter().find(|i| i.label() == label)
    }
}

/// Declared workbook attributes from `META` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub importance: Option<Importance>,
    pub methodology: Option<bool>,
    pub owner: Option<String>,
}

impl Metadata {
    /// A workbook "lacks methodology" unless it explicitly declares one.
    pub fn methodology_declared(&self) -> bool {
        self.methodology == Some(true)
    }
}

/// A recorded macro: name plus opaque body lines. Only presence and size are
/// modeled; bodies are never interpreted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacroRecord {
    pub name: String,
    pub body: Vec<String>,
}

impl MacroRecord {
    pub fn line_count(&self) -> usize {
        self.body.len()
    }
}

/// Cell contents. A formula keeps its exact source text alongside the AST.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CellContent {
    Empty,
    Number(f64),
    Text(String),
    Formula { ast: FormulaAst, source: String },
}

impl CellContent {
    pub fn is_empty(&self) -> bool {
        matches!(self, CellContent::Empty)
    }

    pub fn formula(&self) -> Option<&FormulaAst> {
        match self {
            CellContent::Formula { ast, .. } => Some(ast),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub address: CellAddress,
    pub content: CellContent,
    pub hidden: bool,
}

/// One sheet: a sparse grid keyed by (row, col), plus hidden row/column sets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sheet {
    pub name: String,
    pub cells: BTreeMap<(u32, u32), Cell>,
    pub hidden_rows: BTreeSet<u32>,
    pub hidden_cols: BTreeSet<u32>,
}

impl Sheet {
    pub fn new(name: impl Into<String>) -> Self {
        Sheet {
            name: name.into(),
            cells: BTreeMap::new(),
            hidden_rows: BTreeSet::new(),
            hidden_cols: BTreeSet::new(),
        }
    }

    pub fn cell(&self, col: u32, row: u32) -> Option<&Cell> {
        self.cells.get(&(row, col))
    }

    /// Cells in (row, col) order.
    pub fn iter_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.values()
    }

    pub fn set(&mut self, col: u32, row: u32, content: CellContent) {
        let address = CellAddress::new(self.name.clone(), col, row);
        self.cells.insert(
            (row, col),
            Cell {
                address,
                content,
                hidden: false,
            },
        );
    }

    /// Highest row index holding a non-empty cell, or 0 for a blank sheet.
    pub fn max_populated_row(&self) -> u32 {
        self.cells
            .values()
            .filter(|c| !c.content.is_empty())
            .map(|c| c.address.row)
            .max()
            .unwrap_or(0)
    }

    pub fn row_has_content(&self, row: u32) -> bool {
        self.cells
            .range((row, 0)..(row + 1, 0))
            .any(|(_, c)| !c.content.is_empty())
    }

    pub fn col_has_content(&self, col: u32) -> bool {
        self.cells
            .values()
            .any(|c| c.address.col == col && !c.content.is_empty())
    }
}

/// An annotation attached to a cell by an autonomous correction.
///
/// Annotations are audit-workspace state: the document format has no
/// directive for them, so they live only on the in-memory copy.
pub type Annotations = BTreeMap<CellAddress, String>;

/// A parsed workbook.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Workbook {
    pub name: String,
    pub sheets: Vec<Sheet>,
    pub macros: Vec<MacroRecord>,
    pub metadata: Metadata,
    #[serde(default)]
    pub annotations: Annotations,
}

impl Workbook {
    pub fn new(name: impl Into<String>) -> Self {
        Workbook {
            name: name.into(),
            sheets: Vec::new(),
            macros: Vec::new(),
            metadata: Metadata::default(),
            annotations: BTreeMap::new(),
        }
    }

    pub fn sheet(&self, name: &str) -> Option<&Sheet> {
        self.sheets.iter().find(|s| s.name == name)
    }

    pub fn sheet_mut(&mut self, name: &str) -> Option<&mut Sheet> {
        self.sheets.iter_mut().find(|s| s.name == name)
    }

    pub fn has_sheet(&self, name: &str) -> bool {
        self.sheet(name).is_some()
    }

    pub fn cell(&self, addr: &CellAddress) -> Option<&Cell> {
        self.sheet(&addr.sheet)?.cell(addr.col, addr.row)
    }

    /// All cells across sheets, in sheet order then (row, col) order.
    pub fn iter_cells(&self) -> impl Iterator<Item = &Cell> {
        self.sheets.iter().flat_map(|s| s.iter_cells())
    }

    /// Serializes to the canonical line-oriented document form.
    ///
    /// Parsing the result reproduces this workbook field for field
    /// (annotations excepted; they are not part of the document format).
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("WORKBOOK {}\n", self.name));
        if let Some(imp) = self.metadata.importance {
            out.push_str(&format!("META importance {}\n", imp.label()));
        }
        if let Some(m) = self.metadata.methodology {
            out.push_str(&format!("META methodology {m}\n"));
        }
        if let Some(owner) = &self.metadata.owner {
            out.push_str(&format!("META owner {owner}\n"));
        }
        for mac in &self.macros {
            out.push_str(&format!("MACRO {} {}\n", mac.name, mac.line_count()));
            for line in &mac.body {
                out.push_str(line);
                out.push('\n');
            }
        }
        for sheet in &self.sheets {
            out.push_str(&format!("SHEET {}\n", sheet.name));
            for cell in sheet.iter_cells() {
                let a1 = cell.address.a1();
                match &cell.content {
                    CellContent::Empty => {}
                    CellContent::Number(n) => {
                        out.push_str(&format!("CELL {a1} = {}\n", format_number(*n)));
                    }
                    CellContent::Text(t) => {
                        out.push_str(&format!("CELL {a1} = \"{t}\"\n"));
                    }
                    CellContent::Formula { source, .. } => {
                        out.push_str(&format!("CELL {a1} := {source}\n"));
                    }
                }
            }
            for row in &sheet.hidden_rows {
                out.push_str(&format!("HIDE ROW {row}\n"));
            }
            for col in &sheet.hidden_cols {
                out.push_str(&format!("HIDE COL {}\n", crate::addr::col_letters(*col)));
            }
            for cell in sheet.iter_cells() {
                if cell.hidden {
                    out.push_str(&format!("HIDE CELL {}\n", cell.address.a1()));
                }
            }
            out.push_str("END\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn importance_labels_round_trip() {
        for i in Importance::ALL {
            assert_eq!(Importance::from_label(i.label()), Some(i));
        }
        assert_eq!(Importance::from_label("Vital"), None);
    }

    #[test]
    fn max_populated_row_ignores_empty_cells() {
        let mut sheet = Sheet::new("S");
        sheet.set(1, 3, CellContent::Number(1.0));
        sheet.set(1, 9, CellContent::Empty);
        assert_eq!(sheet.max_populated_row(), 3);
    }
}
