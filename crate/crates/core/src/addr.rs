//! Cell addressing: A1-style parsing and printing, grid bounds.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest addressable row per sheet.
pub const MAX_ROW: u32 = 10_000;
/// Largest addressable column per sheet.
pub const MAX_COL: u32 = 1_000;

/// A fully qualified cell address: sheet name plus 1-based column and row.
///
/// The canonical text form is `A1` style with an optional `Sheet!` prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellAddress {
    pub sheet: String,
    pub col: u32,
    pub row: u32,
}

impl CellAddress {
    pub fn new(sheet: impl Into<String>, col: u32, row: u32) -> Self {
        let sheet = sheet.into();
        debug_assert!(col >= 1 && row >= 1 && !sheet.is_empty());
        CellAddress { sheet, col, row }
    }

    /// A1-style form without the sheet prefix.
    pub fn a1(&self) -> String {
        format!("{}{}", col_letters(self.col), self.row)
    }

    /// Canonical form including the sheet prefix.
    pub fn qualified(&self) -> String {
        format!("{}!{}", self.sheet, self.a1())
    }
}

impl fmt::Display for CellAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.qualified())
    }
}

// Audit ordering is (sheet, row, col): findings walk the grid top-to-bottom.
impl Ord for CellAddress {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.sheet, self.row, self.col).cmp(&(&other.sheet, other.row, other.col))
    }
}

impl PartialOrd for CellAddress {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finding or correction site: the whole workbook, one sheet, or one cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Location {
    Workbook,
    Sheet(String),
    Cell(CellAddress),
}

impl Location {
    pub fn sheet_name(&self) -> Option<&str> {
        match self {
            Location::Workbook => None,
            Location::Sheet(s) => Some(s),
            Location::Cell(a) => Some(&a.sheet),
        }
    }

    pub fn cell(&self) -> Option<&CellAddress> {
        match self {
            Location::Cell(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Workbook => write!(f, "workbook"),
            Location::Sheet(s) => write!(f, "{s}"),
            Location::Cell(a) => write!(f, "{a}"),
        }
    }
}

/// Converts a 1-based column index to spreadsheet letters (1 → A, 27 → AA).
pub fn col_letters(col: u32) -> String {
    debug_assert!(col >= 1);
    let mut n = col;
    let mut out = Vec::new();
    while n > 0 {
        let rem = ((n - 1) % 26) as u8;
        out.push(b'A' + rem);
        n = (n - 1) / 26;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

/// Parses spreadsheet column letters back to a 1-based index.
///
/// Returns `None` for empty input, non-letters, or columns beyond [`MAX_COL`].
pub fn parse_col_letters(s: &str) -> Option<u32> {
    if s.is_empty() {
        return None;
    }
    let mut col: u32 = 0;
    for c in s.chars() {
        if !c.is_ascii_alphabetic() {
            return None;
        }
        let d = (c.to_ascii_uppercase() as u32) - ('A' as u32) + 1;
        col = col.checked_mul(26)?.checked_add(d)?;
        if col > MAX_COL {
            return None;
        }
    }
    Some(col)
}

/// Parses a bare `A1`-style reference (no sheet prefix) into (col, row).
///
/// Enforces the grid bounds: rows ≤ [`MAX_ROW`], columns ≤ [`MAX_COL`].
pub fn parse_a1(s: &str) -> Option<(u32, u32)> {
    let split = s.find(|c: char| c.is_ascii_digit())?;
    let (letters, digits) = s.split_at(split);
    if letters.is_empty() || digits.is_empty() {
        return None;
    }
    let col = parse_col_letters(letters)?;
    let row: u32 = digits.parse().ok()?;
    if row == 0 || row > MAX_ROW {
        return None;
    }
    Some((col, row))
}

/// Parses an address with an optional `Sheet!` prefix, defaulting to `host_sheet`.
pub fn parse_address(s: &str, host_sheet: &str) -> Option<CellAddress> {
    match s.split_once('!') {
        Some((sheet, rest)) => {
            if !is_valid_sheet_name(sheet) {
                return None;
            }
            let (col, row) = parse_a1(rest)?;
            Some(CellAddress::new(sheet, col, row))
        }
        None => {
            let (col, row) = parse_a1(s)?;
            Some(CellAddress::new(host_sheet, col, row))
        }
    }
}

/// Sheet names are single tokens: a letter or underscore followed by
/// letters, digits or underscores. Keeps the line-oriented format and the
/// formula `Sheet!A1` syntax unambiguous.
pub fn is_valid_sheet_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn col_letters_round_trip() {
        for col in [1, 2, 25, 26, 27, 52, 53, 702, 703, 1000] {
            assert_eq!(parse_col_letters(&col_letters(col)), Some(col));
        }
        assert_eq!(col_letters(1), "A");
        assert_eq!(col_letters(26), "Z");
        assert_eq!(col_letters(27), "AA");
    }

    #[test]
    fn a1_bounds_enforced() {
        assert_eq!(parse_a1("A1"), Some((1, 1)));
        assert_eq!(parse_a1("ALL10000"), Some((1000, 10_000)));
        assert_eq!(parse_a1("A0"), None);
        assert_eq!(parse_a1("A10001"), None);
        assert_eq!(parse_a1("ALM1"), None); // column 1001
        assert_eq!(parse_a1("A"), None);
        assert_eq!(parse_a1("1"), None);
    }

    #[test]
    fn qualified_addresses() {
        let a = parse_address("Data!B3", "Main").unwrap();
        assert_eq!(a, CellAddress::new("Data", 2, 3));
        let b = parse_address("B3", "Main").unwrap();
        assert_eq!(b.sheet, "Main");
        assert_eq!(b.qualified(), "Main!B3");
    }

    #[test]
    fn address_order_is_sheet_row_col() {
        let mut v = vec![
            CellAddress::new("S", 2, 1),
            CellAddress::new("S", 1, 2),
            CellAddress::new("S", 1, 1),
        ];
        v.sort();
        assert_eq!(
            v.iter().map(|a| a.a1()).collect::<Vec<_>>(),
            vec!["A1", "B1", "A2"]
        );
    }
}
