//! Latin square representation, validation, generators, and the `.ls` text
//! format.
//!
//! Indices are 0-based everywhere: an order-`n` square uses rows, columns,
//! and symbols from `0..n`. Human-facing 1-based labels are a presentation
//! concern and live in the CLI.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod enumerate;
mod format;
mod generate;

pub use enumerate::{enumerate_all, SquareEnumeration, ENUM_GUARD, ENUM_GUARD_OVERRIDE};
pub use format::{parse, serialize};
pub use generate::{cyclic, intercalate_power, product, random_square};

/// A single cell of a Latin square: symbol `sym` sits in row `row`, column
/// `col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub sym: usize,
}

impl Entry {
    pub fn new(row: usize, col: usize, sym: usize) -> Self {
        Entry { row, col, sym }
    }

    /// The three lines through this entry, in `Row < Col < Sym` order.
    pub fn lines(&self) -> [LineRef; 3] {
        [
            LineRef::row(self.row),
            LineRef::col(self.col),
            LineRef::sym(self.sym),
        ]
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.sym)
    }
}

/// The three kinds of lines of a Latin square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Row,
    Col,
    Sym,
}

/// A reference to one of the `3n` lines of an order-`n` square.
///
/// Lines of different kinds are distinct even when they carry the same
/// index; the derived ordering is `Row < Col < Sym`, then by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LineRef {
    pub kind: LineKind,
    pub index: usize,
}

impl LineRef {
    pub fn row(index: usize) -> Self {
        LineRef {
            kind: LineKind::Row,
            index,
        }
    }

    pub fn col(index: usize) -> Self {
        LineRef {
            kind: LineKind::Col,
            index,
        }
    }

    pub fn sym(index: usize) -> Self {
        LineRef {
            kind: LineKind::Sym,
            index,
        }
    }

    /// Position of this line in the fixed vertex order of `H^L`:
    /// rows `0..n`, then columns `n..2n`, then symbols `2n..3n`.
    pub fn vertex_index(&self, order: usize) -> usize {
        match self.kind {
            LineKind::Row => self.index,
            LineKind::Col => order + self.index,
            LineKind::Sym => 2 * order + self.index,
        }
    }

    /// Inverse of [`LineRef::vertex_index`].
    pub fn from_vertex_index(vertex: usize, order: usize) -> Self {
        match vertex / order {
            0 => LineRef::row(vertex % order),
            1 => LineRef::col(vertex % order),
            _ => LineRef::sym(vertex % order),
        }
    }
}

impl fmt::Display for LineRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            LineKind::Row => 'R',
            LineKind::Col => 'C',
            LineKind::Sym => 'S',
        };
        write!(f, "{}{}", tag, self.index)
    }
}

/// Errors produced while building or parsing Latin squares.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatinError {
    #[error("row {0} repeats a symbol")]
    RowViolation(usize),
    #[error("column {0} repeats a symbol")]
    ColViolation(usize),
    #[error("bad shape: {0}")]
    ShapeError(String),
    #[error("order {got} is invalid (must be at least {min})")]
    InvalidOrder { got: usize, min: usize },
    #[error("order {order} exceeds the guard ({guard})")]
    OrderTooLarge { order: usize, guard: usize },
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
}

/// An order-`n` Latin square stored row-major, with the two inverse lookup
/// tables needed to resolve an entry from any two of its coordinates.
#[derive(Debug, Clone)]
pub struct LatinSquare {
    order: usize,
    grid: Vec<usize>,
    // col_lookup[r * n + s] = the column c with grid[r][c] = s
    col_lookup: Vec<usize>,
    // row_lookup[c * n + s] = the row r with grid[r][c] = s
    row_lookup: Vec<usize>,
}

impl PartialEq for LatinSquare {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.grid == other.grid
    }
}

impl Eq for LatinSquare {}

impl std::hash::Hash for LatinSquare {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.grid.hash(state);
    }
}

impl LatinSquare {
    /// Validates `grid` as an order-`order` Latin square.
    ///
    /// Checks, in this order: the order is positive, the grid is
    /// `order x order` with symbols in `0..order` (`ShapeError`), every row
    /// is a permutation (`RowViolation`), every column is a permutation
    /// (`ColViolation`).
    pub fn new(order: usize, grid: &[Vec<usize>]) -> Result<Self, LatinError> {
        if order == 0 {
            return Err(LatinError::InvalidOrder { got: 0, min: 1 });
        }
        if grid.len() != order {
            return Err(LatinError::ShapeError(format!(
                "expected {} rows, got {}",
                order,
                grid.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (r, row) in grid.iter().enumerate() {
            if row.len() != order {
                return Err(LatinError::ShapeError(format!(
                    "row {} has {} cells, expected {}",
                    r,
                    row.len(),
                    order
                )));
            }
            for (c, &s) in row.iter().enumerate() {
                if s >= order {
                    return Err(LatinError::ShapeError(format!(
                        "symbol {} at ({}, {}) is out of range for order {}",
                        s, r, c, order
                    )));
                }
                flat.push(s);
            }
        }
        Self::from_flat(order, flat)
    }

    /// Validates a row-major grid. Same checks as [`LatinSquare::new`].
    pub(crate) fn from_flat(order: usize, grid: Vec<usize>) -> Result<Self, LatinError> {
        let n = order;
        if n == 0 {
            return Err(LatinError::InvalidOrder { got: 0, min: 1 });
        }
        if grid.len() != n * n {
            return Err(LatinError::ShapeError(format!(
                "expected {} cells, got {}",
                n * n,
                grid.len()
            )));
        }
        if let Some(&s) = grid.iter().find(|&&s| s >= n) {
            return Err(LatinError::ShapeError(format!(
                "symbol {} is out of range for order {}",
                s, n
            )));
        }
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let s = grid[r * n + c];
                if seen[s] {
                    return Err(LatinError::RowViolation(r));
                }
                seen[s] = true;
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                let s = grid[r * n + c];
                if seen[s] {
                    return Err(LatinError::ColViolation(c));
                }
                seen[s] = true;
            }
        }
        let mut col_lookup = vec![0usize; n * n];
        let mut row_lookup = vec![0usize; n * n];
        for r in 0..n {
            for c in 0..n {
                let s = grid[r * n + c];
                col_lookup[r * n + s] = c;
                row_lookup[c * n + s] = r;
            }
        }
        Ok(LatinSquare {
            order: n,
            grid,
            col_lookup,
            row_lookup,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Symbol at row `r`, column `c`.
    pub fn sym_at(&self, r: usize, c: usize) -> usize {
        self.grid[r * self.order + c]
    }

    /// The entry occupying cell `(r, c)`.
    pub fn entry_at(&self, r: usize, c: usize) -> Entry {
        Entry::new(r, c, self.sym_at(r, c))
    }

    /// The column in row `r` holding symbol `s`.
    pub fn col_where(&self, r: usize, s: usize) -> usize {
        self.col_lookup[r * self.order + s]
    }

    /// The row in column `c` holding symbol `s`.
    pub fn row_where(&self, c: usize, s: usize) -> usize {
        self.row_lookup[c * self.order + s]
    }

    /// Whether `e` is one of the `n^2` entries of this square.
    pub fn contains(&self, e: &Entry) -> bool {
        e.row < self.order
            && e.col < self.order
            && e.sym < self.order
            && self.sym_at(e.row, e.col) == e.sym
    }

    /// All entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        let n = self.order;
        (0..n * n).map(move |v| self.entry_at(v / n, v % n))
    }

    /// All `3n` lines, rows first, then columns, then symbols.
    pub fn lines(&self) -> impl Iterator<Item = LineRef> {
        let n = self.order;
        (0..3 * n).map(move |v| LineRef::from_vertex_index(v, n))
    }

    /// The `n` entries on `line`, ordered by row then column.
    pub fn line_entries(&self, line: LineRef) -> Vec<Entry> {
        let n = self.order;
        match line.kind {
            LineKind::Row => (0..n).map(|c| self.entry_at(line.index, c)).collect(),
            LineKind::Col => (0..n).map(|r| self.entry_at(r, line.index)).collect(),
            LineKind::Sym => (0..n)
                .map(|r| Entry::new(r, self.col_where(r, line.index), line.index))
                .collect(),
        }
    }

    /// Vertex index of `e` in the row-major vertex order of `H_L`.
    pub fn entry_vertex(&self, e: &Entry) -> usize {
        e.row * self.order + e.col
    }

    /// Entry labelling vertex `v` of `H_L`.
    pub fn vertex_entry(&self, v: usize) -> Entry {
        self.entry_at(v / self.order, v % self.order)
    }

    /// The grid as rows, for serialization and display.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|r| self.grid[r * self.order..(r + 1) * self.order].to_vec())
            .collect()
    }
}

/// A subsquare of a Latin square, identified by its row, column, and symbol
/// index sets.
///
/// A valid subsquare has index sets of equal cardinality that are closed
/// under the Latin property: any two coordinates of an entry whose lines all
/// lie in the subsquare force the third. The empty triple and single cells
/// are the trivial subsquares.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
pub struct Subsquare {
    rows: BTreeSet<usize>,
    cols: BTreeSet<usize>,
    syms: BTreeSet<usize>,
}

impl Subsquare {
    pub fn empty() -> Self {
        Subsquare::default()
    }

    /// The trivial subsquare consisting of one cell.
    pub fn cell(e: Entry) -> Self {
        Subsquare {
            rows: BTreeSet::from([e.row]),
            cols: BTreeSet::from([e.col]),
            syms: BTreeSet::from([e.sym]),
        }
    }

    /// Builds a subsquare from raw index sets without checking closure;
    /// use [`Subsquare::is_subsquare_of`] to validate against a square.
    pub fn from_sets(rows: BTreeSet<usize>, cols: BTreeSet<usize>, syms: BTreeSet<usize>) -> Self {
        Subsquare { rows, cols, syms }
    }

    pub fn rows(&self) -> &BTreeSet<usize> {
        &self.rows
    }

    pub fn cols(&self) -> &BTreeSet<usize> {
        &self.cols
    }

    pub fn syms(&self) -> &BTreeSet<usize> {
        &self.syms
    }

    /// Order of the subsquare (the common cardinality of its index sets).
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() && self.cols.is_empty() && self.syms.is_empty()
    }

    pub fn is_full(&self, order: usize) -> bool {
        self.rows.len() == order && self.cols.len() == order && self.syms.len() == order
    }

    pub fn contains_entry(&self, e: &Entry) -> bool {
        self.rows.contains(&e.row) && self.cols.contains(&e.col) && self.syms.contains(&e.sym)
    }

    pub fn contains_line(&self, line: LineRef) -> bool {
        match line.kind {
            LineKind::Row => self.rows.contains(&line.index),
            LineKind::Col => self.cols.contains(&line.index),
            LineKind::Sym => self.syms.contains(&line.index),
        }
    }

    /// All lines of the subsquare, rows first, then columns, then symbols.
    pub fn lines(&self) -> Vec<LineRef> {
        let mut out = Vec::with_capacity(self.rows.len() + self.cols.len() + self.syms.len());
        out.extend(self.rows.iter().map(|&i| LineRef::row(i)));
        out.extend(self.cols.iter().map(|&i| LineRef::col(i)));
        out.extend(self.syms.iter().map(|&i| LineRef::sym(i)));
        out
    }

    pub fn is_subset_of(&self, other: &Subsquare) -> bool {
        self.rows.is_subset(&other.rows)
            && self.cols.is_subset(&other.cols)
            && self.syms.is_subset(&other.syms)
    }

    /// The entries of `sq` inside this subsquare, in row-major order.
    pub fn entries_in(&self, sq: &LatinSquare) -> Vec<Entry> {
        let mut out = Vec::with_capacity(self.rows.len() * self.cols.len());
        for &r in &self.rows {
            for &c in &self.cols {
                let e = sq.entry_at(r, c);
                if self.syms.contains(&e.sym) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Checks the subsquare invariants against `sq`: equal cardinalities
    /// and closure under the three Latin completion rules.
    pub fn is_subsquare_of(&self, sq: &LatinSquare) -> bool {
        let n = sq.order();
        if self.rows.len() != self.cols.len() || self.rows.len() != self.syms.len() {
            return false;
        }
        if self.rows.iter().any(|&i| i >= n)
            || self.cols.iter().any(|&i| i >= n)
            || self.syms.iter().any(|&i| i >= n)
        {
            return false;
        }
        for &r in &self.rows {
            for &c in &self.cols {
                if !self.syms.contains(&sq.sym_at(r, c)) {
                    return false;
                }
            }
            for &s in &self.syms {
                if !self.cols.contains(&sq.col_where(r, s)) {
                    return false;
                }
            }
        }
        for &c in &self.cols {
            for &s in &self.syms {
                if !self.rows.contains(&sq.row_where(c, s)) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_cyclic_order_3() {
        let sq = LatinSquare::new(3, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(sq.order(), 3);
        assert_eq!(sq.sym_at(1, 2), 0);
        assert_eq!(sq.col_where(1, 0), 2);
        assert_eq!(sq.row_where(2, 0), 1);
    }

    #[test]
    fn validate_rejects_repeated_column_symbol() {
        let err = LatinSquare::new(2, &[vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(err, LatinError::ColViolation(0));
    }

    #[test]
    fn validate_rejects_out_of_range_symbol() {
        let err = LatinSquare::new(2, &[vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, LatinError::ShapeError(_)));
    }

    #[test]
    fn validate_rejects_repeated_row_symbol() {
        let err = LatinSquare::new(2, &[vec![0, 0], vec![1, 1]]).unwrap_err();
        assert_eq!(err, LatinError::RowViolation(0));
    }

    #[test]
    fn validate_rejects_ragged_grid() {
        let err = LatinSquare::new(2, &[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, LatinError::ShapeError(_)));
        let err = LatinSquare::new(0, &[]).unwrap_err();
        assert!(matches!(err, LatinError::InvalidOrder { .. }));
    }

    #[test]
    fn entries_are_row_major_and_unique_per_pair() {
        let sq = cyclic(4).unwrap();
        let entries: Vec<Entry> = sq.entries().collect();
        assert_eq!(entries.len(), 16);
        assert_eq!(entries[0], Entry::new(0, 0, 0));
        assert_eq!(entries[6], Entry::new(1, 2, 3));
        // every (row, sym) and (col, sym) pair appears exactly once
        let row_sym: BTreeSet<(usize, usize)> = entries.iter().map(|e| (e.row, e.sym)).collect();
        let col_sym: BTreeSet<(usize, usize)> = entries.iter().map(|e| (e.col, e.sym)).collect();
        assert_eq!(row_sym.len(), 16);
        assert_eq!(col_sym.len(), 16);
    }

    #[test]
    fn line_entries_match_kind() {
        let sq = cyclic(3).unwrap();
        assert_eq!(
            sq.line_entries(LineRef::sym(0)),
            vec![
                Entry::new(0, 0, 0),
                Entry::new(1, 2, 0),
                Entry::new(2, 1, 0)
            ]
        );
        assert_eq!(sq.line_entries(LineRef::row(1)).len(), 3);
        assert_eq!(sq.line_entries(LineRef::col(2))[0], Entry::new(0, 2, 2));
    }

    #[test]
    fn line_vertex_indexing_round_trips() {
        for n in [2usize, 5, 9] {
            for v in 0..3 * n {
                let line = LineRef::from_vertex_index(v, n);
                assert_eq!(line.vertex_index(n), v);
            }
        }
    }

    #[test]
    fn subsquare_checks() {
        let sq = intercalate_power(2).unwrap();
        let corner = Subsquare::from_sets(
            BTreeSet::from([0, 1]),
            BTreeSet::from([0, 1]),
            BTreeSet::from([0, 1]),
        );
        assert!(corner.is_subsquare_of(&sq));
        assert_eq!(corner.entries_in(&sq).len(), 4);
        let skewed = Subsquare::from_sets(
            BTreeSet::from([0, 1]),
            BTreeSet::from([0, 2]),
            BTreeSet::from([0, 1]),
        );
        assert!(!skewed.is_subsquare_of(&sq));
        assert!(Subsquare::empty().is_subsquare_of(&sq));
        assert!(Subsquare::cell(sq.entry_at(2, 3)).is_subsquare_of(&sq));
    }
}
