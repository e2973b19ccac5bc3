//! TASEP states, Young diagram shapes, and Catalan alternative tableaux.
//!
//! Cells are addressed `(row, column)`, 1-based, with row 1 at the top and
//! column 1 at the left of the `k x (n - k)` rectangle.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};

/// A TASEP state `tau_1 ... tau_n`; `true` marks an occupied site.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateWord {
    bits: Vec<bool>,
}

impl StateWord {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The word of length `n` whose big-endian binary value is `index`.
    pub fn from_index(n: usize, index: usize) -> Self {
        Self {
            bits: (0..n).map(|i| (index >> (n - 1 - i)) & 1 == 1).collect(),
        }
    }

    /// Big-endian binary value, `tau_1` most significant.
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// All `2^n` words of length `n` in index order.
    pub fn all(n: usize) -> impl Iterator<Item = StateWord> {
        (0..1usize << n).map(move |i| StateWord::from_index(n, i))
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Number of particles.
    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl FromStr for StateWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidWord(s.to_string()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(StateWord::new)
    }
}

impl fmt::Display for StateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A partition `lambda_1 >= ... >= lambda_k >= 0` inside a rectangle of
/// width `n - k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    parts: Vec<usize>,
    width: usize,
}

impl Shape {
    pub fn new(parts: Vec<usize>, width: usize) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} are not weakly decreasing ({} < {})",
                w[0], w[1]
            )));
        }
        if let Some(&first) = parts.first() {
            if first > width {
                return Err(Error::InvalidShape(format!(
                    "first part {first} exceeds rectangle width {width}"
                )));
            }
        }
        Ok(Self { parts, width })
    }

    /// `lambda(tau)`: part `i` counts the zeros after the `i`-th one.
    pub fn of_word(tau: &StateWord) -> Self {
        let bits = tau.bits();
        let mut parts = Vec::with_capacity(tau.ones());
        let mut zeros_after = 0;
        for &b in bits.iter().rev() {
            if b {
                parts.push(zeros_after);
            } else {
                zeros_after += 1;
            }
        }
        parts.reverse();
        Self {
            parts,
            width: zeros_after,
        }
    }

    /// Reads the south-east border from the north-east corner: a west step
    /// is a 0, a south step is a 1.
    pub fn to_word(&self) -> StateWord {
        let mut bits = Vec::with_capacity(self.n());
        let mut x = self.width;
        for &part in &self.parts {
            bits.extend(std::iter::repeat_n(false, x - part));
            bits.push(true);
            x = part;
        }
        bits.extend(std::iter::repeat_n(false, x));
        StateWord::new(bits)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows `k`.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Rectangle width `n - k`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn n(&self) -> usize {
        self.parts.len() + self.width
    }

    /// `lambda_i` for 1-based `i`; zero beyond the last row (and for `i = 0`
    /// it is the full width).
    pub fn part(&self, i: usize) -> usize {
        match i {
            0 => self.width,
            i => self.parts.get(i - 1).copied().unwrap_or(0),
        }
    }

    /// Number of cells in 1-based column `c`.
    pub fn column_height(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row) && row <= self.rows()
    }

    pub fn cell_count(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// `word_of_shape`: the state word of a shape inside the `k x (n - k)` rectangle.
pub fn word_of_shape(parts: &[usize], n: usize, k: usize) -> Result<StateWord> {
    if parts.len() != k || k > n {
        return Err(Error::InvalidShape(format!(
            "shape {parts:?} has {} rows, expected k = {k} with n = {n}",
            parts.len()
        )));
    }
    Ok(Shape::new(parts.to_vec(), n - k)?.to_word())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Empty,
    Alpha,
    Beta,
}

impl Cell {
    pub fn symbol(self) -> char {
        match self {
            Cell::Empty => '.',
            Cell::Alpha => 'a',
            Cell::Beta => 'b',
        }
    }

    pub fn from_symbol(c: char) -> Option<Cell> {
        match c {
            '.' => Some(Cell::Empty),
            'a' => Some(Cell::Alpha),
            'b' => Some(Cell::Beta),
            _ => None,
        }
    }
}

/// A filling of a shape's cells. Row `i` holds exactly `lambda_i` cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalanTableau {
    shape: Shape,
    rows: Vec<Vec<Cell>>,
}

impl CatalanTableau {
    /// Checks only that the filling covers the shape exactly; use
    /// [`CatalanTableau::is_valid`] for the filling rules.
    pub fn new(shape: Shape, rows: Vec<Vec<Cell>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} cells, shape requires {}",
                    i + 1,
                    row.len(),
                    shape.part(i + 1)
                )));
            }
        }
        Ok(Self { shape, rows })
    }

    /// The tableau with every cell empty (valid only when the shape has no cells).
    pub fn empty(shape: Shape) -> Self {
        let rows = shape
            .parts()
            .iter()
            .map(|&p| vec![Cell::Empty; p])
            .collect();
        Self { shape, rows }
    }

    /// Parses the text form: one line per row, `.`/`a`/`b` per cell.
    /// Rows of length zero may be given as empty lines.
    pub fn from_text(shape: Shape, text: &str) -> Result<Self> {
        let mut lines: Vec<&str> = text.lines().collect();
        lines.resize(shape.rows(), "");
        let rows = lines
            .iter()
            .map(|line| {
                line.trim()
                    .chars()
                    .map(|c| {
                        Cell::from_symbol(c)
                            .ok_or_else(|| Error::InvalidTableau(format!("bad cell symbol {c:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn k(&self) -> usize {
        self.shape.rows()
    }

    /// Cell at 1-based `(row, col)`, `None` outside the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<Cell> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn type_word(&self) -> StateWord {
        self.shape.to_word()
    }

    fn above_alpha(&self, row: usize, col: usize) -> bool {
        (row + 1..=self.k()).any(|r| self.get(r, col) == Some(Cell::Alpha))
    }

    fn left_of_beta(&self, row: usize, col: usize) -> bool {
        (col + 1..=self.shape.part(row)).any(|c| self.get(row, c) == Some(Cell::Beta))
    }

    /// All three filling rules: cells above an alpha are empty, cells left of
    /// a beta are empty, and every other cell is filled.
    pub fn is_valid(&self) -> bool {
        for row in 1..=self.k() {
            for col in 1..=self.shape.part(row) {
                let constrained = self.above_alpha(row, col) || self.left_of_beta(row, col);
                let filled = self.get(row, col) != Some(Cell::Empty);
                if constrained == filled {
                    return false;
                }
            }
        }
        true
    }

    /// Columns of the full rectangle (including those outside the shape)
    /// with no alpha.
    pub fn alpha_free_columns(&self) -> usize {
        (1..=self.shape.width())
            .filter(|&c| !(1..=self.k()).any(|r| self.get(r, c) == Some(Cell::Alpha)))
            .count()
    }

    pub fn beta_free_rows(&self) -> usize {
        self.rows
            .iter()
            .filter(|row| !row.contains(&Cell::Beta))
            .count()
    }

    /// `(ab)^n (1/a)^fcol (1/b)^frow`, always the monomial `a^(n-fcol) b^(n-frow)`.
    pub fn weight(&self) -> LaurentPoly {
        let n = self.n() as i64;
        LaurentPoly::monomial(
            1,
            n - self.alpha_free_columns() as i64,
            n - self.beta_free_rows() as i64,
        )
    }

    pub fn count(&self, cell: Cell) -> usize {
        self.rows.iter().flatten().filter(|&&c| c == cell).count()
    }

    /// Text form: one row per line. A zero-length row renders as an empty line.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|row| row.iter().map(|c| c.symbol()).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.symbol().to_string()).collect())
            .collect();
        json!({
            "n": self.n(),
            "k": self.k(),
            "shape": self.shape.parts(),
            "cells": cells,
        })
    }
}

impl fmt::Display for CatalanTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All Catalan tableaux of type `tau`, in lexicographic order of the
/// row-major filling with `Empty < Alpha < Beta`.
pub fn enumerate_tableaux(tau: &StateWord) -> Vec<CatalanTableau> {
    let shape = Shape::of_word(tau);
    let mut search = Search {
        shape: &shape,
        grid: shape
            .parts()
            .iter()
            .map(|&p| vec![Cell::Empty; p])
            .collect(),
        col_filled: vec![false; shape.width() + 1],
        col_pending: vec![false; shape.width() + 1],
        out: Vec::new(),
    };
    search.fill(1, 1);
    search.out
}

/// Backtracking over cells in row-major order.
///
/// `col_filled[c]`: column `c` already has a non-empty cell, so no alpha can
/// appear further down. `col_pending[c]`: some empty cell in column `c` is not
/// left of a beta and must be rescued by an alpha below it.
struct Search<'a> {
    shape: &'a Shape,
    grid: Vec<Vec<Cell>>,
    col_filled: Vec<bool>,
    col_pending: Vec<bool>,
    out: Vec<CatalanTableau>,
}

impl Search<'_> {
    fn fill(&mut self, row: usize, col: usize) {
        if row > self.shape.rows() {
            let t = CatalanTableau {
                shape: self.shape.clone(),
                rows: self.grid.clone(),
            };
            debug_assert!(t.is_valid(), "search produced an invalid tableau:\n{t}");
            self.out.push(t);
            return;
        }
        if col > self.shape.part(row) {
            self.finish_row(row);
            return;
        }
        for cell in [Cell::Empty, Cell::Alpha, Cell::Beta] {
            if !self.allowed(row, col, cell) {
                continue;
            }
            let saved = (self.col_filled[col], self.col_pending[col]);
            self.grid[row - 1][col - 1] = cell;
            if cell != Cell::Empty {
                self.col_filled[col] = true;
            }
            if cell == Cell::Alpha {
                self.col_pending[col] = false;
            }
            self.fill(row, col + 1);
            (self.col_filled[col], self.col_pending[col]) = saved;
            self.grid[row - 1][col - 1] = Cell::Empty;
        }
    }

    fn allowed(&self, row: usize, col: usize, cell: Cell) -> bool {
        match cell {
            Cell::Empty => true,
            // everything above must be empty
            Cell::Alpha => !self.col_filled[col],
            // everything to the left must be empty, and a pending empty cell
            // above would end up above this beta with no alpha possible below
            Cell::Beta => {
                self.grid[row - 1][..col - 1]
                    .iter()
                    .all(|&c| c == Cell::Empty)
                    && !self.col_pending[col]
            }
        }
    }

    fn finish_row(&mut self, row: usize) {
        let cells = &self.grid[row - 1];
        let beta_col = cells.iter().position(|&c| c == Cell::Beta).map(|i| i + 1);
        let mut changed = Vec::new();
        let mut feasible = true;
        for col in beta_col.map_or(1, |b| b + 1)..=cells.len() {
            if cells[col - 1] != Cell::Empty {
                continue;
            }
            if self.col_filled[col] || self.shape.column_height(col) == row {
                feasible = false;
                break;
            }
            if !self.col_pending[col] {
                self.col_pending[col] = true;
                changed.push(col);
            }
        }
        // columns ending in this row cannot rescue a pending cell any more
        let next = self.shape.part(row + 1);
        if (next + 1..=cells.len()).any(|col| self.col_pending[col]) {
            feasible = false;
        }
        if feasible {
            self.fill(row + 1, 1);
        }
        for col in changed {
            self.col_pending[col] = false;
        }
    }
}

/// `P(tau)`: sum of the weights of all tableaux of type `tau`.
pub fn sum_weights(tau: &StateWord) -> LaurentPoly {
    enumerate_tableaux(tau)
        .iter()
        .map(CatalanTableau::weight)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn w(s: &str) -> StateWord {
        s.parse().unwrap()
    }

    /// Exhaustive: every one of the `3^cells` fillings, filtered by the rules.
    fn brute_force(tau: &StateWord) -> Vec<CatalanTableau> {
        let shape = Shape::of_word(tau);
        let cells = shape.cell_count();
        let mut out = Vec::new();
        for code in 0..3usize.pow(cells as u32) {
            let mut c = code;
            let mut digits: Vec<Cell> = (0..cells)
                .map(|_| {
                    let d = [Cell::Empty, Cell::Alpha, Cell::Beta][c % 3];
                    c /= 3;
                    d
                })
                .collect();
            digits.reverse();
            let mut it = digits.into_iter();
            let rows = shape
                .parts()
                .iter()
                .map(|&p| it.by_ref().take(p).collect())
                .collect();
            let t = CatalanTableau::new(shape.clone(), rows).unwrap();
            if t.is_valid() {
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn word_parsing() {
        assert_eq!(w("0101").to_string(), "0101");
        assert!("".parse::<StateWord>().is_err());
        assert!("012".parse::<StateWord>().is_err());
        assert_eq!(w("110").index(), 6);
        assert_eq!(StateWord::from_index(3, 6), w("110"));
    }

    #[test]
    fn shapes_of_words() {
        assert_eq!(Shape::of_word(&w("0001001100100")).parts(), &[6, 4, 4, 2]);
        assert_eq!(Shape::of_word(&w("0001001100100")).width(), 9);
        assert_eq!(Shape::of_word(&w("111")).parts(), &[0, 0, 0]);
        assert_eq!(Shape::of_word(&w("0101")).parts(), &[1, 0]);
    }

    #[test]
    fn words_of_shapes() {
        assert_eq!(
            word_of_shape(&[6, 4, 4, 2], 13, 4).unwrap(),
            w("0001001100100")
        );
        assert_eq!(word_of_shape(&[], 3, 0).unwrap(), w("000"));
        assert_eq!(word_of_shape(&[1], 2, 1).unwrap(), w("10"));
        assert!(matches!(
            word_of_shape(&[2], 2, 1),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            word_of_shape(&[0, 1], 3, 2),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            word_of_shape(&[0], 3, 2),
            Err(Error::InvalidShape(_))
        ));
    }

    #[test]
    fn shape_roundtrip_and_monotone() {
        for n in 0..=10 {
            for tau in StateWord::all(n) {
                let shape = Shape::of_word(&tau);
                assert!(shape.parts().windows(2).all(|p| p[0] >= p[1]));
                assert!(shape.part(1) <= n - tau.ones());
                assert_eq!(shape.to_word(), tau);
                assert_eq!(word_of_shape(shape.parts(), n, tau.ones()).unwrap(), tau);
            }
        }
    }

    #[test]
    fn validation_rules() {
        let one = Shape::new(vec![1], 1).unwrap();
        assert!(!CatalanTableau::new(one.clone(), vec![vec![Cell::Empty]])
            .unwrap()
            .is_valid());
        assert!(CatalanTableau::new(one.clone(), vec![vec![Cell::Alpha]])
            .unwrap()
            .is_valid());
        for n in 0..4 {
            assert!(CatalanTableau::empty(Shape::new(vec![], n).unwrap()).is_valid());
        }
        // beta with a filled cell to its left
        let two = Shape::new(vec![2], 2).unwrap();
        let t = CatalanTableau::from_text(two, "ab").unwrap();
        assert!(!t.is_valid());
        // alpha with a filled cell above
        let col = Shape::new(vec![1, 1], 1).unwrap();
        assert!(!CatalanTableau::from_text(col.clone(), "b\na")
            .unwrap()
            .is_valid());
        assert!(CatalanTableau::from_text(col, ".\na").unwrap().is_valid());
    }

    #[test]
    fn construction_rejects_bad_coordinates() {
        let shape = Shape::new(vec![2, 1], 2).unwrap();
        assert!(CatalanTableau::new(shape.clone(), vec![vec![Cell::Beta]]).is_err());
        assert!(
            CatalanTableau::new(shape, vec![vec![Cell::Beta], vec![Cell::Beta, Cell::Beta]])
                .is_err()
        );
    }

    #[test]
    fn weights_of_edge_cases() {
        let t = CatalanTableau::empty(Shape::of_word(&w("000")));
        assert_eq!(t.weight(), LaurentPoly::monomial(1, 0, 3));
        let t = CatalanTableau::empty(Shape::of_word(&w("111")));
        assert_eq!(t.weight(), LaurentPoly::monomial(1, 3, 0));
        let t = CatalanTableau::empty(Shape::of_word(&w("11")));
        assert_eq!(t.weight(), LaurentPoly::monomial(1, 2, 0));
    }

    #[test]
    fn small_enumerations() {
        let ts = enumerate_tableaux(&w("10"));
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![Cell::Alpha]]);
        assert_eq!(ts[1].rows(), &[vec![Cell::Beta]]);
        assert_eq!(enumerate_tableaux(&w("01")).len(), 1);
        assert_eq!(enumerate_tableaux(&w("0000")).len(), 1);

        assert_eq!(
            sum_weights(&w("10")),
            LaurentPoly::from_terms([(2, 1, 1), (1, 2, 1)])
        );
        assert_eq!(sum_weights(&w("01")), LaurentPoly::monomial(1, 1, 1));
        assert_eq!(sum_weights(&w("0011")), LaurentPoly::monomial(1, 2, 2));
    }

    #[test]
    fn search_matches_brute_force() {
        for n in 0..=6 {
            for tau in StateWord::all(n) {
                if Shape::of_word(&tau).cell_count() > 9 {
                    continue;
                }
                assert_eq!(enumerate_tableaux(&tau), brute_force(&tau), "type {tau}");
            }
        }
    }

    #[test]
    fn enumeration_is_valid_and_distinct() {
        for n in 0..=8 {
            for tau in StateWord::all(n) {
                let ts = enumerate_tableaux(&tau);
                assert!(!ts.is_empty());
                let distinct: HashSet<_> = ts.iter().collect();
                assert_eq!(distinct.len(), ts.len());
                for t in &ts {
                    assert!(t.is_valid());
                    assert_eq!(t.type_word(), tau);
                }
                let mut sorted = ts.clone();
                sorted.sort_by_key(|x| x.rows().concat());
                assert_eq!(sorted, ts, "order for {tau}");
            }
        }
    }

    #[test]
    fn total_count_is_catalan() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for n in 0..=8 {
            let total: usize = StateWord::all(n)
                .map(|t| enumerate_tableaux(&t).len())
                .sum();
            assert_eq!(total as u64, catalan[n + 1], "n = {n}");
        }
    }

    #[test]
    fn thirteen_site_type_has_weight_a8_b12() {
        let tau = w("0001001100100");
        let target = LaurentPoly::monomial(1, 8, 12);
        let hits: Vec<_> = enumerate_tableaux(&tau)
            .into_iter()
            .filter(|t| t.weight() == target)
            .collect();
        assert!(!hits.is_empty());
        assert!(hits
            .iter()
            .all(|t| t.alpha_free_columns() == 5 && t.beta_free_rows() == 1));
        assert_eq!(hits.len(), 10);

        // one explicit filling, pinned
        let t = CatalanTableau::from_text(Shape::of_word(&tau), ".....b\na...\nb.aa\nba").unwrap();
        assert!(t.is_valid());
        assert_eq!(t.type_word(), tau);
        assert_eq!(t.weight(), target);
        assert!(hits.contains(&t));
    }

    #[test]
    fn text_and_json() {
        let shape = Shape::new(vec![2, 1], 2).unwrap();
        let t = CatalanTableau::from_text(shape, ".b\na").unwrap();
        assert!(t.is_valid());
        assert_eq!(t.to_text(), ".b\na");
        assert_eq!(
            t.to_json(),
            json!({"n": 4, "k": 2, "shape": [2, 1], "cells": [[".", "b"], ["a"]]})
        );
    }
}
