//! Weighted Catalan lattice paths constrained by a Young diagram, and the
//! weight-preserving bijection with Catalan tableaux.
//!
//! A path runs from the north-east to the south-west corner of the
//! `k x (n - k)` rectangle and is stored as its south-step positions
//! `(C_1, ..., C_k)`: `C_i` is the vertical line (0 = west border) on which
//! the path crosses row `i`.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::tableau::{CatalanTableau, Cell, Shape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalanPath {
    labels: Vec<usize>,
    shape: Shape,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    South,
    West,
}

impl CatalanPath {
    pub fn new(labels: Vec<usize>, shape: Shape) -> Result<Self> {
        if labels.len() != shape.rows() {
            return Err(Error::InvalidPath(format!(
                "{} labels for a shape with {} rows",
                labels.len(),
                shape.rows()
            )));
        }
        if labels.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPath(format!(
                "labels {labels:?} are not weakly decreasing"
            )));
        }
        if let Some(i) = (0..labels.len()).find(|&i| labels[i] > shape.part(i + 1)) {
            return Err(Error::InvalidPath(format!(
                "label C_{} = {} exceeds lambda_{} = {}",
                i + 1,
                labels[i],
                i + 1,
                shape.part(i + 1)
            )));
        }
        Ok(Self { labels, shape })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Step sequence from the north-east corner.
    pub fn steps(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(self.shape.n());
        let mut x = self.shape.width();
        for &c in &self.labels {
            steps.extend(std::iter::repeat_n(Step::West, x - c));
            steps.push(Step::South);
            x = c;
        }
        steps.extend(std::iter::repeat_n(Step::West, x));
        steps
    }

    /// `pwt(C)` in closed form.
    ///
    /// One `1/b` per zero label. West edges on the south boundary of the
    /// diagram contribute `1/a` each: `C_i - lambda_{i+1}` of them below row
    /// `i` when positive, plus the `n - k - lambda_1` edges along the top of
    /// the rectangle beyond the diagram.
    pub fn path_weight(&self) -> LaurentPoly {
        let zeros = self.labels.iter().filter(|&&c| c == 0).count() as i64;
        let mut alpha_edges = (self.shape.width() - self.shape.part(1)) as i64;
        for (i, &c) in self.labels.iter().enumerate() {
            let below = self.shape.part(i + 2);
            if c > below {
                alpha_edges += (c - below) as i64;
            }
        }
        LaurentPoly::monomial(1, -alpha_edges, -zeros)
    }

    /// `pwt(C)` by walking the path edge by edge.
    ///
    /// A south edge on the west border of the rectangle weighs `1/b`. A west
    /// edge crossing column `x` on horizontal line `y` weighs `1/a` when it
    /// lies on the diagram's south boundary, i.e. column `x` has exactly `y`
    /// cells.
    pub fn path_weight_by_walk(&self) -> LaurentPoly {
        let mut weight = LaurentPoly::one();
        let mut x = self.shape.width();
        let mut y = 0;
        for step in self.steps() {
            match step {
                Step::South => {
                    if x == 0 {
                        weight = weight.shift(0, -1);
                    }
                    y += 1;
                }
                Step::West => {
                    if self.shape.column_height(x) == y {
                        weight = weight.shift(-1, 0);
                    }
                    x -= 1;
                }
            }
        }
        weight
    }

    /// `wt(C) = (ab)^n pwt(C)`.
    pub fn weight(&self) -> LaurentPoly {
        let n = self.shape.n() as i64;
        self.path_weight().shift(n, n)
    }

    /// Places a beta in column `C_i` (largest labels first) at the lowest row
    /// that has no beta yet, then an alpha in every column at the lowest cell
    /// that is neither filled nor left of a beta.
    pub fn to_tableau(&self) -> CatalanTableau {
        let shape = &self.shape;
        let mut rows: Vec<Vec<Cell>> = shape
            .parts()
            .iter()
            .map(|&p| vec![Cell::Empty; p])
            .collect();
        let mut beta_col: Vec<Option<usize>> = vec![None; shape.rows()];
        for &c in self.labels.iter().filter(|&&c| c > 0) {
            let row = (1..=shape.column_height(c))
                .rev()
                .find(|&r| beta_col[r - 1].is_none())
                .expect("a valid path always leaves a free row");
            beta_col[row - 1] = Some(c);
            rows[row - 1][c - 1] = Cell::Beta;
        }
        for col in 1..=shape.part(1) {
            let spot = (1..=shape.column_height(col)).rev().find(|&r| {
                rows[r - 1][col - 1] == Cell::Empty && beta_col[r - 1].is_none_or(|b| b < col)
            });
            if let Some(r) = spot {
                rows[r - 1][col - 1] = Cell::Alpha;
            }
        }
        CatalanTableau::new(shape.clone(), rows).expect("filling matches the shape")
    }

    /// Inverse of [`CatalanPath::to_tableau`]: beta columns in decreasing
    /// order, padded with zeros.
    pub fn from_tableau(t: &CatalanTableau) -> Result<Self> {
        let mut labels: Vec<usize> = t
            .rows()
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c == Cell::Beta)
                    .map(|(i, _)| i + 1)
            })
            .collect();
        labels.sort_unstable_by(|a, b| b.cmp(a));
        labels.resize(t.k(), 0);
        Self::new(labels, t.shape().clone())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape.parts(),
            "labels": self.labels,
        })
    }
}

impl fmt::Display for CatalanPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", labels.join(","))
    }
}

/// All label tuples `C_1 >= ... >= C_k >= 0` with `C_i <= lambda_i`, in
/// lexicographic order.
pub fn enumerate_paths(shape: &Shape) -> Vec<CatalanPath> {
    fn extend(shape: &Shape, prefix: &mut Vec<usize>, out: &mut Vec<CatalanPath>) {
        let i = prefix.len();
        if i == shape.rows() {
            out.push(CatalanPath {
                labels: prefix.clone(),
                shape: shape.clone(),
            });
            return;
        }
        let cap = prefix
            .last()
            .map_or(shape.part(i + 1), |&p| p.min(shape.part(i + 1)));
        for c in 0..=cap {
            prefix.push(c);
            extend(shape, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(shape, &mut Vec::with_capacity(shape.rows()), &mut out);
    out
}
