use std::fmt;

use serde_json::Value;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Square matrix of Laurent polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    /// Builds a matrix from `dim x dim` rows. `(i, j)` is 0-based here.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::NotSquare {
                rows: dim,
                row,
                len: r.len(),
            });
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.dim {
            self.entries.swap(i * self.dim + c, j * self.dim + c);
        }
    }

    /// Exact determinant by Laplace expansion along rows, memoized over the
    /// set of columns already used. The empty matrix has determinant 1.
    ///
    /// `partial[mask]` holds the signed sum over all ways of assigning the
    /// first `popcount(mask)` rows to the columns in `mask`.
    pub fn determinant(&self) -> LaurentPoly {
        let k = self.dim;
        assert!(
            k < usize::BITS as usize - 1,
            "matrix too large for subset expansion"
        );
        let full = (1usize << k) - 1;
        let mut partial: Vec<Option<LaurentPoly>> = vec![None; 1 << k];
        partial[0] = Some(LaurentPoly::one());
        for mask in 0..full {
            let Some(acc) = partial[mask].take() else {
                continue;
            };
            let row = mask.count_ones() as usize;
            for col in 0..k {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                // columns already used that lie to the right of `col` form inversions
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = &acc * entry;
                if inversions % 2 == 1 {
                    term = -term;
                }
                let slot = &mut partial[mask | (1 << col)];
                match slot {
                    Some(s) => *s += term,
                    None => *slot = Some(term),
                }
            }
        }
        partial[full].take().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.dim)
                .map(|i| Value::Array(self.row(i).iter().map(LaurentPoly::to_json).collect()))
                .collect(),
        )
    }
}

impl fmt::Display for PolyMatrix {
    /// One bracketed row per line: `[b^-1, 0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            return write!(f, "[]");
        }
        for i in 0..self.dim {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
