//! Dense payoff matrices and the saddle-column minimax equality.

use crate::error::{Error, Result};
use crate::polytope::Objective;

/// A k x p real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PayoffMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl PayoffMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::RaggedMatrix {
                row: 0,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        for (idx, x) in entries.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFiniteEntry {
                    row: idx / cols,
                    col: idx % cols,
                });
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let k = rows.len();
        let p = rows.first().map(Vec::len).unwrap_or(0);
        if k == 0 || p == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != p {
                return Err(Error::RaggedMatrix {
                    row,
                    expected: p,
                    actual: r.len(),
                });
            }
        }
        Self::new(k, p, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.cols + col]
    }

    pub fn transpose(&self) -> PayoffMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        PayoffMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn row_extreme(&self, i: usize, objective: Objective) -> f64 {
        let it = self.row(i).iter().copied();
        match objective {
            Objective::Max => it.fold(f64::NEG_INFINITY, f64::max),
            Objective::Min => it.fold(f64::INFINITY, f64::min),
        }
    }

    fn col_extreme(&self, j: usize, objective: Objective) -> f64 {
        let it = (0..self.rows).map(|i| self.get(i, j));
        match objective {
            Objective::Max => it.fold(f64::NEG_INFINITY, f64::max),
            Objective::Min => it.fold(f64::INFINITY, f64::min),
        }
    }

    /// The smallest column index whose entries attain every row's maximum
    /// (or minimum), if one exists. This is the premise under which the
    /// min-max and max-min of the matrix coincide.
    pub fn saddle_column(&self, objective: Objective) -> Option<usize> {
        let row_opt: Vec<f64> = (0..self.rows)
            .map(|i| self.row_extreme(i, objective))
            .collect();
        (0..self.cols).find(|&j| (0..self.rows).all(|i| self.get(i, j) == row_opt[i]))
    }

    /// `min_i max_j d_ij`: best row when every row is judged by its maximum.
    pub fn minmax(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row_extreme(i, Objective::Max))
            .fold(f64::INFINITY, f64::min)
    }

    /// `max_j min_i d_ij`: best column when every column is judged by its
    /// minimum. Weak duality gives `maxmin <= minmax` for any matrix.
    pub fn maxmin(&self) -> f64 {
        (0..self.cols)
            .map(|j| self.col_extreme(j, Objective::Min))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
