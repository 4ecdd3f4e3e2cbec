use alloc::vec;
use alloc::vec::Vec;

use crate::framework::{Bar, Framework};

use super::RigidityError;

/// A sparse integer matrix stored as rows of `(column, value)` pairs sorted
/// by column with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn new(cols: usize) -> Self {
        IntMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(cols: usize, dense: &[Vec<i64>]) -> Self {
        let mut m = IntMatrix::new(cols);
        for row in dense {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            m.push_row(row.iter().copied().enumerate());
        }
        m
    }

    /// Appends a row; entries may come in any order, zeros are dropped and
    /// repeated columns are summed.
    pub fn push_row<I: IntoIterator<Item = (usize, i64)>>(&mut self, entries: I) {
        let mut row: Vec<(usize, i64)> = entries.into_iter().collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            assert!(c < self.cols, "column {c} out of range");
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|&(_, v)| v != 0);
        self.rows.push(merged);
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![0; self.cols];
                for &(c, v) in row {
                    dense[c] = v;
                }
                dense
            })
            .collect()
    }

    pub fn max_abs(&self) -> u64 {
        self.rows
            .iter()
            .flatten()
            .map(|&(_, v)| v.unsigned_abs())
            .max()
            .unwrap_or(0)
    }
}

/// The `|E| × d|V|` rigidity matrix of a framework.
///
/// Rows follow bars sorted by `(lo, hi)`. The row of bar `{i, j}`, `i < j`,
/// holds `p_i - p_j` in joint `i`'s column block and `p_j - p_i` in joint
/// `j`'s block; block `k` spans columns `k*d .. k*d + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityMatrix {
    dim: usize,
    cols: usize,
    bars: Vec<Bar>,
    diffs: Vec<i64>,
}

impl RigidityMatrix {
    pub fn new(framework: &Framework) -> Result<Self, RigidityError> {
        if framework.num_bars() == 0 {
            return Err(RigidityError::NoBars);
        }
        let dim = framework.dim();
        let mut bars = framework.bars().to_vec();
        bars.sort_unstable();
        let mut diffs = Vec::with_capacity(bars.len() * dim);
        for &bar in &bars {
            diffs.extend(framework.bar_vector(bar));
        }
        Ok(RigidityMatrix {
            dim,
            cols: dim * framework.num_joints(),
            bars,
            diffs,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.bars.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Bar behind each row.
    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    /// The `2d` entries of one row as `(column, value)`, zeros included.
    pub fn row(&self, r: usize) -> Vec<(usize, i64)> {
        let d = self.dim;
        let bar = self.bars[r];
        let diff = &self.diffs[r * d..(r + 1) * d];
        let mut out = Vec::with_capacity(2 * d);
        out.extend(diff.iter().enumerate().map(|(k, &v)| (bar.lo() * d + k, v)));
        out.extend(
            diff.iter()
                .enumerate()
                .map(|(k, &v)| (bar.hi() * d + k, -v)),
        );
        out
    }

    /// Nonzero entries as `(row, column, value)` triplets in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        (0..self.num_rows())
            .flat_map(|r| {
                self.row(r)
                    .into_iter()
                    .filter(|&(_, v)| v != 0)
                    .map(move |(c, v)| (r, c, v))
            })
            .collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::new(self.cols);
        for r in 0..self.num_rows() {
            m.push_row(self.row(r));
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.to_int_matrix().to_dense()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_bar_row() {
        let f = Framework::from_coords(2, vec![vec![0, 0], vec![1, 2]], [(0, 1)]).unwrap();
        let m = RigidityMatrix::new(&f).unwrap();
        assert_eq!(m.to_dense(), vec![vec![-1, -2, 1, 2]]);
    }

    #[test]
    fn rows_follow_sorted_bars() {
        let f =
            Framework::from_coords(1, vec![vec![0], vec![1], vec![3]], [(2, 1), (0, 1)]).unwrap();
        let m = RigidityMatrix::new(&f).unwrap();
        assert_eq!(m.to_dense(), vec![vec![-1, 1, 0], vec![0, -2, 2]]);
        assert_eq!(m.triplets().len(), 4);
    }

    #[test]
    fn rejects_barless_framework() {
        let f = Framework::from_coords(2, vec![vec![0, 0]], []).unwrap();
        assert_eq!(RigidityMatrix::new(&f), Err(RigidityError::NoBars));
    }

    #[test]
    fn push_row_merges_and_drops_zeros() {
        let mut m = IntMatrix::new(4);
        m.push_row([(3, 1), (1, 2), (3, -1), (0, 0)]);
        assert_eq!(m.rows()[0], vec![(1, 2)]);
    }
}
