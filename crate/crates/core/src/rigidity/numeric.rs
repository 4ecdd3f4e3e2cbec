//! Floating-point rank by sparse Gaussian elimination with partial pivoting.
//!
//! Same bucketed layout as the exact path, but the pivot of each column is
//! the largest leading entry and entries at or below `tol · max|a_ij|` are
//! dropped as zero. The rank is the number of pivots above
//! `tol · max pivot`.

use alloc::vec::Vec;

use super::matrix::IntMatrix;

/// Default relative tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Numeric rank with relative tolerance `tol`.
///
/// # Panics
///
/// Panics unless `tol` is positive and finite.
pub fn int_matrix_numeric_rank(matrix: &IntMatrix, tol: f64) -> usize {
    assert!(tol > 0.0 && tol.is_finite(), "tolerance must be positive");
    let cols = matrix.num_cols();
    let scale = matrix.max_abs() as f64;
    if scale == 0.0 {
        return 0;
    }
    let cutoff = tol * scale;

    let mut buckets: Vec<Vec<Vec<(usize, f64)>>> = (0..cols).map(|_| Vec::new()).collect();
    for row in matrix.rows() {
        if let Some(&(lead, _)) = row.first() {
            buckets[lead].push(row.iter().map(|&(c, v)| (c, v as f64)).collect());
        }
    }

    let mut pivots: Vec<f64> = Vec::new();
    for c in 0..cols {
        let mut bucket = core::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        let pick = (0..bucket.len())
            .max_by(|&x, &y| bucket[x][0].1.abs().total_cmp(&bucket[y][0].1.abs()))
            .expect("bucket is nonempty");
        let pivot = bucket.swap_remove(pick);
        let p = pivot[0].1;
        pivots.push(p.abs());
        for row in bucket {
            let factor = row[0].1 / p;
            let mut out = Vec::with_capacity(row.len().max(pivot.len()));
            let (mut i, mut j) = (1, 1);
            while i < row.len() || j < pivot.len() {
                let ci = row.get(i).map_or(usize::MAX, |e| e.0);
                let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
                let (col, value) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1)
                } else if cj < ci {
                    j += 1;
                    (cj, -factor * pivot[j - 1].1)
                } else {
                    i += 1;
                    j += 1;
                    (ci, row[i - 1].1 - factor * pivot[j - 1].1)
                };
                if value.abs() > cutoff {
                    out.push((col, value));
                }
            }
            if let Some(&(lead, _)) = out.first() {
                buckets[lead].push(out);
            }
        }
    }
    let largest = pivots.iter().copied().fold(0.0_f64, f64::max);
    pivots.iter().filter(|&&p| p > tol * largest).count()
}
