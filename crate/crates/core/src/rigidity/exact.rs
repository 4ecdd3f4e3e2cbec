//! Fraction-free (Bareiss) integer elimination.
//!
//! Rows are kept sparse and bucketed by leading column. Eliminating column
//! `c` as the `k`-th pivot picks the bucket row with the smallest leading
//! magnitude and replaces every other row `r` of the bucket by
//! `(p_k·r − a·pivot) / p_{k−1}`. The division is exact, so every entry
//! stays a minor of the input and its size is bounded by Hadamard's
//! inequality instead of growing geometrically.
//!
//! The elimination first runs on checked `i128`; any overflow restarts it on
//! `BigInt` under the caller's bit budget.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::RigidityError;

/// Maximum size, in bits, of any intermediate entry of exact elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BitBudget(pub u64);

impl BitBudget {
    pub const UNLIMITED: BitBudget = BitBudget(u64::MAX);
}

impl Default for BitBudget {
    /// One MiB per entry.
    fn default() -> Self {
        BitBudget(8 * 1024 * 1024)
    }
}

type Row<T> = Vec<(usize, T)>;

enum Halt {
    Overflow,
    Budget(u64),
}

trait ExactInt: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn magnitude_cmp(&self, other: &Self) -> Ordering;
    fn bits(&self) -> u64;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn div_exact(&self, d: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn bits(&self) -> u64 {
        (128 - self.unsigned_abs().leading_zeros()) as u64
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other).filter(|v| *v != i128::MIN)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other).filter(|v| *v != i128::MIN)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn bits(&self) -> u64 {
        BigInt::bits(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// One Bareiss step on a row brought up to date: `(p·row − a·pivot) / prev`
/// over the columns after the shared lead, where `p` and `a` are the leading
/// entries and `prev` is the previous pivot. The division is exact.
fn bareiss_step<T: ExactInt>(
    pivot: &Row<T>,
    row: &Row<T>,
    prev: &T,
    budget: u64,
) -> Result<Row<T>, Halt> {
    let p = &pivot[0].1;
    let a = &row[0].1;
    let mut out: Row<T> = Vec::with_capacity(row.len().max(pivot.len()));
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, value) = match ci.cmp(&cj) {
            Ordering::Less => {
                i += 1;
                (ci, row[i - 1].1.mul(p).ok_or(Halt::Overflow)?)
            }
            Ordering::Greater => {
                j += 1;
                let v = pivot[j - 1].1.mul(a).ok_or(Halt::Overflow)?;
                (cj, v.neg().ok_or(Halt::Overflow)?)
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
                let x = row[i - 1].1.mul(p).ok_or(Halt::Overflow)?;
                let y = pivot[j - 1].1.mul(a).ok_or(Halt::Overflow)?;
                (ci, x.sub(&y).ok_or(Halt::Overflow)?)
            }
        };
        if !value.is_zero() {
            let value = if prev.is_one() {
                value
            } else {
                value.div_exact(prev)
            };
            if value.bits() > budget {
                return Err(Halt::Budget(value.bits()));
            }
            out.push((col, value));
        }
    }
    Ok(out)
}

/// A row together with the number of pivots it has been reduced against.
struct Pending<T> {
    row: Row<T>,
    step: usize,
}

/// Sparse Bareiss elimination. Rows that do not meet a pivot column are
/// left alone and only rescaled by `p_k / p_s` once they are needed again,
/// which keeps every entry a minor of the input.
///
/// Returns the rank and, if requested, the pivot rows in increasing order
/// of leading column.
fn eliminate<T: ExactInt>(
    matrix: &IntMatrix,
    budget: u64,
    keep_echelon: bool,
) -> Result<(usize, Vec<Row<T>>), Halt> {
    let cols = matrix.num_cols();
    let mut buckets: Vec<Vec<Pending<T>>> = (0..cols).map(|_| Vec::new()).collect();
    for row in matrix.rows() {
        if let Some(&(lead, _)) = row.first() {
            let row = row.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
            buckets[lead].push(Pending { row, step: 0 });
        }
    }
    // pivots[k] is the k-th pivot; pivots[0] = 1.
    let mut pivots: Vec<T> = vec![T::from_i64(1)];
    let mut echelon = Vec::new();
    for c in 0..cols {
        let bucket = core::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        let k = pivots.len() - 1;
        let current = &pivots[k];
        let mut rows: Vec<Row<T>> = Vec::with_capacity(bucket.len());
        for Pending { mut row, step } in bucket {
            if step < k {
                let old = &pivots[step];
                for (_, v) in row.iter_mut() {
                    *v = v.mul(current).ok_or(Halt::Overflow)?.div_exact(old);
                    if v.bits() > budget {
                        return Err(Halt::Budget(v.bits()));
                    }
                }
            }
            rows.push(row);
        }
        let pick = (0..rows.len())
            .min_by(|&x, &y| {
                rows[x][0]
                    .1
                    .magnitude_cmp(&rows[y][0].1)
                    .then(rows[x].len().cmp(&rows[y].len()))
            })
            .expect("bucket is nonempty");
        let pivot = rows.swap_remove(pick);
        for row in rows {
            let reduced = bareiss_step(&pivot, &row, current, budget)?;
            if let Some(&(lead, _)) = reduced.first() {
                buckets[lead].push(Pending {
                    row: reduced,
                    step: k + 1,
                });
            }
        }
        pivots.push(pivot[0].1.clone());
        if keep_echelon {
            echelon.push(pivot);
        }
    }
    Ok((pivots.len() - 1, echelon))
}

fn echelon_form(
    matrix: &IntMatrix,
    budget: BitBudget,
) -> Result<(usize, Vec<Row<BigInt>>), RigidityError> {
    match eliminate::<i128>(matrix, budget.0, true) {
        Ok((rank, rows)) => Ok((
            rank,
            rows.into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, v.to_bigint())).collect())
                .collect(),
        )),
        Err(Halt::Budget(bits)) => Err(RigidityError::BitBudgetExceeded {
            bits,
            budget: budget.0,
        }),
        Err(Halt::Overflow) => match eliminate::<BigInt>(matrix, budget.0, true) {
            Ok(out) => Ok(out),
            Err(Halt::Budget(bits)) => Err(RigidityError::BitBudgetExceeded {
                bits,
                budget: budget.0,
            }),
            Err(Halt::Overflow) => unreachable!("big integers do not overflow"),
        },
    }
}

/// Exact rank over the rationals of an integer matrix.
pub fn int_matrix_rank(matrix: &IntMatrix, budget: BitBudget) -> Result<usize, RigidityError> {
    let halt = |bits| RigidityError::BitBudgetExceeded {
        bits,
        budget: budget.0,
    };
    match eliminate::<i128>(matrix, budget.0, false) {
        Ok((rank, _)) => Ok(rank),
        Err(Halt::Budget(bits)) => Err(halt(bits)),
        Err(Halt::Overflow) => match eliminate::<BigInt>(matrix, budget.0, false) {
            Ok((rank, _)) => Ok(rank),
            Err(Halt::Budget(bits)) => Err(halt(bits)),
            Err(Halt::Overflow) => unreachable!("big integers do not overflow"),
        },
    }
}

/// A basis of the rational nullspace `{x : M x = 0}`, one vector per free
/// column (that column set to 1, the other free columns to 0), obtained by
/// back-substitution on the echelon form.
pub fn int_matrix_nullspace(
    matrix: &IntMatrix,
    budget: BitBudget,
) -> Result<Vec<Vec<BigRational>>, RigidityError> {
    let cols = matrix.num_cols();
    let (_, echelon) = echelon_form(matrix, budget)?;
    let mut is_pivot = vec![false; cols];
    for row in &echelon {
        is_pivot[row[0].0] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![BigRational::zero(); cols];
        x[free] = BigRational::one();
        for row in echelon.iter().rev() {
            let (lead, ref a) = row[0];
            let mut s = BigRational::zero();
            for (c, v) in &row[1..] {
                if !x[*c].is_zero() {
                    s += &x[*c] * BigRational::from_integer(v.clone());
                }
            }
            x[lead] = -s / BigRational::from_integer(a.clone());
        }
        basis.push(x);
    }
    Ok(basis)
}

/// `true` if `matrix · vector = 0`.
pub fn annihilates(matrix: &IntMatrix, vector: &[BigRational]) -> bool {
    matrix.rows().iter().all(|row| {
        row.iter()
            .fold(BigRational::zero(), |acc, &(c, v)| {
                acc + &vector[c] * BigRational::from_integer(BigInt::from(v))
            })
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let zero = IntMatrix::from_dense(3, &[vec![0; 3], vec![0; 3], vec![0; 3]]);
        assert_eq!(int_matrix_rank(&zero, BitBudget::default()), Ok(0));
        let single = IntMatrix::from_dense(4, &[vec![-1, -2, 1, 2]]);
        assert_eq!(int_matrix_rank(&single, BitBudget::default()), Ok(1));
        let dependent = IntMatrix::from_dense(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(int_matrix_rank(&dependent, BitBudget::default()), Ok(2));
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        // Hilbert-like integer matrix with huge entries forces i128 overflow.
        let big = i64::MAX / 3;
        let dense: Vec<Vec<i64>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| big - (i * 7 + j * 13) as i64 * ((i + 1) as i64))
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_dense(6, &dense);
        let rank = int_matrix_rank(&m, BitBudget::default()).unwrap();
        assert!((2..=6).contains(&rank));
    }

    #[test]
    fn budget_is_enforced() {
        let dense = vec![vec![3, 5, 7], vec![11, 13, 17], vec![19, 23, 31]];
        let m = IntMatrix::from_dense(3, &dense);
        assert!(matches!(
            int_matrix_rank(&m, BitBudget(2)),
            Err(RigidityError::BitBudgetExceeded { .. })
        ));
        assert_eq!(int_matrix_rank(&m, BitBudget::default()), Ok(3));
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let m = IntMatrix::from_dense(4, &[vec![1, 2, 0, -1], vec![2, 4, 1, 0]]);
        let basis = int_matrix_nullspace(&m, BitBudget::default()).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(annihilates(&m, v));
        }
    }
}
