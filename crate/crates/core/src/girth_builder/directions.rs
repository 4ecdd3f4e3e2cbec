use alloc::vec::Vec;

use crate::generators::planar_leaps;

use super::BuildError;

/// All integer bar directions of squared length `m`, one per antipodal pair
/// (`b > 0`, or `b = 0` and `a > 0` for direction `(a, b)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionSet {
    m: u64,
    directions: Vec<(i64, i64)>,
}

fn isqrt(m: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

impl DirectionSet {
    /// Scans `0 ≤ lo ≤ hi ≤ √m` with `lo² + hi² = m`; each representation
    /// contributes its half-plane orbit. Errors if `m` is not a sum of two
    /// squares.
    pub fn new(m: u64) -> Result<Self, BuildError> {
        let root = isqrt(m);
        let mut directions = Vec::new();
        for lo in 0..=root {
            for hi in lo..=root {
                if lo * lo + hi * hi == m {
                    directions.extend(planar_leaps(lo as u32, hi as u32));
                }
            }
        }
        if directions.is_empty() {
            return Err(BuildError::NotSumOfTwoSquares(m));
        }
        Ok(DirectionSet { m, directions })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn directions(&self) -> &[(i64, i64)] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }
}
