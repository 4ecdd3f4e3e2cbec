//! Knight and `(a, b)`-leaper lattice frameworks, lattice slices and
//! contraction.
//!
//! Joints of a lattice with sides `s_0, …, s_{d-1}` are indexed with the
//! first coordinate running fastest, so in 2D joint `(x, y)` of an `m × n`
//! board has index `x + m·y`.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use thiserror::Error;

use crate::framework::{Bar, Framework, Joint};
use crate::rigidity::MotionField;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("axis {axis} is out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("level {level} is outside 0..{side} along axis {axis}")]
    LevelOutOfRange { axis: usize, level: i64, side: i64 },
    #[error("a one-dimensional framework cannot be contracted")]
    CannotContract,
    #[error("motion has dimension {found}, expected {expected}")]
    MotionDimension { expected: usize, found: usize },
}

/// Leap offsets and the board they act on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaperSpec {
    pub a: u32,
    pub b: u32,
    /// Side lengths, one per dimension.
    pub sides: Vec<usize>,
}

impl LeaperSpec {
    pub fn knight_board(m: usize, n: usize) -> Self {
        LeaperSpec {
            a: 1,
            b: 2,
            sides: vec![m, n],
        }
    }

    pub fn cube(n: usize, dim: usize, a: u32, b: u32) -> Self {
        LeaperSpec {
            a,
            b,
            sides: vec![n; dim],
        }
    }

    pub fn build(&self) -> Framework {
        lattice_framework(&self.sides, &leaper_moves(self.sides.len(), self.a, self.b))
    }
}

/// Planar leaps `{a, b}` with one representative per antipodal pair: the
/// second coordinate positive, or zero with the first positive.
///
/// Order follows the orbit split of the reference enumeration
/// (`lo < hi`: `(hi,lo), (lo,hi), (−lo,hi), (−hi,lo)`; `lo = hi`:
/// `(lo,lo), (−lo,lo)`; `lo = 0`: `(hi,0), (0,hi)`).
pub fn planar_leaps(a: u32, b: u32) -> Vec<(i64, i64)> {
    let (lo, hi) = (a.min(b) as i64, a.max(b) as i64);
    if hi == 0 {
        Vec::new()
    } else if lo == hi {
        vec![(lo, lo), (-lo, lo)]
    } else if lo == 0 {
        vec![(hi, 0), (0, hi)]
    } else {
        vec![(hi, lo), (lo, hi), (-lo, hi), (-hi, lo)]
    }
}

/// Leaper moves in `R^dim`: a planar leap placed on every ordered-by-index
/// pair of axes `p < q`, duplicates removed.
pub fn leaper_moves(dim: usize, a: u32, b: u32) -> Vec<Vec<i64>> {
    let mut moves: Vec<Vec<i64>> = Vec::new();
    for p in 0..dim {
        for q in p + 1..dim {
            for (x, y) in planar_leaps(a, b) {
                let mut v = vec![0; dim];
                v[p] = x;
                v[q] = y;
                if !moves.contains(&v) {
                    moves.push(v);
                }
            }
        }
    }
    moves
}

fn lattice_index(coords: &[i64], sides: &[usize]) -> Option<usize> {
    let mut index = 0usize;
    let mut stride = 1usize;
    for (&c, &side) in coords.iter().zip(sides) {
        if c < 0 || c as usize >= side {
            return None;
        }
        index += c as usize * stride;
        stride *= side;
    }
    Some(index)
}

/// Joints at every point of the box `Π [0, s_k)`, bars along `moves`.
///
/// Each joint is scanned in index order and only the given (half-space)
/// moves are tried, so no bar is produced twice.
pub fn lattice_framework(sides: &[usize], moves: &[Vec<i64>]) -> Framework {
    let dim = sides.len();
    let total: usize = sides.iter().product();
    let mut joints = Vec::with_capacity(total);
    for index in 0..total {
        let mut rest = index;
        let coords: Vec<i64> = sides
            .iter()
            .map(|&s| {
                let c = rest % s;
                rest /= s;
                c as i64
            })
            .collect();
        joints.push(Joint::new(coords));
    }
    let mut bars = Vec::new();
    for (i, joint) in joints.iter().enumerate() {
        for mv in moves {
            let target: Vec<i64> = joint.coords().iter().zip(mv).map(|(c, d)| c + d).collect();
            if let Some(j) = lattice_index(&target, sides) {
                bars.push(Bar::new(i, j).expect("nonzero move"));
            }
        }
    }
    Framework::from_parts_unchecked(dim, joints, bars)
}

/// The `m × n` `(a, b)`-leaper framework; `(1, 2)` is the knight.
pub fn knight_2d(m: usize, n: usize, a: u32, b: u32) -> Framework {
    lattice_framework(&[m, n], &leaper_moves(2, a, b))
}

/// The `n × ⋯ × n` `(a, b)`-leaper framework in `R^d`: bars join joints
/// that agree except in two coordinates, which differ by `a` and `b`.
pub fn knight_lattice(n: usize, dim: usize, a: u32, b: u32) -> Framework {
    lattice_framework(&vec![n; dim], &leaper_moves(dim, a, b))
}

/// A slice `F_{axis,level}` still embedded in `R^d`, together with the
/// parent index of each of its joints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSlice {
    pub framework: Framework,
    pub parent_indices: Vec<usize>,
    pub axis: usize,
    pub level: i64,
}

fn check_slice_args(framework: &Framework, axis: usize, level: i64) -> Result<(), GeneratorError> {
    let dim = framework.dim();
    if axis >= dim {
        return Err(GeneratorError::AxisOutOfRange { axis, dim });
    }
    let side = framework
        .joints()
        .iter()
        .map(|j| j.coords()[axis] + 1)
        .max()
        .unwrap_or(0);
    if level < 0 || level >= side {
        return Err(GeneratorError::LevelOutOfRange { axis, level, side });
    }
    Ok(())
}

/// The subframework induced by joints whose `axis` coordinate (0-based)
/// equals `level`. The lattice side along `axis` is taken as one more than
/// the largest coordinate present.
pub fn slice(
    framework: &Framework,
    axis: usize,
    level: i64,
) -> Result<LatticeSlice, GeneratorError> {
    check_slice_args(framework, axis, level)?;
    let keep: Vec<usize> = (0..framework.num_joints())
        .filter(|&k| framework.joint(k).coords()[axis] == level)
        .collect();
    Ok(LatticeSlice {
        framework: framework.induced(&keep),
        parent_indices: keep,
        axis,
        level,
    })
}

/// `F'_{axis,level}`: the slice with coordinate `axis` deleted, embedded in
/// `R^{d−1}` and indexed densely.
pub fn contract_slice(
    framework: &Framework,
    axis: usize,
    level: i64,
) -> Result<Framework, GeneratorError> {
    if framework.dim() < 2 {
        check_slice_args(framework, axis, level)?;
        return Err(GeneratorError::CannotContract);
    }
    Ok(contract(&slice(framework, axis, level)?))
}

/// Drops the fixed coordinate of an existing slice.
pub fn contract(slice: &LatticeSlice) -> Framework {
    let f = &slice.framework;
    let joints = f
        .joints()
        .iter()
        .map(|j| {
            let mut c = j.coords().to_vec();
            c.remove(slice.axis);
            Joint::new(c)
        })
        .collect();
    Framework::from_parts_unchecked(f.dim() - 1, joints, f.bars().to_vec())
}

/// Restricts a motion of the slice to the contracted slice by dropping the
/// velocity component along `axis`.
pub fn project_motion(motion: &MotionField, axis: usize) -> Result<MotionField, GeneratorError> {
    let dim = motion.dim();
    if axis >= dim {
        return Err(GeneratorError::AxisOutOfRange { axis, dim });
    }
    if dim < 2 {
        return Err(GeneratorError::CannotContract);
    }
    let velocities: Vec<Vec<BigRational>> = motion
        .velocities()
        .iter()
        .map(|v| {
            let mut v = v.clone();
            v.remove(axis);
            v
        })
        .collect();
    Ok(MotionField::new(dim - 1, velocities))
}

/// Restricts a motion of a parent framework to one of its slices.
pub fn restrict_motion(motion: &MotionField, slice: &LatticeSlice) -> MotionField {
    MotionField::new(
        motion.dim(),
        slice
            .parent_indices
            .iter()
            .map(|&k| motion.velocity(k).to_vec())
            .collect(),
    )
}
