//! The framework data model.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

/// A joint: a point of the integer lattice `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Joint(Vec<i64>);

impl Joint {
    pub fn new(coords: Vec<i64>) -> Self {
        Joint(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for Joint {
    fn from(coords: Vec<i64>) -> Self {
        Joint(coords)
    }
}

/// An undirected bar between two distinct joints, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bar {
    lo: usize,
    hi: usize,
}

impl Bar {
    /// Returns `None` for a self-loop.
    pub fn new(i: usize, j: usize) -> Option<Bar> {
        match i.cmp(&j) {
            core::cmp::Ordering::Less => Some(Bar { lo: i, hi: j }),
            core::cmp::Ordering::Greater => Some(Bar { lo: j, hi: i }),
            core::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("framework dimension must be at least 1")]
    ZeroDimension,
    #[error("joint {joint} has {found} coordinates, expected {expected}")]
    CoordinateCount {
        joint: usize,
        expected: usize,
        found: usize,
    },
    #[error("joints {first} and {second} coincide")]
    DuplicateJoint { first: usize, second: usize },
    #[error("bar ({i}, {j}) references a joint outside 0..{joints}")]
    JointOutOfRange { i: usize, j: usize, joints: usize },
    #[error("bar ({joint}, {joint}) is a self-loop")]
    SelfLoop { joint: usize },
    #[error("bar ({i}, {j}) is already present")]
    DuplicateBar { i: usize, j: usize },
}

/// A bar-joint framework in `R^d` with integer joint coordinates.
///
/// Joints are identified by index; coordinates are payload. Bars keep their
/// insertion order, which the file writers rely on to reproduce adjacency
/// list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    dim: usize,
    joints: Vec<Joint>,
    bars: Vec<Bar>,
    bar_set: BTreeSet<Bar>,
}

impl Framework {
    /// A framework with the given joints and no bars.
    pub fn with_joints(dim: usize, joints: Vec<Joint>) -> Result<Self, FrameworkError> {
        if dim == 0 {
            return Err(FrameworkError::ZeroDimension);
        }
        let mut seen = alloc::collections::BTreeMap::new();
        for (k, joint) in joints.iter().enumerate() {
            if joint.dim() != dim {
                return Err(FrameworkError::CoordinateCount {
                    joint: k,
                    expected: dim,
                    found: joint.dim(),
                });
            }
            if let Some(first) = seen.insert(joint.coords(), k) {
                return Err(FrameworkError::DuplicateJoint { first, second: k });
            }
        }
        Ok(Framework {
            dim,
            joints,
            bars: Vec::new(),
            bar_set: BTreeSet::new(),
        })
    }

    pub fn new<I>(dim: usize, joints: Vec<Joint>, bars: I) -> Result<Self, FrameworkError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut framework = Self::with_joints(dim, joints)?;
        for (i, j) in bars {
            framework.add_bar(i, j)?;
        }
        Ok(framework)
    }

    /// Convenience constructor from coordinate vectors.
    pub fn from_coords<I>(
        dim: usize,
        coords: Vec<Vec<i64>>,
        bars: I,
    ) -> Result<Self, FrameworkError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(dim, coords.into_iter().map(Joint).collect(), bars)
    }

    pub fn add_bar(&mut self, i: usize, j: usize) -> Result<(), FrameworkError> {
        let joints = self.joints.len();
        if i >= joints || j >= joints {
            return Err(FrameworkError::JointOutOfRange { i, j, joints });
        }
        let bar = Bar::new(i, j).ok_or(FrameworkError::SelfLoop { joint: i })?;
        if !self.bar_set.insert(bar) {
            return Err(FrameworkError::DuplicateBar { i, j });
        }
        self.bars.push(bar);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn joints(&self) -> &[Joint] {
        &self.joints
    }

    pub fn joint(&self, index: usize) -> &Joint {
        &self.joints[index]
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn num_joints(&self) -> usize {
        self.joints.len()
    }

    pub fn num_bars(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.joints.is_empty()
    }

    pub fn has_bar(&self, i: usize, j: usize) -> bool {
        Bar::new(i, j).is_some_and(|bar| self.bar_set.contains(&bar))
    }

    /// `p_lo - p_hi` for the given bar.
    pub fn bar_vector(&self, bar: Bar) -> Vec<i64> {
        let p = self.joints[bar.lo].coords();
        let q = self.joints[bar.hi].coords();
        p.iter().zip(q).map(|(a, b)| a - b).collect()
    }

    pub fn squared_length(&self, bar: Bar) -> i64 {
        let p = self.joints[bar.lo].coords();
        let q = self.joints[bar.hi].coords();
        p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum()
    }

    /// Squared length of every bar, in bar order.
    pub fn squared_bar_lengths(&self) -> Vec<i64> {
        self.bars
            .iter()
            .map(|&bar| self.squared_length(bar))
            .collect()
    }

    /// True iff all bars share one length; vacuously true for at most one bar.
    pub fn is_unit_bar(&self) -> bool {
        let mut lengths = self.bars.iter().map(|&bar| self.squared_length(bar));
        match lengths.next() {
            None => true,
            Some(first) => lengths.all(|len| len == first),
        }
    }

    /// Adjacency lists; neighbours appear in bar insertion order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.joints.len()];
        for bar in &self.bars {
            adj[bar.lo].push(bar.hi);
            adj[bar.hi].push(bar.lo);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.joints.len()];
        for bar in &self.bars {
            deg[bar.lo] += 1;
            deg[bar.hi] += 1;
        }
        deg
    }

    /// Subframework induced by `keep`, re-indexed densely in the order given.
    /// Surviving bars keep their relative order.
    pub fn induced(&self, keep: &[usize]) -> Framework {
        let mut new_index = alloc::vec![usize::MAX; self.joints.len()];
        for (k, &old) in keep.iter().enumerate() {
            new_index[old] = k;
        }
        let joints: Vec<Joint> = keep.iter().map(|&old| self.joints[old].clone()).collect();
        let mut bars = Vec::new();
        let mut bar_set = BTreeSet::new();
        for bar in &self.bars {
            let (i, j) = (new_index[bar.lo], new_index[bar.hi]);
            if i != usize::MAX && j != usize::MAX {
                let b = Bar::new(i, j).expect("distinct joints");
                bars.push(b);
                bar_set.insert(b);
            }
        }
        Framework {
            dim: self.dim,
            joints,
            bars,
            bar_set,
        }
    }

    /// Relabels joints: old joint `k` becomes joint `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Framework {
        assert_eq!(perm.len(), self.joints.len(), "permutation length");
        let mut joints = alloc::vec![Joint(Vec::new()); self.joints.len()];
        for (old, joint) in self.joints.iter().enumerate() {
            joints[perm[old]] = joint.clone();
        }
        let pairs = self.bars.iter().map(|b| (perm[b.lo], perm[b.hi]));
        Framework::new(self.dim, joints, pairs).expect("permutation preserves validity")
    }

    /// Multiplies every coordinate by `factor` (must be nonzero).
    pub fn scaled(&self, factor: i64) -> Framework {
        assert_ne!(factor, 0, "scale factor must be nonzero");
        let joints = self
            .joints
            .iter()
            .map(|j| Joint(j.0.iter().map(|c| c * factor).collect()))
            .collect();
        Framework {
            dim: self.dim,
            joints,
            bars: self.bars.clone(),
            bar_set: self.bar_set.clone(),
        }
    }

    pub(crate) fn from_parts_unchecked(
        dim: usize,
        joints: Vec<Joint>,
        bars: Vec<Bar>,
    ) -> Framework {
        let bar_set = bars.iter().copied().collect();
        Framework {
            dim,
            joints,
            bars,
            bar_set,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_invalid_frameworks() {
        let pts = vec![vec![0, 0], vec![1, 2]];
        assert_eq!(
            Framework::from_coords(2, pts.clone(), [(0, 0)]),
            Err(FrameworkError::SelfLoop { joint: 0 })
        );
        assert!(matches!(
            Framework::from_coords(2, pts.clone(), [(0, 1), (1, 0)]),
            Err(FrameworkError::DuplicateBar { .. })
        ));
        assert!(matches!(
            Framework::from_coords(2, pts, [(0, 2)]),
            Err(FrameworkError::JointOutOfRange { .. })
        ));
        assert!(matches!(
            Framework::from_coords(2, vec![vec![1, 1], vec![1, 1]], []),
            Err(FrameworkError::DuplicateJoint {
                first: 0,
                second: 1
            })
        ));
        assert!(matches!(
            Framework::from_coords(2, vec![vec![1, 1, 0]], []),
            Err(FrameworkError::CoordinateCount { .. })
        ));
        assert_eq!(
            Framework::with_joints(0, vec![]),
            Err(FrameworkError::ZeroDimension)
        );
    }

    #[test]
    fn squared_lengths() {
        let f = Framework::from_coords(2, vec![vec![0, 0], vec![3, 4]], [(0, 1)]).unwrap();
        assert_eq!(f.squared_bar_lengths(), vec![25]);
        let empty = Framework::with_joints(2, vec![]).unwrap();
        assert!(empty.squared_bar_lengths().is_empty());
        assert!(empty.is_unit_bar());
    }

    #[test]
    fn unit_bar_detects_mixed_lengths() {
        let f = Framework::from_coords(
            2,
            vec![vec![0, 0], vec![1, 2], vec![4, 6]],
            [(0, 1), (1, 2)],
        )
        .unwrap();
        assert_eq!(f.squared_bar_lengths(), vec![5, 25]);
        assert!(!f.is_unit_bar());
    }

    #[test]
    fn induced_keeps_order() {
        let f = Framework::from_coords(
            1,
            vec![vec![0], vec![1], vec![2], vec![3]],
            [(2, 3), (0, 1), (1, 2)],
        )
        .unwrap();
        let g = f.induced(&[1, 2, 3]);
        assert_eq!(g.num_joints(), 3);
        let pairs: Vec<_> = g.bars().iter().map(|b| b.endpoints()).collect();
        assert_eq!(pairs, vec![(1, 2), (0, 1)]);
    }
}
