use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::framework::Framework;

use super::exact::{int_matrix_nullspace, BitBudget};
use super::matrix::RigidityMatrix;
use super::RigidityError;

/// One rational velocity vector per joint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionField {
    dim: usize,
    velocities: Vec<Vec<BigRational>>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl MotionField {
    /// Panics if the velocities do not all have length `dim`.
    pub fn new(dim: usize, velocities: Vec<Vec<BigRational>>) -> Self {
        assert!(
            velocities.iter().all(|v| v.len() == dim),
            "velocity dimension"
        );
        MotionField { dim, velocities }
    }

    pub fn zero(dim: usize, joints: usize) -> Self {
        MotionField {
            dim,
            velocities: vec![vec![BigRational::zero(); dim]; joints],
        }
    }

    /// Splits a flat vector (joint-major, as in the rigidity matrix columns).
    pub fn from_flat(dim: usize, flat: &[BigRational]) -> Self {
        assert!(
            dim > 0 && flat.len().is_multiple_of(dim),
            "flat length must be a multiple of dim"
        );
        MotionField {
            dim,
            velocities: flat.chunks(dim).map(<[_]>::to_vec).collect(),
        }
    }

    pub fn from_integers(dim: usize, velocities: &[Vec<i64>]) -> Self {
        MotionField::new(
            dim,
            velocities
                .iter()
                .map(|v| v.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    /// Every joint moves with the same integer velocity.
    pub fn translation(framework: &Framework, direction: &[i64]) -> Self {
        assert_eq!(direction.len(), framework.dim(), "direction dimension");
        let v: Vec<BigRational> = direction.iter().map(|&x| int(x)).collect();
        MotionField {
            dim: framework.dim(),
            velocities: vec![v; framework.num_joints()],
        }
    }

    /// Infinitesimal rotation in the plane of axes `a` and `b`:
    /// `v[a] = -p[b]`, `v[b] = p[a]`, other components zero.
    pub fn rotation(framework: &Framework, a: usize, b: usize) -> Self {
        let d = framework.dim();
        assert!(a < d && b < d && a != b, "rotation axes");
        let velocities = framework
            .joints()
            .iter()
            .map(|joint| {
                let p = joint.coords();
                let mut v = vec![BigRational::zero(); d];
                v[a] = int(-p[b]);
                v[b] = int(p[a]);
                v
            })
            .collect();
        MotionField { dim: d, velocities }
    }

    /// The `d` unit translations followed by the `d(d-1)/2` rotations.
    pub fn trivial_motions(framework: &Framework) -> Vec<MotionField> {
        let d = framework.dim();
        let mut out = Vec::new();
        for k in 0..d {
            let mut e = vec![0; d];
            e[k] = 1;
            out.push(MotionField::translation(framework, &e));
        }
        for a in 0..d {
            for b in a + 1..d {
                out.push(MotionField::rotation(framework, a, b));
            }
        }
        out
    }

    /// Basis of all infinitesimal motions, from the exact nullspace of the
    /// rigidity matrix. A barless framework gets the standard basis.
    pub fn nullspace_basis(
        framework: &Framework,
        budget: BitBudget,
    ) -> Result<Vec<MotionField>, RigidityError> {
        let d = framework.dim();
        let cols = d * framework.num_joints();
        if framework.num_bars() == 0 {
            return Ok((0..cols)
                .map(|k| {
                    let mut flat = vec![BigRational::zero(); cols];
                    flat[k] = BigRational::one();
                    MotionField::from_flat(d, &flat)
                })
                .collect());
        }
        let matrix = RigidityMatrix::new(framework)?.to_int_matrix();
        Ok(int_matrix_nullspace(&matrix, budget)?
            .iter()
            .map(|v| MotionField::from_flat(d, v))
            .collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.velocities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.velocities.is_empty()
    }

    pub fn velocity(&self, joint: usize) -> &[BigRational] {
        &self.velocities[joint]
    }

    pub fn velocities(&self) -> &[Vec<BigRational>] {
        &self.velocities
    }

    pub fn into_velocities(self) -> Vec<Vec<BigRational>> {
        self.velocities
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: &BigRational, other: &MotionField) -> MotionField {
        assert_eq!(
            (self.dim, self.len()),
            (other.dim, other.len()),
            "motion shapes differ"
        );
        let velocities = self
            .velocities
            .iter()
            .zip(&other.velocities)
            .map(|(u, v)| u.iter().zip(v).map(|(x, y)| x + factor * y).collect())
            .collect();
        MotionField {
            dim: self.dim,
            velocities,
        }
    }
}

/// Checks `(v_i − v_j) · (p_i − p_j) = 0` exactly for every bar `{i, j}`.
pub fn verify_motion(framework: &Framework, motion: &MotionField) -> Result<bool, RigidityError> {
    if motion.len() != framework.num_joints() {
        return Err(RigidityError::VelocityCount {
            expected: framework.num_joints(),
            found: motion.len(),
        });
    }
    if motion.dim() != framework.dim() && !motion.is_empty() {
        return Err(RigidityError::VelocityDimension {
            expected: framework.dim(),
            found: motion.dim(),
        });
    }
    Ok(framework.bars().iter().all(|&bar| {
        let diff = framework.bar_vector(bar);
        let (u, v) = (motion.velocity(bar.lo()), motion.velocity(bar.hi()));
        diff.iter()
            .zip(u.iter().zip(v))
            .fold(BigRational::zero(), |acc, (&p, (a, b))| {
                acc + (a - b) * int(p)
            })
            .is_zero()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Framework {
        Framework::from_coords(
            2,
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]],
            [(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap()
    }

    #[test]
    fn trivial_motions_pass() {
        let f = square();
        assert!(verify_motion(&f, &MotionField::zero(2, 4)).unwrap());
        for m in MotionField::trivial_motions(&f) {
            assert!(verify_motion(&f, &m).unwrap());
        }
    }

    #[test]
    fn shear_of_square_is_a_motion_but_stretch_is_not() {
        let f = square();
        let shear =
            MotionField::from_integers(2, &[vec![0, 0], vec![0, 0], vec![1, 0], vec![1, 0]]);
        assert!(verify_motion(&f, &shear).unwrap());
        let stretch =
            MotionField::from_integers(2, &[vec![0, 0], vec![1, 0], vec![1, 0], vec![0, 0]]);
        assert!(!verify_motion(&f, &stretch).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let f = square();
        assert!(matches!(
            verify_motion(&f, &MotionField::zero(2, 3)),
            Err(RigidityError::VelocityCount {
                expected: 4,
                found: 3
            })
        ));
        assert!(matches!(
            verify_motion(&f, &MotionField::zero(3, 4)),
            Err(RigidityError::VelocityDimension { .. })
        ));
    }
}
