//! Infinitesimal rigidity: the rigidity matrix, exact and numeric rank,
//! verdicts, and motion fields.
//!
//! A framework in `R^d` whose joints affinely span `R^d` is infinitesimally
//! rigid iff its rigidity matrix has rank `d·v − C(d+1, 2)`.

mod exact;
mod matrix;
mod motion;
mod numeric;

use core::fmt;

use thiserror::Error;

use crate::framework::Framework;

pub use exact::{annihilates, int_matrix_nullspace, int_matrix_rank, BitBudget};
pub use matrix::{IntMatrix, RigidityMatrix};
pub use motion::{verify_motion, MotionField};
pub use numeric::{int_matrix_numeric_rank, DEFAULT_TOLERANCE};

/// Frameworks with more joints than this are ranked numerically by
/// [`RankMode::Auto`].
pub const DEFAULT_EXACT_JOINT_LIMIT: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RigidityError {
    #[error("framework has no bars; its rigidity matrix would be empty")]
    NoBars,
    #[error("exact elimination needed a {bits}-bit entry, over the {budget}-bit budget")]
    BitBudgetExceeded { bits: u64, budget: u64 },
    #[error("motion has {found} velocities for {expected} joints")]
    VelocityCount { expected: usize, found: usize },
    #[error("motion velocities have dimension {found}, framework has {expected}")]
    VelocityDimension { expected: usize, found: usize },
}

/// Rank of a rigidity matrix over the rationals (fraction-free elimination).
pub fn exact_rank(matrix: &RigidityMatrix, budget: BitBudget) -> Result<usize, RigidityError> {
    int_matrix_rank(&matrix.to_int_matrix(), budget)
}

/// Number of numerically nonzero pivots at relative tolerance `tol`.
pub fn numeric_rank(matrix: &RigidityMatrix, tol: f64) -> usize {
    int_matrix_numeric_rank(&matrix.to_int_matrix(), tol)
}

/// `C(d+1, 2)`, the dimension of the trivial motions of `R^d`.
pub fn trivial_motion_dim(dim: usize) -> usize {
    dim * (dim + 1) / 2
}

/// `d·v − C(d+1, 2)`; negative for tiny frameworks.
pub fn required_rank(dim: usize, joints: usize) -> i64 {
    (dim * joints) as i64 - trivial_motion_dim(dim) as i64
}

/// Whether the joints affinely span `R^d`.
pub fn spans_affinely(framework: &Framework) -> bool {
    let d = framework.dim();
    let Some(origin) = framework.joints().first() else {
        return false;
    };
    let mut m = IntMatrix::new(d);
    for joint in &framework.joints()[1..] {
        m.push_row(
            joint
                .coords()
                .iter()
                .zip(origin.coords())
                .enumerate()
                .map(|(k, (a, b))| (k, a - b)),
        );
    }
    int_matrix_rank(&m, BitBudget::UNLIMITED).expect("unlimited budget") == d
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RankMode {
    Exact,
    Numeric {
        tol: f64,
    },
    /// Exact up to `exact_joint_limit` joints, numeric beyond.
    Auto {
        exact_joint_limit: usize,
        tol: f64,
    },
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Auto {
            exact_joint_limit: DEFAULT_EXACT_JOINT_LIMIT,
            tol: DEFAULT_TOLERANCE,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AnalyzeOptions {
    pub mode: RankMode,
    pub bit_budget: BitBudget,
}

impl AnalyzeOptions {
    pub fn exact() -> Self {
        AnalyzeOptions {
            mode: RankMode::Exact,
            bit_budget: BitBudget::default(),
        }
    }

    pub fn numeric(tol: f64) -> Self {
        AnalyzeOptions {
            mode: RankMode::Numeric { tol },
            bit_budget: BitBudget::default(),
        }
    }
}

/// Arithmetic actually used for a rank.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Arithmetic {
    Exact,
    Numeric { tol: f64 },
}

impl fmt::Display for Arithmetic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arithmetic::Exact => f.write_str("exact"),
            Arithmetic::Numeric { tol } => write!(f, "numeric({tol:e})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Rigid,
    Flexible,
    /// Fewer bars than the required rank; no rank was computed.
    TriviallyFlexible,
    /// Joints do not affinely span `R^d`; the rank rule gives no verdict.
    DegenerateSpan,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Rigid => "rigid",
            Verdict::Flexible => "flexible",
            Verdict::TriviallyFlexible => "trivially-flexible",
            Verdict::DegenerateSpan => "degenerate-span",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    pub joints: usize,
    pub bars: usize,
    pub dim: usize,
    pub rank: Option<usize>,
    pub nullity: Option<usize>,
    pub required_rank: i64,
    pub verdict: Verdict,
    pub arithmetic: Option<Arithmetic>,
    /// Exact elimination hit the bit budget and the numeric rank was used.
    pub budget_fallback: bool,
}

impl AnalysisReport {
    /// `None` when there is no verdict (degenerate span).
    pub fn rigid(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Rigid => Some(true),
            Verdict::Flexible | Verdict::TriviallyFlexible => Some(false),
            Verdict::DegenerateSpan => None,
        }
    }

    pub fn is_rigid(&self) -> bool {
        self.verdict == Verdict::Rigid
    }
}

fn rank_with(
    matrix: &RigidityMatrix,
    joints: usize,
    options: &AnalyzeOptions,
) -> (usize, Arithmetic, bool) {
    let numeric = |tol: f64| (numeric_rank(matrix, tol), Arithmetic::Numeric { tol });
    let (exact_first, tol) = match options.mode {
        RankMode::Exact => (true, DEFAULT_TOLERANCE),
        RankMode::Numeric { tol } => (false, tol),
        RankMode::Auto {
            exact_joint_limit,
            tol,
        } => (joints <= exact_joint_limit, tol),
    };
    if !exact_first {
        let (rank, arithmetic) = numeric(tol);
        return (rank, arithmetic, false);
    }
    match exact_rank(matrix, options.bit_budget) {
        Ok(rank) => (rank, Arithmetic::Exact, false),
        Err(_) => {
            let (rank, arithmetic) = numeric(tol);
            (rank, arithmetic, true)
        }
    }
}

/// Decides infinitesimal rigidity.
///
/// Frameworks whose joints do not affinely span `R^d` get
/// [`Verdict::DegenerateSpan`]; frameworks with fewer bars than the required
/// rank are [`Verdict::TriviallyFlexible`] without any rank computation.
pub fn analyze(framework: &Framework, options: &AnalyzeOptions) -> AnalysisReport {
    let (joints, bars, dim) = (
        framework.num_joints(),
        framework.num_bars(),
        framework.dim(),
    );
    let required = required_rank(dim, joints);
    let mut report = AnalysisReport {
        joints,
        bars,
        dim,
        rank: None,
        nullity: None,
        required_rank: required,
        verdict: Verdict::DegenerateSpan,
        arithmetic: None,
        budget_fallback: false,
    };
    if !spans_affinely(framework) {
        return report;
    }
    if (bars as i64) < required {
        report.verdict = Verdict::TriviallyFlexible;
        return report;
    }
    let matrix =
        RigidityMatrix::new(framework).expect("spanning framework with enough bars has bars");
    let (rank, arithmetic, fallback) = rank_with(&matrix, joints, options);
    report.rank = Some(rank);
    report.nullity = Some(dim * joints - rank);
    report.arithmetic = Some(arithmetic);
    report.budget_fallback = fallback;
    report.verdict = if rank as i64 == required {
        Verdict::Rigid
    } else {
        Verdict::Flexible
    };
    report
}

/// Dimension of the space of infinitesimal motions (nullity of the rigidity
/// matrix). Unlike [`analyze`] this needs no spanning condition; a barless
/// framework has nullity `d·v`.
pub fn motion_space_dim(framework: &Framework, options: &AnalyzeOptions) -> usize {
    let cols = framework.dim() * framework.num_joints();
    match RigidityMatrix::new(framework) {
        Err(_) => cols,
        Ok(matrix) => cols - rank_with(&matrix, framework.num_joints(), options).0,
    }
}

/// Rigidity matrix rank of `framework`, exact.
pub fn framework_rank(framework: &Framework, budget: BitBudget) -> Result<usize, RigidityError> {
    if framework.num_bars() == 0 {
        return Ok(0);
    }
    exact_rank(&RigidityMatrix::new(framework)?, budget)
}
