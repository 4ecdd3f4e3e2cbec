//! Randomized construction of bipartite unit-bar frameworks with large girth.
//!
//! Joints sit on the `n × n` grid (joint `(x, y)` has index `x + n·y`).
//! A seeded permutation fixes the visiting order. In each of `|D|` rounds
//! every joint draws a random untried direction `d`; the bar to `y = x + d`
//! is added when `y` is on the grid and the ball of radius `G/2 − 1` around
//! `x` is disjoint from the ball of radius `G/2 − 2` around `y` in the
//! current partial framework. Joints of degree below three are pruned at the
//! end. Disjoint balls force `dist(x, y) ≥ G − 2` before insertion, and
//! `x`, `y` lie in different colour classes, so the new shortest cycle has
//! length at least `G`.

mod directions;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::framework::{Bar, Framework, Joint};
use crate::graph::{self, Girth};
use crate::rigidity::{analyze, trivial_motion_dim, AnalysisReport, AnalyzeOptions};
use crate::seed::{trial_rng, trial_seed};

pub use directions::DirectionSet;

/// Minimum degree of every output joint.
pub const MIN_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("{0} is not a sum of two squares")]
    NotSumOfTwoSquares(u64),
    #[error("target girth must be even and at least 4, got {0}")]
    InvalidGirth(usize),
    #[error("lattice side must be at least 1")]
    EmptyLattice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildConfig {
    /// Side of the square lattice.
    pub n: usize,
    /// Squared bar length.
    pub m: u64,
    /// Target girth `G` (even, at least 4).
    pub target_girth: usize,
    pub seed: u64,
    pub trials: usize,
}

impl BuildConfig {
    pub fn new(n: usize, m: u64, target_girth: usize) -> Self {
        BuildConfig {
            n,
            m,
            target_girth,
            seed: 0,
            trials: 1,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    /// Checks the parameters and returns the direction set.
    pub fn validate(&self) -> Result<DirectionSet, BuildError> {
        if self.n == 0 {
            return Err(BuildError::EmptyLattice);
        }
        if self.target_girth < 4 || !self.target_girth.is_multiple_of(2) {
            return Err(BuildError::InvalidGirth(self.target_girth));
        }
        DirectionSet::new(self.m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BuildResult {
    pub framework: Framework,
    pub girth_achieved: Girth,
    /// Present when the framework passed the edge-count guard and was analysed.
    pub report: Option<AnalysisReport>,
    pub seed_used: u64,
    pub trial_index: usize,
}

impl BuildResult {
    pub fn joints(&self) -> usize {
        self.framework.num_joints()
    }

    pub fn bars(&self) -> usize {
        self.framework.num_bars()
    }

    pub fn is_rigid(&self) -> bool {
        self.report.as_ref().is_some_and(AnalysisReport::is_rigid)
    }
}

/// Reusable bounded-BFS buffers for the ball-disjointness test.
struct Balls {
    in_first: Vec<u32>,
    seen: Vec<u32>,
    depth: Vec<usize>,
    epoch: u32,
    queue: VecDeque<usize>,
}

impl Balls {
    fn new(size: usize) -> Self {
        Balls {
            in_first: vec![0; size],
            seen: vec![0; size],
            depth: vec![0; size],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    /// Whether `ball(x, rx)` and `ball(y, ry)` share a joint.
    fn intersect(&mut self, adj: &[Vec<usize>], x: usize, rx: usize, y: usize, ry: usize) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.bfs(adj, x, rx, |_, _| false, epoch, true);
        self.bfs(adj, y, ry, |in_first, v| in_first[v] == epoch, epoch, false)
    }

    fn bfs(
        &mut self,
        adj: &[Vec<usize>],
        start: usize,
        radius: usize,
        hit: impl Fn(&[u32], usize) -> bool,
        epoch: u32,
        marking: bool,
    ) -> bool {
        let stamp = |b: &mut Balls, v: usize| {
            if marking {
                b.in_first[v] = epoch;
            } else {
                b.seen[v] = epoch;
            }
        };
        let stamped = |b: &Balls, v: usize| {
            if marking {
                b.in_first[v] == epoch
            } else {
                b.seen[v] == epoch
            }
        };
        self.queue.clear();
        stamp(self, start);
        self.depth[start] = 0;
        if hit(&self.in_first, start) {
            return true;
        }
        self.queue.push_back(start);
        while let Some(u) = self.queue.pop_front() {
            if self.depth[u] >= radius {
                continue;
            }
            for &w in &adj[u] {
                if !stamped(self, w) {
                    stamp(self, w);
                    if hit(&self.in_first, w) {
                        return true;
                    }
                    self.depth[w] = self.depth[u] + 1;
                    self.queue.push_back(w);
                }
            }
        }
        false
    }
}

fn construct(n: usize, directions: &DirectionSet, target_girth: usize, seed: u64) -> Framework {
    let total = n * n;
    let dirs = directions.directions();
    let radius_x = target_girth / 2 - 1;
    let radius_y = radius_x - 1;

    let mut rng = trial_rng(seed);
    let mut order: Vec<usize> = (0..total).collect();
    order.shuffle(&mut rng);
    let mut untried: Vec<Vec<usize>> = vec![(0..dirs.len()).collect(); total];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut bars: Vec<Bar> = Vec::new();
    let mut balls = Balls::new(total);

    for _round in 0..dirs.len() {
        for &x in &order {
            let pick = rng.gen_range(0..untried[x].len());
            let (dx, dy) = dirs[untried[x][pick]];
            let tx = (x % n) as i64 + dx;
            let ty = (x / n) as i64 + dy;
            if (0..n as i64).contains(&tx) && (0..n as i64).contains(&ty) {
                let y = tx as usize + n * ty as usize;
                if !balls.intersect(&adj, x, radius_x, y, radius_y) {
                    debug_assert!(
                        graph::distance_within(&adj, x, y, target_girth - 2).is_none(),
                        "inserted bar would close a cycle shorter than the target girth"
                    );
                    adj[x].push(y);
                    adj[y].push(x);
                    bars.push(Bar::new(x, y).expect("nonzero direction"));
                }
            }
            untried[x].remove(pick);
        }
    }

    let joints = (0..total)
        .map(|v| Joint::new(vec![(v % n) as i64, (v / n) as i64]))
        .collect();
    let keep = graph::min_degree_survivors(&adj, MIN_DEGREE);
    Framework::from_parts_unchecked(2, joints, bars).induced(&keep)
}

/// One run of the construction with the given seed; no rigidity analysis.
pub fn build_one(config: &BuildConfig, trial_seed: u64) -> Result<BuildResult, BuildError> {
    let directions = config.validate()?;
    let framework = construct(config.n, &directions, config.target_girth, trial_seed);
    let girth_achieved = framework.girth();
    Ok(BuildResult {
        framework,
        girth_achieved,
        report: None,
        seed_used: trial_seed,
        trial_index: 0,
    })
}

/// Whether a framework has at least `2v − 3` bars (and is nonempty).
pub fn passes_edge_guard(framework: &Framework) -> bool {
    !framework.is_empty() && framework.num_bars() + 3 >= 2 * framework.num_joints()
}

/// Trial `trial` of a search: build with the derived seed, then analyse if
/// the edge guard passes.
pub fn run_trial(
    config: &BuildConfig,
    trial: usize,
    options: &AnalyzeOptions,
) -> Result<BuildResult, BuildError> {
    let seed = trial_seed(config.seed, trial as u64);
    let mut result = build_one(config, seed)?;
    result.trial_index = trial;
    if passes_edge_guard(&result.framework) {
        result.report = Some(analyze(&result.framework, options));
    }
    Ok(result)
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SearchOutcome {
    /// Rigid result with the fewest joints (earliest trial on ties).
    pub best_rigid: Option<BuildResult>,
    /// Best non-rigid result, kept for reporting when nothing rigid is found.
    pub best_candidate: Option<BuildResult>,
    pub rigid_found: usize,
    pub trials_run: usize,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.best_rigid.is_some()
    }

    /// The rigid result if any, else the candidate.
    pub fn result(&self) -> Option<&BuildResult> {
        self.best_rigid.as_ref().or(self.best_candidate.as_ref())
    }
}

/// Merges trial results in any order into the same [`SearchOutcome`].
#[derive(Clone, Debug, Default)]
pub struct SearchReducer {
    outcome: SearchOutcome,
}

type CandidateKey = (bool, usize, Reverse<usize>, usize);

fn candidate_key(r: &BuildResult) -> CandidateKey {
    // Analysed results first, then fewest non-trivial motions, then most bars.
    let excess = r
        .report
        .as_ref()
        .and_then(|rep| rep.nullity)
        .map_or(usize::MAX, |nullity| {
            nullity.saturating_sub(trivial_motion_dim(2))
        });
    (r.report.is_none(), excess, Reverse(r.bars()), r.trial_index)
}

impl SearchReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, result: BuildResult) {
        self.outcome.trials_run += 1;
        if result.is_rigid() {
            self.outcome.rigid_found += 1;
        }
        self.offer(result);
    }

    /// Folds in another reducer's state, as if its results had been pushed here.
    pub fn merge(&mut self, other: SearchReducer) {
        let other = other.outcome;
        self.outcome.trials_run += other.trials_run;
        self.outcome.rigid_found += other.rigid_found;
        for result in other.best_rigid.into_iter().chain(other.best_candidate) {
            self.offer(result);
        }
    }

    fn offer(&mut self, result: BuildResult) {
        let out = &mut self.outcome;
        if result.is_rigid() {
            let better = out.best_rigid.as_ref().is_none_or(|b| {
                (result.joints(), result.trial_index) < (b.joints(), b.trial_index)
            });
            if better {
                out.best_rigid = Some(result);
            }
        } else {
            let better = out
                .best_candidate
                .as_ref()
                .is_none_or(|b| candidate_key(&result) < candidate_key(b));
            if better {
                out.best_candidate = Some(result);
            }
        }
    }

    pub fn finish(self) -> SearchOutcome {
        self.outcome
    }
}

/// Runs `config.trials` independent trials sequentially.
pub fn search(config: &BuildConfig, options: &AnalyzeOptions) -> Result<SearchOutcome, BuildError> {
    config.validate()?;
    let mut reducer = SearchReducer::new();
    for trial in 0..config.trials {
        reducer.push(run_trial(config, trial, options)?);
    }
    Ok(reducer.finish())
}
