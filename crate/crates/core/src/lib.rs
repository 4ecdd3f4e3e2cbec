//! Bar-joint frameworks on integer lattices and their infinitesimal rigidity.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`Framework`]: joints at integer points of `Z^d` joined by bars,
//! - graph algorithms used throughout ([`graph`]): girth, 2-colouring,
//!   bounded BFS neighbourhoods and minimum-degree pruning,
//! - the rigidity matrix with exact (fraction-free, big-integer) and
//!   numeric rank ([`rigidity`]),
//! - knight / `(a,b)`-leaper lattice generators and lattice slices
//!   ([`generators`]),
//! - the randomized construction of bipartite unit-bar frameworks with a
//!   prescribed girth ([`girth_builder`]).
//!
//! IO, figures and the command-line front end live in the `latrig` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod framework;
pub mod generators;
pub mod girth_builder;
pub mod graph;
pub mod rigidity;
pub mod seed;

pub use framework::{Bar, Framework, FrameworkError, Joint};
pub use generators::{knight_2d, knight_lattice, GeneratorError, LatticeSlice, LeaperSpec};
pub use girth_builder::{
    build_one, search, BuildConfig, BuildError, BuildResult, DirectionSet, SearchOutcome,
};
pub use graph::Girth;
pub use rigidity::{
    analyze, exact_rank, numeric_rank, AnalysisReport, AnalyzeOptions, MotionField, RankMode,
    RigidityError, RigidityMatrix, Verdict,
};
