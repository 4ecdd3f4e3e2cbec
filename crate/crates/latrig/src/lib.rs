//! File formats, figures, parallel search and the command line for
//! [`latrig_core`].

pub mod cli;
pub mod figures;
pub mod formats;
pub mod parallel;

pub use latrig_core as core;
