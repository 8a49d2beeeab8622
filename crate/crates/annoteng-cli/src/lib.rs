//! Command implementations behind the `annoteng` binary.

pub mod commands;
pub mod stats;

pub use commands::{annotate, interpret, stats_report, validate, Options};
pub use stats::{compute_stats, Counts, Stats};
