//! Formats, job configuration and verification sweeps on top of
//! `greenforge-core`. The `greenforge` binary is a thin front end to this crate.

pub mod battery;
pub mod config;
pub mod format;
pub mod sweep;

pub use config::{parse_operand, parse_q, JobConfig, OutputFormat};
pub use sweep::{table_rows, verify_pairs, PairMismatch, SweepReport};
