//! Benchmark harness for the `srkd` k-d trees.
//!
//! Reproduces the leaf-count scaling experiment (`exp1`) and the
//! build/query comparison across guards and splitting sequences (`exp2`),
//! writing one CSV row per (configuration, N) cell.

pub mod analysis;
pub mod config;
pub mod experiment;
pub mod record;

pub use analysis::{complexity_exponent, ExponentError};
pub use config::{BenchConfig, BuildKind, ConfigError, Region};
pub use experiment::{exp1_cells, exp2_cells, run_cells, run_exp1, run_exp2, Cell};
pub use record::{read_csv, write_csv, BenchRecord};
