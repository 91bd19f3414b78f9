//! Verification suites, table reproduction, and deterministic reports for
//! the exact-arithmetic kernel.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{Config, ConfigFile, ConfigOverrides};
pub use report::{Report, Status};
pub use suites::run_suite;
