//! Verification harness for the `pseudoroot` library: dimension tables,
//! series coefficients and cross-checks between independent computations.

pub mod app;
pub mod cache;
pub mod checks;
pub mod dims;
pub mod field;
pub mod report;

pub use app::{run, Cli};
