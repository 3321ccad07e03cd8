//! Command-line front end, JSON formats and multi-threaded verification
//! drivers for `operad-forge-core`.

pub mod cli;
pub mod json;
pub mod parallel;
pub mod verify;

pub use cli::{dispatch, Outcome};
