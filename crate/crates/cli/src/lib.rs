//! Command-line front end for the `ghl3` crate: reproducible tables, point
//! evaluation and seeded sampling.

mod error;

pub mod cli;
pub mod format;
pub mod table;

pub use error::{CliError, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
