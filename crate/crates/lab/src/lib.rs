//! File formats, parallel experiment drivers and JSON reports on top of
//! `arglab-core`. The `arglab` binary is a thin front end over this crate.

pub mod error;
pub mod formats;

pub use error::{LabError, LabResult};
pub mod parallel;
pub mod report;
