//! Tables, sequences and verification reports on top of `coordination-core`.
//!
//! The `coordination` binary is a thin clap front end over these modules.

pub mod report;
pub mod sequences;
pub mod suites;
pub mod table;

pub use report::{Check, Format, ReportDocument, Verdict};
pub use suites::{Options, Suite};
