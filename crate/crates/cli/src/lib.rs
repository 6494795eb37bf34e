//! Batch front end for the gabi toolkit: parses JSON definition files, runs a
//! named check and reports `PASS`, `FAIL` or `NOT_APPLICABLE`.
//!
//! Exit codes: 0 for PASS, 1 for FAIL or NOT_APPLICABLE, 2 for input errors.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod format;

pub use commands::{main_with, run, CommandName, Job};
pub use document::{Format, ReportDocument, Verdict};
