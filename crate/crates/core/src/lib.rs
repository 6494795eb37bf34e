//! Exact verification and derivation toolkit for gabi-algebras.
//!
//! Algebras are given by structure constants over `Q` or `F_p`; every axiom is
//! checked as an exact matrix identity with `e_i ⊗ e_j` at index `i·n + j`.

pub mod algcore;
pub mod coalg;
pub mod exactalg;
pub mod exec;
pub mod fixtures;
pub mod gabi;
pub mod modcat;
pub mod report;
pub mod settheory;

pub use exec::{Execution, SearchError, DEFAULT_CAP};
pub use report::{Finding, Report};
