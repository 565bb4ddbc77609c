pub mod bimodel;
pub mod combinatorics;
pub mod diagcat;
pub mod error;
pub mod heisenberg;
pub mod linalg;
pub mod nilcoxeter;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod symfunc;
pub mod weyl;

pub use error::{Error, Result};
pub use report::{CheckEntry, Report, VerificationFailure};
pub use suite::{run_case, run_suite, CaseStatus, SuiteConfig, VerificationCase};
