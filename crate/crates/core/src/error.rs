use thiserror::Error;

use crate::bimodel::BimodError;
use crate::combinatorics::CombError;
use crate::diagcat::DiagError;
use crate::heisenberg::HeisError;
use crate::nilcoxeter::NilcoxError;
use crate::report::VerificationFailure;
use crate::symfunc::SymError;
use crate::weyl::WeylError;

/// Any error raised by the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Nilcox(#[from] NilcoxError),
    #[error(transparent)]
    Heis(#[from] HeisError),
    #[error(transparent)]
    Bimod(#[from] BimodError),
    #[error(transparent)]
    Diag(#[from] DiagError),
    #[error(transparent)]
    Verification(#[from] VerificationFailure),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
