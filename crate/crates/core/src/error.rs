//! Error type shared by all modules.
//!
//! Exactness violations (a division with nonzero remainder, a quantity that the
//! theory asserts to be an integer or a Laurent polynomial failing to be one)
//! are reported as errors rather than being silently truncated.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computation would exceed a size guard; pass `force` to override.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// An exact division left a nonzero remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// A quantity asserted to be an integer evaluated to a non-integer.
    #[error("integrality failure: {0}")]
    NotAnInteger(String),

    /// An internal cross-check that should hold by theory failed.
    #[error("internal check failed: {0}")]
    InternalCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
