//! Shared error type for the whole crate.

use thiserror::Error;

/// Errors surfaced by library operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Jacobi sweeps failed to reduce the off-diagonal norm below tolerance.
    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal {offdiag:.3e})")]
    NonConvergence { sweeps: usize, offdiag: f64 },

    /// An argument fell outside its supported range.
    #[error("{what} = {value} outside supported range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// An operation requiring even total degree was called with odd degree.
    #[error("degree {0} is odd; this pathway requires even degree")]
    OddDegree(u32),

    /// Word enumeration degree exceeded the supported limit.
    #[error("degree {0} too large for word enumeration (limit {1})")]
    DegreeTooLarge(u32, u32),

    /// The distribution lacks a required moment.
    #[error("moment of order {0} does not exist for this distribution")]
    MomentDoesNotExist(f64),

    /// A provably nonnegative interior quantity came out materially negative.
    #[error("interior quantity {0:.6e} is negative beyond tolerance; numerical bug")]
    NegativeInterior(f64),

    /// Vectors passed to a majorization routine have different lengths.
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    /// x does not majorize y, so no doubly stochastic transport exists.
    #[error("majorization precondition failed: y is not majorized by x")]
    NotMajorized,

    /// No perfect matching on the support graph (input not doubly stochastic).
    #[error("no perfect matching on the support graph; input is not doubly stochastic")]
    MatchingNotFound,

    /// A centered distribution was required but E[X] != 0.
    #[error("distribution is not centered (mean {0})")]
    NotCentered(f64),

    /// Invalid distribution or special-function parameter.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Series reciprocal/log of a series with zero constant term.
    #[error("series operation requires nonzero constant term")]
    DivisionByZeroConstantTerm,

    /// Malformed input from a file or the command line.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
