//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, validation and solver routines.
///
/// Plain arithmetic (products, sums, Kronecker products) panics on shape
/// mismatch like any dense linear algebra kernel; the `Result`-returning
/// operations are the ones whose failure is meaningful to a caller.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian within tolerance {tol:e} (residual {residual:e})")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix is not anti-Hermitian within tolerance {tol:e} (residual {residual:e})")]
    NotAntiHermitian { residual: f64, tol: f64 },

    #[error("matrix is not unitary within tolerance {tol:e} (residual {residual:e})")]
    NotUnitary { residual: f64, tol: f64 },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("eigensolver failed to converge after {sweeps} sweeps (off-diagonal {offdiag:e})")]
    NoConvergence { sweeps: usize, offdiag: f64 },

    #[error("exchange coupling J must be nonzero: the ground-space degeneracy structure collapses at J = 0")]
    ZeroCoupling,

    #[error("site index {site} out of range for {n_spins} spins")]
    IndexOutOfRange { site: usize, n_spins: usize },

    #[error("spectral gap {gap:e} above the ground cluster is too small for cluster tolerance {tol:e}")]
    GapTooSmall { gap: f64, tol: f64 },

    #[error("loop generator has the wrong kind for this operation: expected {expected}")]
    WrongKind { expected: &'static str },

    #[error("step weights must sum to 1 (got {sum})")]
    InvalidWeights { sum: f64 },

    #[error("unknown gate label: {0}")]
    UnknownLabel(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
