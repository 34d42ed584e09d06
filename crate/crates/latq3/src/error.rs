use thiserror::Error;

/// Errors produced by lattice construction, reduction, and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input matrix entries (i, j) and (j, i) disagree by more than the symmetry tolerance.
    #[error("matrix is not symmetric: entries ({i},{j}) and ({j},{i}) differ by {delta:e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },

    /// A leading principal minor is not positive, so the matrix is not a Gram matrix.
    #[error("matrix is not positive definite: leading {order}x{order} minor is {minor:e}")]
    NotPositiveDefinite { order: usize, minor: f64 },

    /// The lattice is too close to singular for the requested operation.
    #[error("degenerate lattice: {0}")]
    DegenerateLattice(String),

    /// Selling reduction failed to reach a nonnegative conorm vector.
    #[error("Selling reduction did not terminate within {0} steps")]
    ReductionFailure(usize),

    /// A numeric argument violates a documented domain bound.
    #[error("domain error: {0}")]
    Domain(String),

    /// A count or configuration argument is invalid.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// An internal geometric consistency check failed.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// An input file is missing, unreadable, or malformed.
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
