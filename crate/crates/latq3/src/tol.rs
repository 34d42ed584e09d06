//! Numeric tolerances and iteration limits shared across the crate.
//!
//! Every bound that a caller might reasonably want to tighten or relax is a
//! named constant here; functions that take an explicit tolerance argument
//! default to these values at the call sites listed in their docs.

/// Leading principal minors must exceed this for a matrix to count as positive definite.
pub const PD_MINOR_TOL: f64 = 1e-12;

/// Maximum relative asymmetry accepted when constructing a Gram matrix.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Conorms in `(-CONORM_CLAMP, 0)` after reduction are snapped to exactly zero.
pub const CONORM_CLAMP: f64 = 1e-12;

/// Default tolerance for canonical conorm-set equality (isoduality tests).
pub const CONORM_EQ_TOL: f64 = 1e-9;

/// Hard cap on Selling reduction steps before reporting failure.
pub const SELLING_MAX_STEPS: usize = 10_000;

/// Condition-number estimate above which dualization is refused.
pub const CONDITION_LIMIT: f64 = 1e12;

/// Family parameters must keep this distance from their open-interval bounds.
pub const PARAM_MARGIN: f64 = 1e-9;

/// Margin from the parameter-square boundary required by derivative evaluations.
pub const INTERIOR_MARGIN: f64 = 1e-6;

/// Voronoi-cell vertices closer than this (relative to cell scale) are merged.
pub const VERTEX_MERGE_TOL: f64 = 1e-9;

/// Relative mismatch allowed between cell volume and sqrt(det).
pub const CELL_VOLUME_RTOL: f64 = 1e-8;

/// Relative tie tolerance when collecting shortest vectors.
pub const MIN_NORM_RTOL: f64 = 1e-9;

/// Critical points closer than this in parameter space are deduplicated.
pub const CRITICAL_DEDUP_TOL: f64 = 1e-6;

/// Hessian eigenvalues within this of zero leave a critical point unclassified.
pub const EIGENVALUE_CLASSIFY_TOL: f64 = 1e-10;

/// Distance from a scan-region boundary below which a stationary point is
/// labeled boundary-constrained instead of being classified by its Hessian.
pub const BOUNDARY_LABEL_TOL: f64 = 1e-8;

/// Maximum step halvings in the damped Newton iteration.
pub const NEWTON_MAX_HALVINGS: usize = 30;

/// Maximum damped Newton iterations per start.
pub const NEWTON_MAX_ITERS: usize = 120;
