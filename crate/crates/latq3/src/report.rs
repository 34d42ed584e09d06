//! Composite per-lattice report: quantization constant, sphere-packing
//! geometry, and isoduality.

use crate::error::{Error, Result};
use crate::gram::{minimal_vectors, GramMatrix};
use crate::selling::is_isodual;
use crate::tol;
use crate::voronoi::{second_moment_exact, voronoi_cell};

/// Invariants of one lattice, all computed from the Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeReport {
    pub determinant: f64,
    /// Normalized second moment, computed by exact Voronoi-cell integration.
    pub g_value: f64,
    /// Half the shortest nonzero vector length.
    pub packing_radius: f64,
    /// Largest distance from any point of space to the lattice.
    pub covering_radius: f64,
    /// `packing_radius^3 / sqrt(det)`; scale-invariant packing quality.
    pub center_density: f64,
    pub kissing_number: usize,
    pub isodual: bool,
}

/// Compute all invariants of [`LatticeReport`] for the given lattice.
pub fn lattice_report(gram: &GramMatrix) -> Result<LatticeReport> {
    let shorts = minimal_vectors(gram);
    let packing_radius = shorts.min_norm.sqrt() / 2.0;

    let cell = voronoi_cell(gram)?;
    // The cell inradius is half the minimal distance; disagreement means
    // the face enumeration and the short-vector search are inconsistent.
    if (cell.inradius - packing_radius).abs() > tol::MIN_NORM_RTOL * packing_radius.max(1.0) {
        return Err(Error::Geometry(format!(
            "cell inradius {} disagrees with packing radius {}",
            cell.inradius, packing_radius
        )));
    }

    let det = gram.determinant();
    let moment = second_moment_exact(&cell, det)?;

    Ok(LatticeReport {
        determinant: det,
        g_value: moment.g_value,
        packing_radius,
        covering_radius: cell.circumradius,
        center_density: packing_radius.powi(3) / det.sqrt(),
        kissing_number: shorts.kissing_number(),
        isodual: is_isodual(gram, tol::CONORM_EQ_TOL)?,
    })
}
