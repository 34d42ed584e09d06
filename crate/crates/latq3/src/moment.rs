//! The dimensionless second moment `G` of a lattice quantizer, computed from
//! conorms.
//!
//! `G = (1/3) * I / V^{5/3}` where `I` is the integral of `|x|^2` over the
//! Voronoi cell and `V` its volume; it is invariant under rotation and
//! scaling. For a Selling-reduced 3-lattice, `G` has a polynomial expression
//! in the six conorms and the determinant, which this module implements; the
//! polytope integrator in [`crate::voronoi`] provides the independent
//! geometric route.

use crate::error::{Error, Result};
use crate::selling::{ConormSet, CONORM_LABELS};

/// How a `G` estimate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Polynomial in the reduced conorms and determinant.
    ConormFormula,
    /// Exact integration over the Voronoi polytope.
    ExactPolytope,
    /// Monte Carlo quantization error.
    MonteCarlo,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ConormFormula => "conorm-formula",
            Method::ExactPolytope => "exact-polytope",
            Method::MonteCarlo => "monte-carlo",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A `G` estimate together with how it was computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentReport {
    pub g_value: f64,
    pub method: Method,
    /// Standard error of the estimate (Monte Carlo only).
    pub stderr: Option<f64>,
    /// Sample count (Monte Carlo only).
    pub samples: Option<u64>,
    /// RNG seed (Monte Carlo only).
    pub seed: Option<u64>,
}

impl MomentReport {
    pub fn exact(g_value: f64, method: Method) -> Self {
        MomentReport {
            g_value,
            method,
            stderr: None,
            samples: None,
            seed: None,
        }
    }
}

/// `G` from reduced conorms `p` and determinant `D`:
///
/// `G = (D*S1 + 2*S2 + K) / (36 * D^{4/3})`
///
/// where `S1` is the conorm sum, `S2` the sum of products of two
/// complementary conorm pairs, and `K` sums, over each superbase index, the
/// product of its three conorms times the sum of the other three.
pub fn g_from_conorms(conorms: &ConormSet, det: f64) -> Result<MomentReport> {
    if !(det > 0.0) || !det.is_finite() {
        return Err(Error::Domain(format!("determinant {det} must be positive")));
    }
    let [p01, p02, p03, p12, p13, p23] = conorms.values();

    let s1 = conorms.sum();

    let q = [p01 * p23, p02 * p13, p03 * p12];
    let s2 = q[0] * q[1] + q[0] * q[2] + q[1] * q[2];

    let mut k = 0.0;
    for idx in 0..4 {
        let mut product = 1.0;
        let mut complement = 0.0;
        for (slot, &(i, j)) in CONORM_LABELS.iter().enumerate() {
            if i == idx || j == idx {
                product *= conorms.values()[slot];
            } else {
                complement += conorms.values()[slot];
            }
        }
        k += product * complement;
    }

    let g = (det * s1 + 2.0 * s2 + k) / (36.0 * det.powf(4.0 / 3.0));
    Ok(MomentReport::exact(g, Method::ConormFormula))
}
