//! The two-parameter families covering all isodual 3-lattices, plus named
//! reference lattices.
//!
//! Every isodual lattice of determinant one is either *indecomposable*,
//! given by a Gram matrix `G(alpha, beta)` over the open unit square, or
//! *decomposable* into `Z (+) L2` for a 2-lattice `L2`, parametrized by
//! `(alpha, beta)` with `h = sqrt(alpha*beta - 1)`. Both families come with
//! closed-form conorms, which is what makes exhaustive optimization over
//! them tractable.

use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::selling::ConormSet;
use crate::tol;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Parameters of an indecomposable isodual lattice; both lie strictly inside
/// (0, 1) with margin [`tol::PARAM_MARGIN`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndecomposableParams {
    alpha: f64,
    beta: f64,
}

impl IndecomposableParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !v.is_finite() || v < tol::PARAM_MARGIN || v > 1.0 - tol::PARAM_MARGIN {
                return Err(Error::Domain(format!(
                    "{name} = {v} must lie in the open interval (0, 1) with margin {:e}",
                    tol::PARAM_MARGIN
                )));
            }
        }
        Ok(IndecomposableParams { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Parameter point of the mean-centered cuboidal lattice,
    /// `alpha = beta = 2 - sqrt(2)`.
    pub fn mcc() -> Self {
        IndecomposableParams {
            alpha: 2.0 - SQRT2,
            beta: 2.0 - SQRT2,
        }
    }
}

/// Parameters of a decomposable isodual lattice `Z (+) L2`, where `L2` has
/// Gram matrix `[[alpha, -h], [-h, beta]]` with `alpha*beta - h^2 = 1`.
///
/// Accepted range: `alpha*beta >= 1` (so `h = sqrt(alpha*beta - 1)` is
/// real), `0 < alpha <= beta`, and `h <= alpha` (so the associated conorm
/// description `{1, alpha-h, beta-h, h}` is nonnegative). The canonical
/// subrange `2h <= alpha` makes the parametrization unique; points outside
/// it (with `alpha < 2h <= 2*alpha`) still describe valid lattices but
/// duplicate canonical ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposableParams {
    alpha: f64,
    beta: f64,
    h: f64,
}

impl DecomposableParams {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Whether the point lies in the canonical subrange `2h <= alpha`
    /// (within [`tol::PARAM_MARGIN`]).
    pub fn is_canonical(&self) -> bool {
        2.0 * self.h <= self.alpha + tol::PARAM_MARGIN
    }
}

/// Validates `(alpha, beta)` and computes `h = sqrt(alpha*beta - 1)`.
pub fn decomposable_params(alpha: f64, beta: f64) -> Result<DecomposableParams> {
    if !alpha.is_finite() || !beta.is_finite() || alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "alpha = {alpha}, beta = {beta} must be finite with alpha > 0"
        )));
    }
    if alpha > beta + tol::PARAM_MARGIN {
        return Err(Error::Domain(format!(
            "ordering violation: alpha = {alpha} exceeds beta = {beta}"
        )));
    }
    let disc = alpha * beta - 1.0;
    if disc < -tol::PARAM_MARGIN {
        return Err(Error::Domain(format!(
            "no real h: alpha*beta = {} is below 1",
            alpha * beta
        )));
    }
    let h = disc.max(0.0).sqrt();
    if h > alpha + tol::PARAM_MARGIN {
        return Err(Error::Domain(format!(
            "h = {h} exceeds alpha = {alpha}: point falls outside the decomposable range"
        )));
    }
    Ok(DecomposableParams { alpha, beta, h })
}

/// Gram matrix of the indecomposable family member at `p`; determinant one.
pub fn indecomposable_gram(p: &IndecomposableParams) -> GramMatrix {
    indecomposable_gram_raw(p.alpha(), p.beta())
        .expect("family matrix is positive definite on the open unit square")
}

/// Family Gram matrix at raw coordinates, accepting the closure of the
/// parameter square wherever the matrix stays positive definite (on the
/// edges the lattice degenerates to a decomposable one but the matrix
/// formula remains valid).
pub fn indecomposable_gram_raw(alpha: f64, beta: f64) -> Result<GramMatrix> {
    let (a, b) = (alpha, beta);
    let gamma = 2.0 - a * b;
    let entries = [
        [2.0 * a / b, -a * b, -a * (2.0 - b)],
        [-a * b, 2.0 * b / a, -2.0 * b * (1.0 - a) / a],
        [
            -a * (2.0 - b),
            -2.0 * b * (1.0 - a) / a,
            (a * a * b + 2.0 * a + 2.0 * b - 4.0 * a * b) / a,
        ],
    ];
    let scaled = entries.map(|row| row.map(|x| x / gamma));
    GramMatrix::new(scaled)
}

/// Closed-form conorms of the indecomposable family member at `p`.
pub fn indecomposable_conorms(p: &IndecomposableParams) -> ConormSet {
    let (a, b) = (p.alpha(), p.beta());
    let gamma = 2.0 - a * b;
    ConormSet::new([
        a * (2.0 - b) / gamma,
        a * b / gamma,
        2.0 * a * (1.0 - b) / (b * gamma),
        2.0 * b * (1.0 - a) / (a * gamma),
        2.0 * (1.0 - a) * (1.0 - b) / gamma,
        b * (2.0 - a) / gamma,
    ])
    .expect("family conorms are nonnegative on the open unit square")
}

/// Gram matrix `diag-block(1, [[alpha, -h], [-h, beta]])`; determinant one.
pub fn decomposable_gram(p: &DecomposableParams) -> GramMatrix {
    let entries = [
        [1.0, 0.0, 0.0],
        [0.0, p.alpha(), -p.h()],
        [0.0, -p.h(), p.beta()],
    ];
    GramMatrix::new(entries).expect("decomposable family matrix is positive definite")
}

/// Conorms of the decomposable family member:
/// `p01 = 1, p02 = alpha - h, p03 = beta - h, p12 = p13 = 0, p23 = h`.
pub fn decomposable_conorms(p: &DecomposableParams) -> ConormSet {
    ConormSet::new([1.0, p.alpha() - p.h(), p.beta() - p.h(), 0.0, 0.0, p.h()])
        .expect("decomposable conorms are nonnegative in the accepted range")
}

/// Unit-determinant Gram matrix of the mean-centered cuboidal lattice.
pub fn mcc_gram() -> GramMatrix {
    let d = (1.0 + SQRT2) / 2.0;
    GramMatrix::new([
        [d, -0.5, -0.5],
        [-0.5, d, (1.0 - SQRT2) / 2.0],
        [-0.5, (1.0 - SQRT2) / 2.0, d],
    ])
    .expect("mean-centered cuboidal matrix is positive definite")
}

/// Cubic lattice Z^3 (identity Gram matrix).
pub fn cubic_gram() -> GramMatrix {
    GramMatrix::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        .expect("identity is positive definite")
}

/// Face-centered cubic lattice at minimal norm 2 (determinant 4).
pub fn fcc_gram() -> GramMatrix {
    GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]])
        .expect("f.c.c. matrix is positive definite")
}

/// Body-centered cubic lattice rescaled to determinant one
/// (all six conorms equal `16^{-1/3}`).
pub fn bcc_gram() -> GramMatrix {
    let t = 16f64.powf(-1.0 / 3.0);
    GramMatrix::new([
        [3.0 * t, -t, -t],
        [-t, 3.0 * t, -t],
        [-t, -t, 3.0 * t],
    ])
    .expect("b.c.c. matrix is positive definite")
}

/// The lattice `Z (+) 3^{-1/4} A2`: the decomposable family member at
/// `alpha = beta = 2/sqrt(3)`, `h = 1/sqrt(3)`; determinant one.
pub fn z_hex_gram() -> GramMatrix {
    let s = 3f64.sqrt();
    decomposable_gram(&DecomposableParams {
        alpha: 2.0 / s,
        beta: 2.0 / s,
        h: 1.0 / s,
    })
}

/// Parses a family parameter given as a decimal literal or one of the
/// symbolic tokens `2-sqrt2`, `sqrt3-1`, `2/sqrt3`.
pub fn parse_param(token: &str) -> Result<f64> {
    match token.trim() {
        "2-sqrt2" => Ok(2.0 - SQRT2),
        "sqrt3-1" => Ok(3f64.sqrt() - 1.0),
        "2/sqrt3" => Ok(2.0 / 3f64.sqrt()),
        t => t.parse::<f64>().map_err(|_| {
            Error::Input(format!(
                "cannot parse parameter {t:?}: expected a decimal literal or one of 2-sqrt2, sqrt3-1, 2/sqrt3"
            ))
        }),
    }
}
