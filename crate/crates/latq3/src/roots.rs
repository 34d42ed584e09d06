//! Root isolation for univariate polynomials with real coefficients.
//!
//! Roots are located by uniform sign-change bracketing at resolution
//! `2^-20`, then refined by bisection and a safeguarded Newton polish.
//! Only roots of odd multiplicity inside the interval are detected; the
//! polynomials treated here have simple, well-separated roots.

use crate::error::{Error, Result};

/// Interval width used for the initial sign-change scan.
pub const SCAN_RESOLUTION: f64 = 1.0 / (1 << 20) as f64;

/// Evaluate a polynomial given coefficients in descending degree order.
pub fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// Evaluate a polynomial and its derivative in one Horner pass.
pub fn eval_poly_deriv(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Roots of one polynomial inside a fixed open interval.
#[derive(Debug, Clone)]
pub struct PolynomialRootSet {
    /// Coefficients in descending degree order, as supplied.
    pub coefficients: Vec<f64>,
    /// Refined roots in ascending order.
    pub roots_in_interval: Vec<f64>,
    /// `|p(root)|` for each refined root, same order.
    pub residuals: Vec<f64>,
}

/// Find the odd-multiplicity roots of `coeffs` in `(lo, hi)`.
pub fn isolate_roots(coeffs: &[f64], lo: f64, hi: f64) -> Result<PolynomialRootSet> {
    if coeffs.len() < 2 {
        return Err(Error::Parameter(
            "polynomial must have degree at least one".into(),
        ));
    }
    if coeffs[0] == 0.0 || coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Parameter(
            "leading coefficient must be nonzero and all coefficients finite".into(),
        ));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Parameter(format!(
            "invalid interval ({lo}, {hi})"
        )));
    }

    let steps = ((hi - lo) / SCAN_RESOLUTION).ceil() as usize;
    let width = (hi - lo) / steps as f64;

    let mut roots = Vec::new();
    let mut prev_x = lo;
    let mut prev_v = eval_poly(coeffs, prev_x);
    for i in 1..=steps {
        let x = lo + i as f64 * width;
        let v = eval_poly(coeffs, x);
        if v == 0.0 {
            if x < hi {
                roots.push(x);
            }
        } else if prev_v == 0.0 {
            // Grid-point zero already recorded (or it was the endpoint lo).
        } else if prev_v.signum() != v.signum() {
            roots.push(refine(coeffs, prev_x, x));
        }
        prev_x = x;
        prev_v = v;
    }

    roots.retain(|r| *r > lo && *r < hi);
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);

    let residuals = roots.iter().map(|&r| eval_poly(coeffs, r).abs()).collect();
    Ok(PolynomialRootSet {
        coefficients: coeffs.to_vec(),
        roots_in_interval: roots,
        residuals,
    })
}

/// Shrink a sign-change bracket by bisection, then polish with Newton
/// steps accepted only while they stay bracketed and shrink `|p|`.
fn refine(coeffs: &[f64], mut a: f64, mut b: f64) -> f64 {
    let mut va = eval_poly(coeffs, a);
    for _ in 0..60 {
        if b - a <= 1e-13 * b.abs().max(1.0) {
            break;
        }
        let m = 0.5 * (a + b);
        let vm = eval_poly(coeffs, m);
        if vm == 0.0 {
            return m;
        }
        if va.signum() == vm.signum() {
            a = m;
            va = vm;
        } else {
            b = m;
        }
    }

    let mut x = 0.5 * (a + b);
    let mut fx = eval_poly(coeffs, x).abs();
    for _ in 0..5 {
        let (p, dp) = eval_poly_deriv(coeffs, x);
        if dp == 0.0 {
            break;
        }
        let candidate = x - p / dp;
        if !(a..=b).contains(&candidate) {
            break;
        }
        let fc = eval_poly(coeffs, candidate).abs();
        if fc < fx {
            x = candidate;
            fx = fc;
        } else {
            break;
        }
    }
    x
}
