//! Stationary-point analysis of the two closed-form quantization surfaces.
//!
//! The centerpiece is a multi-start damped Newton search for zeros of the
//! gradient of the two-parameter closed form, plus three supporting
//! analyses: root isolation for the sextic factor of the stationarity
//! eliminant, a residual check over the nine candidate points assembled
//! from that eliminant's factors, and scans of the boundary edge and of
//! the decomposable parameter region.

use std::fmt;

use crate::closed_form::{
    g_decomposable_raw, g_indecomposable_raw, grad_decomposable_raw, grad_indecomposable_raw,
    hessian_decomposable_raw, hessian_indecomposable_raw,
};
use crate::error::{Error, Result};
use crate::roots::{isolate_roots, PolynomialRootSet};
use crate::tol;

/// Sextic factor of the polynomial obtained by eliminating one variable
/// from the stationarity system of the two-parameter closed form.
/// Together with the factors `x^2 - 4x + 2` and `x^2 + 2x - 2` it carries
/// every candidate coordinate of an interior stationary point.
/// Coefficients in descending degree order.
pub const STATIONARITY_SEXTIC: [f64; 7] =
    [57.0, -220.0, -102.0, 1448.0, -1860.0, 832.0, -152.0];

/// Second-order type of a stationary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    LocalMin,
    LocalMax,
    Saddle,
    /// The point sits on the boundary of the search region, so the
    /// unconstrained second-order test does not apply.
    BoundaryConstrained,
    /// An eigenvalue of the Hessian is too close to zero to call.
    Unclassified,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::LocalMin => "local-min",
            Classification::LocalMax => "local-max",
            Classification::Saddle => "saddle",
            Classification::BoundaryConstrained => "boundary-constrained",
            Classification::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A converged zero of the closed-form gradient.
#[derive(Debug, Clone)]
pub struct CriticalPoint {
    pub alpha: f64,
    pub beta: f64,
    pub g_value: f64,
    pub grad_norm: f64,
    pub hessian: [[f64; 2]; 2],
    /// Hessian eigenvalues in ascending order.
    pub eigenvalues: (f64, f64),
    pub classification: Classification,
}

/// Outcome of a multi-start search.
#[derive(Debug, Clone)]
pub struct CriticalPointSearch {
    /// Deduplicated stationary points, sorted by ascending `g_value`.
    pub points: Vec<CriticalPoint>,
    /// Number of Newton starts launched.
    pub starts: usize,
    /// Number of starts that converged to `grad_norm < tol`.
    pub converged: usize,
}

/// Open axis-aligned box inside the unit parameter square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    pub beta_lo: f64,
    pub beta_hi: f64,
}

impl Region {
    pub fn new(alpha_lo: f64, alpha_hi: f64, beta_lo: f64, beta_hi: f64) -> Result<Region> {
        let ok = |lo: f64, hi: f64| lo.is_finite() && hi.is_finite() && (0.0..1.0).contains(&lo) && lo < hi && hi <= 1.0;
        if !ok(alpha_lo, alpha_hi) || !ok(beta_lo, beta_hi) {
            return Err(Error::Parameter(format!(
                "region ({alpha_lo}, {alpha_hi}) x ({beta_lo}, {beta_hi}) must nest in the unit square"
            )));
        }
        Ok(Region {
            alpha_lo,
            alpha_hi,
            beta_lo,
            beta_hi,
        })
    }

    /// The standard search box `(0.01, 0.99) x (0.01, 0.99)`, inset from
    /// the open unit square to stay clear of the singular edges.
    pub fn default_search() -> Region {
        Region {
            alpha_lo: 0.01,
            alpha_hi: 0.99,
            beta_lo: 0.01,
            beta_hi: 0.99,
        }
    }

    /// Pull a point strictly inside the region, insetting each side so
    /// the closed form is always evaluated away from its singular edges.
    fn clamp(&self, p: [f64; 2]) -> [f64; 2] {
        let ia = tol::INTERIOR_MARGIN.min(0.25 * (self.alpha_hi - self.alpha_lo));
        let ib = tol::INTERIOR_MARGIN.min(0.25 * (self.beta_hi - self.beta_lo));
        [
            p[0].max(self.alpha_lo + ia).min(self.alpha_hi - ia),
            p[1].max(self.beta_lo + ib).min(self.beta_hi - ib),
        ]
    }

    fn near_boundary(&self, p: [f64; 2], tol_abs: f64) -> bool {
        (p[0] - self.alpha_lo).abs() <= tol_abs
            || (self.alpha_hi - p[0]).abs() <= tol_abs
            || (p[1] - self.beta_lo).abs() <= tol_abs
            || (self.beta_hi - p[1]).abs() <= tol_abs
    }
}

fn norm2(v: [f64; 2]) -> f64 {
    v[0].hypot(v[1])
}

/// Eigenvalues of a symmetric 2x2 matrix, ascending.
pub fn symmetric_eigenvalues_2x2(h: &[[f64; 2]; 2]) -> (f64, f64) {
    let mid = 0.5 * (h[0][0] + h[1][1]);
    let disc = (0.5 * (h[0][0] - h[1][1])).hypot(h[0][1]);
    (mid - disc, mid + disc)
}

fn solve_2x2(h: &[[f64; 2]; 2], rhs: [f64; 2]) -> Option<[f64; 2]> {
    let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    let scale = h
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    if det.abs() <= 1e-14 * scale * scale {
        return None;
    }
    Some([
        (rhs[0] * h[1][1] - rhs[1] * h[0][1]) / det,
        (rhs[1] * h[0][0] - rhs[0] * h[1][0]) / det,
    ])
}

/// Damped Newton iteration for a zero of `grad`, with `|grad|` as the
/// merit function.  Returns the converged point or `None`.
fn newton_refine(
    start: [f64; 2],
    grad: &dyn Fn([f64; 2]) -> [f64; 2],
    hess: &dyn Fn([f64; 2]) -> [[f64; 2]; 2],
    clamp: &dyn Fn([f64; 2]) -> [f64; 2],
    tol_grad: f64,
) -> Option<[f64; 2]> {
    let mut x = clamp(start);
    let mut g = grad(x);
    let mut gn = norm2(g);
    for _ in 0..tol::NEWTON_MAX_ITERS {
        if gn < tol_grad {
            return Some(x);
        }
        let step = solve_2x2(&hess(x), [-g[0], -g[1]]).unwrap_or([-g[0], -g[1]]);
        let sn = norm2(step);
        let step = if sn > 0.5 {
            [step[0] * 0.5 / sn, step[1] * 0.5 / sn]
        } else {
            step
        };
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..tol::NEWTON_MAX_HALVINGS {
            let cand = clamp([x[0] + t * step[0], x[1] + t * step[1]]);
            let cg = grad(cand);
            let cgn = norm2(cg);
            if cgn < gn {
                x = cand;
                g = cg;
                gn = cgn;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if gn < tol_grad {
        Some(x)
    } else {
        None
    }
}

fn classify_by_eigenvalues(hessian: &[[f64; 2]; 2]) -> Classification {
    let (lo, hi) = symmetric_eigenvalues_2x2(hessian);
    let t = tol::EIGENVALUE_CLASSIFY_TOL;
    if lo > t {
        Classification::LocalMin
    } else if hi < -t {
        Classification::LocalMax
    } else if lo < -t && hi > t {
        Classification::Saddle
    } else {
        Classification::Unclassified
    }
}

fn classify(region: &Region, p: [f64; 2], hessian: &[[f64; 2]; 2]) -> Classification {
    if region.near_boundary(p, tol::BOUNDARY_LABEL_TOL) {
        return Classification::BoundaryConstrained;
    }
    classify_by_eigenvalues(hessian)
}

fn make_critical_point(region: &Region, p: [f64; 2]) -> CriticalPoint {
    let (ga, gb) = grad_indecomposable_raw(p[0], p[1]);
    let hessian = hessian_indecomposable_raw(p[0], p[1]);
    CriticalPoint {
        alpha: p[0],
        beta: p[1],
        g_value: g_indecomposable_raw(p[0], p[1]),
        grad_norm: norm2([ga, gb]),
        eigenvalues: symmetric_eigenvalues_2x2(&hessian),
        classification: classify(region, p, &hessian),
        hessian,
    }
}

/// Multi-start damped Newton search for zeros of the closed-form gradient
/// inside `region`.  Starts form a `grid_n x grid_n` interior lattice;
/// converged zeros closer than a small deduplication distance are merged,
/// keeping the one with the smaller gradient residual.
pub fn find_critical_points(
    region: &Region,
    grid_n: usize,
    tol_grad: f64,
) -> Result<CriticalPointSearch> {
    if grid_n == 0 {
        return Err(Error::Parameter("grid_n must be positive".into()));
    }
    if !(tol_grad > 0.0 && tol_grad.is_finite()) {
        return Err(Error::Parameter(format!(
            "gradient tolerance must be positive, got {tol_grad}"
        )));
    }

    let grad = |p: [f64; 2]| {
        let (ga, gb) = grad_indecomposable_raw(p[0], p[1]);
        [ga, gb]
    };
    let hess = |p: [f64; 2]| hessian_indecomposable_raw(p[0], p[1]);
    let clamp = |p: [f64; 2]| region.clamp(p);

    let mut points: Vec<CriticalPoint> = Vec::new();
    let mut converged = 0usize;
    for i in 0..grid_n {
        for j in 0..grid_n {
            let a = region.alpha_lo
                + (i + 1) as f64 * (region.alpha_hi - region.alpha_lo) / (grid_n + 1) as f64;
            let b = region.beta_lo
                + (j + 1) as f64 * (region.beta_hi - region.beta_lo) / (grid_n + 1) as f64;
            let Some(x) = newton_refine([a, b], &grad, &hess, &clamp, tol_grad) else {
                continue;
            };
            converged += 1;
            let candidate = make_critical_point(region, x);
            match points.iter_mut().find(|c| {
                (c.alpha - x[0]).abs() < tol::CRITICAL_DEDUP_TOL
                    && (c.beta - x[1]).abs() < tol::CRITICAL_DEDUP_TOL
            }) {
                Some(existing) => {
                    if candidate.grad_norm < existing.grad_norm {
                        *existing = candidate;
                    }
                }
                None => points.push(candidate),
            }
        }
    }

    points.sort_by(|p, q| {
        (p.g_value, p.alpha, p.beta)
            .partial_cmp(&(q.g_value, q.alpha, q.beta))
            .unwrap()
    });
    Ok(CriticalPointSearch {
        points,
        starts: grid_n * grid_n,
        converged,
    })
}

/// Roots of [`STATIONARITY_SEXTIC`] in `(lo, hi)`.
pub fn sextic_roots(lo: f64, hi: f64) -> Result<PolynomialRootSet> {
    isolate_roots(&STATIONARITY_SEXTIC, lo, hi)
}

/// One candidate coordinate pair and the gradient residual there.
#[derive(Debug, Clone)]
pub struct CandidateCheck {
    pub alpha_label: &'static str,
    pub beta_label: &'static str,
    pub alpha: f64,
    pub beta: f64,
    pub grad_alpha: f64,
    pub grad_beta: f64,
    pub grad_norm: f64,
    /// True when both gradient components vanish to within `1e-8`.
    pub vanishes: bool,
}

/// Evaluate the closed-form gradient at all nine pairings of candidate
/// coordinates: the admissible roots of the two quadratic eliminant
/// factors (`2 - sqrt(2)` and `sqrt(3) - 1`) and the sextic factor's
/// unique root in the unit interval.
pub fn nine_candidate_check() -> Result<Vec<CandidateCheck>> {
    let set = sextic_roots(0.5, 1.0)?;
    if set.roots_in_interval.len() != 1 {
        return Err(Error::Domain(format!(
            "expected one sextic root in (0.5, 1), found {}",
            set.roots_in_interval.len()
        )));
    }
    let candidates = [
        ("2-sqrt2", 2.0 - std::f64::consts::SQRT_2),
        ("sqrt3-1", 3f64.sqrt() - 1.0),
        ("sextic", set.roots_in_interval[0]),
    ];
    let mut rows = Vec::with_capacity(9);
    for &(alpha_label, alpha) in &candidates {
        for &(beta_label, beta) in &candidates {
            let (grad_alpha, grad_beta) = grad_indecomposable_raw(alpha, beta);
            let grad_norm = grad_alpha.hypot(grad_beta);
            rows.push(CandidateCheck {
                alpha_label,
                beta_label,
                alpha,
                beta,
                grad_alpha,
                grad_beta,
                grad_norm,
                vanishes: grad_norm < 1e-8,
            });
        }
    }
    Ok(rows)
}

/// Analysis of the closure edge `beta = 1` of the parameter square.
#[derive(Debug, Clone)]
pub struct EdgeScanResult {
    /// Stationary parameter of the edge restriction `alpha -> G(alpha, 1)`.
    pub alpha_star: f64,
    /// `G(alpha_star, 1)`.
    pub g_value: f64,
    /// Full two-variable gradient at the edge point.
    pub grad: [f64; 2],
    pub hessian: [[f64; 2]; 2],
    /// All roots of `dG/dalpha(., 1)` found in the scanned interval.
    pub edge_roots: Vec<f64>,
    /// Unit direction pointing into the square (`beta` component <= 0)
    /// along which `G` drops below the edge value.
    pub descent_direction: [f64; 2],
    pub descent_step: f64,
    /// `G(edge point + step * direction) - G(edge point)`; negative means
    /// the edge point is not a local minimum over the closed square.
    pub descent_delta: f64,
}

/// Locate the stationary point of `G` restricted to the edge `beta = 1`
/// and exhibit an interior descent direction from it.
pub fn boundary_edge_scan() -> Result<EdgeScanResult> {
    let psi = |a: f64| grad_indecomposable_raw(a, 1.0).0;
    let psi_deriv = |a: f64| hessian_indecomposable_raw(a, 1.0)[0][0];

    let (lo, hi) = (0.01, 0.99);
    let steps = 1 << 14;
    let width = (hi - lo) / steps as f64;
    let mut edge_roots = Vec::new();
    let mut prev = psi(lo);
    for i in 1..=steps {
        let x = lo + i as f64 * width;
        let v = psi(x);
        if prev == 0.0 {
            edge_roots.push(x - width);
        } else if v != 0.0 && prev.signum() != v.signum() {
            edge_roots.push(refine_1d(&psi, &psi_deriv, x - width, x));
        }
        prev = v;
    }
    if edge_roots.is_empty() {
        return Err(Error::Domain(
            "no stationary point of the edge restriction found".into(),
        ));
    }

    let alpha_star = *edge_roots
        .iter()
        .min_by(|a, b| {
            g_indecomposable_raw(**a, 1.0)
                .partial_cmp(&g_indecomposable_raw(**b, 1.0))
                .unwrap()
        })
        .unwrap();
    let g_value = g_indecomposable_raw(alpha_star, 1.0);
    let (ga, gb) = grad_indecomposable_raw(alpha_star, 1.0);
    let hessian = hessian_indecomposable_raw(alpha_star, 1.0);

    // Probe directions with nonpositive beta component, several step
    // sizes each, and keep the steepest drop.
    let mut best = (0.0f64, [1.0, 0.0], 1e-4);
    for k in 0..=180 {
        let theta = std::f64::consts::PI * (1.0 + k as f64 / 180.0);
        let dir = [theta.cos(), theta.sin()];
        for &step in &[1e-2, 3e-3, 1e-3, 3e-4, 1e-4] {
            let p = [alpha_star + step * dir[0], 1.0 + step * dir[1]];
            if !(1e-6..=1.0).contains(&p[1]) || !(1e-6..=1.0 - 1e-9).contains(&p[0]) {
                continue;
            }
            let delta = g_indecomposable_raw(p[0], p[1]) - g_value;
            if delta < best.0 {
                best = (delta, dir, step);
            }
        }
    }

    Ok(EdgeScanResult {
        alpha_star,
        g_value,
        grad: [ga, gb],
        hessian,
        edge_roots,
        descent_direction: best.1,
        descent_step: best.2,
        descent_delta: best.0,
    })
}

/// Bisection plus safeguarded Newton for a bracketed zero of `f`.
fn refine_1d(
    f: &dyn Fn(f64) -> f64,
    fp: &dyn Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
) -> f64 {
    let mut va = f(a);
    for _ in 0..60 {
        if b - a <= 1e-14 * b.abs().max(1.0) {
            break;
        }
        let m = 0.5 * (a + b);
        let vm = f(m);
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
    let mut fx = f(x).abs();
    for _ in 0..5 {
        let d = fp(x);
        if d == 0.0 {
            break;
        }
        let c = x - f(x) / d;
        if !(a..=b).contains(&c) {
            break;
        }
        let fc = f(c).abs();
        if fc < fx {
            x = c;
            fx = fc;
        } else {
            break;
        }
    }
    x
}

/// A stationary point of the decomposable closed form, each pinned to a
/// boundary of the canonical parameter region.
#[derive(Debug, Clone)]
pub struct DecomposableStationaryPoint {
    pub alpha: f64,
    pub beta: f64,
    pub g_value: f64,
    /// Which boundary the point sits on.
    pub constraint: &'static str,
    pub classification: Classification,
}

/// Result of scanning the canonical decomposable parameter region.
#[derive(Debug, Clone)]
pub struct DecomposableScan {
    /// Grid resolution of the coarse pass.
    pub grid_n: usize,
    /// Total closed-form evaluations across coarse and refinement passes.
    pub samples: usize,
    /// Scanned `alpha` interval.  The upper bound `2/sqrt(3)` is forced
    /// by feasibility (`2h <= alpha <= beta` with `alpha*beta >= 1`), so
    /// any larger truncation is equivalent; below the lower bound
    /// `G >= (1 + alpha + 1/alpha)/36` already exceeds every value seen
    /// in the scanned range.
    pub alpha_range: (f64, f64),
    pub min_alpha: f64,
    pub min_beta: f64,
    pub min_g: f64,
    /// Stationary points, sorted by ascending `g_value`.
    pub stationary: Vec<DecomposableStationaryPoint>,
}

/// Constraint label for stationary points on the curve `alpha*beta = 1`.
pub const DECOMPOSABLE_H0: &str = "h = 0 (rectangular boundary)";
/// Constraint label for stationary points on the curve `h = alpha`.
pub const DECOMPOSABLE_FOLD: &str = "h = alpha (parameter fold)";
/// Constraint label for stationary points on the curve `2h = alpha`.
pub const DECOMPOSABLE_CANONICAL: &str = "2h = alpha (canonical boundary)";

/// Scan the canonical decomposable region
/// `{0 < alpha <= 2/sqrt(3), max(alpha, 1/alpha) <= beta <= 1/alpha + alpha/4}`
/// for its minimum of `G`, and locate every stationary point of the
/// closed form on the closure of the valid parameter set.
///
/// The region bounds encode, in order: positivity, the ordering
/// convention `alpha <= beta`, a real interaction parameter
/// (`alpha*beta >= 1`), and canonicality `2h <= alpha` which picks one
/// representative per lattice.
pub fn decomposable_region_scan(grid_n: usize) -> Result<DecomposableScan> {
    if grid_n < 200 {
        return Err(Error::Parameter(format!(
            "grid_n must be at least 200, got {grid_n}"
        )));
    }
    let alpha_max = 2.0 / 3f64.sqrt();
    let alpha_lo = 0.1;
    let beta_bounds = |a: f64| {
        let lo = (1.0 / a).max(a);
        let hi = (1.0 / a + a / 4.0).max(lo);
        (lo, hi)
    };

    let mut samples = 0usize;
    let mut best = (f64::INFINITY, 0.0f64, 0.0f64);
    for i in 0..grid_n {
        let a = alpha_lo + (alpha_max - alpha_lo) * i as f64 / (grid_n - 1) as f64;
        let (b_lo, b_hi) = beta_bounds(a);
        for j in 0..grid_n {
            let b = b_lo + (b_hi - b_lo) * j as f64 / (grid_n - 1) as f64;
            let g = g_decomposable_raw(a, b);
            samples += 1;
            if g < best.0 {
                best = (g, a, b);
            }
        }
    }

    // Shrinking-window refinement around the incumbent minimum, always
    // re-clamped into the region.
    let mut span = (alpha_max - alpha_lo) / (grid_n - 1) as f64;
    let local = 8i64;
    for _ in 0..45 {
        let (_, a0, b0) = best;
        for i in -local..=local {
            let a = (a0 + i as f64 * span / local as f64).clamp(1e-3, alpha_max);
            let (b_lo, b_hi) = beta_bounds(a);
            for j in -local..=local {
                let b = (b0 + j as f64 * span / local as f64).max(b_lo).min(b_hi);
                let g = g_decomposable_raw(a, b);
                samples += 1;
                if g < best.0 {
                    best = (g, a, b);
                }
            }
        }
        span *= 0.5;
        if span < 1e-13 {
            break;
        }
    }

    let mut stationary = Vec::new();

    // Minimum along the h = 0 curve beta = 1/alpha, where
    // 36 G = 1 + alpha + 1/alpha: Newton on 1 - 1/alpha^2.
    let mut a = 0.8f64;
    for _ in 0..60 {
        let f = 1.0 - 1.0 / (a * a);
        a -= f / (2.0 / (a * a * a));
        if (1.0 - 1.0 / (a * a)).abs() < 1e-15 {
            break;
        }
    }
    stationary.push(DecomposableStationaryPoint {
        alpha: a,
        beta: 1.0 / a,
        g_value: g_decomposable_raw(a, 1.0 / a),
        constraint: DECOMPOSABLE_H0,
        classification: Classification::BoundaryConstrained,
    });

    // Zeros of the unrestricted closed-form gradient over the valid set.
    let grad = |p: [f64; 2]| {
        let (ga, gb) = grad_decomposable_raw(p[0], p[1]);
        [ga, gb]
    };
    let hess = |p: [f64; 2]| hessian_decomposable_raw(p[0], p[1]);
    let clamp = |p: [f64; 2]| {
        let mut a = p[0].clamp(0.2, 3.0);
        let mut b = p[1].clamp(0.2, 3.0);
        let t = a * b;
        if t < 1.0 + 1e-6 {
            let f = ((1.0 + 1e-6) / t).sqrt();
            a *= f;
            b *= f;
        }
        [a, b]
    };
    let mut zeros: Vec<[f64; 2]> = Vec::new();
    let starts = 12usize;
    for i in 0..starts {
        for j in 0..starts {
            let a = 0.85 + 1.45 * i as f64 / (starts - 1) as f64;
            let b = 0.85 + 1.45 * j as f64 / (starts - 1) as f64;
            if a * b < 1.05 {
                continue;
            }
            let Some(z) = newton_refine([a, b], &grad, &hess, &clamp, 1e-12) else {
                continue;
            };
            let h = (z[0] * z[1] - 1.0).max(0.0).sqrt();
            // Keep only representatives in the valid ordered set.
            if z[0] > z[1] + 1e-9 || h > z[0] + 1e-9 {
                continue;
            }
            if !zeros
                .iter()
                .any(|w| (w[0] - z[0]).abs() < tol::CRITICAL_DEDUP_TOL
                    && (w[1] - z[1]).abs() < tol::CRITICAL_DEDUP_TOL)
            {
                zeros.push(z);
            }
        }
    }
    for z in zeros {
        let h = (z[0] * z[1] - 1.0).max(0.0).sqrt();
        let hessian = hessian_decomposable_raw(z[0], z[1]);
        let (constraint, classification) = if (2.0 * h - z[0]).abs() < 1e-8 {
            (DECOMPOSABLE_CANONICAL, Classification::BoundaryConstrained)
        } else if (h - z[0]).abs() < 1e-8 {
            (DECOMPOSABLE_FOLD, Classification::BoundaryConstrained)
        } else if z[0] * z[1] - 1.0 < 1e-8 {
            (DECOMPOSABLE_H0, Classification::BoundaryConstrained)
        } else {
            ("interior", classify_by_eigenvalues(&hessian))
        };
        stationary.push(DecomposableStationaryPoint {
            alpha: z[0],
            beta: z[1],
            g_value: g_decomposable_raw(z[0], z[1]),
            constraint,
            classification,
        });
    }

    stationary.sort_by(|p, q| {
        (p.g_value, p.alpha, p.beta)
            .partial_cmp(&(q.g_value, q.alpha, q.beta))
            .unwrap()
    });

    Ok(DecomposableScan {
        grid_n,
        samples,
        alpha_range: (alpha_lo, alpha_max),
        min_alpha: best.1,
        min_beta: best.2,
        min_g: best.0,
        stationary,
    })
}
