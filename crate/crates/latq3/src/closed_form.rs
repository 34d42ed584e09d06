//! Closed-form `G(alpha, beta)` for the two isodual families, with analytic
//! first and second partial derivatives.
//!
//! For the indecomposable family, `G = f(alpha, beta) / d(alpha, beta)` with
//! both numerator and denominator polynomials in `alpha, beta`; they are
//! stored as monomial tables so that derivatives of any order come from one
//! falling-factorial evaluator instead of hand-expanded algebra. For the
//! decomposable family,
//! `36 G = 1 + (alpha+beta)(2 - alpha*beta) + 2 (alpha*beta - 1)^{3/2}`,
//! obtained by substituting the family conorms into the conorm formula and
//! eliminating `h`.

use crate::family::{DecomposableParams, IndecomposableParams};

/// Numerator monomials `(coefficient, power of alpha, power of beta)`; the
/// table is symmetric under swapping the two powers.
const F_TERMS: [(f64, i32, i32); 19] = [
    (3.0, 5, 5),
    (-8.0, 5, 4),
    (-8.0, 4, 5),
    (4.0, 5, 3),
    (40.0, 4, 4),
    (4.0, 3, 5),
    (-48.0, 4, 3),
    (-48.0, 3, 4),
    (24.0, 4, 2),
    (32.0, 3, 3),
    (24.0, 2, 4),
    (32.0, 3, 2),
    (32.0, 2, 3),
    (-40.0, 3, 1),
    (-48.0, 2, 2),
    (-40.0, 1, 3),
    (16.0, 2, 0),
    (16.0, 1, 1),
    (16.0, 0, 2),
];

/// Denominator `36 * alpha * beta * (2 - alpha*beta)^4` expanded into
/// monomials.
const D_TERMS: [(f64, i32, i32); 5] = [
    (576.0, 1, 1),
    (-1152.0, 2, 2),
    (864.0, 3, 3),
    (-288.0, 4, 4),
    (36.0, 5, 5),
];

/// Evaluates the `(da, db)` partial derivative of a monomial table.
fn eval_partial(terms: &[(f64, i32, i32)], da: i32, db: i32, a: f64, b: f64) -> f64 {
    let mut sum = 0.0;
    for &(c, i, j) in terms {
        if i < da || j < db {
            continue;
        }
        let mut coeff = c;
        for k in 0..da {
            coeff *= (i - k) as f64;
        }
        for k in 0..db {
            coeff *= (j - k) as f64;
        }
        sum += coeff * a.powi(i - da) * b.powi(j - db);
    }
    sum
}

/// `G` for the indecomposable family at raw coordinates; callers must keep
/// `alpha, beta > 0` and `alpha*beta != 2`. Valid on the closed unit square
/// including its edges.
pub fn g_indecomposable_raw(alpha: f64, beta: f64) -> f64 {
    eval_partial(&F_TERMS, 0, 0, alpha, beta) / eval_partial(&D_TERMS, 0, 0, alpha, beta)
}

/// Gradient `(dG/dalpha, dG/dbeta)` of the indecomposable closed form.
pub fn grad_indecomposable_raw(alpha: f64, beta: f64) -> (f64, f64) {
    let d = eval_partial(&D_TERMS, 0, 0, alpha, beta);
    let g = eval_partial(&F_TERMS, 0, 0, alpha, beta) / d;
    let ga = (eval_partial(&F_TERMS, 1, 0, alpha, beta)
        - g * eval_partial(&D_TERMS, 1, 0, alpha, beta))
        / d;
    let gb = (eval_partial(&F_TERMS, 0, 1, alpha, beta)
        - g * eval_partial(&D_TERMS, 0, 1, alpha, beta))
        / d;
    (ga, gb)
}

/// Hessian `[[G_aa, G_ab], [G_ab, G_bb]]` of the indecomposable closed form.
pub fn hessian_indecomposable_raw(alpha: f64, beta: f64) -> [[f64; 2]; 2] {
    let d = eval_partial(&D_TERMS, 0, 0, alpha, beta);
    let da = eval_partial(&D_TERMS, 1, 0, alpha, beta);
    let db = eval_partial(&D_TERMS, 0, 1, alpha, beta);
    let g = eval_partial(&F_TERMS, 0, 0, alpha, beta) / d;
    let ga = (eval_partial(&F_TERMS, 1, 0, alpha, beta) - g * da) / d;
    let gb = (eval_partial(&F_TERMS, 0, 1, alpha, beta) - g * db) / d;
    // Differentiating f = G d twice and solving for the second partials of G.
    let gaa = (eval_partial(&F_TERMS, 2, 0, alpha, beta)
        - 2.0 * ga * da
        - g * eval_partial(&D_TERMS, 2, 0, alpha, beta))
        / d;
    let gab = (eval_partial(&F_TERMS, 1, 1, alpha, beta)
        - ga * db
        - gb * da
        - g * eval_partial(&D_TERMS, 1, 1, alpha, beta))
        / d;
    let gbb = (eval_partial(&F_TERMS, 0, 2, alpha, beta)
        - 2.0 * gb * db
        - g * eval_partial(&D_TERMS, 0, 2, alpha, beta))
        / d;
    [[gaa, gab], [gab, gbb]]
}

/// `G` for a validated indecomposable parameter point.
pub fn g_indecomposable(p: &IndecomposableParams) -> f64 {
    g_indecomposable_raw(p.alpha(), p.beta())
}

/// `G` for the decomposable family at raw coordinates; requires
/// `alpha*beta >= 1`.
pub fn g_decomposable_raw(alpha: f64, beta: f64) -> f64 {
    let t = alpha * beta;
    (1.0 + (alpha + beta) * (2.0 - t) + 2.0 * (t - 1.0).max(0.0).powf(1.5)) / 36.0
}

/// Gradient of the decomposable closed form; not defined on `alpha*beta = 1`
/// (the square root term is not differentiable there).
pub fn grad_decomposable_raw(alpha: f64, beta: f64) -> (f64, f64) {
    let t = alpha * beta;
    let r = (t - 1.0).max(0.0).sqrt();
    let ga = (2.0 - 2.0 * t - beta * beta + 3.0 * beta * r) / 36.0;
    let gb = (2.0 - 2.0 * t - alpha * alpha + 3.0 * alpha * r) / 36.0;
    (ga, gb)
}

/// Hessian of the decomposable closed form; requires `alpha*beta > 1`
/// strictly (second derivatives blow up on the square-root branch point).
pub fn hessian_decomposable_raw(alpha: f64, beta: f64) -> [[f64; 2]; 2] {
    let t = alpha * beta;
    let r = (t - 1.0).max(0.0).sqrt();
    let gaa = (-2.0 * beta + 3.0 * beta * beta / (2.0 * r)) / 36.0;
    let gbb = (-2.0 * alpha + 3.0 * alpha * alpha / (2.0 * r)) / 36.0;
    let gab = (-2.0 * (alpha + beta) + 3.0 * r + 3.0 * t / (2.0 * r)) / 36.0;
    [[gaa, gab], [gab, gbb]]
}

/// `G` for a validated decomposable parameter point.
pub fn g_decomposable(p: &DecomposableParams) -> f64 {
    g_decomposable_raw(p.alpha(), p.beta())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::decomposable_params;
    use crate::moment::g_from_conorms;
    use crate::family::{decomposable_conorms, indecomposable_conorms};
    use approx::assert_relative_eq;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn mcc_point_reaches_the_optimal_value() {
        let a = 2.0 - SQRT2;
        assert_relative_eq!(
            g_indecomposable_raw(a, a),
            (17.0 + 4.0 * SQRT2) / 288.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn half_half_matches_exact_fraction_oracle() {
        // Independent evaluation of the conorm formula on the exact
        // sevenths-conorms gives 6819/86436.
        let oracle = 6819.0 / 86436.0;
        assert_relative_eq!(g_indecomposable_raw(0.5, 0.5), oracle, epsilon = 1e-14);
        assert!((g_indecomposable_raw(0.5, 0.5) - 0.078891).abs() < 1e-5);
    }

    #[test]
    fn closed_form_agrees_with_conorm_formula() {
        for &(a, b) in &[(0.3, 0.7), (0.9, 0.2), (0.5, 0.5), (0.15, 0.85)] {
            let p = IndecomposableParams::new(a, b).unwrap();
            let via_conorms = g_from_conorms(&indecomposable_conorms(&p), 1.0)
                .unwrap()
                .g_value;
            assert_relative_eq!(
                g_indecomposable(&p),
                via_conorms,
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn closed_form_is_symmetric() {
        assert_relative_eq!(
            g_indecomposable_raw(0.3, 0.8),
            g_indecomposable_raw(0.8, 0.3),
            epsilon = 1e-16
        );
    }

    #[test]
    fn corner_value_is_cubic_lattice() {
        // (1, 1) is the cubic lattice: G = 1/12.
        assert_relative_eq!(g_indecomposable_raw(1.0, 1.0), 1.0 / 12.0, epsilon = 1e-14);
    }

    #[test]
    fn edge_value_matches_z_hex_constant() {
        let a = 3f64.sqrt() - 1.0;
        assert_relative_eq!(
            g_indecomposable_raw(a, 1.0),
            5.0 * 3f64.sqrt() / 162.0 + 1.0 / 36.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn gradient_matches_central_differences() {
        let h = 1e-6;
        for &(a, b) in &[(0.3, 0.7), (0.6, 0.6), (0.2, 0.9), (0.85, 0.15)] {
            let (ga, gb) = grad_indecomposable_raw(a, b);
            let fa = (g_indecomposable_raw(a + h, b) - g_indecomposable_raw(a - h, b)) / (2.0 * h);
            let fb = (g_indecomposable_raw(a, b + h) - g_indecomposable_raw(a, b - h)) / (2.0 * h);
            assert_relative_eq!(ga, fa, max_relative = 1e-6, epsilon = 1e-9);
            assert_relative_eq!(gb, fb, max_relative = 1e-6, epsilon = 1e-9);
        }
    }

    #[test]
    fn gradient_vanishes_at_mcc_point() {
        let a = 2.0 - SQRT2;
        let (ga, gb) = grad_indecomposable_raw(a, a);
        assert!(ga.abs() < 1e-14, "ga = {ga:e}");
        assert!(gb.abs() < 1e-14, "gb = {gb:e}");
    }

    #[test]
    fn hessian_matches_second_differences() {
        let h = 1e-4;
        for &(a, b) in &[(0.3, 0.7), (0.6, 0.6), (0.586, 0.586)] {
            let hess = hessian_indecomposable_raw(a, b);
            let g = |x: f64, y: f64| g_indecomposable_raw(x, y);
            let faa = (g(a + h, b) - 2.0 * g(a, b) + g(a - h, b)) / (h * h);
            let fbb = (g(a, b + h) - 2.0 * g(a, b) + g(a, b - h)) / (h * h);
            let fab = (g(a + h, b + h) - g(a + h, b - h) - g(a - h, b + h) + g(a - h, b - h))
                / (4.0 * h * h);
            assert_relative_eq!(hess[0][0], faa, max_relative = 1e-4, epsilon = 1e-7);
            assert_relative_eq!(hess[1][1], fbb, max_relative = 1e-4, epsilon = 1e-7);
            assert_relative_eq!(hess[0][1], fab, max_relative = 1e-4, epsilon = 1e-7);
            assert_eq!(hess[0][1], hess[1][0]);
        }
    }

    #[test]
    fn decomposable_values_at_named_points() {
        assert_relative_eq!(g_decomposable_raw(1.0, 1.0), 1.0 / 12.0, epsilon = 1e-15);
        assert_relative_eq!(g_decomposable_raw(1.0, 2.0), 1.0 / 12.0, epsilon = 1e-15);
        let s = 3f64.sqrt();
        assert_relative_eq!(
            g_decomposable_raw(2.0 / s, 2.0 / s),
            5.0 * s / 162.0 + 1.0 / 36.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn decomposable_closed_form_agrees_with_conorm_formula() {
        for &(a, b) in &[(1.0, 1.0), (1.0, 2.0), (1.05, 1.1), (1.1547, 1.1547)] {
            let p = decomposable_params(a, b).unwrap();
            let via_conorms = g_from_conorms(&decomposable_conorms(&p), 1.0)
                .unwrap()
                .g_value;
            assert_relative_eq!(g_decomposable(&p), via_conorms, epsilon = 1e-14);
        }
    }

    #[test]
    fn decomposable_gradient_matches_central_differences() {
        let h = 1e-6;
        for &(a, b) in &[(1.1, 1.3), (1.05, 1.6), (1.1547, 1.1547)] {
            let (ga, gb) = grad_decomposable_raw(a, b);
            let fa = (g_decomposable_raw(a + h, b) - g_decomposable_raw(a - h, b)) / (2.0 * h);
            let fb = (g_decomposable_raw(a, b + h) - g_decomposable_raw(a, b - h)) / (2.0 * h);
            assert_relative_eq!(ga, fa, max_relative = 1e-5, epsilon = 1e-9);
            assert_relative_eq!(gb, fb, max_relative = 1e-5, epsilon = 1e-9);
        }
    }

    #[test]
    fn decomposable_stationary_points() {
        // Both named stationary points of the closed form.
        let (ga, gb) = grad_decomposable_raw(1.0, 2.0);
        assert!(ga.abs() < 1e-14 && gb.abs() < 1e-14);
        let s = 3f64.sqrt();
        let (ga, gb) = grad_decomposable_raw(2.0 / s, 2.0 / s);
        assert!(ga.abs() < 1e-14 && gb.abs() < 1e-14);
    }

    #[test]
    fn decomposable_hessian_matches_central_differences() {
        let h = 1e-4;
        for &(a, b) in &[(1.1, 1.3), (1.05, 1.6)] {
            let hess = hessian_decomposable_raw(a, b);
            let fd_aa = (g_decomposable_raw(a + h, b) - 2.0 * g_decomposable_raw(a, b)
                + g_decomposable_raw(a - h, b))
                / (h * h);
            let fd_bb = (g_decomposable_raw(a, b + h) - 2.0 * g_decomposable_raw(a, b)
                + g_decomposable_raw(a, b - h))
                / (h * h);
            let fd_ab = (g_decomposable_raw(a + h, b + h) - g_decomposable_raw(a + h, b - h)
                - g_decomposable_raw(a - h, b + h)
                + g_decomposable_raw(a - h, b - h))
                / (4.0 * h * h);
            assert_relative_eq!(hess[0][0], fd_aa, max_relative = 1e-4, epsilon = 1e-7);
            assert_relative_eq!(hess[1][1], fd_bb, max_relative = 1e-4, epsilon = 1e-7);
            assert_relative_eq!(hess[0][1], fd_ab, max_relative = 1e-4, epsilon = 1e-7);
        }
    }

    #[test]
    fn decomposable_hessian_known_values_at_stationary_points() {
        // At (1, 2): diag(2, -1/2)/36 with zero cross term (a saddle).
        let h = hessian_decomposable_raw(1.0, 2.0);
        assert_relative_eq!(h[0][0], 2.0 / 36.0, epsilon = 1e-14);
        assert_relative_eq!(h[1][1], -0.5 / 36.0, epsilon = 1e-14);
        assert!(h[0][1].abs() < 1e-14);
        // At (2/sqrt3, 2/sqrt3): [[2, 1], [1, 2]]/(36 sqrt3), positive definite.
        let s = 3f64.sqrt();
        let h = hessian_decomposable_raw(2.0 / s, 2.0 / s);
        assert_relative_eq!(h[0][0], 2.0 / (36.0 * s), epsilon = 1e-14);
        assert_relative_eq!(h[0][1], 1.0 / (36.0 * s), epsilon = 1e-14);
        assert_relative_eq!(h[1][1], 2.0 / (36.0 * s), epsilon = 1e-14);
    }
}
