//! Nearest-lattice-point search by exhaustive window enumeration.

use nalgebra::Vector3;

use crate::error::Result;
use crate::gram::GramMatrix;
use crate::voronoi::voronoi_cell;

/// Reusable nearest-point searcher for one lattice.
///
/// The window half-width `w = ceil(mu / sqrt(lambda_min)) + 1` (with `mu`
/// the covering radius) is provably sufficient: the nearest point `u` to a
/// target `t` satisfies `(t-u)^T g (t-u) <= mu^2`, hence
/// `|t_i - u_i| <= mu / sqrt(lambda_min)`, and rounding moves each
/// coordinate by at most 1/2.
#[derive(Debug, Clone)]
pub struct Quantizer {
    gram: GramMatrix,
    window: i64,
    lambda_min: f64,
}

impl Quantizer {
    pub fn new(gram: &GramMatrix) -> Result<Self> {
        let covering = voronoi_cell(gram)?.circumradius;
        let lambda_min = gram.smallest_eigenvalue();
        let window = (covering / lambda_min.sqrt()).ceil() as i64 + 1;
        Ok(Quantizer {
            gram: *gram,
            window,
            lambda_min,
        })
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// Integer coordinates minimizing `(target - u)^T g (target - u)`,
    /// ties resolved to the lexicographically smallest `u`.
    pub fn nearest(&self, target: &Vector3<f64>) -> Vector3<i64> {
        self.nearest_with_error(target).0
    }

    /// Nearest point and its squared distance.
    pub fn nearest_with_error(&self, target: &Vector3<f64>) -> (Vector3<i64>, f64) {
        let base = Vector3::new(
            target.x.round() as i64,
            target.y.round() as i64,
            target.z.round() as i64,
        );
        let w = self.window;
        // Seed with the rounded point, then enumerate in lexicographic
        // order; strict improvement plus an explicit equal-error check
        // yields the lexicographically smallest minimizer.
        let mut best = base;
        let mut best_err = {
            let d = Vector3::new(
                target.x - base.x as f64,
                target.y - base.y as f64,
                target.z - base.z as f64,
            );
            self.gram.norm(&d)
        };
        for da in -w..=w {
            for db in -w..=w {
                for dc in -w..=w {
                    let u = Vector3::new(base.x + da, base.y + db, base.z + dc);
                    let d = Vector3::new(
                        target.x - u.x as f64,
                        target.y - u.y as f64,
                        target.z - u.z as f64,
                    );
                    // err >= lambda_min * |d|^2, so candidates whose bound
                    // strictly exceeds the incumbent cannot win or tie.
                    let dist2 = d.x * d.x + d.y * d.y + d.z * d.z;
                    if self.lambda_min * dist2 > best_err {
                        continue;
                    }
                    let err = self.gram.norm(&d);
                    if err < best_err || (err == best_err && lex_less(&u, &best)) {
                        best_err = err;
                        best = u;
                    }
                }
            }
        }
        (best, best_err)
    }
}

fn lex_less(a: &Vector3<i64>, b: &Vector3<i64>) -> bool {
    (a.x, a.y, a.z) < (b.x, b.y, b.z)
}

/// One-shot nearest-point query; builds a [`Quantizer`] internally.
pub fn closest_point(gram: &GramMatrix, target: &Vector3<f64>) -> Result<Vector3<i64>> {
    Ok(Quantizer::new(gram)?.nearest(target))
}
