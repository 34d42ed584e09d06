//! Gram matrices of three-dimensional lattices: construction, duality, and
//! shortest-vector enumeration.
//!
//! A lattice is represented throughout the crate by its Gram matrix `g`, the
//! symmetric positive-definite matrix of inner products of a basis. Integer
//! vectors `u` are coordinates in that basis and carry the squared norm
//! `u^T g u`.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::tol;

/// Symmetric positive-definite 3x3 matrix of basis inner products.
///
/// Construction validates symmetry (entries are then stored exactly
/// symmetric) and positivity of all leading principal minors, so every value
/// of this type describes a genuine lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramMatrix {
    m: Matrix3<f64>,
}

impl GramMatrix {
    /// Builds a Gram matrix from row-major entries.
    pub fn new(entries: [[f64; 3]; 3]) -> Result<Self> {
        let scale = entries
            .iter()
            .flatten()
            .fold(0.0f64, |acc, &x| acc.max(x.abs()));
        for i in 0..3 {
            for j in (i + 1)..3 {
                let delta = (entries[i][j] - entries[j][i]).abs();
                if delta > tol::SYMMETRY_TOL * scale.max(1.0) {
                    return Err(Error::NotSymmetric { i, j, delta });
                }
            }
        }
        // Store the symmetrized matrix so g[i][j] == g[j][i] holds exactly.
        let mut m = Matrix3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = 0.5 * (entries[i][j] + entries[j][i]);
            }
        }

        let minor1 = m[(0, 0)];
        if minor1 <= tol::PD_MINOR_TOL {
            return Err(Error::NotPositiveDefinite {
                order: 1,
                minor: minor1,
            });
        }
        let minor2 = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        if minor2 <= tol::PD_MINOR_TOL {
            return Err(Error::NotPositiveDefinite {
                order: 2,
                minor: minor2,
            });
        }
        let minor3 = m.determinant();
        if minor3 <= tol::PD_MINOR_TOL {
            return Err(Error::NotPositiveDefinite {
                order: 3,
                minor: minor3,
            });
        }
        Ok(GramMatrix { m })
    }

    pub fn from_matrix(m: &Matrix3<f64>) -> Result<Self> {
        let mut entries = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                entries[i][j] = m[(i, j)];
            }
        }
        Self::new(entries)
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = self.m[(i, j)];
            }
        }
        out
    }

    pub fn determinant(&self) -> f64 {
        self.m.determinant()
    }

    /// Squared norm `u^T g u` of an integer lattice vector.
    pub fn norm_int(&self, u: &Vector3<i64>) -> f64 {
        let v = Vector3::new(u.x as f64, u.y as f64, u.z as f64);
        self.norm(&v)
    }

    /// Squared norm `x^T g x` of a real vector in lattice coordinates.
    pub fn norm(&self, x: &Vector3<f64>) -> f64 {
        (x.transpose() * self.m * x)[(0, 0)]
    }

    /// Inner product `x^T g y` in lattice coordinates.
    pub fn inner(&self, x: &Vector3<f64>, y: &Vector3<f64>) -> f64 {
        (x.transpose() * self.m * y)[(0, 0)]
    }

    /// Eigenvalues in ascending order (all positive).
    pub fn eigenvalues(&self) -> [f64; 3] {
        let eig = self.m.symmetric_eigenvalues();
        let mut vals = [eig[0], eig[1], eig[2]];
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }

    pub fn smallest_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// Gram matrix of the dual lattice: the inverse of `self`.
    ///
    /// Refuses inputs with condition estimate above
    /// [`tol::CONDITION_LIMIT`]; the determinants of a matrix and its dual
    /// are reciprocal.
    pub fn dual(&self) -> Result<GramMatrix> {
        let eig = self.eigenvalues();
        if eig[0] <= 0.0 || eig[2] / eig[0] > tol::CONDITION_LIMIT {
            return Err(Error::DegenerateLattice(format!(
                "condition estimate {:.3e} exceeds {:.0e}",
                eig[2] / eig[0],
                tol::CONDITION_LIMIT
            )));
        }
        let inv = self
            .m
            .try_inverse()
            .ok_or_else(|| Error::DegenerateLattice("matrix is not invertible".into()))?;
        GramMatrix::from_matrix(&inv)
    }

    /// Rescales to determinant one: `g / det(g)^{1/3}`.
    pub fn scaled_to_unit_determinant(&self) -> GramMatrix {
        let det = self.determinant();
        GramMatrix {
            m: self.m / det.cbrt(),
        }
    }

    /// A matrix `A` with `A^T A = g`; columns are Cartesian basis vectors.
    ///
    /// Maps lattice coordinates to Cartesian coordinates, where Euclidean
    /// geometry (half-spaces, volumes, moments) applies directly.
    pub fn cartesian_basis(&self) -> Matrix3<f64> {
        // Cholesky g = L L^T always succeeds: construction proved positive
        // definiteness. A = L^T satisfies A^T A = L L^T = g.
        self.m
            .cholesky()
            .expect("validated Gram matrix has a Cholesky factorization")
            .l()
            .transpose()
    }
}

/// Nonzero lattice vectors of minimal norm, closed under negation.
#[derive(Debug, Clone)]
pub struct ShortVectorList {
    /// Minimal vectors with their squared norms.
    pub vectors: Vec<(Vector3<i64>, f64)>,
    /// The minimal squared norm.
    pub min_norm: f64,
}

impl ShortVectorList {
    /// Number of minimal vectors (the kissing number of the lattice packing).
    pub fn kissing_number(&self) -> usize {
        self.vectors.len()
    }
}

/// Enumerates all nonzero vectors of minimal squared norm.
///
/// The search box `|u_i| <= ceil(sqrt(max_k g_kk / lambda_min)) + 1` is
/// sufficient: the minimum is at most `min_k g_kk`, and any vector with
/// `u^T g u <= max_k g_kk` has `|u|^2 <= max_k g_kk / lambda_min`.
pub fn minimal_vectors(gram: &GramMatrix) -> ShortVectorList {
    let max_diag = (0..3).map(|i| gram.entry(i, i)).fold(0.0f64, f64::max);
    let lambda_min = gram.smallest_eigenvalue();
    let bound = (max_diag / lambda_min).sqrt().ceil() as i64 + 1;

    let mut min_norm = f64::INFINITY;
    let mut vectors: Vec<(Vector3<i64>, f64)> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let u = Vector3::new(a, b, c);
                let n = gram.norm_int(&u);
                if n < min_norm * (1.0 - tol::MIN_NORM_RTOL) {
                    min_norm = n;
                    vectors.clear();
                    vectors.push((u, n));
                } else if n <= min_norm * (1.0 + tol::MIN_NORM_RTOL) {
                    min_norm = min_norm.min(n);
                    vectors.push((u, n));
                }
            }
        }
    }
    ShortVectorList { vectors, min_norm }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn identity() -> GramMatrix {
        GramMatrix::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]).unwrap()
    }

    #[test]
    fn rejects_asymmetric_input() {
        let err = GramMatrix::new([[1.0, 0.5, 0.0], [0.1, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(matches!(err, Err(Error::NotSymmetric { i: 0, j: 1, .. })));
    }

    #[test]
    fn rejects_indefinite_input() {
        let err = GramMatrix::new([[1.0, 2.0, 0.0], [2.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(matches!(
            err,
            Err(Error::NotPositiveDefinite { order: 2, .. })
        ));
    }

    #[test]
    fn rejects_singular_input() {
        // Third basis vector is the sum of the first two.
        let err = GramMatrix::new([[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [1.0, 1.0, 2.0]]);
        assert!(matches!(
            err,
            Err(Error::NotPositiveDefinite { order: 3, .. })
        ));
    }

    #[test]
    fn determinant_of_face_centered_gram_is_four() {
        // Cofactor expansion by hand: 2*(4-1) - 1*(2-1) + 1*(1-2) = 4.
        let g = GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        assert_relative_eq!(g.determinant(), 4.0, max_relative = 1e-14);
    }

    #[test]
    fn dual_of_identity_is_identity() {
        let d = identity().dual().unwrap();
        assert_eq!(d.rows(), identity().rows());
    }

    #[test]
    fn dual_determinant_is_reciprocal() {
        let g = GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        let d = g.dual().unwrap();
        assert_relative_eq!(d.determinant(), 0.25, max_relative = 1e-10);
        // Dualization is an involution.
        let dd = d.dual().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(dd.entry(i, j), g.entry(i, j), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn dual_refuses_ill_conditioned_input() {
        let g = GramMatrix::new([
            [1.0, 0.0, 0.0],
            [0.0, 1e-9, 0.0],
            [0.0, 0.0, 1e4],
        ])
        .unwrap();
        assert!(matches!(g.dual(), Err(Error::DegenerateLattice(_))));
    }

    #[test]
    fn cartesian_basis_reproduces_gram() {
        let g = GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        let a = g.cartesian_basis();
        let gg = a.transpose() * a;
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(gg[(i, j)], g.entry(i, j), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn unit_determinant_rescale() {
        let g = GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        let s = g.scaled_to_unit_determinant();
        assert_relative_eq!(s.determinant(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn cubic_lattice_minimal_vectors() {
        let list = minimal_vectors(&identity());
        assert_eq!(list.kissing_number(), 6);
        assert_relative_eq!(list.min_norm, 1.0);
        for (u, n) in &list.vectors {
            assert_eq!(u.iter().map(|x| x * x).sum::<i64>(), 1);
            assert_relative_eq!(*n, 1.0);
        }
    }

    #[test]
    fn face_centered_minimal_vectors_match_enumeration_oracle() {
        let g = GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        let list = minimal_vectors(&g);
        assert_eq!(list.kissing_number(), 12);
        assert_relative_eq!(list.min_norm, 2.0);

        // Independent oracle: brute force over a fixed |coords| <= 2 box.
        let mut oracle_min = f64::INFINITY;
        let mut oracle_count = 0usize;
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    if (a, b, c) == (0, 0, 0) {
                        continue;
                    }
                    let n = g.norm_int(&Vector3::new(a, b, c));
                    if n < oracle_min - 1e-9 {
                        oracle_min = n;
                        oracle_count = 1;
                    } else if (n - oracle_min).abs() <= 1e-9 {
                        oracle_count += 1;
                    }
                }
            }
        }
        assert_relative_eq!(oracle_min, list.min_norm);
        assert_eq!(oracle_count, list.kissing_number());
    }

    #[test]
    fn minimal_vectors_closed_under_negation() {
        let g = GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap();
        let list = minimal_vectors(&g);
        assert_eq!(list.kissing_number() % 2, 0);
        for (u, _) in &list.vectors {
            assert!(list.vectors.iter().any(|(w, _)| *w == -u));
        }
    }
}
