//! Voronoi cells of 3-lattices and exact second moments.
//!
//! The cell of the origin is the intersection of the half-spaces
//! `x . v <= |v|^2 / 2` over the *relevant* vectors `v`: those for which
//! `+-v` are the unique minima of their class in `L / 2L`. In three
//! dimensions there are at most seven contributing classes, so at most 14
//! faces and (after merging coincident intersections) at most 24 vertices.
//! Volume and the integral of `|x|^2` are accumulated exactly by fanning
//! each face polygon around its centroid into origin-apex tetrahedra and
//! applying the degree-two simplex quadrature
//! `int |x|^2 = (V/20) (|sum v_i|^2 + sum |v_i|^2)`.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::moment::{Method, MomentReport};
use crate::tol;

/// One supporting half-space `x . normal <= offset` of the cell.
#[derive(Debug, Clone)]
pub struct Face {
    /// Defining lattice vector in lattice coordinates.
    pub vector: Vector3<i64>,
    /// Cartesian image of `vector`.
    pub normal: Vector3<f64>,
    /// Half the squared norm of `vector`.
    pub offset: f64,
}

/// The Voronoi cell of the origin, in Cartesian coordinates.
#[derive(Debug, Clone)]
pub struct VoronoiCell {
    /// Relevant vectors with squared norms; contains both signs of each pair.
    pub relevant_vectors: Vec<(Vector3<i64>, f64)>,
    pub faces: Vec<Face>,
    pub vertices: Vec<Vector3<f64>>,
    /// Distance to the nearest face plane: half the minimal vector length.
    pub inradius: f64,
    /// Distance to the farthest vertex: the covering radius of the lattice.
    pub circumradius: f64,
    pub volume: f64,
    /// Integral of `|x|^2` over the cell (unnormalized).
    pub second_moment: f64,
}

/// Minimum-norm members of the class `c + 2L`, up to the relative tie
/// tolerance; the search box is provably sufficient for the class minimum.
fn class_minima(gram: &GramMatrix, class: [i64; 3]) -> Vec<(Vector3<i64>, f64)> {
    let lambda_min = gram.smallest_eigenvalue();

    // Cheap upper bound: the best all-sign variant of the 0/1 representative.
    let mut best0 = f64::INFINITY;
    for signs in 0..8u8 {
        let mut u = Vector3::zeros();
        for i in 0..3 {
            let s = if signs >> i & 1 == 1 { -1 } else { 1 };
            u[i] = class[i] * s;
        }
        best0 = best0.min(gram.norm_int(&u));
    }
    let bound = (best0 / lambda_min).sqrt().ceil() as i64 + 1;

    let axis_values = |c: i64| -> Vec<i64> {
        let mut v = Vec::new();
        let mut x = c - 2 * bound;
        while x <= bound {
            if x >= -bound {
                v.push(x);
            }
            x += 2;
        }
        v
    };
    let (xs, ys, zs) = (
        axis_values(class[0]),
        axis_values(class[1]),
        axis_values(class[2]),
    );

    let mut min_norm = f64::INFINITY;
    let mut minima: Vec<(Vector3<i64>, f64)> = Vec::new();
    for &x in &xs {
        for &y in &ys {
            for &z in &zs {
                let u = Vector3::new(x, y, z);
                let n = gram.norm_int(&u);
                if n < min_norm * (1.0 - tol::MIN_NORM_RTOL) {
                    min_norm = n;
                    minima.clear();
                    minima.push((u, n));
                } else if n <= min_norm * (1.0 + tol::MIN_NORM_RTOL) {
                    min_norm = min_norm.min(n);
                    minima.push((u, n));
                }
            }
        }
    }
    minima
}

/// Computes the Voronoi cell of the origin.
pub fn voronoi_cell(gram: &GramMatrix) -> Result<VoronoiCell> {
    let basis = gram.cartesian_basis();

    // Relevant vectors: classes of L/2L whose minimum is a single +- pair.
    let mut relevant: Vec<(Vector3<i64>, f64)> = Vec::new();
    for mask in 1u8..8 {
        let class = [
            (mask & 1) as i64,
            (mask >> 1 & 1) as i64,
            (mask >> 2 & 1) as i64,
        ];
        let minima = class_minima(gram, class);
        if minima.len() == 2 {
            relevant.extend(minima);
        }
    }

    let faces: Vec<Face> = relevant
        .iter()
        .map(|(u, n)| {
            let uf = Vector3::new(u.x as f64, u.y as f64, u.z as f64);
            Face {
                vector: *u,
                normal: basis * uf,
                offset: n / 2.0,
            }
        })
        .collect();
    if !(4..=14).contains(&faces.len()) {
        return Err(Error::Geometry(format!(
            "{} supporting half-spaces found; a valid cell has between 4 and 14",
            faces.len()
        )));
    }

    let scale = faces
        .iter()
        .map(|f| f.normal.norm())
        .fold(0.0f64, f64::max);
    let plane_tol = 1e-9 * (scale * scale).max(1.0);
    let merge_tol = tol::VERTEX_MERGE_TOL * scale.max(1.0);

    // Vertices: feasible intersections of face-plane triples, merged.
    let mut vertices: Vec<Vector3<f64>> = Vec::new();
    let n = faces.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let m = Matrix3::from_rows(&[
                    faces[i].normal.transpose(),
                    faces[j].normal.transpose(),
                    faces[k].normal.transpose(),
                ]);
                let det_scale =
                    faces[i].normal.norm() * faces[j].normal.norm() * faces[k].normal.norm();
                if m.determinant().abs() <= 1e-10 * det_scale {
                    continue;
                }
                let b = Vector3::new(faces[i].offset, faces[j].offset, faces[k].offset);
                let Some(x) = m.lu().solve(&b) else {
                    continue;
                };
                if faces
                    .iter()
                    .all(|f| f.normal.dot(&x) <= f.offset + plane_tol)
                {
                    if !vertices.iter().any(|v| (v - x).norm() <= merge_tol) {
                        vertices.push(x);
                    }
                }
            }
        }
    }
    if vertices.len() < 4 || vertices.len() > 24 {
        return Err(Error::Geometry(format!(
            "{} cell vertices found; a valid cell has between 4 and 24",
            vertices.len()
        )));
    }

    // Integrate over each face polygon fanned around its centroid.
    let mut volume = 0.0;
    let mut second_moment = 0.0;
    for face in &faces {
        let mut on_face: Vec<Vector3<f64>> = vertices
            .iter()
            .filter(|v| (face.normal.dot(v) - face.offset).abs() <= plane_tol)
            .copied()
            .collect();
        if on_face.len() < 3 {
            return Err(Error::Geometry(format!(
                "face of vector ({}, {}, {}) is supported by {} vertices",
                face.vector.x,
                face.vector.y,
                face.vector.z,
                on_face.len()
            )));
        }

        let centroid = on_face.iter().sum::<Vector3<f64>>() / on_face.len() as f64;
        let unit_n = face.normal.normalize();
        // In-plane frame from the axis least aligned with the normal.
        let pivot = (0..3)
            .min_by(|&a, &b| {
                unit_n[a]
                    .abs()
                    .partial_cmp(&unit_n[b].abs())
                    .unwrap()
            })
            .unwrap();
        let mut axis = Vector3::zeros();
        axis[pivot] = 1.0;
        let t1 = unit_n.cross(&axis).normalize();
        let t2 = unit_n.cross(&t1);
        on_face.sort_by(|p, q| {
            let ap = f64::atan2((p - centroid).dot(&t2), (p - centroid).dot(&t1));
            let aq = f64::atan2((q - centroid).dot(&t2), (q - centroid).dot(&t1));
            ap.partial_cmp(&aq).unwrap()
        });

        for idx in 0..on_face.len() {
            let w1 = on_face[idx];
            let w2 = on_face[(idx + 1) % on_face.len()];
            let vol = Matrix3::from_columns(&[centroid, w1, w2])
                .determinant()
                .abs()
                / 6.0;
            let vertex_sum = centroid + w1 + w2;
            second_moment += vol / 20.0
                * (vertex_sum.norm_squared()
                    + centroid.norm_squared()
                    + w1.norm_squared()
                    + w2.norm_squared());
            volume += vol;
        }
    }

    let expected_volume = gram.determinant().sqrt();
    if (volume - expected_volume).abs() > tol::CELL_VOLUME_RTOL * expected_volume {
        return Err(Error::Geometry(format!(
            "cell volume {volume} disagrees with sqrt(det) = {expected_volume}"
        )));
    }

    let inradius = faces
        .iter()
        .map(|f| f.offset / f.normal.norm())
        .fold(f64::INFINITY, f64::min);
    let circumradius = vertices.iter().map(|v| v.norm()).fold(0.0f64, f64::max);

    Ok(VoronoiCell {
        relevant_vectors: relevant,
        faces,
        vertices,
        inradius,
        circumradius,
        volume,
        second_moment,
    })
}

/// Normalized second moment from an exactly integrated cell:
/// `G = (1/3) * M2 * volume^{-5/3}`.
///
/// `det` is cross-checked against the cell volume so a cell cannot be
/// combined with the wrong lattice.
pub fn second_moment_exact(cell: &VoronoiCell, det: f64) -> Result<MomentReport> {
    if !(det > 0.0) || !det.is_finite() {
        return Err(Error::Domain(format!("determinant {det} must be positive")));
    }
    let expected_volume = det.sqrt();
    if (cell.volume - expected_volume).abs() > tol::CELL_VOLUME_RTOL * expected_volume {
        return Err(Error::Geometry(format!(
            "cell volume {} is inconsistent with determinant {det}",
            cell.volume
        )));
    }
    let g = cell.second_moment / (3.0 * cell.volume.powf(5.0 / 3.0));
    Ok(MomentReport::exact(g, Method::ExactPolytope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{bcc_gram, cubic_gram, fcc_gram, mcc_gram};
    use approx::assert_relative_eq;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn cubic_cell_is_the_unit_cube() {
        let cell = voronoi_cell(&cubic_gram()).unwrap();
        assert_eq!(cell.faces.len(), 6);
        assert_eq!(cell.vertices.len(), 8);
        assert_relative_eq!(cell.inradius, 0.5, epsilon = 1e-12);
        assert_relative_eq!(cell.circumradius, 3f64.sqrt() / 2.0, epsilon = 1e-12);
        assert_relative_eq!(cell.volume, 1.0, epsilon = 1e-12);
        assert_relative_eq!(cell.second_moment, 0.25, epsilon = 1e-12);
        let g = second_moment_exact(&cell, 1.0).unwrap();
        assert_relative_eq!(g.g_value, 1.0 / 12.0, epsilon = 1e-12);
        assert_eq!(g.method, Method::ExactPolytope);
    }

    #[test]
    fn face_centered_cell_is_a_rhombic_dodecahedron() {
        let cell = voronoi_cell(&fcc_gram()).unwrap();
        assert_eq!(cell.faces.len(), 12);
        assert_eq!(cell.vertices.len(), 14);
        assert_relative_eq!(cell.volume, 2.0, epsilon = 1e-10);
        assert_relative_eq!(cell.inradius, SQRT2 / 2.0, epsilon = 1e-12);
        assert_relative_eq!(cell.circumradius, 1.0, epsilon = 1e-12);
        let g = second_moment_exact(&cell, 4.0).unwrap();
        assert_relative_eq!(g.g_value, 2f64.powf(1.0 / 3.0) / 16.0, epsilon = 1e-12);
    }

    #[test]
    fn body_centered_cell_is_a_truncated_octahedron() {
        let cell = voronoi_cell(&bcc_gram()).unwrap();
        assert_eq!(cell.faces.len(), 14);
        assert_eq!(cell.vertices.len(), 24);
        assert_relative_eq!(cell.volume, 1.0, epsilon = 1e-10);
        let g = second_moment_exact(&cell, 1.0).unwrap();
        assert_relative_eq!(
            g.g_value,
            (19.0 / 384.0) * 2f64.powf(2.0 / 3.0),
            epsilon = 1e-12
        );
    }

    #[test]
    fn mcc_cell_reference_radii_and_moment() {
        let cell = voronoi_cell(&mcc_gram()).unwrap();
        assert_relative_eq!(
            cell.inradius,
            0.5 * (0.5 + 1.0 / SQRT2).sqrt(),
            epsilon = 1e-12
        );
        assert_relative_eq!(
            cell.circumradius,
            3f64.sqrt() * 2f64.powf(-1.25),
            epsilon = 1e-12
        );
        assert_relative_eq!(cell.volume, 1.0, epsilon = 1e-10);
        let g = second_moment_exact(&cell, 1.0).unwrap();
        assert_relative_eq!(g.g_value, (17.0 + 4.0 * SQRT2) / 288.0, epsilon = 1e-12);
    }

    #[test]
    fn cell_is_centrally_symmetric() {
        for gram in [fcc_gram(), bcc_gram(), mcc_gram()] {
            let cell = voronoi_cell(&gram).unwrap();
            for v in &cell.vertices {
                assert!(
                    cell.vertices.iter().any(|w| (w + v).norm() < 1e-8),
                    "vertex {v:?} lacks its negative"
                );
            }
        }
    }

    #[test]
    fn normalized_moment_is_scale_invariant() {
        let base = mcc_gram();
        let mut values = Vec::new();
        for c in [0.1, 1.0, 10.0] {
            let scaled =
                GramMatrix::new(base.rows().map(|row| row.map(|x| x * c))).unwrap();
            let cell = voronoi_cell(&scaled).unwrap();
            let g = second_moment_exact(&cell, scaled.determinant()).unwrap();
            values.push(g.g_value);
        }
        assert_relative_eq!(values[0], values[1], epsilon = 1e-9);
        assert_relative_eq!(values[2], values[1], epsilon = 1e-9);
    }

    #[test]
    fn volume_matches_sqrt_det_for_family_lattices() {
        use crate::family::{indecomposable_gram, IndecomposableParams};
        for &(a, b) in &[(0.3, 0.7), (0.55, 0.21), (0.82, 0.68)] {
            let g = indecomposable_gram(&IndecomposableParams::new(a, b).unwrap());
            let cell = voronoi_cell(&g).unwrap();
            assert_relative_eq!(cell.volume, 1.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn moment_rejects_mismatched_determinant() {
        let cell = voronoi_cell(&cubic_gram()).unwrap();
        assert!(matches!(
            second_moment_exact(&cell, 4.0),
            Err(Error::Geometry(_))
        ));
        assert!(second_moment_exact(&cell, -1.0).is_err());
    }
}
