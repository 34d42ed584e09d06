//! Superbase reduction and conorms.
//!
//! A superbase of a 3-lattice is a set of four vectors `v0, v1, v2, v3`
//! summing to zero, any three of which form a basis. The six conorms are
//! `p_ij = -v_i . v_j` for `0 <= i < j <= 3`. Selling reduction transforms a
//! superbase until every conorm is nonnegative; the resulting multiset of
//! conorms, organized into the three complementary pairs
//! `{p01,p23}, {p02,p13}, {p03,p12}`, is a complete isometry invariant of the
//! lattice. Two lattices are compared by bringing both to this canonical
//! form.

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::tol;

/// Index pairs of the six conorms in storage order.
pub const CONORM_LABELS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The six conorms of a reduced superbase, labeled `p01..p23`.
///
/// All values are nonnegative; magnitudes below [`tol::CONORM_CLAMP`] are
/// snapped to zero at construction.
#[derive(Debug, Clone, Copy)]
pub struct ConormSet {
    /// Values in the order `p01, p02, p03, p12, p13, p23`.
    p: [f64; 6],
}

impl ConormSet {
    /// Builds a conorm set from labeled values in the order
    /// `p01, p02, p03, p12, p13, p23`.
    pub fn new(values: [f64; 6]) -> Result<Self> {
        let mut p = values;
        for v in &mut p {
            if *v < 0.0 {
                if *v < -tol::CONORM_CLAMP {
                    return Err(Error::Domain(format!(
                        "conorm {v:e} is negative beyond the clamping tolerance"
                    )));
                }
                *v = 0.0;
            }
        }
        Ok(ConormSet { p })
    }

    pub fn values(&self) -> [f64; 6] {
        self.p
    }

    /// Conorm `p_ij` for `0 <= i < j <= 3`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let idx = CONORM_LABELS
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .expect("conorm indices must satisfy 0 <= i < j <= 3");
        self.p[idx]
    }

    pub fn sum(&self) -> f64 {
        self.p.iter().sum()
    }

    /// Pair form of this particular labeling: the three complementary
    /// pairs, each sorted ascending, the pairs themselves in
    /// lexicographic order.
    ///
    /// Superbase relabelings permute conorms while preserving the
    /// pairing, so this form does not depend on how the superbase
    /// vectors were numbered.  It can still differ between two reduced
    /// superbases of the same lattice when some conorm vanishes; use
    /// [`ConormSet::canonical_form`] for a full lattice invariant.
    pub fn canonical_pairs(&self) -> [[f64; 2]; 3] {
        pair_form(&self.p)
    }

    /// Lattice-invariant canonical form.
    ///
    /// A reduced superbase is unique (up to relabeling) only when all
    /// six conorms are positive.  Each vanishing conorm admits an
    /// exchange move to a different reduced superbase of the same
    /// lattice, generally with a different complementary-pair layout;
    /// for example `Z^3` carries both `{(1,0),(1,0),(1,0)}` and
    /// `{(1,1),(0,0),(1,0)}`.  This method explores the finite orbit of
    /// exchange moves at (numerically) vanishing conorms and returns the
    /// lexicographically smallest pair form, which is identical for
    /// isometric lattices.  For all-positive conorms it coincides with
    /// [`ConormSet::canonical_pairs`].
    pub fn canonical_form(&self) -> [[f64; 2]; 3] {
        let scale = self.p.iter().fold(0.0f64, |m, &v| m.max(v)).max(1.0);
        let zero_tol = 1e-9 * scale;
        let quantum = 1e-10 * scale;
        let key = |p: &[f64; 6]| -> [i64; 6] {
            let mut k = [0i64; 6];
            for (slot, &v) in k.iter_mut().zip(p.iter()) {
                *slot = (v / quantum).round() as i64;
            }
            k
        };

        let mut visited = vec![key(&self.p)];
        let mut queue = vec![self.p];
        let mut best = pair_form(&self.p);
        let mut head = 0;
        while head < queue.len() && visited.len() < 256 {
            let current = queue[head];
            head += 1;
            for idx in 0..6 {
                if current[idx] > zero_tol {
                    continue;
                }
                let next = exchange(&current, idx);
                let k = key(&next);
                if visited.contains(&k) {
                    continue;
                }
                visited.push(k);
                let form = pair_form(&next);
                if form
                    .as_flattened()
                    .partial_cmp(best.as_flattened())
                    .map_or(false, |o| o.is_lt())
                {
                    best = form;
                }
                queue.push(next);
            }
        }
        best
    }

    /// Largest absolute difference between the canonical forms of two sets.
    pub fn canonical_distance(&self, other: &ConormSet) -> f64 {
        let a = self.canonical_form();
        let b = other.canonical_form();
        let mut d = 0.0f64;
        for i in 0..3 {
            for j in 0..2 {
                d = d.max((a[i][j] - b[i][j]).abs());
            }
        }
        d
    }

    /// Whether the canonical forms agree within `tol` entrywise.
    pub fn approx_eq(&self, other: &ConormSet, tol: f64) -> bool {
        self.canonical_distance(other) <= tol
    }
}

fn pair_form(p: &[f64; 6]) -> [[f64; 2]; 3] {
    let [p01, p02, p03, p12, p13, p23] = *p;
    let mut pairs = [[p01, p23], [p02, p13], [p03, p12]];
    for pair in &mut pairs {
        if pair[0] > pair[1] {
            pair.swap(0, 1);
        }
    }
    pairs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pairs
}

fn label_index(a: usize, b: usize) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    CONORM_LABELS
        .iter()
        .position(|&(x, y)| (x, y) == (lo, hi))
        .expect("indices must be distinct members of 0..4")
}

/// Conorms after the Selling exchange step at pair `(i, j)`: the
/// superbase change `v_i -> -v_i`, `v_k -> v_k + v_i`, `v_l -> v_l + v_i`
/// acts on conorms as `q_ij = -p_ij`, `q_ik = p_ij + p_il`,
/// `q_il = p_ij + p_ik`, `q_jk = p_ij + p_jk`, `q_jl = p_ij + p_jl`,
/// `q_kl = p_kl - p_ij`.  At `p_ij = 0` this maps one reduced superbase
/// of a lattice to another; tiny negatives from roundoff are clamped.
fn exchange(p: &[f64; 6], idx: usize) -> [f64; 6] {
    let (i, j) = CONORM_LABELS[idx];
    let others: Vec<usize> = (0..4).filter(|&m| m != i && m != j).collect();
    let (k, l) = (others[0], others[1]);
    let pij = p[idx];
    let mut q = [0.0f64; 6];
    q[label_index(i, j)] = -pij;
    q[label_index(i, k)] = pij + p[label_index(i, l)];
    q[label_index(i, l)] = pij + p[label_index(i, k)];
    q[label_index(j, k)] = pij + p[label_index(j, k)];
    q[label_index(j, l)] = pij + p[label_index(j, l)];
    q[label_index(k, l)] = p[label_index(k, l)] - pij;
    for v in &mut q {
        *v = v.max(0.0);
    }
    q
}

fn dot(gram: &GramMatrix, a: &Vector3<i64>, b: &Vector3<i64>) -> f64 {
    let af = Vector3::new(a.x as f64, a.y as f64, a.z as f64);
    let bf = Vector3::new(b.x as f64, b.y as f64, b.z as f64);
    gram.inner(&af, &bf)
}

/// Selling-reduces the lattice and returns its conorms.
///
/// Starts from the superbase `(-(e1+e2+e3), e1, e2, e3)` and repeatedly fixes
/// the most negative conorm: for a pair `(i, j)` with `v_i . v_j > 0`, the
/// vector `v_i` is negated and added to the two superbase vectors outside the
/// pair. Each step lowers the superbase norm sum by `2 v_i . v_j`, so the
/// iteration terminates; a cap of [`tol::SELLING_MAX_STEPS`] steps guards
/// against numerically stalled inputs.
pub fn selling_reduce(gram: &GramMatrix) -> Result<ConormSet> {
    let scale = (0..3).map(|i| gram.entry(i, i)).fold(0.0f64, f64::max);
    let step_tol = tol::CONORM_CLAMP * scale.max(1.0);

    let mut base: [Vector3<i64>; 4] = [
        Vector3::new(-1, -1, -1),
        Vector3::new(1, 0, 0),
        Vector3::new(0, 1, 0),
        Vector3::new(0, 0, 1),
    ];

    for _ in 0..tol::SELLING_MAX_STEPS {
        // Most negative conorm, ties broken by label order.
        let mut worst: Option<(usize, usize, f64)> = None;
        for &(i, j) in &CONORM_LABELS {
            let p = -dot(gram, &base[i], &base[j]);
            if p < -step_tol && worst.map_or(true, |(_, _, w)| p < w) {
                worst = Some((i, j, p));
            }
        }
        let Some((i, j, _)) = worst else {
            let mut p = [0.0; 6];
            for (k, &(a, b)) in CONORM_LABELS.iter().enumerate() {
                p[k] = -dot(gram, &base[a], &base[b]);
            }
            return ConormSet::new(p);
        };
        let vi = base[i];
        for k in 0..4 {
            if k != i && k != j {
                base[k] += vi;
            }
        }
        base[i] = -vi;
    }
    Err(Error::ReductionFailure(tol::SELLING_MAX_STEPS))
}

/// Rebuilds a Gram matrix from conorms.
///
/// With superbase vectors `v1, v2, v3` as the basis, `v_i . v_i` is the sum
/// of the three conorms labeled with `i` and `v_i . v_j = -p_ij`. Conorm sets
/// whose matrix fails positive definiteness (for example, a whole superbase
/// index with all three conorms zero) describe a collapsed lattice.
pub fn conorms_to_gram(conorms: &ConormSet) -> Result<GramMatrix> {
    let [p01, p02, p03, p12, p13, p23] = conorms.values();
    let entries = [
        [p01 + p12 + p13, -p12, -p13],
        [-p12, p02 + p12 + p23, -p23],
        [-p13, -p23, p03 + p13 + p23],
    ];
    GramMatrix::new(entries).map_err(|e| match e {
        Error::NotPositiveDefinite { order, minor } => Error::DegenerateLattice(format!(
            "conorm set describes a collapsed lattice (leading {order}x{order} minor {minor:e})"
        )),
        other => other,
    })
}

/// Whether the lattice is isometric to its dual after rescaling to
/// determinant one, decided by canonical conorm equality within `tol`.
pub fn is_isodual(gram: &GramMatrix, tol: f64) -> Result<bool> {
    let unit = gram.scaled_to_unit_determinant();
    let dual = unit.dual()?;
    let a = selling_reduce(&unit)?;
    let b = selling_reduce(&dual)?;
    Ok(a.approx_eq(&b, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn identity() -> GramMatrix {
        GramMatrix::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]).unwrap()
    }

    fn fcc() -> GramMatrix {
        GramMatrix::new([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]).unwrap()
    }

    /// Determinant-one mean-centered cuboidal lattice.
    fn mcc() -> GramMatrix {
        GramMatrix::new([
            [(1.0 + SQRT2) / 2.0, -0.5, -0.5],
            [-0.5, (1.0 + SQRT2) / 2.0, (1.0 - SQRT2) / 2.0],
            [-0.5, (1.0 - SQRT2) / 2.0, (1.0 + SQRT2) / 2.0],
        ])
        .unwrap()
    }

    fn assert_pairs_eq(actual: [[f64; 2]; 3], expected: [[f64; 2]; 3], tol: f64) {
        for i in 0..3 {
            for j in 0..2 {
                assert!(
                    (actual[i][j] - expected[i][j]).abs() <= tol,
                    "pair {i} slot {j}: {} vs {}",
                    actual[i][j],
                    expected[i][j]
                );
            }
        }
    }

    #[test]
    fn cubic_lattice_conorm_pairs() {
        // Superbase (-e1-e2-e3, e1, e2, e3) is already reduced; each
        // complementary pair is {1, 0}.
        let c = selling_reduce(&identity()).unwrap();
        assert_pairs_eq(
            c.canonical_pairs(),
            [[0.0, 1.0], [0.0, 1.0], [0.0, 1.0]],
            1e-12,
        );
    }

    #[test]
    fn mcc_conorms_frozen_values() {
        // Off-diagonals of the unit-determinant m.c.c. matrix are already
        // nonpositive, so its natural superbase is reduced: four conorms 1/2
        // and a complementary pair at (sqrt(2)-1)/2.
        let c = selling_reduce(&mcc()).unwrap();
        let q = (SQRT2 - 1.0) / 2.0;
        assert_pairs_eq(
            c.canonical_pairs(),
            [[q, q], [0.5, 0.5], [0.5, 0.5]],
            1e-12,
        );
    }

    #[test]
    fn reduction_output_is_nonnegative_for_obtuse_free_input() {
        // f.c.c. in the all-positive-off-diagonal basis needs actual steps.
        let c = selling_reduce(&fcc()).unwrap();
        for v in c.values() {
            assert!(v >= 0.0);
        }
        assert_pairs_eq(
            c.canonical_pairs(),
            [[0.0, 0.0], [1.0, 1.0], [1.0, 1.0]],
            1e-12,
        );
    }

    #[test]
    fn reduction_is_isometry_invariant() {
        // g and U^T g U for unimodular U describe the same lattice.
        let g = fcc();
        let u = [[1i64, 1, 0], [0, 1, 0], [1, 0, 1]]; // det = 1
        let mut h = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for a in 0..3 {
                    for b in 0..3 {
                        s += u[a][i] as f64 * g.entry(a, b) * u[b][j] as f64;
                    }
                }
                h[i][j] = s;
            }
        }
        let h = GramMatrix::new(h).unwrap();
        let ca = selling_reduce(&g).unwrap();
        let cb = selling_reduce(&h).unwrap();
        assert!(ca.approx_eq(&cb, 1e-9));
    }

    #[test]
    fn zero_conorm_exchange_identifies_equivalent_superbases() {
        // Two reduced superbases of Z^3 with different pair layouts:
        // the basis (e1, e2, e3 - e2) puts two unit conorms in one
        // complementary pair.  The raw pair forms differ, but the
        // orbit-minimized canonical forms agree.
        let standard = ConormSet::new([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        let sheared = ConormSet::new([1.0, 0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(pair_form(&standard.values()) != pair_form(&sheared.values()));
        assert!(standard.approx_eq(&sheared, 1e-12));
        assert_pairs_eq(
            standard.canonical_form(),
            [[0.0, 0.0], [0.0, 1.0], [1.0, 1.0]],
            1e-12,
        );
    }

    #[test]
    fn canonical_form_separates_inequivalent_degenerate_lattices() {
        // Rectangular lattices share the zero pattern but not the values.
        let a = ConormSet::new([2.0, 1.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        let b = ConormSet::new([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(a.canonical_distance(&b) > 0.5);
    }

    #[test]
    fn exchange_is_an_involution_at_a_zero_conorm() {
        let p = [1.0, 0.0, 1.0, 0.0, 0.0, 1.0];
        for idx in [1usize, 3, 4] {
            assert_eq!(exchange(&exchange(&p, idx), idx), p);
        }
    }

    #[test]
    fn conorms_to_gram_identity() {
        let c = ConormSet::new([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        let g = conorms_to_gram(&c).unwrap();
        assert_eq!(g.rows(), identity().rows());
    }

    #[test]
    fn conorms_to_gram_mcc_off_diagonals() {
        let q = (SQRT2 - 1.0) / 2.0;
        // p01=q, p02=0.5, p03=0.5, p12=0.5, p13=0.5, p23=q
        let c = ConormSet::new([q, 0.5, 0.5, 0.5, 0.5, q]).unwrap();
        let g = conorms_to_gram(&c).unwrap();
        let mut off: Vec<f64> = vec![g.entry(0, 1), g.entry(0, 2), g.entry(1, 2)];
        off.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // Off-diagonal multiset {-1/2, -1/2, (1-sqrt2)/2}.
        assert_relative_eq!(off[0], -0.5, epsilon = 1e-12);
        assert_relative_eq!(off[1], -0.5, epsilon = 1e-12);
        assert_relative_eq!(off[2], (1.0 - SQRT2) / 2.0, epsilon = 1e-12);
        // Same lattice as the reference matrix.
        assert!(selling_reduce(&g)
            .unwrap()
            .approx_eq(&selling_reduce(&mcc()).unwrap(), 1e-12));
    }

    #[test]
    fn conorms_to_gram_bcc_determinant() {
        // All six conorms equal t gives determinant 16 t^3 (expanded by
        // hand from the tridiagonal pattern); t = 16^{-1/3} normalizes to 1.
        let t = 16f64.powf(-1.0 / 3.0);
        let c = ConormSet::new([t; 6]).unwrap();
        let g = conorms_to_gram(&c).unwrap();
        assert_relative_eq!(g.determinant(), 16.0 * t * t * t, max_relative = 1e-12);
        assert_relative_eq!(g.determinant(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn conorm_round_trip() {
        let c = ConormSet::new([0.3, 0.7, 0.2, 0.4, 0.1, 0.6]).unwrap();
        let g = conorms_to_gram(&c).unwrap();
        let r = selling_reduce(&g).unwrap();
        assert!(r.approx_eq(&c, 1e-12));
    }

    #[test]
    fn degenerate_conorms_rejected() {
        // All conorms at index 1 vanish: the constructed matrix is singular.
        let c = ConormSet::new([0.0, 1.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            conorms_to_gram(&c),
            Err(Error::DegenerateLattice(_))
        ));
    }

    #[test]
    fn tiny_negative_conorms_clamp_to_zero() {
        let c = ConormSet::new([1.0, 1.0, 1.0, -1e-13, 0.0, 0.0]).unwrap();
        assert_eq!(c.get(1, 2), 0.0);
        assert!(ConormSet::new([1.0, 1.0, 1.0, -1e-6, 0.0, 0.0]).is_err());
    }

    #[test]
    fn cubic_and_mcc_are_isodual() {
        assert!(is_isodual(&identity(), 1e-9).unwrap());
        assert!(is_isodual(&mcc(), 1e-9).unwrap());
    }

    #[test]
    fn anisotropic_unit_cell_is_not_isodual() {
        // diag(2, 1/sqrt2, 1/sqrt2) has determinant 1 but its dual is
        // diag(1/2, sqrt2, sqrt2): the canonical conorm pairs differ.
        let g = GramMatrix::new([
            [2.0, 0.0, 0.0],
            [0.0, 1.0 / SQRT2, 0.0],
            [0.0, 0.0, 1.0 / SQRT2],
        ])
        .unwrap();
        assert_relative_eq!(g.determinant(), 1.0, epsilon = 1e-12);
        let d = g.dual().unwrap();
        assert_relative_eq!(d.entry(0, 0), 0.5, epsilon = 1e-12);
        assert_relative_eq!(d.entry(1, 1), SQRT2, epsilon = 1e-12);
        assert!(!is_isodual(&g, 1e-9).unwrap());
    }

    #[test]
    fn scaled_cubic_is_isodual() {
        // Isoduality is scale-invariant: 4*I rescales to I.
        let g = GramMatrix::new([[4.0, 0.0, 0.0], [0.0, 4.0, 0.0], [0.0, 0.0, 4.0]]).unwrap();
        assert!(is_isodual(&g, 1e-9).unwrap());
    }
}
