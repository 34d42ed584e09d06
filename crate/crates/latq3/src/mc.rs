//! Monte Carlo estimation of the normalized second moment.
//!
//! Draws points uniformly from the fundamental parallelepiped (uniform in
//! the unit cube of lattice coordinates), quantizes each to its nearest
//! lattice point, and averages the squared quantization error.  By
//! translation invariance of the error over fundamental domains this has
//! the same mean as sampling the Voronoi cell directly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closest::Quantizer;
use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::moment::{Method, MomentReport};

/// Minimum sample count accepted by [`second_moment_mc`].
pub const MIN_SAMPLES: u64 = 1000;

/// Estimate the normalized second moment by Monte Carlo quantization.
///
/// Sampling is counter-based: sample `i` uses an independent stream `i` of
/// a ChaCha8 generator seeded with `seed`, so results are reproducible for
/// a given `(samples, seed)` pair regardless of batching.
pub fn second_moment_mc(gram: &GramMatrix, samples: u64, seed: u64) -> Result<MomentReport> {
    if samples < MIN_SAMPLES {
        return Err(Error::Parameter(format!(
            "need at least {MIN_SAMPLES} samples, got {samples}"
        )));
    }
    let quantizer = Quantizer::new(gram)?;
    let base = ChaCha8Rng::seed_from_u64(seed);
    let det = gram.determinant();

    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for i in 0..samples {
        let mut rng = base.clone();
        rng.set_stream(i);
        let t = nalgebra::Vector3::new(
            rng.random::<f64>(),
            rng.random::<f64>(),
            rng.random::<f64>(),
        );
        let (_, err) = quantizer.nearest_with_error(&t);
        sum += err;
        sum_sq += err * err;
    }

    let n = samples as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    // E[err] = M2 / vol, so G = E[err] / (3 vol^{2/3}) = mean / (3 det^{1/3}).
    let scale = 3.0 * det.cbrt();
    Ok(MomentReport {
        g_value: mean / scale,
        method: Method::MonteCarlo,
        stderr: Some((variance / n).sqrt() / scale),
        samples: Some(samples),
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{cubic_gram, mcc_gram};

    #[test]
    fn rejects_tiny_sample_counts() {
        let err = second_moment_mc(&cubic_gram(), 999, 0).unwrap_err();
        assert!(matches!(err, Error::Parameter(_)));
    }

    #[test]
    fn cubic_estimate_brackets_one_twelfth() {
        let report = second_moment_mc(&cubic_gram(), 20_000, 7).unwrap();
        let stderr = report.stderr.unwrap();
        assert!(stderr > 0.0);
        assert!(
            (report.g_value - 1.0 / 12.0).abs() <= 5.0 * stderr,
            "estimate {} is more than 5 standard errors from 1/12 (stderr {stderr})",
            report.g_value
        );
    }

    #[test]
    fn fixed_seed_is_bit_reproducible() {
        let g = mcc_gram();
        let a = second_moment_mc(&g, 5_000, 42).unwrap();
        let b = second_moment_mc(&g, 5_000, 42).unwrap();
        assert_eq!(a.g_value.to_bits(), b.g_value.to_bits());
        assert_eq!(a.stderr.unwrap().to_bits(), b.stderr.unwrap().to_bits());
    }

    #[test]
    fn different_seeds_differ() {
        let g = cubic_gram();
        let a = second_moment_mc(&g, 5_000, 1).unwrap();
        let b = second_moment_mc(&g, 5_000, 2).unwrap();
        assert_ne!(a.g_value.to_bits(), b.g_value.to_bits());
    }

    #[test]
    fn report_carries_method_and_sampling_fields() {
        let report = second_moment_mc(&cubic_gram(), 1_000, 9).unwrap();
        assert_eq!(report.method, Method::MonteCarlo);
        assert_eq!(report.samples, Some(1_000));
        assert_eq!(report.seed, Some(9));
    }

    #[test]
    fn scale_invariance_with_power_of_two_factor() {
        // Scaling the Gram matrix by 4 scales every squared error by
        // exactly 4 in binary floating point, so the normalized estimate
        // is reproduced almost to the last bit.
        let g = mcc_gram();
        let scaled = GramMatrix::new({
            let mut rows = g.rows();
            for row in rows.iter_mut() {
                for x in row.iter_mut() {
                    *x *= 4.0;
                }
            }
            rows
        })
        .unwrap();
        let a = second_moment_mc(&g, 5_000, 5).unwrap();
        let b = second_moment_mc(&scaled, 5_000, 5).unwrap();
        assert!((a.g_value - b.g_value).abs() <= 1e-12 * a.g_value);
    }
}
