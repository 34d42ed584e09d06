//! One-shot verification suite.
//!
//! Recomputes every headline quantity of the toolkit by independent
//! routes — closed forms, conorm formula, exact Voronoi integration,
//! Monte Carlo, root isolation, multi-start optimization, and region
//! scans — and reports one pass/fail check per comparison.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::{
    g_decomposable, g_decomposable_raw, g_indecomposable, g_indecomposable_raw,
    grad_indecomposable_raw,
};
use crate::error::Result;
use crate::family::{
    bcc_gram, cubic_gram, decomposable_conorms, decomposable_gram, decomposable_params, fcc_gram,
    indecomposable_conorms, indecomposable_gram, indecomposable_gram_raw, mcc_gram, z_hex_gram,
    IndecomposableParams,
};
use crate::gram::GramMatrix;
use crate::io::{fmt_sig12, json_escape};
use crate::mc::second_moment_mc;
use crate::moment::g_from_conorms;
use crate::optimize::{
    boundary_edge_scan, decomposable_region_scan, find_critical_points, nine_candidate_check,
    sextic_roots, CandidateCheck, Classification, Region,
};
use crate::report::lattice_report;
use crate::selling::{conorms_to_gram, is_isodual, selling_reduce, ConormSet};
use crate::tol;
use crate::voronoi::{second_moment_exact, voronoi_cell};

/// Seed for every randomized property suite; fixed for reproducibility.
const SUITE_SEED: u64 = 20260823;
/// Monte Carlo configuration for the quantization-error estimate.
const MC_SAMPLES: u64 = 1_000_000;
const MC_SEED: u64 = 2026;

fn g_mcc() -> f64 {
    (17.0 + 4.0 * std::f64::consts::SQRT_2) / 288.0
}

fn g_bcc() -> f64 {
    19.0 / 384.0 * 2f64.powf(2.0 / 3.0)
}

fn g_fcc() -> f64 {
    2f64.cbrt() / 16.0
}

fn g_edge() -> f64 {
    5.0 * 3f64.sqrt() / 162.0 + 1.0 / 36.0
}

/// One named comparison with its pinned tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Pass when `|expected - computed| <= tolerance`.
    pub fn within(name: impl Into<String>, expected: f64, computed: f64, tolerance: f64) -> Check {
        Check {
            name: name.into(),
            expected,
            computed,
            tolerance,
            pass: (expected - computed).abs() <= tolerance,
        }
    }

    /// Pass when `computed > threshold` strictly.
    pub fn above(name: impl Into<String>, threshold: f64, computed: f64) -> Check {
        Check {
            name: name.into(),
            expected: threshold,
            computed,
            tolerance: 0.0,
            pass: computed > threshold,
        }
    }

    /// Pass when `computed < threshold` strictly.
    pub fn below(name: impl Into<String>, threshold: f64, computed: f64) -> Check {
        Check {
            name: name.into(),
            expected: threshold,
            computed,
            tolerance: 0.0,
            pass: computed < threshold,
        }
    }

    /// Boolean condition, rendered as 1 (true) vs 0/1 expected.
    pub fn flag(name: impl Into<String>, ok: bool) -> Check {
        Check {
            name: name.into(),
            expected: 1.0,
            computed: if ok { 1.0 } else { 0.0 },
            tolerance: 0.0,
            pass: ok,
        }
    }
}

/// Full verification outcome: checks, the nine-candidate table, and
/// explanatory notes.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub candidate_table: Vec<CandidateCheck>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn overall_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Aligned plain-text rendition of the whole report.
    pub fn render_text(&self) -> String {
        let mut out = String::from("verification report\n===================\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{:<4} {:<52} expected {:>18} computed {:>18} tol {:>8}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                fmt_sig12(c.expected),
                fmt_sig12(c.computed),
                format!("{:.1e}", c.tolerance),
            ));
        }
        out.push_str("\nnine-candidate gradient residuals\n");
        out.push_str(&format!(
            "{:<9} {:<9} {:>18} {:>9}\n",
            "alpha", "beta", "grad_norm", "vanishes"
        ));
        for row in &self.candidate_table {
            out.push_str(&format!(
                "{:<9} {:<9} {:>18} {:>9}\n",
                row.alpha_label,
                row.beta_label,
                fmt_sig12(row.grad_norm),
                if row.vanishes { "yes" } else { "no" },
            ));
        }
        if !self.notes.is_empty() {
            out.push_str("\nnotes\n");
            for n in &self.notes {
                out.push_str(&format!("  - {n}\n"));
            }
        }
        out.push_str(&format!(
            "\noverall: {}\n",
            if self.overall_pass() { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let checks: Vec<String> = self
            .checks
            .iter()
            .map(|c| {
                format!(
                    "    {{\"name\": \"{}\", \"expected\": {}, \"computed\": {}, \
                     \"tolerance\": {}, \"pass\": {}}}",
                    json_escape(&c.name),
                    fmt_sig12(c.expected),
                    fmt_sig12(c.computed),
                    fmt_sig12(c.tolerance),
                    c.pass
                )
            })
            .collect();
        let table: Vec<String> = self
            .candidate_table
            .iter()
            .map(|r| {
                format!(
                    "    {{\"alpha_label\": \"{}\", \"beta_label\": \"{}\", \"alpha\": {}, \
                     \"beta\": {}, \"grad_norm\": {}, \"vanishes\": {}}}",
                    json_escape(r.alpha_label),
                    json_escape(r.beta_label),
                    fmt_sig12(r.alpha),
                    fmt_sig12(r.beta),
                    fmt_sig12(r.grad_norm),
                    r.vanishes
                )
            })
            .collect();
        let notes: Vec<String> = self
            .notes
            .iter()
            .map(|n| format!("    \"{}\"", json_escape(n)))
            .collect();
        format!(
            "{{\n  \"overall_pass\": {},\n  \"checks\": [\n{}\n  ],\n  \
             \"candidate_table\": [\n{}\n  ],\n  \"notes\": [\n{}\n  ]\n}}\n",
            self.overall_pass(),
            checks.join(",\n"),
            table.join(",\n"),
            notes.join(",\n")
        )
    }
}

/// Run the complete verification suite.  Construction of every input is
/// internal; no files are read.
pub fn run_verification() -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();

    mcc_value_checks(&mut checks)?;
    comparator_checks(&mut checks)?;
    critical_point_checks(&mut checks)?;
    sextic_checks(&mut checks)?;
    let candidate_table = candidate_checks(&mut checks)?;
    edge_checks(&mut checks)?;
    decomposable_checks(&mut checks, &mut notes)?;
    mcc_constant_checks(&mut checks)?;
    property_checks(&mut checks)?;
    discrepancy_checks(&mut checks, &mut notes)?;

    Ok(VerificationReport {
        checks,
        candidate_table,
        notes,
    })
}

fn g_by_voronoi(gram: &GramMatrix) -> Result<f64> {
    Ok(second_moment_exact(&voronoi_cell(gram)?, gram.determinant())?.g_value)
}

fn mcc_value_checks(checks: &mut Vec<Check>) -> Result<()> {
    let expected = g_mcc();
    checks.push(Check::within(
        "mcc-g-closed-form",
        expected,
        g_indecomposable(&IndecomposableParams::mcc()),
        1e-12,
    ));

    let gram = mcc_gram();
    let conorms = selling_reduce(&gram)?;
    checks.push(Check::within(
        "mcc-g-conorm-formula",
        expected,
        g_from_conorms(&conorms, gram.determinant())?.g_value,
        1e-10,
    ));
    checks.push(Check::within(
        "mcc-g-voronoi-integration",
        expected,
        g_by_voronoi(&gram)?,
        1e-7,
    ));

    let mc = second_moment_mc(&gram, MC_SAMPLES, MC_SEED)?;
    checks.push(Check::within(
        "mcc-g-monte-carlo-4se",
        expected,
        mc.g_value,
        4.0 * mc.stderr.unwrap_or(0.0),
    ));
    Ok(())
}

fn comparator_checks(checks: &mut Vec<Check>) -> Result<()> {
    let bcc = g_by_voronoi(&bcc_gram())?;
    let fcc = g_by_voronoi(&fcc_gram())?;
    let mcc = g_by_voronoi(&mcc_gram())?;
    checks.push(Check::within("bcc-g-voronoi-integration", g_bcc(), bcc, 1e-7));
    checks.push(Check::within("fcc-g-voronoi-integration", g_fcc(), fcc, 1e-7));
    checks.push(Check::flag(
        "g-ordering-bcc-below-mcc-below-fcc",
        bcc < mcc && mcc < fcc,
    ));
    Ok(())
}

fn critical_point_checks(checks: &mut Vec<Check>) -> Result<()> {
    let search = find_critical_points(&Region::default_search(), 40, 1e-10)?;
    checks.push(Check::within(
        "critical-point-count",
        1.0,
        search.points.len() as f64,
        0.0,
    ));
    let (alpha, beta, eig_min, is_min) = search
        .points
        .first()
        .map(|p| {
            (
                p.alpha,
                p.beta,
                p.eigenvalues.0,
                p.classification == Classification::LocalMin,
            )
        })
        .unwrap_or((f64::NAN, f64::NAN, f64::NAN, false));
    let target = 2.0 - std::f64::consts::SQRT_2;
    checks.push(Check::within("critical-point-alpha", target, alpha, 1e-8));
    checks.push(Check::within("critical-point-beta", target, beta, 1e-8));
    checks.push(Check::above(
        "critical-point-hessian-min-eigenvalue",
        tol::EIGENVALUE_CLASSIFY_TOL,
        eig_min,
    ));
    checks.push(Check::flag("critical-point-classified-local-min", is_min));
    Ok(())
}

fn sextic_checks(checks: &mut Vec<Check>) -> Result<()> {
    let set = sextic_roots(0.0, 1.0)?;
    checks.push(Check::within(
        "sextic-root-count-unit-interval",
        1.0,
        set.roots_in_interval.len() as f64,
        0.0,
    ));
    // The root is 0.98945295618784442... (independent high-precision
    // bisection); its first four decimals are 9894 by truncation, so the
    // check uses a one-unit-in-the-fourth-decimal window around the
    // truncated value.
    checks.push(Check::within(
        "sextic-root-value",
        0.9894,
        set.roots_in_interval.first().copied().unwrap_or(f64::NAN),
        1e-4,
    ));
    checks.push(Check::below(
        "sextic-root-residual",
        1e-10,
        set.residuals.first().copied().unwrap_or(f64::NAN),
    ));
    Ok(())
}

fn candidate_checks(checks: &mut Vec<Check>) -> Result<Vec<CandidateCheck>> {
    let table = nine_candidate_check()?;
    let mut symmetric_vanishes = false;
    let mut others_clear = true;
    for row in &table {
        let symmetric = row.alpha_label == "2-sqrt2" && row.beta_label == "2-sqrt2";
        if symmetric {
            symmetric_vanishes = row.grad_norm < 1e-8;
        } else {
            others_clear &= row.grad_norm > 1e-4;
        }
    }
    checks.push(Check::flag(
        "nine-candidates-vanish-only-at-2-sqrt2",
        symmetric_vanishes && others_clear,
    ));
    Ok(table)
}

fn edge_checks(checks: &mut Vec<Check>) -> Result<()> {
    let scan = boundary_edge_scan()?;
    checks.push(Check::within(
        "edge-restriction-root-count",
        1.0,
        scan.edge_roots.len() as f64,
        0.0,
    ));
    checks.push(Check::within(
        "edge-stationary-alpha",
        3f64.sqrt() - 1.0,
        scan.alpha_star,
        1e-8,
    ));
    checks.push(Check::within(
        "edge-g-closed-form",
        g_edge(),
        scan.g_value,
        1e-8,
    ));
    checks.push(Check::within(
        "edge-g-voronoi-integration",
        g_edge(),
        g_by_voronoi(&z_hex_gram())?,
        1e-8,
    ));
    checks.push(Check::within(
        "edge-full-gradient-norm",
        0.0,
        scan.grad[0].hypot(scan.grad[1]),
        1e-8,
    ));
    checks.push(Check::below(
        "edge-interior-descent-delta",
        -1e-9,
        scan.descent_delta,
    ));

    // The edge point is the same lattice as the explicit block matrix
    // diag(1) + hexagonal plane: compare canonical conorms.
    let edge_gram = indecomposable_gram_raw(scan.alpha_star, 1.0)?;
    let dist = selling_reduce(&edge_gram)?
        .canonical_distance(&selling_reduce(&z_hex_gram())?);
    checks.push(Check::within(
        "edge-lattice-conorms-match-z-hex",
        0.0,
        dist,
        1e-8,
    ));
    Ok(())
}

fn decomposable_checks(checks: &mut Vec<Check>, notes: &mut Vec<String>) -> Result<()> {
    checks.push(Check::within(
        "decomposable-g-at-1-1",
        1.0 / 12.0,
        g_decomposable_raw(1.0, 1.0),
        1e-12,
    ));
    checks.push(Check::within(
        "decomposable-g-at-1-2",
        1.0 / 12.0,
        g_decomposable_raw(1.0, 2.0),
        1e-12,
    ));

    let p12 = decomposable_params(1.0, 2.0)?;
    let dist_cubic = selling_reduce(&decomposable_gram(&p12))?
        .canonical_distance(&selling_reduce(&cubic_gram())?);
    checks.push(Check::within(
        "decomposable-1-2-conorms-match-cubic",
        0.0,
        dist_cubic,
        1e-9,
    ));

    let scan = decomposable_region_scan(200)?;
    checks.push(Check::within(
        "decomposable-region-min-g",
        0.0812361,
        scan.min_g,
        1e-4,
    ));
    checks.push(Check::above(
        "decomposable-region-min-above-mcc",
        g_mcc(),
        scan.min_g,
    ));

    // The region minimum sits at the corner alpha = beta = 2/sqrt(3),
    // where G is stationary along the boundary; grid comparisons go
    // flat once G differences fall under machine epsilon, which caps
    // the scan's positional resolution near 1e-7.
    let corner = 2.0 / 3f64.sqrt();
    checks.push(Check::within(
        "decomposable-min-alpha-at-corner",
        corner,
        scan.min_alpha,
        1e-6,
    ));
    checks.push(Check::within(
        "decomposable-min-beta-at-corner",
        corner,
        scan.min_beta,
        1e-6,
    ));

    // Machine-precision identification of the same point: the scan's
    // Newton-refined stationary point on the canonical boundary reduces
    // to the conorms of the explicit block lattice.
    let dist_zh = match scan
        .stationary
        .iter()
        .find(|p| p.constraint == crate::optimize::DECOMPOSABLE_CANONICAL)
    {
        Some(p) => {
            let pmin = decomposable_params(p.alpha, p.beta)?;
            selling_reduce(&decomposable_gram(&pmin))?
                .canonical_distance(&selling_reduce(&z_hex_gram())?)
        }
        None => f64::NAN,
    };
    checks.push(Check::within(
        "decomposable-min-conorms-match-z-hex",
        0.0,
        dist_zh,
        1e-8,
    ));

    let three_boundary = scan.stationary.len() == 3
        && scan
            .stationary
            .iter()
            .all(|p| p.classification == Classification::BoundaryConstrained);
    let has_1_1 = scan
        .stationary
        .iter()
        .any(|p| (p.alpha - 1.0).abs() < 1e-8 && (p.beta - 1.0).abs() < 1e-8);
    let has_1_2 = scan
        .stationary
        .iter()
        .any(|p| (p.alpha - 1.0).abs() < 1e-8 && (p.beta - 2.0).abs() < 1e-8);
    checks.push(Check::flag(
        "decomposable-stationary-all-boundary-constrained",
        three_boundary && has_1_1 && has_1_2,
    ));

    notes.push(format!(
        "Feasibility (alpha*beta >= 1 with 2h <= alpha <= beta) forces alpha <= 2/sqrt(3) \
         = 1.1547..., so any larger alpha truncation scans the same region; the scan used \
         alpha in [{}, {}] because G >= (1 + alpha + 1/alpha)/36 > 0.3 below that range.",
        scan.alpha_range.0, scan.alpha_range.1
    ));
    Ok(())
}

fn mcc_constant_checks(checks: &mut Vec<Check>) -> Result<()> {
    let r = lattice_report(&mcc_gram())?;
    let packing = 0.5 * (0.5 + 1.0 / std::f64::consts::SQRT_2).sqrt();
    checks.push(Check::within("mcc-determinant", 1.0, r.determinant, 1e-7));
    checks.push(Check::within(
        "mcc-packing-radius",
        packing,
        r.packing_radius,
        1e-7,
    ));
    checks.push(Check::within(
        "mcc-covering-radius",
        3f64.sqrt() * 2f64.powf(-1.25),
        r.covering_radius,
        1e-7,
    ));
    checks.push(Check::within(
        "mcc-center-density",
        packing.powi(3),
        r.center_density,
        1e-7,
    ));
    checks.push(Check::within(
        "mcc-kissing-number",
        8.0,
        r.kissing_number as f64,
        0.0,
    ));
    checks.push(Check::flag("mcc-isodual", r.isodual));
    Ok(())
}

/// Multiply out `U^T g U` for an integer unimodular matrix `U`.
fn transform_gram(gram: &GramMatrix, u: &[[i64; 3]; 3]) -> Result<GramMatrix> {
    let g = gram.rows();
    let mut gu = [[0.0f64; 3]; 3];
    for (i, row) in g.iter().enumerate() {
        for j in 0..3 {
            gu[i][j] = (0..3).map(|k| row[k] * u[k][j] as f64).sum();
        }
    }
    let mut out = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| u[k][i] as f64 * gu[k][j]).sum();
        }
    }
    GramMatrix::new(out)
}

/// Product of a few random elementary row operations; determinant one.
fn random_unimodular(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    let mut u = [[0i64; 3]; 3];
    for (i, row) in u.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..4 {
        let i = rng.random_range(0..3usize);
        let mut j = rng.random_range(0..3usize);
        if j == i {
            j = (j + 1) % 3;
        }
        let s: i64 = if rng.random::<bool>() { 1 } else { -1 };
        for k in 0..3 {
            u[i][k] += s * u[j][k];
        }
    }
    u
}

fn property_checks(checks: &mut Vec<Check>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);

    // Closed form against the conorm formula on random family members.
    let mut max_rel = 0.0f64;
    for _ in 0..100 {
        let p = IndecomposableParams::new(
            rng.random_range(0.05..0.95),
            rng.random_range(0.05..0.95),
        )?;
        let direct = g_indecomposable(&p);
        let via = g_from_conorms(
            &indecomposable_conorms(&p),
            indecomposable_gram(&p).determinant(),
        )?
        .g_value;
        max_rel = max_rel.max(((direct - via) / direct).abs());
    }
    checks.push(Check::within(
        "property-closed-form-vs-conorm-100pts-rel",
        0.0,
        max_rel,
        1e-10,
    ));

    // Analytic gradient against central differences.
    let mut max_rel = 0.0f64;
    let h = 1e-6;
    for _ in 0..200 {
        let a = rng.random_range(0.05..0.95);
        let b = rng.random_range(0.05..0.95);
        let (ga, gb) = grad_indecomposable_raw(a, b);
        let fa = (g_indecomposable_raw(a + h, b) - g_indecomposable_raw(a - h, b)) / (2.0 * h);
        let fb = (g_indecomposable_raw(a, b + h) - g_indecomposable_raw(a, b - h)) / (2.0 * h);
        let err = (ga - fa).hypot(gb - fb);
        let scale = ga.hypot(gb).max(1e-8);
        max_rel = max_rel.max(err / scale);
    }
    checks.push(Check::within(
        "property-gradient-vs-finite-difference-200pts",
        0.0,
        max_rel,
        1e-6,
    ));

    // Selling round trip and unimodular invariance.
    let mut max_round = 0.0f64;
    let mut max_unimod = 0.0f64;
    for _ in 0..1000 {
        let conorms = ConormSet::new([
            rng.random_range(0.05..2.0),
            rng.random_range(0.05..2.0),
            rng.random_range(0.05..2.0),
            rng.random_range(0.05..2.0),
            rng.random_range(0.05..2.0),
            rng.random_range(0.05..2.0),
        ])?;
        let gram = conorms_to_gram(&conorms)?;
        let back = selling_reduce(&gram)?;
        max_round = max_round.max(conorms.canonical_distance(&back));

        let transformed = transform_gram(&gram, &random_unimodular(&mut rng))?;
        let back2 = selling_reduce(&transformed)?;
        max_unimod = max_unimod.max(conorms.canonical_distance(&back2));
    }
    checks.push(Check::within(
        "property-selling-round-trip-1000",
        0.0,
        max_round,
        1e-9,
    ));
    checks.push(Check::within(
        "property-selling-unimodular-invariance-1000",
        0.0,
        max_unimod,
        1e-9,
    ));

    // Isoduality across the family.
    let mut all_isodual = true;
    for _ in 0..100 {
        let p = IndecomposableParams::new(
            rng.random_range(0.05..0.95),
            rng.random_range(0.05..0.95),
        )?;
        all_isodual &= is_isodual(&indecomposable_gram(&p), tol::CONORM_EQ_TOL)?;
    }
    checks.push(Check::flag("property-family-isodual-100", all_isodual));

    // Voronoi cell volume equals sqrt(det).
    let mut grams = vec![cubic_gram(), fcc_gram(), bcc_gram(), mcc_gram(), z_hex_gram()];
    for _ in 0..35 {
        let p = IndecomposableParams::new(
            rng.random_range(0.05..0.95),
            rng.random_range(0.05..0.95),
        )?;
        grams.push(indecomposable_gram(&p));
    }
    let mut max_rel = 0.0f64;
    for g in &grams {
        let cell = voronoi_cell(g)?;
        let expected = g.determinant().sqrt();
        max_rel = max_rel.max(((cell.volume - expected) / expected).abs());
    }
    checks.push(Check::within(
        "property-voronoi-volume-vs-sqrt-det",
        0.0,
        max_rel,
        tol::CELL_VOLUME_RTOL,
    ));

    // Monte Carlo determinism under a fixed seed.
    let m1 = second_moment_mc(&mcc_gram(), 2000, 123)?;
    let m2 = second_moment_mc(&mcc_gram(), 2000, 123)?;
    checks.push(Check::flag(
        "property-mc-determinism",
        m1.g_value.to_bits() == m2.g_value.to_bits(),
    ));
    Ok(())
}

/// Decomposable closed form with the cubic term carrying the opposite
/// sign.  Retained only to document that it disagrees with the
/// conorm-formula evaluation (7/36 instead of 1/12 at `(1, 1)`).
fn sign_variant_decomposable(alpha: f64, beta: f64) -> f64 {
    let t = alpha * beta;
    (t * (alpha + beta) + 2.0 * (t - 1.0).max(0.0).powf(1.5) + 2.0 * alpha + 2.0 * beta + 1.0)
        / 36.0
}

fn discrepancy_checks(checks: &mut Vec<Check>, notes: &mut Vec<String>) -> Result<()> {
    checks.push(Check::within(
        "variant-decomposable-form-at-1-1-gives-7-36",
        7.0 / 36.0,
        sign_variant_decomposable(1.0, 1.0),
        1e-12,
    ));
    checks.push(Check::within(
        "implemented-decomposable-form-at-1-1-gives-1-12",
        1.0 / 12.0,
        g_decomposable_raw(1.0, 1.0),
        1e-12,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ 0x9e37_79b9);
    let alpha_max = 2.0 / 3f64.sqrt();
    let mut max_abs = 0.0f64;
    let mut count = 0usize;
    while count < 200 {
        let a = rng.random_range(0.3..alpha_max);
        let b_lo = (1.0 / a).max(a);
        let b_hi = 1.0 / a + a / 4.0;
        if b_hi <= b_lo {
            continue;
        }
        let b = rng.random_range(b_lo..b_hi);
        let p = decomposable_params(a, b)?;
        let closed = g_decomposable(&p);
        let via = g_from_conorms(
            &decomposable_conorms(&p),
            decomposable_gram(&p).determinant(),
        )?
        .g_value;
        max_abs = max_abs.max((closed - via).abs());
        count += 1;
    }
    checks.push(Check::within(
        "implemented-decomposable-form-vs-conorm-200pts",
        0.0,
        max_abs,
        1e-12,
    ));

    notes.push(
        "The decomposable closed form is implemented as 36G = 1 + (alpha+beta)(2 - alpha*beta) \
         + 2(alpha*beta - 1)^{3/2}. The variant whose cubic term alpha*beta*(alpha+beta) enters \
         with the opposite sign evaluates to 7/36 at (1, 1); the implemented form evaluates to \
         1/12 there and matches the conorm formula to 1e-12 on 200 random feasible points."
            .to_string(),
    );
    notes.push(
        "At (1, 1) the gradient of the decomposable closed form is (-1/36, -1/36); the point \
         is stationary only along the boundary curve alpha*beta = 1 and is therefore reported \
         as boundary-constrained."
            .to_string(),
    );
    Ok(())
}
