//! Formatting, file input, and serialization of result records.
//!
//! All numeric output uses a fixed 12-significant-digit scientific
//! format so that identical requests produce byte-identical artifacts.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::moment::MomentReport;
use crate::optimize::{CriticalPointSearch, DecomposableScan};
use crate::report::LatticeReport;

/// Render with exactly 12 significant digits.
pub fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Minimal JSON string escaping (quotes, backslashes, control bytes).
pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

#[derive(Deserialize)]
struct GramFile {
    gram: [[f64; 3]; 3],
}

/// Read a Gram matrix from a JSON file of the form
/// `{"gram": [[...], [...], [...]]}` and validate it.
pub fn read_gram_file(path: &Path) -> Result<GramMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let parsed: GramFile = serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("cannot parse {}: {e}", path.display())))?;
    GramMatrix::new(parsed.gram)
}

/// Write text to a file, mapping I/O failures to input errors.
pub fn write_text_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content)
        .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

/// CSV with header `alpha,beta,g`, one row per tuple, in input order.
pub fn sweep_csv(rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("alpha,beta,g\n");
    for (a, b, g) in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_sig12(*a),
            fmt_sig12(*b),
            fmt_sig12(*g)
        ));
    }
    out
}

/// JSON rendition of a sweep, mirroring the CSV rows.
pub fn sweep_json(rows: &[(f64, f64, f64)]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|(a, b, g)| {
            format!(
                "    {{\"alpha\": {}, \"beta\": {}, \"g\": {}}}",
                fmt_sig12(*a),
                fmt_sig12(*b),
                fmt_sig12(*g)
            )
        })
        .collect();
    format!("{{\n  \"rows\": [\n{}\n  ]\n}}\n", body.join(",\n"))
}

pub fn lattice_report_json(r: &LatticeReport) -> String {
    format!(
        "{{\n  \"determinant\": {},\n  \"g_value\": {},\n  \"packing_radius\": {},\n  \
         \"covering_radius\": {},\n  \"center_density\": {},\n  \"kissing_number\": {},\n  \
         \"isodual\": {}\n}}\n",
        fmt_sig12(r.determinant),
        fmt_sig12(r.g_value),
        fmt_sig12(r.packing_radius),
        fmt_sig12(r.covering_radius),
        fmt_sig12(r.center_density),
        r.kissing_number,
        r.isodual
    )
}

fn opt_f64(v: Option<f64>) -> String {
    v.map_or_else(|| "null".to_string(), fmt_sig12)
}

fn opt_u64(v: Option<u64>) -> String {
    v.map_or_else(|| "null".to_string(), |x| x.to_string())
}

pub fn moment_report_json(m: &MomentReport) -> String {
    format!(
        "{{\n  \"g_value\": {},\n  \"method\": \"{}\",\n  \"stderr\": {},\n  \
         \"samples\": {},\n  \"seed\": {}\n}}\n",
        fmt_sig12(m.g_value),
        m.method.as_str(),
        opt_f64(m.stderr),
        opt_u64(m.samples),
        opt_u64(m.seed)
    )
}

pub fn critical_points_json(search: &CriticalPointSearch) -> String {
    let points: Vec<String> = search
        .points
        .iter()
        .map(|p| {
            format!(
                "    {{\n      \"alpha\": {},\n      \"beta\": {},\n      \"g_value\": {},\n      \
                 \"grad_norm\": {},\n      \"eigenvalues\": [{}, {}],\n      \
                 \"hessian\": [[{}, {}], [{}, {}]],\n      \"classification\": \"{}\"\n    }}",
                fmt_sig12(p.alpha),
                fmt_sig12(p.beta),
                fmt_sig12(p.g_value),
                fmt_sig12(p.grad_norm),
                fmt_sig12(p.eigenvalues.0),
                fmt_sig12(p.eigenvalues.1),
                fmt_sig12(p.hessian[0][0]),
                fmt_sig12(p.hessian[0][1]),
                fmt_sig12(p.hessian[1][0]),
                fmt_sig12(p.hessian[1][1]),
                p.classification
            )
        })
        .collect();
    format!(
        "{{\n  \"starts\": {},\n  \"converged\": {},\n  \"points\": [\n{}\n  ]\n}}\n",
        search.starts,
        search.converged,
        points.join(",\n")
    )
}

pub fn decomposable_scan_json(scan: &DecomposableScan) -> String {
    let stationary: Vec<String> = scan
        .stationary
        .iter()
        .map(|p| {
            format!(
                "    {{\"alpha\": {}, \"beta\": {}, \"g_value\": {}, \"constraint\": \"{}\", \
                 \"classification\": \"{}\"}}",
                fmt_sig12(p.alpha),
                fmt_sig12(p.beta),
                fmt_sig12(p.g_value),
                json_escape(p.constraint),
                p.classification
            )
        })
        .collect();
    format!(
        "{{\n  \"grid_n\": {},\n  \"samples\": {},\n  \"alpha_range\": [{}, {}],\n  \
         \"min_alpha\": {},\n  \"min_beta\": {},\n  \"min_g\": {},\n  \"stationary\": [\n{}\n  ]\n}}\n",
        scan.grid_n,
        scan.samples,
        fmt_sig12(scan.alpha_range.0),
        fmt_sig12(scan.alpha_range.1),
        fmt_sig12(scan.min_alpha),
        fmt_sig12(scan.min_beta),
        fmt_sig12(scan.min_g),
        stationary.join(",\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::mcc_gram;
    use crate::report::lattice_report;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig12(1.0 / 12.0), "8.33333333333e-2");
        assert_eq!(
            fmt_sig12((17.0 + 4.0 * std::f64::consts::SQRT_2) / 288.0),
            "7.86696328107e-2"
        );
        assert_eq!(fmt_sig12(0.0), "0.00000000000e0");
        assert_eq!(fmt_sig12(-2.5), "-2.50000000000e0");
    }

    #[test]
    fn escape_handles_specials() {
        assert_eq!(json_escape("a\"b\\c\nd"), "a\\\"b\\\\c\\nd");
    }

    #[test]
    fn gram_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gram.json");
        std::fs::write(
            &path,
            "{\"gram\": [[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]}",
        )
        .unwrap();
        let g = read_gram_file(&path).unwrap();
        assert!((g.determinant() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn gram_file_error_paths() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("absent.json");
        assert!(matches!(
            read_gram_file(&missing).unwrap_err(),
            Error::Input(_)
        ));

        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, "{\"gram\": [[1, 2], [3]]}").unwrap();
        assert!(matches!(read_gram_file(&bad).unwrap_err(), Error::Input(_)));

        let asym = dir.path().join("asym.json");
        std::fs::write(
            &asym,
            "{\"gram\": [[1.0, 0.5, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]}",
        )
        .unwrap();
        assert!(matches!(
            read_gram_file(&asym).unwrap_err(),
            Error::NotSymmetric { .. }
        ));
    }

    #[test]
    fn csv_rows_are_exact_and_ordered() {
        let rows = vec![(0.25, 0.25, 1.0 / 12.0), (0.25, 0.5, 0.1)];
        let csv = sweep_csv(&rows);
        assert_eq!(
            csv,
            "alpha,beta,g\n2.50000000000e-1,2.50000000000e-1,8.33333333333e-2\n\
             2.50000000000e-1,5.00000000000e-1,1.00000000000e-1\n"
        );
    }

    #[test]
    fn lattice_report_json_parses_back() {
        let r = lattice_report(&mcc_gram()).unwrap();
        let json = lattice_report_json(&r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["kissing_number"], 8);
        assert_eq!(v["isodual"], true);
        let g = v["g_value"].as_f64().unwrap();
        assert!((g - r.g_value).abs() < 1e-12);
    }
}
