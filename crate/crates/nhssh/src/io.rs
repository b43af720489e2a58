//! File formats: fixed-precision CSV, JSON records and run manifests.
//!
//! Every float is written with 17 significant digits so CSV output
//! round-trips `f64` exactly and repeated runs with the same manifest are
//! byte-identical. JSON goes through `serde_json` with struct-ordered
//! fields and sorted maps for the same reason.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;

use nhssh_core::model::{ModelKind, ModelParams};

use crate::skin::{NhseVerdict, Side, SkinThresholds};
use crate::spectral::{GapClass, GapKind, RealityReport, Spectrum};
use crate::sweep::{Axis, NuLineSweep, PhaseGrid, RealitySweep, SpotCheck};

/// One float, 17 significant digits.
pub fn fmt_f(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// Inclusive linear grid with both endpoints.
pub fn linspace(min: f64, max: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![min];
    }
    (0..n).map(|i| min + (max - min) * i as f64 / (n - 1) as f64).collect()
}

/// `<base><suffix>` path helper; `--out` arguments are extension-less bases.
pub fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn write_text(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(contents.as_bytes())
}

// ── CSV emitters ────────────────────────────────────────────────────

pub fn band_csv(rows: &[(f64, Complex64, Complex64)]) -> String {
    let mut out = String::from("k,re_E_plus,im_E_plus,re_E_minus,im_E_minus\n");
    for (k, ep, em) in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_f(*k),
            fmt_f(ep.re),
            fmt_f(ep.im),
            fmt_f(em.re),
            fmt_f(em.im)
        ));
    }
    out
}

pub fn eigenvalue_csv(eigenvalues: &[Complex64]) -> String {
    let mut out = String::from("index,re_E,im_E\n");
    for (i, e) in eigenvalues.iter().enumerate() {
        out.push_str(&format!("{i},{},{}\n", fmt_f(e.re), fmt_f(e.im)));
    }
    out
}

/// OBC spectra carry the combined edge weight per state.
pub fn eigenvalue_csv_with_edge_weight(
    eigenvalues: &[Complex64],
    edge_weights: &[f64],
) -> String {
    let mut out = String::from("index,re_E,im_E,edge_weight\n");
    for (i, (e, w)) in eigenvalues.iter().zip(edge_weights).enumerate() {
        out.push_str(&format!("{i},{},{},{}\n", fmt_f(e.re), fmt_f(e.im), fmt_f(*w)));
    }
    out
}

pub fn density_csv(site_density: &[f64]) -> String {
    let mut out = String::from("site,density\n");
    for (site, d) in site_density.iter().enumerate() {
        out.push_str(&format!("{site},{}\n", fmt_f(*d)));
    }
    out
}

pub fn grid_csv(grid: &PhaseGrid) -> String {
    let mut out = format!("{},{},{}\n", grid.x_axis.name, grid.y_axis.name, grid.observable.name());
    for iy in 0..grid.y_axis.n {
        let y = grid.y_axis.value(iy);
        for ix in 0..grid.x_axis.n {
            let x = grid.x_axis.value(ix);
            out.push_str(&format!("{},{},{}\n", fmt_f(x), fmt_f(y), fmt_f(grid.value(ix, iy))));
        }
    }
    out
}

pub fn curve_csv(x_name: &str, y_name: &str, points: &[(f64, f64)]) -> String {
    let mut out = format!("{x_name},{y_name}\n");
    for (x, y) in points {
        out.push_str(&format!("{},{}\n", fmt_f(*x), fmt_f(*y)));
    }
    out
}

pub fn reality_csv(sweep: &RealitySweep) -> String {
    let mut out = String::from("u,n_real,n_imaginary,n_complex\n");
    for (u, report) in &sweep.points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f(*u),
            report.n_real,
            report.n_imaginary,
            report.n_complex
        ));
    }
    out
}

// ── JSON records ────────────────────────────────────────────────────

#[derive(Clone, Debug, Serialize)]
pub struct ParamsRecord {
    pub kind: &'static str,
    pub t1: f64,
    pub t2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub u: f64,
}

impl From<&ModelParams> for ParamsRecord {
    fn from(p: &ModelParams) -> Self {
        ParamsRecord {
            kind: match p.kind {
                ModelKind::NonReciprocal => "non-reciprocal",
                ModelKind::ImaginaryPotential => "imaginary-potential",
            },
            t1: p.t1,
            t2: p.t2,
            delta1: p.delta1,
            delta2: p.delta2,
            u: p.u,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxisRecord {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl From<&Axis> for AxisRecord {
    fn from(a: &Axis) -> Self {
        AxisRecord { name: a.name.clone(), min: a.min, max: a.max, n: a.n }
    }
}

/// Topological invariant result record.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantRecord {
    pub params: ParamsRecord,
    pub invariant_name: String,
    pub value: f64,
    pub n_k: usize,
    pub flags: Vec<String>,
    pub detail: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GapRecord {
    pub kind: &'static str,
    pub margin: f64,
}

impl From<&GapClass> for GapRecord {
    fn from(g: &GapClass) -> Self {
        GapRecord {
            kind: match g.kind {
                GapKind::PointGap => "point",
                GapKind::LineGapRe => "line_re",
                GapKind::LineGapIm => "line_im",
                GapKind::Gapless => "gapless",
            },
            margin: g.margin,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealityRecord {
    pub n_real: usize,
    pub n_imaginary: usize,
    pub n_complex: usize,
    pub tol: f64,
}

impl From<&RealityReport> for RealityRecord {
    fn from(r: &RealityReport) -> Self {
        RealityRecord {
            n_real: r.n_real,
            n_imaginary: r.n_imaginary,
            n_complex: r.n_complex,
            tol: r.tol,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRecord {
    pub params: ParamsRecord,
    pub boundary: &'static str,
    pub size: usize,
    pub residual: f64,
    pub near_defective: Vec<usize>,
    pub zero_modes: Vec<usize>,
    pub reality: RealityRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<GapRecord>,
    pub eigenvalues: Vec<ComplexRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_vectors: Option<Vec<Vec<ComplexRecord>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_vectors: Option<Vec<Vec<ComplexRecord>>>,
}

pub fn complex_list(values: &[Complex64]) -> Vec<ComplexRecord> {
    values.iter().map(|z| ComplexRecord { re: z.re, im: z.im }).collect()
}

pub fn vector_columns(spectrum: &Spectrum, left: bool) -> Vec<Vec<ComplexRecord>> {
    let m = if left { &spectrum.left_vectors } else { &spectrum.right_vectors };
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| ComplexRecord { re: z.re, im: z.im }).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub params: ParamsRecord,
    pub n_cells: usize,
    pub edge_fraction: f64,
    pub state_weight_threshold: f64,
    pub population_threshold: f64,
    pub present: bool,
    pub side: &'static str,
    pub localized_fraction: f64,
}

pub fn verdict_record(
    params: &ModelParams,
    n_cells: usize,
    thresholds: &SkinThresholds,
    verdict: &NhseVerdict,
) -> VerdictRecord {
    VerdictRecord {
        params: params.into(),
        n_cells,
        edge_fraction: thresholds.edge_fraction,
        state_weight_threshold: thresholds.state_weight,
        population_threshold: thresholds.population,
        present: verdict.present,
        side: match verdict.side {
            Side::Left => "left",
            Side::Right => "right",
            Side::None => "none",
        },
        localized_fraction: verdict.localized_fraction,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpotCheckRecord {
    pub ix: usize,
    pub iy: usize,
    pub delta1: f64,
    pub delta2: f64,
    pub oracle: f64,
    pub numeric: Option<f64>,
}

impl From<&SpotCheck> for SpotCheckRecord {
    fn from(s: &SpotCheck) -> Self {
        SpotCheckRecord {
            ix: s.ix,
            iy: s.iy,
            delta1: s.delta1,
            delta2: s.delta2,
            oracle: s.oracle,
            numeric: s.numeric,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GridHeader {
    pub observable: &'static str,
    pub x_axis: AxisRecord,
    pub y_axis: AxisRecord,
    pub settings: BTreeMap<String, serde_json::Value>,
    pub seed: u64,
    pub indeterminate_cells: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub spot_checks: Vec<SpotCheckRecord>,
    pub spot_check_mismatches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveHeader {
    pub observable: String,
    pub settings: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub jumps: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_low: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_high: Option<f64>,
}

pub fn nu_line_header(
    settings: BTreeMap<String, serde_json::Value>,
    sweep: &NuLineSweep,
) -> CurveHeader {
    CurveHeader {
        observable: "nu".to_string(),
        settings,
        jumps: sweep.jumps.clone(),
        u_low: None,
        u_high: None,
    }
}

// ── Run manifest ────────────────────────────────────────────────────

/// Written alongside every output as `<out>.manifest.json`. Re-running
/// with an identical manifest reproduces byte-identical CSV/JSON.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsRecord>,
    pub settings: BTreeMap<String, serde_json::Value>,
    pub seed: u64,
    pub tool_version: String,
    pub output_paths: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            params: None,
            settings: BTreeMap::new(),
            seed: 0,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            output_paths: Vec::new(),
        }
    }

    pub fn with_params(mut self, params: &ModelParams) -> Self {
        self.params = Some(params.into());
        self
    }

    pub fn set<V: Into<serde_json::Value>>(mut self, key: &str, value: V) -> Self {
        self.settings.insert(key.to_string(), value.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn record_output(&mut self, path: &Path) {
        self.output_paths.push(path.display().to_string());
    }

    pub fn write(&self, out_base: &Path) -> std::io::Result<PathBuf> {
        let path = with_suffix(out_base, ".manifest.json");
        write_text(&path, &to_json(self))?;
        Ok(path)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON serialization is infallible here");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_round_trips() {
        for x in [0.0, 1.0, -3.5, 1.0 / 3.0, 2.0f64.sqrt() * 1e-7, 6.02e23] {
            let s = fmt_f(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s} did not round-trip");
        }
        assert_eq!(fmt_f(f64::NAN), "nan");
    }

    #[test]
    fn linspace_endpoints() {
        let v = linspace(-2.0, 2.0, 5);
        assert_eq!(v, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        assert_eq!(linspace(1.5, 9.0, 1), vec![1.5]);
    }

    #[test]
    fn csv_headers() {
        let rows = vec![(0.0, Complex64::new(3.0, 0.0), Complex64::new(-3.0, 0.0))];
        let csv = band_csv(&rows);
        assert!(csv.starts_with("k,re_E_plus,im_E_plus,re_E_minus,im_E_minus\n"));
        assert_eq!(csv.lines().count(), 2);

        let csv = eigenvalue_csv(&[Complex64::new(1.0, 2.0)]);
        assert!(csv.starts_with("index,re_E,im_E\n"));
        assert!(csv.contains("0,1.0000000000000000e0,2.0000000000000000e0"));
    }

    #[test]
    fn manifest_is_deterministic() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let build = || {
            RunManifest::new("band")
                .with_params(&p)
                .set("nk", 401)
                .set("plot", true)
                .with_seed(7)
        };
        assert_eq!(to_json(&build()), to_json(&build()));
    }
}
