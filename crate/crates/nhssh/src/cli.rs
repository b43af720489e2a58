//! Command-line surface: every computation with reproducible file outputs.
//!
//! Each command writes its data files next to the extension-less `--out`
//! base plus a `<out>.manifest.json` describing the run; re-running with an
//! identical manifest reproduces byte-identical CSV/JSON. Exit codes:
//! 0 success, 2 invalid arguments, 3 numerical failure, 4 I/O failure.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use nhssh_core::model::{ModelError, ModelParams};
use nhssh_core::topology::{self, TopologyError};
use nhssh_core::bz_grid;

use crate::io::{self, RunManifest};
use crate::plot::{self, Series};
use crate::skin::{localization_profile, nhse_verdict_from_profile, SkinError, SkinThresholds};
use crate::spectral::{
    classify_reality, gap_classify, gap_tolerance, obc_spectrum, pbc_eigenvalues, pbc_spectrum,
    reality_tolerance, zero_modes, SpectralError, ZERO_MODE_TOL, OBC_REALITY_RTOL,
    PBC_REALITY_RTOL,
};
use crate::sweep::{self, SweepError};

#[derive(Parser, Debug)]
#[command(name = "nhssh", version, about = "Non-Hermitian SSH chain toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Band structure (Re and Im of both bands) over the Brillouin zone
    Band(BandArgs),
    /// Re-Im eigenvalue scatter under periodic or open boundaries
    Spectrum(SpectrumArgs),
    /// Phase diagrams and invariant curves
    Phase(PhaseArgs),
    /// Site-resolved density and the skin-effect verdict
    Skin(SkinArgs),
    /// Complex (global) Berry phase of the PT-symmetric chain
    Berry(BerryArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelArg {
    /// Non-reciprocal hopping (chiral, not PT symmetric)
    NonReciprocal,
    /// Staggered imaginary potential (PT symmetric)
    ImaginaryPotential,
}

#[derive(Args, Debug)]
pub struct ModelOpts {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: f64,
    /// Intra-cell non-reciprocity δ1 (non-reciprocal model only)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub d1: f64,
    /// Inter-cell non-reciprocity δ2 (non-reciprocal model only)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub d2: f64,
    /// Imaginary potential strength (PT-symmetric model only)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u: f64,
}

impl ModelOpts {
    pub fn to_params(&self) -> Result<ModelParams, AppError> {
        match self.model {
            ModelArg::NonReciprocal => {
                if self.u != 0.0 {
                    return Err(AppError::Usage(
                        "--u applies to the imaginary-potential model only".into(),
                    ));
                }
                Ok(ModelParams::non_reciprocal(self.t1, self.t2, self.d1, self.d2)?)
            }
            ModelArg::ImaginaryPotential => {
                if self.d1 != 0.0 || self.d2 != 0.0 {
                    return Err(AppError::Usage(
                        "--d1/--d2 apply to the non-reciprocal model only".into(),
                    ));
                }
                Ok(ModelParams::imaginary_potential(self.t1, self.t2, self.u)?)
            }
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryArg {
    Pbc,
    Obc,
}

#[derive(Args, Debug)]
pub struct BandArgs {
    #[command(flatten)]
    pub model: ModelOpts,
    /// Momentum points (inclusive of both zone edges)
    #[arg(long, default_value_t = 401)]
    pub nk: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub model: ModelOpts,
    #[arg(long, value_enum)]
    pub boundary: BoundaryArg,
    /// Unit cells for the open chain
    #[arg(long, default_value_t = 50)]
    pub cells: usize,
    /// Momentum points for the periodic spectrum
    #[arg(long, default_value_t = 401)]
    pub nk: usize,
    /// Include eigenvectors in the JSON record (open boundaries only)
    #[arg(long)]
    pub vectors: bool,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct PhaseArgs {
    #[command(subcommand)]
    pub sub: PhaseCommand,
}

#[derive(Subcommand, Debug)]
pub enum PhaseCommand {
    /// ν over the (δ1, δ2) plane (closed form + seeded numerical spot checks)
    DeltaPlane(DeltaPlaneArgs),
    /// ν along a δ2 cut at fixed δ1 (numerical winding integral)
    NuLine(NuLineArgs),
    /// Zero-mode count and winding ν over the (u, t2) plane
    #[command(name = "u-t2")]
    UT2(UT2Args),
    /// ν′(u) curve of the PT-symmetric chain
    NuPrime(NuPrimeArgs),
    /// PT broken/unbroken classification along u
    Reality(RealityArgs),
}

#[derive(Args, Debug)]
pub struct DeltaPlaneArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: f64,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    pub d1_min: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub d1_max: f64,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    pub d2_min: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub d2_max: f64,
    /// Cells per axis
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct NuLineArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub d1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub d2_min: f64,
    #[arg(long, default_value_t = 1.5, allow_negative_numbers = true)]
    pub d2_max: f64,
    #[arg(long, default_value_t = 301)]
    pub n: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct UT2Args {
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub u_max: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t2_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub t2_max: f64,
    /// Cells per axis
    #[arg(long, default_value_t = 50)]
    pub n: usize,
    /// Unit cells for the zero-mode grid
    #[arg(long, default_value_t = 50)]
    pub cells: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct NuPrimeArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub u_max: f64,
    #[arg(long, default_value_t = 801)]
    pub n: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct RealityArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub u_max: f64,
    #[arg(long, default_value_t = 400)]
    pub n: usize,
    /// Momentum points per u
    #[arg(long, default_value_t = 1001)]
    pub nk: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct SkinArgs {
    #[command(flatten)]
    pub model: ModelOpts,
    #[arg(long, default_value_t = 50)]
    pub cells: usize,
    #[arg(long, default_value_t = 0.1)]
    pub edge_fraction: f64,
    #[arg(long, default_value_t = 0.6)]
    pub state_threshold: f64,
    #[arg(long, default_value_t = 0.8)]
    pub population_threshold: f64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Args, Debug)]
pub struct BerryArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub t1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t2: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub u: f64,
    #[arg(long, default_value_t = 4096)]
    pub nk: usize,
    #[arg(long)]
    pub out: PathBuf,
}

/// Top-level failure with a process exit code.
#[derive(Debug)]
pub enum AppError {
    /// Exit code 2.
    Usage(String),
    /// Exit code 3.
    Numerical(String),
    /// Exit code 4.
    Io(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Numerical(_) => 3,
            AppError::Io(_) => 4,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(m) | AppError::Numerical(m) | AppError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<ModelError> for AppError {
    fn from(e: ModelError) -> Self {
        AppError::Usage(e.to_string())
    }
}

impl From<TopologyError> for AppError {
    fn from(e: TopologyError) -> Self {
        AppError::Numerical(e.to_string())
    }
}

impl From<SpectralError> for AppError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::Model(m) => m.into(),
            SpectralError::EmptyGrid | SpectralError::GridTooCoarse { .. } => {
                AppError::Usage(e.to_string())
            }
            other => AppError::Numerical(other.to_string()),
        }
    }
}

impl From<SweepError> for AppError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::GridTooSmall { .. } | SweepError::BadRange { .. } => {
                AppError::Usage(e.to_string())
            }
            SweepError::Model(m) => m.into(),
            SweepError::Spectral(s) => s.into(),
            SweepError::Topology(t) => t.into(),
        }
    }
}

impl From<SkinError> for AppError {
    fn from(e: SkinError) -> Self {
        match e {
            SkinError::Spectral(s) => s.into(),
            other => AppError::Numerical(other.to_string()),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e.to_string())
    }
}

pub fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Band(args) => run_band(args),
        Command::Spectrum(args) => run_spectrum(args),
        Command::Phase(args) => match args.sub {
            PhaseCommand::DeltaPlane(a) => run_delta_plane(a),
            PhaseCommand::NuLine(a) => run_nu_line(a),
            PhaseCommand::UT2(a) => run_u_t2(a),
            PhaseCommand::NuPrime(a) => run_nu_prime(a),
            PhaseCommand::Reality(a) => run_reality(a),
        },
        Command::Skin(args) => run_skin(args),
        Command::Berry(args) => run_berry(args),
    }
}

fn write_output(manifest: &mut RunManifest, path: &Path, contents: &str) -> Result<(), AppError> {
    io::write_text(path, contents)?;
    manifest.record_output(path);
    println!("wrote {}", path.display());
    Ok(())
}

fn finish(manifest: &RunManifest, out: &Path) -> Result<(), AppError> {
    let path = manifest.write(out)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn run_band(args: BandArgs) -> Result<(), AppError> {
    if args.nk < 2 {
        return Err(AppError::Usage("--nk must be at least 2".into()));
    }
    let params = args.model.to_params()?;
    let grid = io::linspace(-std::f64::consts::PI, std::f64::consts::PI, args.nk);
    let rows = pbc_spectrum(&params, &grid)?;

    let mut manifest = RunManifest::new("band")
        .with_params(&params)
        .set("nk", args.nk as u64)
        .set("plot", args.plot);
    write_output(&mut manifest, &io::with_suffix(&args.out, ".csv"), &io::band_csv(&rows))?;

    if args.plot {
        let re_p: Vec<(f64, f64)> = rows.iter().map(|(k, ep, _)| (*k, ep.re)).collect();
        let re_m: Vec<(f64, f64)> = rows.iter().map(|(k, _, em)| (*k, em.re)).collect();
        let im_p: Vec<(f64, f64)> = rows.iter().map(|(k, ep, _)| (*k, ep.im)).collect();
        let im_m: Vec<(f64, f64)> = rows.iter().map(|(k, _, em)| (*k, em.im)).collect();
        let svg = plot::line_chart(
            "band structure",
            "k",
            "E",
            &[
                Series { label: "Re E+", points: &re_p },
                Series { label: "Re E-", points: &re_m },
                Series { label: "Im E+", points: &im_p },
                Series { label: "Im E-", points: &im_m },
            ],
        );
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_spectrum(args: SpectrumArgs) -> Result<(), AppError> {
    let params = args.model.to_params()?;
    let mut manifest = RunManifest::new("spectrum")
        .with_params(&params)
        .set("boundary", match args.boundary {
            BoundaryArg::Pbc => "pbc",
            BoundaryArg::Obc => "obc",
        })
        .set("plot", args.plot);

    let (eigenvalues, record) = match args.boundary {
        BoundaryArg::Pbc => {
            if args.vectors {
                return Err(AppError::Usage(
                    "--vectors is only available for open-boundary spectra".into(),
                ));
            }
            manifest = manifest.set("nk", args.nk as u64);
            let eigenvalues = pbc_eigenvalues(&params, &bz_grid(args.nk))?;
            let tol = reality_tolerance(&eigenvalues, PBC_REALITY_RTOL);
            let gap = gap_classify(&eigenvalues, gap_tolerance(&eigenvalues))?;
            let record = io::SpectrumRecord {
                params: (&params).into(),
                boundary: "pbc",
                size: eigenvalues.len(),
                residual: 0.0,
                near_defective: Vec::new(),
                zero_modes: Vec::new(),
                reality: (&classify_reality(&eigenvalues, tol)).into(),
                gap: Some((&gap).into()),
                eigenvalues: io::complex_list(&eigenvalues),
                right_vectors: None,
                left_vectors: None,
            };
            let csv = io::eigenvalue_csv(&eigenvalues);
            write_output(&mut manifest, &io::with_suffix(&args.out, ".csv"), &csv)?;
            (eigenvalues, record)
        }
        BoundaryArg::Obc => {
            manifest = manifest.set("cells", args.cells as u64).set("vectors", args.vectors);
            let spectrum = obc_spectrum(&params, args.cells)?;
            let profile = localization_profile(&spectrum, 0.1)?;
            let weights: Vec<f64> =
                (0..spectrum.dim()).map(|n| profile.edge_weight(n)).collect();
            let tol = reality_tolerance(&spectrum.eigenvalues, OBC_REALITY_RTOL);
            let record = io::SpectrumRecord {
                params: (&params).into(),
                boundary: "obc",
                size: spectrum.dim(),
                residual: spectrum.residual,
                near_defective: spectrum.near_defective.clone(),
                zero_modes: zero_modes(&spectrum.eigenvalues, ZERO_MODE_TOL),
                reality: (&classify_reality(&spectrum.eigenvalues, tol)).into(),
                gap: None,
                eigenvalues: io::complex_list(&spectrum.eigenvalues),
                right_vectors: args.vectors.then(|| io::vector_columns(&spectrum, false)),
                left_vectors: args.vectors.then(|| io::vector_columns(&spectrum, true)),
            };
            let csv = io::eigenvalue_csv_with_edge_weight(&spectrum.eigenvalues, &weights);
            write_output(&mut manifest, &io::with_suffix(&args.out, ".csv"), &csv)?;
            (spectrum.eigenvalues.clone(), record)
        }
    };

    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&record))?;

    if args.plot {
        let points: Vec<(f64, f64)> = eigenvalues.iter().map(|e| (e.re, e.im)).collect();
        let svg = plot::scatter_chart("complex spectrum", "Re E", "Im E", &points);
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_delta_plane(args: DeltaPlaneArgs) -> Result<(), AppError> {
    let sweep = sweep::sweep_delta_plane(
        args.t1,
        args.t2,
        (args.d1_min, args.d1_max),
        (args.d2_min, args.d2_max),
        args.n,
        args.seed,
    )?;
    let mut settings = BTreeMap::new();
    settings.insert("t1".to_string(), args.t1.into());
    settings.insert("t2".to_string(), args.t2.into());
    let header = io::GridHeader {
        observable: sweep.grid.observable.name(),
        x_axis: (&sweep.grid.x_axis).into(),
        y_axis: (&sweep.grid.y_axis).into(),
        settings: settings.clone(),
        seed: args.seed,
        indeterminate_cells: sweep.grid.indeterminate.len(),
        spot_checks: sweep.spot_checks.iter().map(Into::into).collect(),
        spot_check_mismatches: sweep.mismatches,
    };
    if sweep.mismatches > 0 {
        eprintln!(
            "warning: {} spot checks disagree with the closed-form winding",
            sweep.mismatches
        );
    }

    let mut manifest = RunManifest::new("phase delta-plane")
        .set("t1", args.t1)
        .set("t2", args.t2)
        .set("d1_min", args.d1_min)
        .set("d1_max", args.d1_max)
        .set("d2_min", args.d2_min)
        .set("d2_max", args.d2_max)
        .set("n", args.n as u64)
        .set("plot", args.plot)
        .with_seed(args.seed);
    write_output(&mut manifest, &io::with_suffix(&args.out, ".csv"), &io::grid_csv(&sweep.grid))?;
    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&header))?;
    if args.plot {
        let svg = plot::heatmap("winding number", &sweep.grid);
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_nu_line(args: NuLineArgs) -> Result<(), AppError> {
    let sweep =
        sweep::sweep_nu_line(args.t1, args.t2, args.d1, (args.d2_min, args.d2_max), args.n)?;
    let mut settings = BTreeMap::new();
    settings.insert("t1".to_string(), args.t1.into());
    settings.insert("t2".to_string(), args.t2.into());
    settings.insert("d1".to_string(), args.d1.into());
    let header = io::nu_line_header(settings, &sweep);
    for jump in &sweep.jumps {
        println!("nu jump near delta2 = {jump:.6}");
    }

    let mut manifest = RunManifest::new("phase nu-line")
        .set("t1", args.t1)
        .set("t2", args.t2)
        .set("d1", args.d1)
        .set("d2_min", args.d2_min)
        .set("d2_max", args.d2_max)
        .set("n", args.n as u64)
        .set("plot", args.plot);
    write_output(
        &mut manifest,
        &io::with_suffix(&args.out, ".csv"),
        &io::curve_csv("delta2", "nu", &sweep.points),
    )?;
    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&header))?;
    if args.plot {
        let svg = plot::line_chart(
            "winding number along delta2",
            "delta2",
            "nu",
            &[Series { label: "nu", points: &sweep.points }],
        );
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_u_t2(args: UT2Args) -> Result<(), AppError> {
    let (zero_grid, nu_grid) = sweep::sweep_u_t2(
        args.t1,
        (args.u_min, args.u_max),
        (args.t2_min, args.t2_max),
        args.n,
        args.cells,
    )?;
    let mut manifest = RunManifest::new("phase u-t2")
        .set("t1", args.t1)
        .set("u_min", args.u_min)
        .set("u_max", args.u_max)
        .set("t2_min", args.t2_min)
        .set("t2_max", args.t2_max)
        .set("n", args.n as u64)
        .set("cells", args.cells as u64)
        .set("plot", args.plot);
    let mut settings = BTreeMap::new();
    settings.insert("t1".to_string(), args.t1.into());
    settings.insert("cells".to_string(), (args.cells as u64).into());

    for (tag, grid) in [("zero_modes", &zero_grid), ("nu", &nu_grid)] {
        let header = io::GridHeader {
            observable: grid.observable.name(),
            x_axis: (&grid.x_axis).into(),
            y_axis: (&grid.y_axis).into(),
            settings: settings.clone(),
            seed: 0,
            indeterminate_cells: grid.indeterminate.len(),
            spot_checks: Vec::new(),
            spot_check_mismatches: 0,
        };
        write_output(
            &mut manifest,
            &io::with_suffix(&args.out, &format!(".{tag}.csv")),
            &io::grid_csv(grid),
        )?;
        write_output(
            &mut manifest,
            &io::with_suffix(&args.out, &format!(".{tag}.json")),
            &io::to_json(&header),
        )?;
        if args.plot {
            let svg = plot::heatmap(grid.observable.name(), grid);
            write_output(
                &mut manifest,
                &io::with_suffix(&args.out, &format!(".{tag}.svg")),
                &svg,
            )?;
        }
    }
    finish(&manifest, &args.out)
}

fn run_nu_prime(args: NuPrimeArgs) -> Result<(), AppError> {
    let points = sweep::sweep_nu_prime(args.t1, args.t2, (args.u_min, args.u_max), args.n)?;
    let params = ModelParams::imaginary_potential(args.t1, args.t2, 0.0)?;
    let (u_low, u_high) = topology::reality_interval(&params);

    let mut settings = BTreeMap::new();
    settings.insert("t1".to_string(), args.t1.into());
    settings.insert("t2".to_string(), args.t2.into());
    let header = io::CurveHeader {
        observable: "nu_prime".to_string(),
        settings,
        jumps: Vec::new(),
        u_low: Some(u_low),
        u_high: Some(u_high),
    };

    let mut manifest = RunManifest::new("phase nu-prime")
        .set("t1", args.t1)
        .set("t2", args.t2)
        .set("u_min", args.u_min)
        .set("u_max", args.u_max)
        .set("n", args.n as u64)
        .set("plot", args.plot);
    write_output(
        &mut manifest,
        &io::with_suffix(&args.out, ".csv"),
        &io::curve_csv("u", "nu_prime", &points),
    )?;
    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&header))?;
    if args.plot {
        let svg = plot::line_chart(
            "winding number vs potential strength",
            "u",
            "nu_prime",
            &[Series { label: "nu_prime", points: &points }],
        );
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_reality(args: RealityArgs) -> Result<(), AppError> {
    let sweep =
        sweep::sweep_reality(args.t1, args.t2, (args.u_min, args.u_max), args.n, args.nk)?;
    match (sweep.u_low, sweep.u_high) {
        (Some(lo), Some(hi)) => println!("PT thresholds: u_low = {lo:.6}, u_high = {hi:.6}"),
        (Some(lo), None) => println!("PT threshold: u_low = {lo:.6}; u_high beyond range"),
        _ => println!("spectrum stayed purely real over the scanned range"),
    }

    let mut settings = BTreeMap::new();
    settings.insert("t1".to_string(), args.t1.into());
    settings.insert("t2".to_string(), args.t2.into());
    settings.insert("nk".to_string(), (args.nk as u64).into());
    let header = io::CurveHeader {
        observable: "reality_class".to_string(),
        settings,
        jumps: Vec::new(),
        u_low: sweep.u_low,
        u_high: sweep.u_high,
    };

    let mut manifest = RunManifest::new("phase reality")
        .set("t1", args.t1)
        .set("t2", args.t2)
        .set("u_min", args.u_min)
        .set("u_max", args.u_max)
        .set("n", args.n as u64)
        .set("nk", args.nk as u64)
        .set("plot", args.plot);
    write_output(&mut manifest, &io::with_suffix(&args.out, ".csv"), &io::reality_csv(&sweep))?;
    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&header))?;
    if args.plot {
        let real: Vec<(f64, f64)> =
            sweep.points.iter().map(|(u, r)| (*u, r.n_real as f64)).collect();
        let imag: Vec<(f64, f64)> =
            sweep.points.iter().map(|(u, r)| (*u, r.n_imaginary as f64)).collect();
        let complex: Vec<(f64, f64)> =
            sweep.points.iter().map(|(u, r)| (*u, r.n_complex as f64)).collect();
        let svg = plot::line_chart(
            "PT broken and unbroken regions",
            "u",
            "eigenvalue count",
            &[
                Series { label: "real", points: &real },
                Series { label: "imaginary", points: &imag },
                Series { label: "complex", points: &complex },
            ],
        );
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_skin(args: SkinArgs) -> Result<(), AppError> {
    let params = args.model.to_params()?;
    let thresholds = SkinThresholds {
        edge_fraction: args.edge_fraction,
        state_weight: args.state_threshold,
        population: args.population_threshold,
    };
    if !(0.0 < thresholds.edge_fraction && thresholds.edge_fraction <= 0.5) {
        return Err(AppError::Usage("--edge-fraction must be in (0, 0.5]".into()));
    }
    let spectrum = obc_spectrum(&params, args.cells)?;
    let profile = localization_profile(&spectrum, thresholds.edge_fraction)?;
    let verdict = nhse_verdict_from_profile(&profile, &thresholds);
    println!(
        "skin effect present: {} (side {:?}, localized fraction {:.3})",
        verdict.present, verdict.side, verdict.localized_fraction
    );

    let mut manifest = RunManifest::new("skin")
        .with_params(&params)
        .set("cells", args.cells as u64)
        .set("edge_fraction", thresholds.edge_fraction)
        .set("state_threshold", thresholds.state_weight)
        .set("population_threshold", thresholds.population)
        .set("plot", args.plot);
    write_output(
        &mut manifest,
        &io::with_suffix(&args.out, ".csv"),
        &io::density_csv(&profile.site_density),
    )?;
    let record = io::verdict_record(&params, args.cells, &thresholds, &verdict);
    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&record))?;
    if args.plot {
        let points: Vec<(f64, f64)> = profile
            .site_density
            .iter()
            .enumerate()
            .map(|(site, d)| (site as f64 + 1.0, *d))
            .collect();
        let svg = plot::line_chart(
            "summed eigenstate density",
            "site",
            "density",
            &[Series { label: "density", points: &points }],
        );
        write_output(&mut manifest, &io::with_suffix(&args.out, ".svg"), &svg)?;
    }
    finish(&manifest, &args.out)
}

fn run_berry(args: BerryArgs) -> Result<(), AppError> {
    let params = ModelParams::imaginary_potential(args.t1, args.t2, args.u)?;
    let result = topology::complex_berry_phase(&params, args.nk)?;
    println!(
        "q_plus = {:.9}, q_minus = {:.9}, q_global = {:.9} ({:.6} turns)",
        result.q_plus,
        result.q_minus,
        result.q_global,
        result.q_global / (2.0 * std::f64::consts::PI)
    );

    let mut detail = BTreeMap::new();
    detail.insert("q_plus".to_string(), result.q_plus);
    detail.insert("q_minus".to_string(), result.q_minus);
    detail.insert("quantization_residue".to_string(), result.quantization_residue);
    let record = io::InvariantRecord {
        params: (&params).into(),
        invariant_name: "global_berry_phase".to_string(),
        value: result.q_global,
        n_k: result.n_k,
        flags: Vec::new(),
        detail,
    };

    let mut manifest = RunManifest::new("berry")
        .with_params(&params)
        .set("nk", args.nk as u64);
    write_output(&mut manifest, &io::with_suffix(&args.out, ".json"), &io::to_json(&record))?;
    finish(&manifest, &args.out)
}

/// Eigenvalues as (re, im) points; shared by tests and plots.
pub fn spectrum_points(eigenvalues: &[Complex64]) -> Vec<(f64, f64)> {
    eigenvalues.iter().map(|e| (e.re, e.im)).collect()
}
