//! Parameter-plane and parameter-line scans behind the phase diagrams.
//!
//! Plane sweeps over `(δ1, δ2)` use the closed-form winding oracle as the
//! fast path and cross-validate a seeded random subsample of cells against
//! the numerical winding integral. Cells on phase boundaries are tagged
//! indeterminate, never interpolated. Sweep ordering is row-major and the
//! spot-check sampler is seeded, so outputs are reproducible regardless of
//! the parallelism used for the heavy grids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use nhssh_core::model::{ModelError, ModelParams};
use nhssh_core::topology::{self, TopologyError};
use nhssh_core::bz_grid;

use crate::spectral::{
    classify_reality, obc_spectrum, pbc_eigenvalues, reality_tolerance, zero_modes, RealityReport,
    SpectralError, PBC_REALITY_RTOL, ZERO_MODE_TOL,
};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep needs at least {min} points per axis, got {got}")]
    GridTooSmall { got: usize, min: usize },
    #[error("range is empty or not finite: [{min}, {max}]")]
    BadRange { min: f64, max: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Axis metadata of a [`PhaseGrid`].
#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Axis {
    pub fn new(name: &str, min: f64, max: f64, n: usize) -> Result<Self, SweepError> {
        if !min.is_finite() || !max.is_finite() || max < min {
            return Err(SweepError::BadRange { min, max });
        }
        Ok(Axis { name: name.to_string(), min, max, n })
    }

    /// `i`-th grid value, endpoints inclusive.
    pub fn value(&self, i: usize) -> f64 {
        if self.n < 2 {
            return self.min;
        }
        self.min + (self.max - self.min) * i as f64 / (self.n - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.value(i)).collect()
    }

    /// Grid spacing.
    pub fn step(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            (self.max - self.min) / (self.n - 1) as f64
        }
    }
}

/// Observable stored in a [`PhaseGrid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Observable {
    Nu,
    NuPrime,
    ZeroModeCount,
    NuH2,
    RealityClass,
}

impl Observable {
    pub fn name(&self) -> &'static str {
        match self {
            Observable::Nu => "nu",
            Observable::NuPrime => "nu_prime",
            Observable::ZeroModeCount => "zero_mode_count",
            Observable::NuH2 => "nu_h2",
            Observable::RealityClass => "reality_class",
        }
    }
}

/// 2D array of invariant values over a parameter plane.
///
/// Values are stored row-major as `values[iy * x_axis.n + ix]`; cells on
/// transition lines hold `NaN` and are listed in `indeterminate`.
#[derive(Clone, Debug)]
pub struct PhaseGrid {
    pub x_axis: Axis,
    pub y_axis: Axis,
    pub observable: Observable,
    pub values: Vec<f64>,
    pub indeterminate: Vec<(usize, usize)>,
}

impl PhaseGrid {
    fn from_cells(
        x_axis: Axis,
        y_axis: Axis,
        observable: Observable,
        cells: Vec<Option<f64>>,
    ) -> Self {
        let mut values = Vec::with_capacity(cells.len());
        let mut indeterminate = Vec::new();
        for (idx, cell) in cells.into_iter().enumerate() {
            match cell {
                Some(v) => values.push(v),
                None => {
                    values.push(f64::NAN);
                    indeterminate.push((idx % x_axis.n, idx / x_axis.n));
                }
            }
        }
        PhaseGrid { x_axis, y_axis, observable, values, indeterminate }
    }

    pub fn value(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.x_axis.n + ix]
    }

    pub fn is_indeterminate(&self, ix: usize, iy: usize) -> bool {
        self.value(ix, iy).is_nan()
    }
}

/// One numerical cross-check of the oracle-filled ν plane.
#[derive(Clone, Copy, Debug)]
pub struct SpotCheck {
    pub ix: usize,
    pub iy: usize,
    pub delta1: f64,
    pub delta2: f64,
    pub oracle: f64,
    /// `None` when the numerical integral refused the cell (transition
    /// line within its tolerance).
    pub numeric: Option<f64>,
}

/// ν phase diagram over the `(δ1, δ2)` plane plus its spot checks.
#[derive(Clone, Debug)]
pub struct DeltaPlaneSweep {
    pub grid: PhaseGrid,
    pub spot_checks: Vec<SpotCheck>,
    /// Spot checks whose numerical winding disagreed with the oracle.
    pub mismatches: usize,
    pub seed: u64,
}

/// Momentum grid used for numerical winding integrals inside sweeps.
pub const SWEEP_WINDING_K: usize = 2048;

/// Fraction of cells cross-checked numerically in plane sweeps.
pub const SPOT_CHECK_FRACTION: f64 = 0.01;

/// ν over the `(δ1, δ2)` plane via the closed-form oracle, with seeded
/// numerical spot checks on ~1% of the cells.
pub fn sweep_delta_plane(
    t1: f64,
    t2: f64,
    delta1_range: (f64, f64),
    delta2_range: (f64, f64),
    n: usize,
    seed: u64,
) -> Result<DeltaPlaneSweep, SweepError> {
    if n < 50 {
        return Err(SweepError::GridTooSmall { got: n, min: 50 });
    }
    let x_axis = Axis::new("delta1", delta1_range.0, delta1_range.1, n)?;
    let y_axis = Axis::new("delta2", delta2_range.0, delta2_range.1, n)?;

    let mut cells = Vec::with_capacity(n * n);
    for iy in 0..n {
        let d2 = y_axis.value(iy);
        for ix in 0..n {
            let d1 = x_axis.value(ix);
            let params = ModelParams::non_reciprocal(t1, t2, d1, d2)?;
            cells.push(topology::winding_nu_oracle(&params).ok());
        }
    }

    // Deterministic subsample, drawn before any evaluation order concerns.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_checks = ((n * n) as f64 * SPOT_CHECK_FRACTION).ceil() as usize;
    let mut spot_checks = Vec::with_capacity(n_checks);
    let mut mismatches = 0usize;
    for _ in 0..n_checks {
        let ix = rng.gen_range(0..n);
        let iy = rng.gen_range(0..n);
        let oracle = match cells[iy * n + ix] {
            Some(v) => v,
            None => continue, // boundary cell, nothing to check against
        };
        let d1 = x_axis.value(ix);
        let d2 = y_axis.value(iy);
        let params = ModelParams::non_reciprocal(t1, t2, d1, d2)?;
        let numeric = topology::winding_nu(&params, SWEEP_WINDING_K).ok().map(|w| w.nu);
        if let Some(v) = numeric {
            if v != oracle {
                mismatches += 1;
            }
        }
        spot_checks.push(SpotCheck { ix, iy, delta1: d1, delta2: d2, oracle, numeric });
    }

    Ok(DeltaPlaneSweep {
        grid: PhaseGrid::from_cells(x_axis, y_axis, Observable::Nu, cells),
        spot_checks,
        mismatches,
        seed,
    })
}

/// ν along a `δ2` cut at fixed `δ1`, with detected jump locations.
#[derive(Clone, Debug)]
pub struct NuLineSweep {
    /// `(δ2, ν)`; `ν` is `NaN` on cells the winding integral refused.
    pub points: Vec<(f64, f64)>,
    /// Midpoints of adjacent determinate cells with differing ν.
    pub jumps: Vec<f64>,
}

/// ν along a line in `δ2` via the numerical winding integral.
pub fn sweep_nu_line(
    t1: f64,
    t2: f64,
    delta1: f64,
    delta2_range: (f64, f64),
    n: usize,
) -> Result<NuLineSweep, SweepError> {
    if n < 200 {
        return Err(SweepError::GridTooSmall { got: n, min: 200 });
    }
    let axis = Axis::new("delta2", delta2_range.0, delta2_range.1, n)?;
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let d2 = axis.value(i);
        let params = ModelParams::non_reciprocal(t1, t2, delta1, d2)?;
        let nu = match topology::winding_nu(&params, SWEEP_WINDING_K) {
            Ok(w) => w.nu,
            Err(
                TopologyError::TransitionLine { .. } | TopologyError::UnreliableWinding { .. },
            ) => f64::NAN,
            Err(e) => return Err(e.into()),
        };
        points.push((d2, nu));
    }

    let mut jumps = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &(d2, nu) in &points {
        if nu.is_nan() {
            continue;
        }
        if let Some((pd2, pnu)) = prev {
            if (nu - pnu).abs() > 1e-12 {
                jumps.push(0.5 * (d2 + pd2));
            }
        }
        prev = Some((d2, nu));
    }
    Ok(NuLineSweep { points, jumps })
}

/// Zero-mode count and winding ν over the `(u, t2)` plane at fixed `t1`.
///
/// The zero-mode grid diagonalizes the open chain per cell (parallelized);
/// the ν grid evaluates the real d-vector winding, tagging the `t1 = t2`
/// gap-closing line indeterminate.
pub fn sweep_u_t2(
    t1: f64,
    u_range: (f64, f64),
    t2_range: (f64, f64),
    n: usize,
    n_cells: usize,
) -> Result<(PhaseGrid, PhaseGrid), SweepError> {
    if n < 50 {
        return Err(SweepError::GridTooSmall { got: n, min: 50 });
    }
    if n_cells < 50 {
        return Err(SweepError::GridTooSmall { got: n_cells, min: 50 });
    }
    let u_axis = Axis::new("u", u_range.0, u_range.1, n)?;
    let t2_axis = Axis::new("t2", t2_range.0, t2_range.1, n)?;

    let coords: Vec<(f64, f64)> = (0..n * n)
        .map(|idx| (u_axis.value(idx % n), t2_axis.value(idx / n)))
        .collect();

    let zero_cells: Vec<Option<f64>> = coords
        .par_iter()
        .map(|&(u, t2)| {
            let params = ModelParams::imaginary_potential(t1, t2, u).ok()?;
            let spectrum = obc_spectrum(&params, n_cells).ok()?;
            Some(zero_modes(&spectrum.eigenvalues, ZERO_MODE_TOL).len() as f64)
        })
        .collect();

    let nu_cells: Vec<Option<f64>> = coords
        .iter()
        .map(|&(u, t2)| {
            let params = ModelParams::imaginary_potential(t1, t2, u).ok()?;
            topology::winding_nu_h2(&params, SWEEP_WINDING_K).ok()
        })
        .collect();

    Ok((
        PhaseGrid::from_cells(
            u_axis.clone(),
            t2_axis.clone(),
            Observable::ZeroModeCount,
            zero_cells,
        ),
        PhaseGrid::from_cells(u_axis, t2_axis, Observable::NuH2, nu_cells),
    ))
}

/// `ν′(u)` along a potential-strength cut.
pub fn sweep_nu_prime(
    t1: f64,
    t2: f64,
    u_range: (f64, f64),
    n: usize,
) -> Result<Vec<(f64, f64)>, SweepError> {
    if n < 500 {
        return Err(SweepError::GridTooSmall { got: n, min: 500 });
    }
    let axis = Axis::new("u", u_range.0, u_range.1, n)?;
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let u = axis.value(i);
        let params = ModelParams::imaginary_potential(t1, t2, u)?;
        points.push((u, topology::winding_nu_prime(&params)));
    }
    Ok(points)
}

/// PBC reality classification along a `u` cut, with extracted PT
/// thresholds.
#[derive(Clone, Debug)]
pub struct RealitySweep {
    pub points: Vec<(f64, RealityReport)>,
    /// First `u` at which a non-real eigenvalue appears.
    pub u_low: Option<f64>,
    /// First `u` at which the last real eigenvalue disappears.
    pub u_high: Option<f64>,
}

/// Classify the periodic spectrum per `u` and locate the PT boundaries.
pub fn sweep_reality(
    t1: f64,
    t2: f64,
    u_range: (f64, f64),
    n: usize,
    k_points: usize,
) -> Result<RealitySweep, SweepError> {
    if n < 200 {
        return Err(SweepError::GridTooSmall { got: n, min: 200 });
    }
    let axis = Axis::new("u", u_range.0, u_range.1, n)?;
    let grid = bz_grid(k_points.max(crate::spectral::GAP_MIN_K_POINTS));
    let mut points = Vec::with_capacity(n);
    let mut u_low = None;
    let mut u_high = None;
    for i in 0..n {
        let u = axis.value(i);
        let params = ModelParams::imaginary_potential(t1, t2, u)?;
        let eigenvalues = pbc_eigenvalues(&params, &grid)?;
        let tol = reality_tolerance(&eigenvalues, PBC_REALITY_RTOL);
        let report = classify_reality(&eigenvalues, tol);
        if u_low.is_none() && report.n_imaginary + report.n_complex > 0 {
            u_low = Some(u);
        }
        if u_high.is_none() && report.n_real == 0 {
            u_high = Some(u);
        }
        points.push((u, report));
    }
    Ok(RealitySweep { points, u_low, u_high })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_plane_boundaries_sit_on_coalescence_lines() {
        let sweep = sweep_delta_plane(1.0, 2.0, (-2.0, 2.0), (-2.0, 2.0), 60, 42).unwrap();
        assert_eq!(sweep.mismatches, 0);
        assert!(!sweep.spot_checks.is_empty());

        // Every ν transition between horizontally adjacent cells must lie
        // within one cell of |d1+d2| = |t1-t2| or |d1-d2| = t1+t2.
        let g = &sweep.grid;
        let step = g.x_axis.step();
        for iy in 0..g.y_axis.n {
            let d2 = g.y_axis.value(iy);
            for ix in 1..g.x_axis.n {
                let (a, b) = (g.value(ix - 1, iy), g.value(ix, iy));
                if a.is_nan() || b.is_nan() || a == b {
                    continue;
                }
                let d1 = 0.5 * (g.x_axis.value(ix - 1) + g.x_axis.value(ix));
                let on_sum = ((d1 + d2).abs() - 1.0).abs();
                let on_diff = ((d1 - d2).abs() - 3.0).abs();
                assert!(
                    on_sum < step || on_diff < step,
                    "jump at ({d1}, {d2}) off the coalescence lines"
                );
            }
        }
    }

    #[test]
    fn delta_plane_rejects_tiny_grids() {
        assert!(matches!(
            sweep_delta_plane(1.0, 2.0, (-2.0, 2.0), (-2.0, 2.0), 10, 0),
            Err(SweepError::GridTooSmall { .. })
        ));
    }

    #[test]
    fn nu_line_jumps_match_figure_cuts() {
        let sweep = sweep_nu_line(1.0, 2.0, 0.5, (0.0, 1.5), 301).unwrap();
        assert_eq!(sweep.jumps.len(), 1);
        assert!((sweep.jumps[0] - 0.5).abs() <= 1.5 / 300.0 + 1e-12);

        let sweep = sweep_nu_line(1.0, 0.5, 0.25, (0.0, 1.0), 301).unwrap();
        assert_eq!(sweep.jumps.len(), 1);
        assert!((sweep.jumps[0] - 0.25).abs() <= 1.0 / 300.0 + 1e-12);
    }

    #[test]
    fn u_t2_grids_recover_known_structure() {
        let (zero_grid, nu_grid) = sweep_u_t2(1.0, (0.0, 4.0), (0.0, 4.0), 50, 50).unwrap();

        for iy in 0..50 {
            let t2 = zero_grid.y_axis.value(iy);
            for ix in 0..50 {
                let u = zero_grid.x_axis.value(ix);
                let count = zero_grid.value(ix, iy);
                if u == 0.0 && t2 > 1.4 {
                    assert_eq!(count, 2.0, "expected zero modes at u=0, t2={t2}");
                } else if u > 0.05 {
                    assert_eq!(count, 0.0, "unexpected zero modes at u={u}, t2={t2}");
                }
            }
        }

        for iy in 0..50 {
            let t2 = nu_grid.y_axis.value(iy);
            for ix in 0..50 {
                let v = nu_grid.value(ix, iy);
                if (t2 - 1.0).abs() < 0.05 {
                    continue; // near the gap-closing line
                }
                assert!(!v.is_nan(), "unexpected indeterminate at t2={t2}");
                assert_eq!(v, if t2 > 1.0 { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn nu_prime_curve_has_the_right_plateaus() {
        let points = sweep_nu_prime(1.0, 2.0, (0.0, 4.0), 801).unwrap();
        for &(u, v) in &points {
            if u <= 1.0 {
                assert_eq!(v, 1.0, "nu' must stay 1 up to u = |t1-t2|, failed at {u}");
            } else if u >= 3.0 {
                assert_eq!(v, 0.0, "nu' must vanish beyond u = t1+t2, failed at {u}");
            } else {
                assert!(v > 0.0 && v < 1.0);
            }
        }
        // Strictly decreasing inside the interval.
        let inside: Vec<_> = points.iter().filter(|(u, _)| *u > 1.0 && *u < 3.0).collect();
        for pair in inside.windows(2) {
            assert!(pair[1].1 < pair[0].1);
        }
    }

    #[test]
    fn reality_thresholds_match_the_interval() {
        let sweep = sweep_reality(1.0, 2.0, (0.0, 4.0), 400, 1001).unwrap();
        let step = 4.0 / 399.0;
        assert!((sweep.u_low.unwrap() - 1.0).abs() <= step + 1e-12);
        assert!((sweep.u_high.unwrap() - 3.0).abs() <= step + 1e-12);

        let sweep = sweep_reality(1.0, 0.5, (0.0, 4.0), 400, 1001).unwrap();
        assert!((sweep.u_low.unwrap() - 0.5).abs() <= step + 1e-12);
        assert!((sweep.u_high.unwrap() - 1.5).abs() <= step + 1e-12);
    }

    #[test]
    fn reality_thresholds_agree_with_reality_interval() {
        use nhssh_core::topology::reality_interval;
        for (t1, t2) in [(1.0, 2.0), (1.0, 0.5), (0.7, 1.9), (1.3, 0.9)] {
            let params = ModelParams::imaginary_potential(t1, t2, 0.0).unwrap();
            let (lo, hi) = reality_interval(&params);
            let sweep = sweep_reality(t1, t2, (0.0, t1 + t2 + 1.0), 400, 1001).unwrap();
            let step = (t1 + t2 + 1.0) / 399.0;
            assert!((sweep.u_low.unwrap() - lo).abs() <= step + 1e-12);
            assert!((sweep.u_high.unwrap() - hi).abs() <= step + 1e-12);
        }
    }
}
