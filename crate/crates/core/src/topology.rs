//! Exceptional-point geometry, winding numbers and the complex Berry phase.
//!
//! For the non-reciprocal chain the complex angle `φ = φ_R + iφ_I` of the
//! d-vector splits the winding number into two parts, one per moving
//! exceptional point: `ν = (ν1 + ν2)/2 ∈ {0, 1/2, 1}`. A closed-form
//! circle-enclosure oracle cross-checks the numerical integrals.
//!
//! For the PT-symmetric chain the exceptional points fill a circle of
//! radius `u` (the exceptional circle). The arc fraction of that circle
//! enclosed by the real d-curve defines a continuous invariant
//! `ν′ ∈ [0, 1]`, evaluated both in closed form and by Monte-Carlo
//! sampling. The bi-orthogonal (complex) Berry phase is accumulated as a
//! gauge-invariant product over a closed momentum grid.

use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::model::{d_vector, ModelKind, ModelParams};

/// Smallest admissible momentum grid for winding/Berry integrals.
pub const MIN_K_GRID: usize = 1000;

/// Default momentum grid for winding and Berry computations.
pub const DEFAULT_K_GRID: usize = 4096;

/// Distance below which a d-point is considered to sit on an exceptional
/// point, i.e. the parameters lie on a transition line.
pub const EP_DISTANCE_TOL: f64 = 1e-9;

/// Maximum admissible distance between an accumulated winding and the
/// nearest integer before the result is rejected as unreliable.
pub const WINDING_RESIDUE_TOL: f64 = 0.05;

/// Failures of the topological computations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TopologyError {
    /// Grid smaller than [`MIN_K_GRID`].
    GridTooCoarse { n_k: usize },
    /// A sampled momentum brought the d-point within [`EP_DISTANCE_TOL`]
    /// of an exceptional point; the winding integrand collapses there.
    TransitionLine { k: f64, distance: f64 },
    /// Accumulated winding too far from an integer.
    UnreliableWinding { residue: f64 },
    /// Closed-form oracle hit an exact circle tangency; the winding is
    /// not defined on the boundary itself.
    IndeterminateBoundary,
    /// The two bands touch on the sampled grid, so band-resolved
    /// quantities are ill-defined.
    BandTouching { min_gap: f64 },
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::GridTooCoarse { n_k } => {
                write!(f, "momentum grid of {n_k} points is below the minimum of {MIN_K_GRID}")
            }
            TopologyError::TransitionLine { k, distance } => write!(
                f,
                "parameters sit on a transition line: d-point within {distance:.3e} of an exceptional point at k = {k:.6}"
            ),
            TopologyError::UnreliableWinding { residue } => write!(
                f,
                "winding residue {residue:.3e} exceeds {WINDING_RESIDUE_TOL}; result unreliable"
            ),
            TopologyError::IndeterminateBoundary => {
                write!(f, "parameters lie exactly on a phase boundary; winding indeterminate")
            }
            TopologyError::BandTouching { min_gap } => write!(
                f,
                "bands touch on the sampled grid (min |E| = {min_gap:.3e}); perturb the parameters"
            ),
        }
    }
}

impl core::error::Error for TopologyError {}

/// Circle picture of the exceptional points of the non-reciprocal chain.
///
/// As `k` sweeps the Brillouin zone the two EPs travel along circles of
/// radius `|δ2|` centered at `(∓δ1, 0)` while the real d-point travels
/// along a circle of radius `|t2|` centered at `(t1, 0)`; all in the
/// `(d_x^R, d_y^R)` plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpGeometryH1 {
    pub ep_center_1: (f64, f64),
    pub ep_center_2: (f64, f64),
    pub ep_radius: f64,
    pub d_center: (f64, f64),
    pub d_radius: f64,
    /// `|δ1 + δ2| = |t1 − t2|` within tolerance.
    pub eigvec_coalesce_at_0: bool,
    /// `|δ1 − δ2| = t1 + t2` within tolerance.
    pub eigvec_coalesce_at_pi: bool,
}

/// Exceptional circle of the PT-symmetric chain:
/// `(d_x^R)^2 + (d_y^R)^2 = u^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpCircleH2 {
    pub radius: f64,
    pub d_center: (f64, f64),
    pub d_radius: f64,
}

/// Winding number of the non-reciprocal chain split per exceptional point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindingResult {
    /// `(nu1 + nu2) / 2`.
    pub nu: f64,
    /// Winding count around the first EP (unsigned).
    pub nu1: f64,
    /// Winding count around the second EP (unsigned).
    pub nu2: f64,
    /// Grid size used.
    pub n_k: usize,
    /// Largest pre-rounding distance to an integer.
    pub max_residue: f64,
}

/// Complex Berry phase per band and their sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BerryResult {
    /// Real part of the upper-band bi-orthogonal Berry phase (radians).
    pub q_plus: f64,
    /// Real part of the lower-band bi-orthogonal Berry phase (radians).
    pub q_minus: f64,
    /// `q_plus + q_minus`; quantized to `0` or `2π` in gapped regions.
    pub q_global: f64,
    pub n_k: usize,
    /// Distance of `q_global` from the nearest multiple of `2π`.
    pub quantization_residue: f64,
}

/// Exceptional-point circle descriptors and eigenvector-coalescence tests
/// for the non-reciprocal chain.
pub fn ep_geometry_h1(params: &ModelParams, tol: f64) -> EpGeometryH1 {
    assert_eq!(params.kind, ModelKind::NonReciprocal, "EP geometry of h1 needs the non-reciprocal chain");
    let d1 = params.delta1;
    let d2 = params.delta2;
    EpGeometryH1 {
        ep_center_1: (-d1, 0.0),
        ep_center_2: (d1, 0.0),
        ep_radius: d2.abs(),
        d_center: (params.t1, 0.0),
        d_radius: params.t2.abs(),
        eigvec_coalesce_at_0: ((d1 + d2).abs() - (params.t1 - params.t2).abs()).abs() < tol,
        eigvec_coalesce_at_pi: ((d1 - d2).abs() - (params.t1 + params.t2)).abs() < tol,
    }
}

/// True when the imaginary part of `E^2(k)` vanishes identically, i.e.
/// `t1 δ2 + t2 δ1 = 0` (equivalently `t1/t2 = −δ1/δ2`).
pub fn imag_energy_vanishes(params: &ModelParams, tol: f64) -> bool {
    (params.t1 * params.delta2 + params.t2 * params.delta1).abs() < tol
}

/// Exceptional circle of the PT-symmetric chain.
pub fn ep_circle_h2(params: &ModelParams) -> EpCircleH2 {
    assert_eq!(
        params.kind,
        ModelKind::ImaginaryPotential,
        "the exceptional circle belongs to the imaginary-potential chain"
    );
    EpCircleH2 {
        radius: params.u.abs(),
        d_center: (params.t1, 0.0),
        d_radius: params.t2.abs(),
    }
}

/// Wrap an angle difference into `[-pi, pi]`.
fn wrap_angle(d: f64) -> f64 {
    d - (d / (2.0 * PI)).round() * 2.0 * PI
}

/// Accumulate the winding of a closed planar curve around the origin.
///
/// `point(j)` must be 2π-periodic in `j` over `n_k` samples. Returns the
/// raw accumulated angle; the caller divides by 2π and rounds.
fn accumulate_winding(
    n_k: usize,
    mut point: impl FnMut(usize) -> (f64, f64),
) -> Result<f64, TopologyError> {
    let mut total = 0.0;
    let mut first = 0.0;
    let mut prev = 0.0;
    for j in 0..n_k {
        let (x, y) = point(j);
        let dist = x.hypot(y);
        if dist < EP_DISTANCE_TOL {
            let k = -PI + 2.0 * PI * j as f64 / n_k as f64;
            return Err(TopologyError::TransitionLine { k, distance: dist });
        }
        let angle = y.atan2(x);
        if j == 0 {
            first = angle;
        } else {
            total += wrap_angle(angle - prev);
        }
        prev = angle;
    }
    total += wrap_angle(first - prev);
    Ok(total)
}

fn rounded_winding(total: f64) -> (i64, f64) {
    let turns = total / (2.0 * PI);
    let rounded = turns.round();
    (rounded as i64, (turns - rounded).abs())
}

/// Winding number `ν = (ν1 + ν2)/2` of the non-reciprocal chain.
///
/// `ν1` and `ν2` are the windings of the real d-point around the two
/// moving exceptional points, accumulated as principal-value increments
/// of the angles
///
/// ```text
/// tan φ1 = (d_y^R + d_x^I) / (d_x^R − d_y^I)
/// tan φ2 = (d_y^R − d_x^I) / (d_x^R + d_y^I)
/// ```
///
/// over the Brillouin zone. Orientation is discarded: each count enters
/// as its absolute value, which keeps `ν ∈ {0, 1/2, 1}` over the whole
/// `(δ1, δ2)` plane.
pub fn winding_nu(params: &ModelParams, n_k: usize) -> Result<WindingResult, TopologyError> {
    assert_eq!(params.kind, ModelKind::NonReciprocal, "ν is defined for the non-reciprocal chain");
    if n_k < MIN_K_GRID {
        return Err(TopologyError::GridTooCoarse { n_k });
    }
    let d_at = |j: usize| {
        let k = -PI + 2.0 * PI * j as f64 / n_k as f64;
        d_vector(params, k)
    };
    let total1 = accumulate_winding(n_k, |j| {
        let d = d_at(j);
        (d.real_part[0] - d.imag_part[1], d.real_part[1] + d.imag_part[0])
    })?;
    let total2 = accumulate_winding(n_k, |j| {
        let d = d_at(j);
        (d.real_part[0] + d.imag_part[1], d.real_part[1] - d.imag_part[0])
    })?;
    let (w1, r1) = rounded_winding(total1);
    let (w2, r2) = rounded_winding(total2);
    let max_residue = r1.max(r2);
    if max_residue >= WINDING_RESIDUE_TOL {
        return Err(TopologyError::UnreliableWinding { residue: max_residue });
    }
    let nu1 = w1.unsigned_abs() as f64;
    let nu2 = w2.unsigned_abs() as f64;
    Ok(WindingResult { nu: 0.5 * (nu1 + nu2), nu1, nu2, n_k, max_residue })
}

/// Closed-form oracle for [`winding_nu`].
///
/// Relative to each moving exceptional point the d-point traces a circle:
/// radius `|t2 − δ2|` about `(t1 + δ1, 0)` for the first EP and radius
/// `|t2 + δ2|` about `(t1 − δ1, 0)` for the second. Each winding is 1
/// exactly when the circle encloses the origin, so
///
/// ```text
/// ν = ( [|t2 − δ2| > |t1 + δ1|] + [|t2 + δ2| > |t1 − δ1|] ) / 2
/// ```
///
/// Exact tangencies are reported as [`TopologyError::IndeterminateBoundary`].
pub fn winding_nu_oracle(params: &ModelParams) -> Result<f64, TopologyError> {
    assert_eq!(params.kind, ModelKind::NonReciprocal, "ν is defined for the non-reciprocal chain");
    let scale = params.t1.abs().max(params.t2.abs()).max(params.delta1.abs()).max(params.delta2.abs()).max(1.0);
    let tol = 1e-12 * scale;
    let mut count = 0u8;
    for (radius, center) in [
        ((params.t2 - params.delta2).abs(), (params.t1 + params.delta1).abs()),
        ((params.t2 + params.delta2).abs(), (params.t1 - params.delta1).abs()),
    ] {
        if (radius - center).abs() < tol {
            return Err(TopologyError::IndeterminateBoundary);
        }
        if radius > center {
            count += 1;
        }
    }
    Ok(count as f64 / 2.0)
}

/// Closed integral of `∂_k φ_I` over the Brillouin zone.
///
/// `φ_I = −(1/2) ln |d_+/d_−|` is real, continuous and periodic away from
/// the exceptional points, so the integral must vanish; the returned value
/// is the accumulated increment around the closed loop and serves as a
/// discretization diagnostic.
pub fn phi_imag_closure(params: &ModelParams, n_k: usize) -> Result<f64, TopologyError> {
    assert_eq!(params.kind, ModelKind::NonReciprocal, "φ_I belongs to the non-reciprocal chain");
    if n_k < MIN_K_GRID {
        return Err(TopologyError::GridTooCoarse { n_k });
    }
    let phi_i = |j: usize| -> Result<f64, TopologyError> {
        let k = -PI + 2.0 * PI * j as f64 / n_k as f64;
        let d = d_vector(params, k);
        // d± built from the d-vector components.
        let d_plus = Complex64::new(
            d.real_part[0] - d.imag_part[1],
            d.real_part[1] + d.imag_part[0],
        );
        let d_minus = Complex64::new(
            d.real_part[0] + d.imag_part[1],
            -(d.real_part[1] - d.imag_part[0]),
        );
        let (np, nm) = (d_plus.norm(), d_minus.norm());
        if np < EP_DISTANCE_TOL || nm < EP_DISTANCE_TOL {
            return Err(TopologyError::TransitionLine { k, distance: np.min(nm) });
        }
        Ok(-0.5 * (np.ln() - nm.ln()))
    };
    let first = phi_i(0)?;
    let mut prev = first;
    let mut total = 0.0;
    for j in 1..n_k {
        let value = phi_i(j)?;
        total += value - prev;
        prev = value;
    }
    total += first - prev;
    Ok(total)
}

/// Winding of the real d-vector `(d_x^R, d_y^R)` of the PT-symmetric chain
/// around the origin: 1 for `t1 < t2`, 0 for `t1 > t2`, independent of `u`.
pub fn winding_nu_h2(params: &ModelParams, n_k: usize) -> Result<f64, TopologyError> {
    assert_eq!(
        params.kind,
        ModelKind::ImaginaryPotential,
        "this winding belongs to the imaginary-potential chain"
    );
    if n_k < MIN_K_GRID {
        return Err(TopologyError::GridTooCoarse { n_k });
    }
    let total = accumulate_winding(n_k, |j| {
        let k = -PI + 2.0 * PI * j as f64 / n_k as f64;
        let d = d_vector(params, k);
        (d.real_part[0], d.real_part[1])
    })?;
    let (w, residue) = rounded_winding(total);
    if residue >= WINDING_RESIDUE_TOL {
        return Err(TopologyError::UnreliableWinding { residue });
    }
    Ok(w.unsigned_abs() as f64)
}

/// The interval of `u` on which the exceptional circle intersects the real
/// d-curve: `(|t1 − t2|, t1 + t2)`. Inside it `ν′` is fractional and the
/// PT-broken spectrum mixes real and imaginary eigenvalues.
pub fn reality_interval(params: &ModelParams) -> (f64, f64) {
    assert_eq!(
        params.kind,
        ModelKind::ImaginaryPotential,
        "the reality interval belongs to the imaginary-potential chain"
    );
    ((params.t1 - params.t2).abs(), params.t1 + params.t2)
}

/// Continuous winding number `ν′` of the PT-symmetric chain.
///
/// `ν′` is the fraction of the exceptional circle (radius `u` about the
/// origin) enclosed by the real d-curve (radius `t2` about `(t1, 0)`).
/// On the overlap interval `|t1 − t2| ≤ u ≤ t1 + t2` this is
///
/// ```text
/// ν′ = (1/π) · atan2( sqrt(((u+t1)² − t2²)(t2² − (u−t1)²)), u² + t1² − t2² )
/// ```
///
/// with the angle taken in `[0, π]` so that `ν′` is continuous across the
/// sign change of the denominator. Below the interval the circle is either
/// entirely enclosed (`t1 < t2`, `ν′ = 1`) or entirely outside
/// (`t1 > t2`, `ν′ = 0`); above it `ν′ = 0`.
pub fn winding_nu_prime(params: &ModelParams) -> f64 {
    assert_eq!(
        params.kind,
        ModelKind::ImaginaryPotential,
        "ν′ belongs to the imaginary-potential chain"
    );
    assert!(params.u >= 0.0 && params.t1 > 0.0, "ν′ needs u ≥ 0 and t1 > 0");
    let (u_low, u_high) = reality_interval(params);
    let u = params.u;
    if u <= u_low {
        return if params.t1 < params.t2 { 1.0 } else { 0.0 };
    }
    if u >= u_high {
        return 0.0;
    }
    let t1 = params.t1;
    let t2 = params.t2;
    let radicand = ((u + t1) * (u + t1) - t2 * t2) * (t2 * t2 - (u - t1) * (u - t1));
    let num = radicand.max(0.0).sqrt();
    let den = u * u + t1 * t1 - t2 * t2;
    num.atan2(den) / PI
}

/// Monte-Carlo oracle for [`winding_nu_prime`]: the fraction of points
/// sampled uniformly on the exceptional circle that fall inside the real
/// d-curve. Statistical error scales as `1/sqrt(n_samples)`.
pub fn winding_nu_prime_oracle(params: &ModelParams, n_samples: usize) -> f64 {
    winding_nu_prime_oracle_seeded(params, n_samples, 0x5558_ec01)
}

/// Seeded variant of [`winding_nu_prime_oracle`].
pub fn winding_nu_prime_oracle_seeded(params: &ModelParams, n_samples: usize, seed: u64) -> f64 {
    assert_eq!(
        params.kind,
        ModelKind::ImaginaryPotential,
        "ν′ belongs to the imaginary-potential chain"
    );
    assert!(n_samples > 0);
    let mut rng = SmallRng::seed_from_u64(seed);
    let u = params.u.abs();
    let t2_sq = params.t2 * params.t2;
    let mut inside = 0usize;
    for _ in 0..n_samples {
        let theta = rng.gen::<f64>() * 2.0 * PI;
        let (sin_t, cos_t) = theta.sin_cos();
        let dx = u * cos_t - params.t1;
        let dy = u * sin_t;
        if dx * dx + dy * dy < t2_sq {
            inside += 1;
        }
    }
    inside as f64 / n_samples as f64
}

/// Bi-orthogonal eigenvector pair of the 2×2 traceless matrix
/// `[[a, b], [c, -a]]` for eigenvalue `e`, as (right column, left row).
///
/// The fixed representation `ψ = (b, e − a)`, `ℓ = (c, e − a)` is the
/// analytic `(θ_k, φ_k)` eigenvector family up to a per-k scale, so its
/// components carry no extra winding across the Brillouin zone; that keeps
/// the accumulated Berry phase in the gauge where the quantized values are
/// `0` and `2π` rather than shifted by full turns. The pairing
/// `ℓ·ψ = 2e(e − a)` vanishes only where the off-diagonals do.
fn eigenpair_2x2(
    b: Complex64,
    c: Complex64,
    e: Complex64,
    a: Complex64,
) -> ([Complex64; 2], [Complex64; 2]) {
    ([b, e - a], [c, e - a])
}

fn bilinear(l: &[Complex64; 2], r: &[Complex64; 2]) -> Complex64 {
    l[0] * r[0] + l[1] * r[1]
}

/// Complex (bi-orthogonal) Berry phase of the PT-symmetric chain.
///
/// Per band the phase is accumulated as the gauge-invariant product
///
/// ```text
/// Q_n = −Im Σ_j log[ ⟨λ_n(k_j)|ψ_n(k_{j+1})⟩ / ⟨λ_n(k_j)|ψ_n(k_j)⟩ ]
/// ```
///
/// over a closed uniform grid (`k_{N+1} ≡ k_1`), with the bra the left
/// eigenvector; every per-point normalization and gauge factor cancels
/// between consecutive factors. The accumulated logs are kept unreduced so
/// `q_global = 2π` and `q_global = 0` are distinguished.
///
/// Fails with [`TopologyError::BandTouching`] when the bands touch
/// somewhere in the zone — `|E_+|` dips below 1e−6 on the grid, or `u`
/// lies inside the closed crossing interval `[|t1 − t2|, t1 + t2]` where
/// `E²(k)` changes sign — or when the Bloch off-diagonal vanishes
/// (`t1 = t2` with large `u`), which degenerates the eigenvector gauge.
pub fn complex_berry_phase(params: &ModelParams, n_k: usize) -> Result<BerryResult, TopologyError> {
    assert_eq!(
        params.kind,
        ModelKind::ImaginaryPotential,
        "the complex Berry phase is computed for the imaginary-potential chain"
    );
    if n_k < MIN_K_GRID {
        return Err(TopologyError::GridTooCoarse { n_k });
    }

    let e_plus_at = |j: usize| -> Complex64 {
        let k = -PI + 2.0 * PI * j as f64 / n_k as f64;
        crate::model::dispersion(params, k).0
    };

    let mut min_gap = f64::INFINITY;
    for j in 0..n_k {
        min_gap = min_gap.min(e_plus_at(j).norm());
    }
    let (u_low, u_high) = reality_interval(params);
    let crossing = params.u.abs() >= u_low && params.u.abs() <= u_high;
    let min_offdiag = (params.t1.abs() - params.t2.abs()).abs();
    if min_gap <= 1e-6 || crossing || min_offdiag < 1e-12 {
        return Err(TopologyError::BandTouching { min_gap });
    }

    let vectors_at = |j: usize, band_sign: f64| -> ([Complex64; 2], [Complex64; 2]) {
        let k = -PI + 2.0 * PI * j as f64 / n_k as f64;
        let a = Complex64::new(0.0, params.u);
        let b = Complex64::new(params.t1, 0.0) + params.t2 * Complex64::new(0.0, -k).exp();
        let c = b.conj();
        let e = band_sign * e_plus_at(j);
        eigenpair_2x2(b, c, e, a)
    };

    let mut phases = [0.0f64; 2];
    for (slot, band_sign) in [(0usize, 1.0), (1usize, -1.0)] {
        let mut sum = 0.0;
        let (first_right, _) = vectors_at(0, band_sign);
        let (mut prev_right, mut prev_left) = (first_right, vectors_at(0, band_sign).1);
        for j in 1..=n_k {
            let (right, left) = if j == n_k {
                (first_right, vectors_at(0, band_sign).1)
            } else {
                vectors_at(j, band_sign)
            };
            let factor = bilinear(&prev_left, &right) / bilinear(&prev_left, &prev_right);
            sum += factor.arg();
            prev_right = right;
            prev_left = left;
        }
        phases[slot] = -sum;
    }

    let q_global = phases[0] + phases[1];
    let turns = q_global / (2.0 * PI);
    Ok(BerryResult {
        q_plus: phases[0],
        q_minus: phases[1],
        q_global,
        n_k,
        quantization_residue: (q_global - turns.round() * 2.0 * PI).abs(),
    })
}
