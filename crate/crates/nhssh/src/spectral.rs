//! Complex spectra under periodic and open boundaries.
//!
//! The general eigensolver wraps the system LAPACK's dense non-symmetric
//! decomposition (`zgeev` through LAPACKE): right eigenvectors solve
//! `Hψ = Eψ`, left eigenvectors solve the adjoint problem
//! `H†λ = E*λ`, returned paired by eigenvalue index and rescaled here to
//! the bi-orthonormal convention `⟨λ_n|ψ_m⟩ = δ_nm`. Near-defective pairs
//! — bi-orthogonal overlap below [`DEFECTIVE_OVERLAP_TOL`] before
//! rescaling — are flagged, not fatal; strongly non-normal chains (the
//! skin-effect regime) flag most of their pairs this way, which is exactly
//! the exponential ill-conditioning of their eigenbases.

use core::ffi::{c_char, c_int};

use ndarray::Array2;
use num_complex::Complex64;
use thiserror::Error;

use nhssh_core::model::{self, ModelError, ModelParams};

const LAPACK_ROW_MAJOR: c_int = 101;

extern "C" {
    // /usr/include/lapacke.h; lapack_complex_double is bit-compatible
    // with num_complex::Complex64 (two contiguous f64).
    fn LAPACKE_zgeev(
        matrix_layout: c_int,
        jobvl: c_char,
        jobvr: c_char,
        n: c_int,
        a: *mut Complex64,
        lda: c_int,
        w: *mut Complex64,
        vl: *mut Complex64,
        ldvl: c_int,
        vr: *mut Complex64,
        ldvr: c_int,
    ) -> c_int;
}

/// Boundary condition tag carried by a [`Spectrum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Pbc,
    Obc,
}

/// Bi-orthogonal overlap below which an eigenpair is flagged near-defective.
pub const DEFECTIVE_OVERLAP_TOL: f64 = 1e-8;

/// Default `|E|` tolerance for zero-mode counting at ~50 unit cells.
pub const ZERO_MODE_TOL: f64 = 1e-6;

/// Default reality tolerance relative to the spectral radius, analytic
/// (Bloch) spectra.
pub const PBC_REALITY_RTOL: f64 = 1e-9;

/// Default reality tolerance relative to the spectral radius, dense
/// eigensolver output.
pub const OBC_REALITY_RTOL: f64 = 1e-6;

/// Minimum number of momentum points for gap classification.
pub const GAP_MIN_K_POINTS: usize = 401;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("matrix must be square and non-empty, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("zgeev failed to converge: {failed} eigenvalue(s) unresolved at the iteration cap")]
    Convergence { failed: i32 },
    #[error("zgeev rejected argument {arg} (internal error)")]
    BadArgument { arg: i32 },
    #[error("momentum grid is empty")]
    EmptyGrid,
    #[error("gap classification needs >= {min} momentum points, got {got}")]
    GridTooCoarse { got: usize, min: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Full complex eigendecomposition with bi-orthogonal left/right pairs.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub boundary: Boundary,
    pub eigenvalues: Vec<Complex64>,
    /// Column `n` is the right eigenvector of `eigenvalues[n]`, unit norm.
    pub right_vectors: Array2<Complex64>,
    /// Column `n` is the left eigenvector, rescaled so `⟨λ_n|ψ_n⟩ = 1`
    /// except for flagged near-defective pairs (kept at unit norm).
    pub left_vectors: Array2<Complex64>,
    /// `max_n ‖Hψ_n − E_nψ_n‖ / max(1, |E_n|)`.
    pub residual: f64,
    /// Indices whose bi-orthogonal overlap fell below
    /// [`DEFECTIVE_OVERLAP_TOL`] before rescaling.
    pub near_defective: Vec<usize>,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// Classification of a spectrum into real / imaginary / complex counts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealityReport {
    pub n_real: usize,
    pub n_imaginary: usize,
    pub n_complex: usize,
    pub tol: f64,
}

/// Spectral gap type of a periodic spectrum in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapKind {
    /// Spectrum avoids the point `E = 0` but neither line.
    PointGap,
    /// Spectrum avoids the line `Re E = 0`.
    LineGapRe,
    /// Spectrum avoids the line `Im E = 0`.
    LineGapIm,
    Gapless,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GapClass {
    pub kind: GapKind,
    /// Distance of the spectrum from the reference point/line.
    pub margin: f64,
}

/// Raw `zgeev` call; the input buffer is overwritten.
fn zgeev(
    n: usize,
    a: &mut [Complex64],
) -> Result<(Vec<Complex64>, Vec<Complex64>, Vec<Complex64>), SpectralError> {
    let mut w = vec![Complex64::new(0.0, 0.0); n];
    let mut vl = vec![Complex64::new(0.0, 0.0); n * n];
    let mut vr = vec![Complex64::new(0.0, 0.0); n * n];
    let info = unsafe {
        LAPACKE_zgeev(
            LAPACK_ROW_MAJOR,
            b'V' as c_char,
            b'V' as c_char,
            n as c_int,
            a.as_mut_ptr(),
            n as c_int,
            w.as_mut_ptr(),
            vl.as_mut_ptr(),
            n as c_int,
            vr.as_mut_ptr(),
            n as c_int,
        )
    };
    if info > 0 {
        return Err(SpectralError::Convergence { failed: info });
    }
    if info < 0 {
        return Err(SpectralError::BadArgument { arg: -info });
    }
    Ok((w, vl, vr))
}

/// Dense eigendecomposition of a general complex matrix.
pub fn eig_general(
    matrix: &Array2<Complex64>,
    boundary: Boundary,
) -> Result<Spectrum, SpectralError> {
    let (rows, cols) = matrix.dim();
    if rows != cols || rows == 0 {
        return Err(SpectralError::NotSquare { rows, cols });
    }
    let n = rows;

    let mut work: Vec<Complex64> = matrix.iter().copied().collect();
    let (eigenvalues, vl, vr) = zgeev(n, &mut work)?;
    // Row-major storage: column j of the eigenvector matrix is vector j.
    let right_vectors =
        Array2::from_shape_vec((n, n), vr).expect("zgeev output has n*n entries");
    let left_raw = Array2::from_shape_vec((n, n), vl).expect("zgeev output has n*n entries");
    Ok(assemble_spectrum(matrix, boundary, eigenvalues, right_vectors, left_raw))
}

/// Bi-orthonormalize left/right pairs, flag near-defective ones and
/// measure the backward error against `matrix`.
fn assemble_spectrum(
    matrix: &Array2<Complex64>,
    boundary: Boundary,
    eigenvalues: Vec<Complex64>,
    right_vectors: Array2<Complex64>,
    left_raw: Array2<Complex64>,
) -> Spectrum {
    let n = eigenvalues.len();
    let mut left_vectors = Array2::zeros((n, n));
    let mut near_defective = Vec::new();
    for i in 0..n {
        let lambda = left_raw.column(i);
        let psi = right_vectors.column(i);
        let overlap: Complex64 = lambda.iter().zip(psi.iter()).map(|(l, p)| l.conj() * p).sum();
        if overlap.norm() < DEFECTIVE_OVERLAP_TOL {
            near_defective.push(i);
            left_vectors.column_mut(i).assign(&lambda);
        } else {
            let scale = overlap.conj().inv();
            left_vectors.column_mut(i).assign(&lambda.mapv(|z| z * scale));
        }
    }

    // Scaled backward error, one matvec per eigenpair.
    let mut residual = 0.0f64;
    let products = matrix.dot(&right_vectors);
    for i in 0..n {
        let psi = right_vectors.column(i);
        let hpsi = products.column(i);
        let mut err = 0.0;
        for (hp, p) in hpsi.iter().zip(psi.iter()) {
            err += (hp - eigenvalues[i] * p).norm_sqr();
        }
        residual = residual.max(err.sqrt() / eigenvalues[i].norm().max(1.0));
    }

    Spectrum { boundary, eigenvalues, right_vectors, left_vectors, residual, near_defective }
}

/// Exact diagonal gauge `ln D_ii` that equilibrates the moduli of the
/// chain's non-reciprocal hopping pairs, or `None` when the chain is
/// already reciprocal or a bond is strictly one-way (no diagonal gauge
/// exists).
///
/// The raw open-chain matrix is exponentially non-normal: its eigenbasis
/// condition number grows like the compounded hopping-ratio gauge
/// (~2^{n_cells}), and a backward-stable dense solver then loses most
///.figures of the spectrum — including spurious imaginary parts on what
/// is provably a real spectrum. Conjugating by `D` first reduces the
/// problem to an equilibrated (for positive hopping products, real
/// symmetric) matrix, after which the eigenvalues are accurate to machine
/// precision and the true eigenvectors are recovered as `ψ = Dψ̃`,
/// `λ = D⁻¹λ̃`.
fn chain_gauge_log_scale(params: &ModelParams, dim: usize) -> Option<Vec<f64>> {
    if params.kind != model::ModelKind::NonReciprocal
        || (params.delta1 == 0.0 && params.delta2 == 0.0)
    {
        return None;
    }
    let intra_forward = params.t1 - params.delta1;
    let intra_backward = params.t1 + params.delta1;
    let inter_forward = params.t2 - params.delta2;
    let inter_backward = params.t2 + params.delta2;
    if intra_forward == 0.0
        || intra_backward == 0.0
        || inter_forward == 0.0
        || inter_backward == 0.0
    {
        return None;
    }
    // |H~[i,j]| = |H~[j,i]| per bond needs ln s_j - ln s_i = (1/2) ln |H[j,i]/H[i,j]|.
    let intra_step = 0.5 * (intra_backward / intra_forward).abs().ln();
    let inter_step = 0.5 * (inter_backward / inter_forward).abs().ln();
    let mut log_scale = Vec::with_capacity(dim);
    let mut acc = 0.0;
    for site in 0..dim {
        if site > 0 {
            acc += if site % 2 == 1 { intra_step } else { inter_step };
        }
        log_scale.push(acc);
    }
    let mean = log_scale.iter().sum::<f64>() / dim as f64;
    for v in &mut log_scale {
        *v -= mean;
    }
    Some(log_scale)
}

/// Undo the gauge on eigenvector columns (`sign` +1 for right vectors,
/// -1 for left) and restore unit norms. The per-column max-shift keeps
/// the rescaling overflow-safe even when the gauge spans hundreds of
/// orders of magnitude; entries that underflow to zero are genuinely
/// below representable range.
fn ungauge_columns(
    mut v: Vec<Complex64>,
    n: usize,
    log_scale: &[f64],
    sign: f64,
) -> Array2<Complex64> {
    for j in 0..n {
        let mut shift = f64::NEG_INFINITY;
        for i in 0..n {
            let a = v[i * n + j].norm();
            if a > 0.0 {
                shift = shift.max(sign * log_scale[i] + a.ln());
            }
        }
        if !shift.is_finite() {
            continue;
        }
        let mut norm_sq = 0.0;
        for i in 0..n {
            v[i * n + j] *= (sign * log_scale[i] - shift).exp();
            norm_sq += v[i * n + j].norm_sqr();
        }
        let norm = norm_sq.sqrt();
        for i in 0..n {
            v[i * n + j] /= norm;
        }
    }
    Array2::from_shape_vec((n, n), v).expect("column count unchanged")
}

/// Bloch eigenvalue pairs `(k, E_+, E_-)` over a momentum grid, via the
/// analytic dispersion.
pub fn pbc_spectrum(
    params: &ModelParams,
    k_grid: &[f64],
) -> Result<Vec<(f64, Complex64, Complex64)>, SpectralError> {
    if k_grid.is_empty() {
        return Err(SpectralError::EmptyGrid);
    }
    Ok(k_grid
        .iter()
        .map(|&k| {
            let (ep, em) = model::dispersion(params, k);
            (k, ep, em)
        })
        .collect())
}

/// Flatten a PBC spectrum into a plain list of eigenvalues.
pub fn pbc_eigenvalues(params: &ModelParams, k_grid: &[f64]) -> Result<Vec<Complex64>, SpectralError> {
    Ok(pbc_spectrum(params, k_grid)?
        .into_iter()
        .flat_map(|(_, ep, em)| [ep, em])
        .collect())
}

/// Dense spectrum of the open chain with `n_cells` unit cells.
///
/// Non-reciprocal chains are conjugated by the exact hopping-ratio gauge
/// before the dense solve (see [`chain_gauge_log_scale`]); eigenvalues are
/// those of the gauged matrix (identical in exact arithmetic, far more
/// accurate in floating point) and the eigenvectors are transformed back,
/// so all reported quantities — including the backward error and the
/// bi-orthogonal overlaps — refer to the original open-chain matrix.
pub fn obc_spectrum(params: &ModelParams, n_cells: usize) -> Result<Spectrum, SpectralError> {
    let h = model::open_chain_hamiltonian(params, n_cells)?;
    let dim = h.dim();
    let matrix = Array2::from_shape_vec((dim, dim), h.into_vec()).expect("row-major square data");
    let log_scale = match chain_gauge_log_scale(params, dim) {
        None => return eig_general(&matrix, Boundary::Obc),
        Some(s) => s,
    };

    let zero = Complex64::new(0.0, 0.0);
    let mut gauged = matrix.clone();
    for i in 0..dim {
        for j in 0..dim {
            if gauged[(i, j)] != zero {
                gauged[(i, j)] *= (log_scale[j] - log_scale[i]).exp();
            }
        }
    }
    let mut work: Vec<Complex64> = gauged.iter().copied().collect();
    let (eigenvalues, vl, vr) = zgeev(dim, &mut work)?;
    let right_vectors = ungauge_columns(vr, dim, &log_scale, 1.0);
    let left_raw = ungauge_columns(vl, dim, &log_scale, -1.0);
    Ok(assemble_spectrum(&matrix, Boundary::Obc, eigenvalues, right_vectors, left_raw))
}

/// Indices of eigenvalues with `|E| < tol`.
pub fn zero_modes(eigenvalues: &[Complex64], tol: f64) -> Vec<usize> {
    assert!(tol > 0.0);
    eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, e)| e.norm() < tol)
        .map(|(i, _)| i)
        .collect()
}

/// Reality tolerance scaled to the spectral radius.
pub fn reality_tolerance(eigenvalues: &[Complex64], rtol: f64) -> f64 {
    let radius = eigenvalues.iter().map(|e| e.norm()).fold(0.0f64, f64::max);
    rtol * radius.max(1.0)
}

/// Count purely real, purely imaginary and truly complex eigenvalues.
///
/// `|Im E| < tol` classifies as real, otherwise `|Re E| < tol` as
/// imaginary; a value under both tolerances counts as real (it represents
/// `|E| ≈ 0`).
pub fn classify_reality(eigenvalues: &[Complex64], tol: f64) -> RealityReport {
    assert!(tol > 0.0);
    let mut report = RealityReport { n_real: 0, n_imaginary: 0, n_complex: 0, tol };
    for e in eigenvalues {
        if e.im.abs() < tol {
            report.n_real += 1;
        } else if e.re.abs() < tol {
            report.n_imaginary += 1;
        } else {
            report.n_complex += 1;
        }
    }
    report
}

/// Gap-classification tolerance adapted to the sampling density.
///
/// A spectrum that crosses a reference line between two grid momenta
/// leaves a spurious distance floor of order `slope · Δk`, so the
/// tolerance must scale with the grid spacing; genuine gap margins for
/// the chains here are O(bandwidth) and sit far above it.
pub fn gap_tolerance(pbc_eigenvalues: &[Complex64]) -> f64 {
    let radius = pbc_eigenvalues.iter().map(|e| e.norm()).fold(0.0f64, f64::max);
    let k_points = (pbc_eigenvalues.len() / 2).max(1);
    radius.max(1.0) * 4.0 * std::f64::consts::PI / k_points as f64
}

/// Classify the gap type of a periodic spectrum.
///
/// Line gaps take precedence over the point gap: `LineGapRe` when
/// `min |Re E| > tol`, then `LineGapIm` when `min |Im E| > tol`, then
/// `PointGap` when `min |E| > tol`, else `Gapless`. Expects the
/// eigenvalues of a dense k-grid with at least [`GAP_MIN_K_POINTS`]
/// momenta (two bands per momentum); [`gap_tolerance`] gives a suitable
/// `tol` for that grid.
pub fn gap_classify(pbc_eigenvalues: &[Complex64], tol: f64) -> Result<GapClass, SpectralError> {
    let k_points = pbc_eigenvalues.len() / 2;
    if k_points < GAP_MIN_K_POINTS {
        return Err(SpectralError::GridTooCoarse { got: k_points, min: GAP_MIN_K_POINTS });
    }
    let mut min_re = f64::INFINITY;
    let mut min_im = f64::INFINITY;
    let mut min_abs = f64::INFINITY;
    for e in pbc_eigenvalues {
        min_re = min_re.min(e.re.abs());
        min_im = min_im.min(e.im.abs());
        min_abs = min_abs.min(e.norm());
    }
    let (kind, margin) = if min_re > tol {
        (GapKind::LineGapRe, min_re)
    } else if min_im > tol {
        (GapKind::LineGapIm, min_im)
    } else if min_abs > tol {
        (GapKind::PointGap, min_abs)
    } else {
        (GapKind::Gapless, min_abs)
    };
    Ok(GapClass { kind, margin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use nhssh_core::bz_grid;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_spectrum() {
        let m = Array2::<Complex64>::eye(4);
        let s = eig_general(&m, Boundary::Pbc).unwrap();
        for e in &s.eigenvalues {
            assert_abs_diff_eq!((e - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
        }
        assert!(s.residual < 1e-12);
        assert!(s.near_defective.is_empty());
    }

    #[test]
    fn jordan_block_is_flagged() {
        let m = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]];
        let s = eig_general(&m, Boundary::Pbc).unwrap();
        for e in &s.eigenvalues {
            assert!(e.norm() < 1e-12);
        }
        assert!(!s.near_defective.is_empty(), "Jordan block must be flagged defective");
    }

    #[test]
    fn bloch_matrix_eigenvalues_match_dispersion() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 0.5).unwrap();
        let h = model::bloch_matrix(&p, 0.0).entries;
        let m = array![[h[0][0], h[0][1]], [h[1][0], h[1][1]]];
        let s = eig_general(&m, Boundary::Pbc).unwrap();
        let mut evals: Vec<f64> = s.eigenvalues.iter().map(|e| e.re).collect();
        evals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_abs_diff_eq!(evals[0], -3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(evals[1], 3.0, epsilon = 1e-10);
    }

    #[test]
    fn rejects_non_square() {
        let m = Array2::<Complex64>::zeros((2, 3));
        assert!(matches!(
            eig_general(&m, Boundary::Pbc),
            Err(SpectralError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn biorthonormality_away_from_defective_pairs() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let s = obc_spectrum(&p, 10).unwrap();
        for n in 0..s.dim() {
            if s.near_defective.contains(&n) {
                continue;
            }
            for m in 0..s.dim() {
                if s.near_defective.contains(&m) {
                    continue;
                }
                let overlap: Complex64 = s
                    .left_vectors
                    .column(n)
                    .iter()
                    .zip(s.right_vectors.column(m).iter())
                    .map(|(l, p)| l.conj() * p)
                    .sum();
                let expected = if n == m { 1.0 } else { 0.0 };
                assert!(
                    (overlap.norm() - expected).abs() < 1e-8,
                    "<lambda_{n}|psi_{m}> = {overlap}"
                );
            }
        }
    }

    #[test]
    fn obc_nonreciprocal_is_real_with_zero_modes() {
        // nu = 1 parameters: real spectrum, two near-zero modes.
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 0.3).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let max_im = s.eigenvalues.iter().map(|e| e.im.abs()).fold(0.0f64, f64::max);
        assert!(max_im < 1e-8, "OBC spectrum should be real, max |Im E| = {max_im:e}");
        assert_eq!(zero_modes(&s.eigenvalues, ZERO_MODE_TOL).len(), 2);
        assert!(s.residual < 1e-8);
    }

    #[test]
    fn obc_pt_edge_modes_at_plus_minus_iu() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let near_iu = s
            .eigenvalues
            .iter()
            .filter(|e| (*e - c(0.0, 2.0)).norm() < 1e-6 || (*e + c(0.0, 2.0)).norm() < 1e-6)
            .count();
        assert_eq!(near_iu, 2);

        // Trivial dimerization: no eigenvalue anywhere near +-iu.
        let p = ModelParams::imaginary_potential(1.0, 0.5, 2.0).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let closest = s
            .eigenvalues
            .iter()
            .map(|e| (*e - c(0.0, 2.0)).norm().min((*e + c(0.0, 2.0)).norm()))
            .fold(f64::INFINITY, f64::min);
        assert!(closest > 1e-3, "closest approach to +-iu was {closest:e}");
    }

    #[test]
    fn zero_mode_counts_match_phase() {
        let topological = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let s = obc_spectrum(&topological, 50).unwrap();
        assert_eq!(zero_modes(&s.eigenvalues, ZERO_MODE_TOL).len(), 2);

        let trivial = ModelParams::non_reciprocal(1.0, 0.5, 0.5, 0.3).unwrap();
        let s = obc_spectrum(&trivial, 50).unwrap();
        assert_eq!(zero_modes(&s.eigenvalues, ZERO_MODE_TOL).len(), 0);

        let pt = ModelParams::imaginary_potential(1.0, 2.0, 1.0).unwrap();
        let s = obc_spectrum(&pt, 50).unwrap();
        assert_eq!(zero_modes(&s.eigenvalues, ZERO_MODE_TOL).len(), 0);
    }

    #[test]
    fn pbc_reality_classes_across_u() {
        let grid = bz_grid(1001);
        let real_only = pbc_eigenvalues(
            &ModelParams::imaginary_potential(1.0, 2.0, 0.5).unwrap(),
            &grid,
        )
        .unwrap();
        let tol = reality_tolerance(&real_only, PBC_REALITY_RTOL);
        let r = classify_reality(&real_only, tol);
        assert_eq!((r.n_imaginary, r.n_complex), (0, 0));

        let mixed =
            pbc_eigenvalues(&ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap(), &grid)
                .unwrap();
        let tol = reality_tolerance(&mixed, PBC_REALITY_RTOL);
        let r = classify_reality(&mixed, tol);
        assert!(r.n_real > 0 && r.n_imaginary > 0);

        let imag_only =
            pbc_eigenvalues(&ModelParams::imaginary_potential(1.0, 2.0, 3.5).unwrap(), &grid)
                .unwrap();
        let tol = reality_tolerance(&imag_only, PBC_REALITY_RTOL);
        let r = classify_reality(&imag_only, tol);
        assert_eq!(r.n_real, 0);
    }

    #[test]
    fn gap_classes_match_winding_sectors() {
        let grid = bz_grid(1001);
        let classify = |params: &ModelParams| {
            let eigenvalues = pbc_eigenvalues(params, &grid).unwrap();
            gap_classify(&eigenvalues, gap_tolerance(&eigenvalues)).unwrap().kind
        };

        // nu = 1 region carries a real line gap, nu = 0.5 a point gap.
        assert_eq!(
            classify(&ModelParams::non_reciprocal(1.0, 2.0, 0.1, 0.1).unwrap()),
            GapKind::LineGapRe
        );
        assert_eq!(
            classify(&ModelParams::non_reciprocal(1.0, 2.0, 0.1, 1.2).unwrap()),
            GapKind::PointGap
        );
        assert_eq!(
            classify(&ModelParams::non_reciprocal(1.0, 1.0, 0.0, 0.0).unwrap()),
            GapKind::Gapless
        );
        // All-imaginary PT spectrum is separated by the real axis.
        assert_eq!(
            classify(&ModelParams::imaginary_potential(1.0, 2.0, 3.5).unwrap()),
            GapKind::LineGapIm
        );
    }

    #[test]
    fn gap_classify_rejects_coarse_grid() {
        let few = vec![c(1.0, 0.0); 100];
        assert!(matches!(
            gap_classify(&few, 1e-6),
            Err(SpectralError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn chiral_pairing_survives_open_boundaries() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.6, 1.3).unwrap();
        let s = obc_spectrum(&p, 30).unwrap();
        for e in &s.eigenvalues {
            let closest = s
                .eigenvalues
                .iter()
                .map(|f| (f + e).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(closest < 1e-8, "missing -E partner for E = {e}");
        }
    }

    #[test]
    fn pt_pairing_survives_open_boundaries() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let s = obc_spectrum(&p, 30).unwrap();
        for e in &s.eigenvalues {
            let closest = s
                .eigenvalues
                .iter()
                .map(|f| (f - e.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(closest < 1e-8, "missing E* partner for E = {e}");
        }
    }
}
