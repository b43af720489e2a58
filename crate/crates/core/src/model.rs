//! Model Hamiltonians in Bloch and real-space form.
//!
//! Two non-Hermitian dimerized chains are supported:
//!
//! - [`ModelKind::NonReciprocal`]: asymmetric hopping `t1 ∓ δ1` within the
//!   unit cell and `t2 ∓ δ2` between cells. Chiral symmetric
//!   (`σ_z h σ_z = −h`), not PT symmetric.
//! - [`ModelKind::ImaginaryPotential`]: reciprocal hopping `t1`, `t2` with a
//!   staggered on-site potential `±iu`. PT symmetric
//!   (`σ_x h σ_x = h*`), not chiral symmetric for `u ≠ 0`.
//!
//! Setting `δ1 = δ2 = u = 0` recovers the Hermitian SSH chain in both cases.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

/// Which of the two non-Hermitian chains a parameter set describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// Non-reciprocal hopping, `u = 0`.
    NonReciprocal,
    /// Staggered imaginary potential, `δ1 = δ2 = 0`.
    ImaginaryPotential,
}

/// Validated parameter set for either chain.
///
/// `t1` is the intra-cell and `t2` the inter-cell hopping amplitude;
/// `delta1`/`delta2` are the corresponding non-reciprocities and `u` the
/// strength of the imaginary staggered potential (all in energy units).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub kind: ModelKind,
    pub t1: f64,
    pub t2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub u: f64,
}

/// Construction errors for [`ModelParams`] and the real-space builder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// A parameter was NaN or infinite.
    NonFinite,
    /// `u ≠ 0` for the non-reciprocal chain, or `δ ≠ 0` for the
    /// imaginary-potential chain.
    MixedParameterization,
    /// Open chains need at least two unit cells.
    ChainTooShort,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NonFinite => write!(f, "model parameters must be finite"),
            ModelError::MixedParameterization => write!(
                f,
                "non-reciprocity (delta1, delta2) and imaginary potential (u) are exclusive"
            ),
            ModelError::ChainTooShort => write!(f, "open chain needs at least 2 unit cells"),
        }
    }
}

impl core::error::Error for ModelError {}

impl ModelParams {
    /// Validate a full parameter set.
    pub fn new(
        kind: ModelKind,
        t1: f64,
        t2: f64,
        delta1: f64,
        delta2: f64,
        u: f64,
    ) -> Result<Self, ModelError> {
        if ![t1, t2, delta1, delta2, u].iter().all(|x| x.is_finite()) {
            return Err(ModelError::NonFinite);
        }
        match kind {
            ModelKind::NonReciprocal if u != 0.0 => return Err(ModelError::MixedParameterization),
            ModelKind::ImaginaryPotential if delta1 != 0.0 || delta2 != 0.0 => {
                return Err(ModelError::MixedParameterization)
            }
            _ => {}
        }
        Ok(ModelParams { kind, t1, t2, delta1, delta2, u })
    }

    /// Non-reciprocal chain `(t1 ∓ δ1, t2 ∓ δ2)`.
    pub fn non_reciprocal(t1: f64, t2: f64, delta1: f64, delta2: f64) -> Result<Self, ModelError> {
        Self::new(ModelKind::NonReciprocal, t1, t2, delta1, delta2, 0.0)
    }

    /// Reciprocal chain with staggered potential `±iu`.
    pub fn imaginary_potential(t1: f64, t2: f64, u: f64) -> Result<Self, ModelError> {
        Self::new(ModelKind::ImaginaryPotential, t1, t2, 0.0, 0.0, u)
    }
}

/// 2×2 Bloch Hamiltonian evaluated at one momentum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochMatrix {
    /// Row-major entries `[[h00, h01], [h10, h11]]`.
    pub entries: [[Complex64; 2]; 2],
    /// Crystal momentum in `[-pi, pi]`.
    pub k: f64,
}

/// Dirac decomposition `h(k) = d · σ` split into real and imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DVector {
    /// `(d_x^R, d_y^R, d_z^R)`
    pub real_part: [f64; 3],
    /// `(d_x^I, d_y^I, d_z^I)`
    pub imag_part: [f64; 3],
    pub k: f64,
}

impl DVector {
    /// Complex component `d_x`.
    pub fn dx(&self) -> Complex64 {
        Complex64::new(self.real_part[0], self.imag_part[0])
    }

    /// Complex component `d_y`.
    pub fn dy(&self) -> Complex64 {
        Complex64::new(self.real_part[1], self.imag_part[1])
    }

    /// Complex component `d_z`.
    pub fn dz(&self) -> Complex64 {
        Complex64::new(self.real_part[2], self.imag_part[2])
    }

    /// Reconstruct the Bloch matrix `d · σ`.
    pub fn dot_sigma(&self) -> [[Complex64; 2]; 2] {
        let (dx, dy, dz) = (self.dx(), self.dy(), self.dz());
        let i = Complex64::i();
        [[dz, dx - i * dy], [dx + i * dy, -dz]]
    }
}

/// Residuals of the chiral and PT symmetry relations over a k-sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetryVerdict {
    /// `σ_z h(k) σ_z = −h(k)` holds on every sample.
    pub chiral: bool,
    /// `σ_x h(k) σ_x = h*(k)` holds on every sample.
    pub pt: bool,
    /// Largest entrywise violation of either relation.
    pub max_residual: f64,
    /// Largest entrywise violation of the chiral relation.
    pub chiral_residual: f64,
    /// Largest entrywise violation of the PT relation.
    pub pt_residual: f64,
}

/// Tolerance on the entrywise symmetry residuals.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Bloch Hamiltonian `h(k)` of the selected chain.
///
/// Non-reciprocal: off-diagonals `(t1−δ1) + (t2+δ2) e^{−ik}` and
/// `(t1+δ1) + (t2−δ2) e^{ik}`, zero diagonal. Imaginary potential:
/// diagonal `(+iu, −iu)` with reciprocal off-diagonals `t1 + t2 e^{∓ik}`.
pub fn bloch_matrix(params: &ModelParams, k: f64) -> BlochMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let phase_m = Complex64::new(0.0, -k).exp();
    let phase_p = Complex64::new(0.0, k).exp();
    let entries = match params.kind {
        ModelKind::NonReciprocal => {
            let upper = Complex64::new(params.t1 - params.delta1, 0.0)
                + (params.t2 + params.delta2) * phase_m;
            let lower = Complex64::new(params.t1 + params.delta1, 0.0)
                + (params.t2 - params.delta2) * phase_p;
            [[zero, upper], [lower, zero]]
        }
        ModelKind::ImaginaryPotential => {
            let w = Complex64::new(params.t1, 0.0) + params.t2 * phase_m;
            [[Complex64::new(0.0, params.u), w], [w.conj(), Complex64::new(0.0, -params.u)]]
        }
    };
    BlochMatrix { entries, k }
}

/// d-vector of `h(k)`.
///
/// Non-reciprocal: `d^R = (t1 + t2 cos k, t2 sin k, 0)`,
/// `d^I = (−δ2 sin k, −δ1 + δ2 cos k, 0)`. Imaginary potential: the same
/// `d^R` with `d^I = (0, 0, u)`.
pub fn d_vector(params: &ModelParams, k: f64) -> DVector {
    let (sin_k, cos_k) = k.sin_cos();
    let real_part = [params.t1 + params.t2 * cos_k, params.t2 * sin_k, 0.0];
    let imag_part = match params.kind {
        ModelKind::NonReciprocal => [
            -params.delta2 * sin_k,
            -params.delta1 + params.delta2 * cos_k,
            0.0,
        ],
        ModelKind::ImaginaryPotential => [0.0, 0.0, params.u],
    };
    DVector { real_part, imag_part, k }
}

/// Analytic band energies `(E_+, E_−)` at momentum `k`.
///
/// The square root is the principal branch (nonnegative real part, `+i` on
/// the negative real axis), so `E_+` is deterministic and `E_− = −E_+`
/// exactly.
pub fn dispersion(params: &ModelParams, k: f64) -> (Complex64, Complex64) {
    let (sin_k, cos_k) = k.sin_cos();
    let e_squared = match params.kind {
        ModelKind::NonReciprocal => {
            let re = params.t1 * params.t1 + params.t2 * params.t2
                - params.delta1 * params.delta1
                - params.delta2 * params.delta2
                + 2.0 * (params.t1 * params.t2 + params.delta1 * params.delta2) * cos_k;
            let im = -2.0 * (params.t1 * params.delta2 + params.t2 * params.delta1) * sin_k;
            Complex64::new(re, im)
        }
        ModelKind::ImaginaryPotential => {
            // |t1 + t2 e^{-ik}|^2 - u^2 is purely real: the spectrum is
            // either real or imaginary, never truly complex.
            let rho_sq =
                params.t1 * params.t1 + params.t2 * params.t2 + 2.0 * params.t1 * params.t2 * cos_k;
            Complex64::new(rho_sq - params.u * params.u, 0.0)
        }
    };
    let e_plus = e_squared.sqrt();
    (e_plus, -e_plus)
}

fn max_entry_abs(m: &[[Complex64; 2]; 2]) -> f64 {
    let mut max = 0.0f64;
    for row in m {
        for z in row {
            max = max.max(z.norm());
        }
    }
    max
}

/// Test the chiral and PT symmetry relations on a momentum sample.
///
/// Residuals are the largest entrywise magnitudes of `σ_z h σ_z + h` and
/// `σ_x h σ_x − h*`; a relation holds when its residual stays below
/// [`SYMMETRY_TOL`]. A 101-point Brillouin-zone grid is a sensible default
/// sample.
pub fn check_symmetries(params: &ModelParams, k_samples: &[f64]) -> SymmetryVerdict {
    assert!(!k_samples.is_empty(), "symmetry check needs at least one k sample");
    let mut chiral_residual = 0.0f64;
    let mut pt_residual = 0.0f64;
    for &k in k_samples {
        let h = bloch_matrix(params, k).entries;
        // sigma_z h sigma_z + h = [[2 h00, 0], [0, 2 h11]]
        let chiral_violation = [
            [2.0 * h[0][0], Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), 2.0 * h[1][1]],
        ];
        // sigma_x h sigma_x - h* swaps both indices, then subtracts the
        // entrywise conjugate.
        let pt_violation = [
            [h[1][1] - h[0][0].conj(), h[1][0] - h[0][1].conj()],
            [h[0][1] - h[1][0].conj(), h[0][0] - h[1][1].conj()],
        ];
        chiral_residual = chiral_residual.max(max_entry_abs(&chiral_violation));
        pt_residual = pt_residual.max(max_entry_abs(&pt_violation));
    }
    SymmetryVerdict {
        chiral: chiral_residual < SYMMETRY_TOL,
        pt: pt_residual < SYMMETRY_TOL,
        max_residual: chiral_residual.max(pt_residual),
        chiral_residual,
        pt_residual,
    }
}

/// Dense row-major square complex matrix.
///
/// Minimal container for real-space Hamiltonians; the heavy linear algebra
/// lives downstream.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        &self.data[row * self.dim + col]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut Complex64 {
        &mut self.data[row * self.dim + col]
    }
}

/// Real-space Hamiltonian of an open chain with `n_cells` unit cells.
///
/// Basis ordering is `A1, B1, A2, B2, …` (site `2n` is `A` of cell `n`,
/// site `2n+1` is `B`). The matrix element `⟨row|H|col⟩` multiplies the
/// creation operator on the row site, so for the non-reciprocal chain
///
/// ```text
/// H[A_n, B_n] = t1 − δ1      H[B_n, A_n]     = t1 + δ1
/// H[B_n, A_{n+1}] = t2 − δ2  H[A_{n+1}, B_n] = t2 + δ2
/// ```
///
/// while the imaginary-potential chain has reciprocal hoppings `t1`, `t2`
/// and diagonal `+iu` on `A` sites, `−iu` on `B` sites.
pub fn open_chain_hamiltonian(
    params: &ModelParams,
    n_cells: usize,
) -> Result<ComplexMatrix, ModelError> {
    if n_cells < 2 {
        return Err(ModelError::ChainTooShort);
    }
    let dim = 2 * n_cells;
    let mut h = ComplexMatrix::zeros(dim);
    let (intra_ab, intra_ba, inter_ba, inter_ab, onsite) = match params.kind {
        ModelKind::NonReciprocal => (
            params.t1 - params.delta1,
            params.t1 + params.delta1,
            params.t2 - params.delta2,
            params.t2 + params.delta2,
            0.0,
        ),
        ModelKind::ImaginaryPotential => (params.t1, params.t1, params.t2, params.t2, params.u),
    };
    for n in 0..n_cells {
        let a = 2 * n;
        let b = 2 * n + 1;
        h[(a, b)] = Complex64::new(intra_ab, 0.0);
        h[(b, a)] = Complex64::new(intra_ba, 0.0);
        h[(a, a)] = Complex64::new(0.0, onsite);
        h[(b, b)] = Complex64::new(0.0, -onsite);
        if n + 1 < n_cells {
            let a_next = 2 * (n + 1);
            h[(b, a_next)] = Complex64::new(inter_ba, 0.0);
            h[(a_next, b)] = Complex64::new(inter_ab, 0.0);
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bz_grid;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn params_accept_paper_sets() {
        // Non-reciprocal set from the skin-effect figure, PT set from the
        // no-skin-effect figure.
        assert!(ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).is_ok());
        assert!(ModelParams::imaginary_potential(1.0, 0.5, 1.0).is_ok());
    }

    #[test]
    fn params_reject_mixed_and_nonfinite() {
        assert_eq!(
            ModelParams::new(ModelKind::NonReciprocal, 1.0, 2.0, 0.5, 1.3, 0.7),
            Err(ModelError::MixedParameterization)
        );
        assert_eq!(
            ModelParams::new(ModelKind::ImaginaryPotential, 1.0, 2.0, 0.1, 0.0, 1.0),
            Err(ModelError::MixedParameterization)
        );
        assert_eq!(
            ModelParams::new(ModelKind::NonReciprocal, f64::NAN, 2.0, 0.0, 0.0, 0.0),
            Err(ModelError::NonFinite)
        );
        assert_eq!(
            ModelParams::new(ModelKind::NonReciprocal, 1.0, f64::INFINITY, 0.0, 0.0, 0.0),
            Err(ModelError::NonFinite)
        );
    }

    #[test]
    fn bloch_hermitian_limit_at_k_zero() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.0, 0.0).unwrap();
        let h = bloch_matrix(&p, 0.0).entries;
        assert_abs_diff_eq!(h[0][1].re, 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h[1][0].re, 3.0, epsilon = 1e-15);
        assert_eq!(h[0][0], c(0.0, 0.0));
        assert_eq!(h[1][1], c(0.0, 0.0));
    }

    #[test]
    fn bloch_nonreciprocal_hand_value_at_pi() {
        // t1=1, t2=2, d1=d2=0.5 at k=pi: upper 0.5 - 2.5 = -2, lower 1.5 - 1.5 = 0.
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 0.5).unwrap();
        let h = bloch_matrix(&p, PI).entries;
        assert_abs_diff_eq!(h[0][1].re, -2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h[0][1].im, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h[1][0].norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn bloch_imaginary_potential_hand_value_at_pi() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let h = bloch_matrix(&p, PI).entries;
        assert_abs_diff_eq!(h[0][0].im, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h[1][1].im, -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h[0][1].re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h[1][0].re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h[0][1].im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn d_vector_hand_values() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let d = d_vector(&p, 0.0);
        assert_abs_diff_eq!(d.real_part[0], 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.real_part[1], 0.0, epsilon = 1e-15);
        // -delta1 + delta2 cos 0 = 0.8
        assert_abs_diff_eq!(d.imag_part[1], 0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(d.imag_part[0], 0.0, epsilon = 1e-15);

        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let d = d_vector(&p, PI / 2.0);
        assert_abs_diff_eq!(d.real_part[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d.real_part[1], 2.0, epsilon = 1e-12);
        assert_eq!(d.imag_part, [0.0, 0.0, 2.0]);
    }

    #[test]
    fn d_dot_sigma_reconstructs_bloch() {
        let sets = [
            ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap(),
            ModelParams::non_reciprocal(1.0, 0.5, -0.3, 0.15).unwrap(),
            ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap(),
        ];
        for p in &sets {
            for &k in &bz_grid(101) {
                let h = bloch_matrix(p, k).entries;
                let r = d_vector(p, k).dot_sigma();
                for i in 0..2 {
                    for j in 0..2 {
                        assert_abs_diff_eq!((h[i][j] - r[i][j]).norm(), 0.0, epsilon = 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn dispersion_hand_values() {
        // Non-reciprocal at k=0: 4.5 + 4.5 = 9 under the square root.
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 0.5).unwrap();
        let (ep, em) = dispersion(&p, 0.0);
        assert_abs_diff_eq!(ep.re, 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ep.im, 0.0, epsilon = 1e-12);
        assert_eq!(em, -ep);

        // Imaginary potential at k=pi: |1-2|^2 - 4 = -3, principal root +i sqrt(3).
        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let (ep, _) = dispersion(&p, PI);
        assert_abs_diff_eq!(ep.re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ep.im, 3.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn dispersion_hermitian_limit_is_real_ssh() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 0.0).unwrap();
        for &k in &bz_grid(101) {
            let (ep, em) = dispersion(&p, k);
            let expected = (Complex64::new(1.0, 0.0) + 2.0 * Complex64::new(0.0, -k).exp()).norm();
            assert_abs_diff_eq!(ep.re, expected, epsilon = 1e-12);
            assert_abs_diff_eq!(ep.im, 0.0, epsilon = 1e-15);
            assert_eq!(em, -ep);
        }
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.0, 0.0).unwrap();
        for &k in &bz_grid(101) {
            let (ep, _) = dispersion(&p, k);
            let expected = (Complex64::new(1.0, 0.0) + 2.0 * Complex64::new(0.0, -k).exp()).norm();
            assert_abs_diff_eq!(ep.re, expected, epsilon = 1e-12);
            assert_abs_diff_eq!(ep.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn symmetry_verdicts() {
        let grid = bz_grid(101);
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let v = check_symmetries(&p, &grid);
        assert!(v.chiral && !v.pt);

        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let v = check_symmetries(&p, &grid);
        assert!(!v.chiral && v.pt);

        // Hermitian SSH has both.
        let p = ModelParams::imaginary_potential(1.0, 2.0, 0.0).unwrap();
        let v = check_symmetries(&p, &grid);
        assert!(v.chiral && v.pt);
        assert!(v.max_residual < SYMMETRY_TOL);
    }

    #[test]
    fn open_chain_hand_entries() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let h = open_chain_hamiltonian(&p, 2).unwrap();
        assert_abs_diff_eq!(h[(0, 1)].re, 0.5, epsilon = 1e-15); // A1 -> B1
        assert_abs_diff_eq!(h[(1, 0)].re, 1.5, epsilon = 1e-15); // B1 -> A1
        assert_abs_diff_eq!(h[(1, 2)].re, 0.7, epsilon = 1e-15); // B1 -> A2
        assert_abs_diff_eq!(h[(2, 1)].re, 3.3, epsilon = 1e-15); // A2 -> B1
        assert_eq!(h[(0, 0)], c(0.0, 0.0));

        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let h = open_chain_hamiltonian(&p, 2).unwrap();
        for (site, sign) in [(0, 1.0), (1, -1.0), (2, 1.0), (3, -1.0)] {
            assert_eq!(h[(site, site)], c(0.0, 2.0 * sign));
        }
        assert_eq!(h[(0, 1)], c(1.0, 0.0));
        assert_eq!(h[(1, 2)], c(2.0, 0.0));
    }

    #[test]
    fn open_chain_hermitian_limit_is_symmetric() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.0, 0.0).unwrap();
        let h = open_chain_hamiltonian(&p, 2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(h[(i, j)], h[(j, i)]);
                assert_eq!(h[(i, j)].im, 0.0);
            }
        }
    }

    #[test]
    fn open_chain_rejects_single_cell() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        assert_eq!(open_chain_hamiltonian(&p, 1).unwrap_err(), ModelError::ChainTooShort);
    }
}
