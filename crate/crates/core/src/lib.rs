//! Analytic core for the two non-Hermitian Su-Schrieffer-Heeger chains.
//!
//! Two ways of breaking Hermiticity in the dimerized chain are covered:
//!
//! - non-reciprocal intra- and inter-cell hopping (chiral symmetric,
//!   not PT symmetric), and
//! - a staggered imaginary on-site potential with reciprocal hopping
//!   (PT symmetric, not chiral symmetric).
//!
//! This crate holds everything that is expressible in closed form at
//! fixed momentum: Bloch matrices, d-vector decompositions, dispersions,
//! symmetry residuals, exceptional-point geometry, winding numbers and
//! the bi-orthogonal (complex) Berry phase. Dense matrix spectra, file
//! I/O and the CLI live in the companion `nhssh` crate.
//!
//! The crate is `no_std` (with `alloc`); all floating-point math goes
//! through `num-traits`/`libm`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod model;
pub mod topology;

pub use model::{
    bloch_matrix, check_symmetries, d_vector, dispersion, open_chain_hamiltonian, BlochMatrix,
    DVector, ModelError, ModelKind, ModelParams, SymmetryVerdict,
};
pub use topology::{
    complex_berry_phase, ep_circle_h2, ep_geometry_h1, phi_imag_closure, reality_interval,
    winding_nu, winding_nu_h2, winding_nu_oracle, winding_nu_prime, winding_nu_prime_oracle,
    BerryResult, EpCircleH2, EpGeometryH1, TopologyError, WindingResult,
};

/// Uniform Brillouin-zone grid `k_j = -pi + 2*pi*j/n`, `j = 0..n`.
///
/// The right endpoint `+pi` is excluded; it is identified with `-pi`
/// when a closed loop is traversed.
pub fn bz_grid(n: usize) -> alloc::vec::Vec<f64> {
    let step = 2.0 * core::f64::consts::PI / n as f64;
    (0..n)
        .map(|j| -core::f64::consts::PI + j as f64 * step)
        .collect()
}
