//! Spectra, skin-effect diagnostics, parameter sweeps and file formats for
//! the non-Hermitian SSH chains of [`nhssh_core`].
//!
//! The analytic layer (Bloch matrices, d-vectors, winding numbers, Berry
//! phases) lives in `nhssh-core`; this crate adds everything that needs
//! `std`: the LAPACK-backed dense eigensolver, open-chain spectra,
//! localization statistics, phase-diagram sweeps, CSV/JSON/SVG emission
//! and the `nhssh` command-line tool.

pub mod cli;
pub mod io;
pub mod plot;
pub mod skin;
pub mod spectral;
pub mod sweep;

pub use nhssh_core as core;
