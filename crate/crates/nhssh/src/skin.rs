//! Eigenstate localization and the non-Hermitian skin effect.
//!
//! Localization is measured on right eigenvectors. A state counts as
//! edge-localized when the weight inside the edge regions (first and last
//! `ceil(edge_fraction * n_sites)` sites combined) exceeds the state
//! threshold; the skin effect is declared present when the localized
//! population fraction exceeds the population threshold. The combined
//! left+right weight keeps hybridized Hermitian edge doublets (half on
//! each end) classified as edge states.

use num_complex::Complex64;
use thiserror::Error;

use nhssh_core::model::ModelParams;

use crate::spectral::{obc_spectrum, Boundary, Spectrum, SpectralError};

#[derive(Debug, Error)]
pub enum SkinError {
    #[error("spectrum carries no right eigenvectors")]
    MissingVectors,
    #[error("localization is defined for open-boundary spectra")]
    NotOpenBoundary,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Per-site density and per-state edge weights of an open-chain spectrum.
#[derive(Clone, Debug)]
pub struct LocalizationProfile {
    /// `Σ_n |ψ_n(site)|²`; sums to the number of states.
    pub site_density: Vec<f64>,
    /// `(left_weight, right_weight)` per state, each in `[0, 1]`.
    pub per_state_edge_weight: Vec<(f64, f64)>,
    /// Number of sites in each edge region.
    pub edge_sites: usize,
}

impl LocalizationProfile {
    /// Combined edge weight (both ends) of state `n`.
    pub fn edge_weight(&self, n: usize) -> f64 {
        let (l, r) = self.per_state_edge_weight[n];
        l + r
    }
}

/// Thresholds of the skin-effect verdict.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SkinThresholds {
    /// Edge region as a fraction of the chain length.
    pub edge_fraction: f64,
    /// Minimum combined edge weight for a state to count as localized.
    pub state_weight: f64,
    /// Minimum localized population fraction for the effect to be present.
    pub population: f64,
}

impl Default for SkinThresholds {
    fn default() -> Self {
        SkinThresholds { edge_fraction: 0.1, state_weight: 0.6, population: 0.8 }
    }
}

/// Which chain end hosts the localized majority.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NhseVerdict {
    pub present: bool,
    pub side: Side,
    pub localized_fraction: f64,
}

/// Site-resolved density and per-state edge weights.
pub fn localization_profile(
    spectrum: &Spectrum,
    edge_fraction: f64,
) -> Result<LocalizationProfile, SkinError> {
    if spectrum.boundary != Boundary::Obc {
        return Err(SkinError::NotOpenBoundary);
    }
    let n_sites = spectrum.right_vectors.nrows();
    let n_states = spectrum.right_vectors.ncols();
    if n_sites == 0 || n_states == 0 {
        return Err(SkinError::MissingVectors);
    }
    let edge_sites = ((edge_fraction * n_sites as f64).ceil() as usize).clamp(1, n_sites);

    let mut site_density = vec![0.0; n_sites];
    let mut per_state_edge_weight = Vec::with_capacity(n_states);
    for n in 0..n_states {
        let psi = spectrum.right_vectors.column(n);
        let total: f64 = psi.iter().map(Complex64::norm_sqr).sum();
        let mut left = 0.0;
        let mut right = 0.0;
        for (site, amp) in psi.iter().enumerate() {
            let w = amp.norm_sqr() / total;
            site_density[site] += w;
            if site < edge_sites {
                left += w;
            }
            if site >= n_sites - edge_sites {
                right += w;
            }
        }
        per_state_edge_weight.push((left, right));
    }
    Ok(LocalizationProfile { site_density, per_state_edge_weight, edge_sites })
}

/// Evaluate [`NhseVerdict`] on the localization profile of a computed
/// spectrum.
pub fn nhse_verdict_from_profile(
    profile: &LocalizationProfile,
    thresholds: &SkinThresholds,
) -> NhseVerdict {
    let n_states = profile.per_state_edge_weight.len();
    let mut localized = 0usize;
    let mut left_dominant = 0usize;
    let mut right_dominant = 0usize;
    for &(l, r) in &profile.per_state_edge_weight {
        if l + r >= thresholds.state_weight {
            localized += 1;
            if l > r {
                left_dominant += 1;
            } else if r > l {
                right_dominant += 1;
            }
        }
    }
    let localized_fraction = localized as f64 / n_states as f64;
    let present = localized_fraction >= thresholds.population;
    let side = if !present {
        Side::None
    } else if right_dominant > left_dominant {
        Side::Right
    } else if left_dominant > right_dominant {
        Side::Left
    } else {
        Side::None
    };
    NhseVerdict { present, side, localized_fraction }
}

/// Diagonalize the open chain and test for the skin effect.
pub fn nhse_verdict(
    params: &ModelParams,
    n_cells: usize,
    thresholds: &SkinThresholds,
) -> Result<NhseVerdict, SkinError> {
    let spectrum = obc_spectrum(params, n_cells)?;
    let profile = localization_profile(&spectrum, thresholds.edge_fraction)?;
    Ok(nhse_verdict_from_profile(&profile, thresholds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nhssh_core::model::ModelParams;

    use crate::spectral::{zero_modes, ZERO_MODE_TOL};

    #[test]
    fn nonreciprocal_chain_piles_up_on_the_right() {
        // 100 sites, nu = 0.5 parameters of the skin-effect figure.
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let profile = localization_profile(&s, 0.1).unwrap();
        let localized = profile
            .per_state_edge_weight
            .iter()
            .filter(|(l, r)| l + r > 0.6)
            .count();
        assert!(localized >= 80, "only {localized}/100 states edge-localized");

        let v = nhse_verdict(&p, 50, &SkinThresholds::default()).unwrap();
        assert!(v.present);
        assert_eq!(v.side, Side::Right);
    }

    #[test]
    fn sign_flip_moves_the_pile_to_the_left() {
        let p = ModelParams::non_reciprocal(1.0, 0.5, 0.5, 0.3).unwrap();
        let v = nhse_verdict(&p, 50, &SkinThresholds::default()).unwrap();
        assert!(v.present);
        assert_eq!(v.side, Side::Right);

        let flipped = ModelParams::non_reciprocal(1.0, 0.5, -0.5, -0.3).unwrap();
        let v = nhse_verdict(&flipped, 50, &SkinThresholds::default()).unwrap();
        assert!(v.present);
        assert_eq!(v.side, Side::Left);
    }

    #[test]
    fn sign_flip_mirrors_the_density_profile() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let flipped = ModelParams::non_reciprocal(1.0, 2.0, -0.5, -1.3).unwrap();
        let d = localization_profile(&obc_spectrum(&p, 40).unwrap(), 0.1)
            .unwrap()
            .site_density;
        let df = localization_profile(&obc_spectrum(&flipped, 40).unwrap(), 0.1)
            .unwrap()
            .site_density;
        for (i, (a, b)) in d.iter().zip(df.iter().rev()).enumerate() {
            assert_abs_diff_eq!(a, b, epsilon = 1e-6);
            let _ = i;
        }
    }

    #[test]
    fn pt_chain_shows_no_skin_effect() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 2.0).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let profile = localization_profile(&s, 0.1).unwrap();
        let localized: Vec<usize> = (0..s.dim())
            .filter(|&n| profile.edge_weight(n) > 0.6)
            .collect();
        // Only the two +-iu edge modes are localized; the bulk is extended.
        assert_eq!(localized.len(), 2);
        let v = nhse_verdict_from_profile(&profile, &SkinThresholds::default());
        assert!(!v.present);
        assert_eq!(v.side, Side::None);

        let p = ModelParams::imaginary_potential(1.0, 0.5, 1.0).unwrap();
        let v = nhse_verdict(&p, 50, &SkinThresholds::default()).unwrap();
        assert!(!v.present);
    }

    #[test]
    fn hermitian_limit_keeps_two_edge_states() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.0, 0.0).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let profile = localization_profile(&s, 0.1).unwrap();
        let localized = (0..s.dim()).filter(|&n| profile.edge_weight(n) > 0.6).count();
        assert_eq!(localized, 2);
        let v = nhse_verdict_from_profile(&profile, &SkinThresholds::default());
        assert!(!v.present);
    }

    #[test]
    fn zero_modes_are_edge_localized() {
        let p = ModelParams::non_reciprocal(1.0, 2.0, 0.5, 1.3).unwrap();
        let s = obc_spectrum(&p, 50).unwrap();
        let profile = localization_profile(&s, 0.1).unwrap();
        for n in zero_modes(&s.eigenvalues, ZERO_MODE_TOL) {
            assert!(
                profile.edge_weight(n) > 0.9,
                "zero mode {n} has edge weight {}",
                profile.edge_weight(n)
            );
        }
    }

    #[test]
    fn density_sums_to_state_count() {
        let p = ModelParams::imaginary_potential(1.0, 2.0, 0.5).unwrap();
        let s = obc_spectrum(&p, 20).unwrap();
        let profile = localization_profile(&s, 0.1).unwrap();
        let total: f64 = profile.site_density.iter().sum();
        assert_abs_diff_eq!(total, 40.0, epsilon = 1e-9);
        for &(l, r) in &profile.per_state_edge_weight {
            assert!((0.0..=1.0).contains(&l) && (0.0..=1.0).contains(&r));
        }
    }
}
