//! Property suites for the analytic layer: reconstruction identities,
//! closed-form versus numerical winding numbers, and Berry-phase
//! quantization on randomized parameter sets.

use std::f64::consts::PI;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use nhssh_core::model::{bloch_matrix, d_vector, dispersion, ModelParams};
use nhssh_core::topology::{
    complex_berry_phase, phi_imag_closure, winding_nu, winding_nu_h2, winding_nu_oracle,
    winding_nu_prime, winding_nu_prime_oracle, TopologyError,
};

fn random_nonreciprocal(rng: &mut SmallRng) -> ModelParams {
    let t1 = 0.2 + 1.8 * rng.gen::<f64>();
    let t2 = 0.2 + 1.8 * rng.gen::<f64>();
    let d1 = 4.0 * rng.gen::<f64>() - 2.0;
    let d2 = 4.0 * rng.gen::<f64>() - 2.0;
    ModelParams::non_reciprocal(t1, t2, d1, d2).unwrap()
}

#[test]
fn d_dot_sigma_reconstructs_bloch_on_random_points() {
    let mut rng = SmallRng::seed_from_u64(11);
    for trial in 0..10_000 {
        let params = if trial % 2 == 0 {
            random_nonreciprocal(&mut rng)
        } else {
            let t1 = 0.2 + 1.8 * rng.gen::<f64>();
            let t2 = 0.2 + 1.8 * rng.gen::<f64>();
            let u = 4.0 * rng.gen::<f64>() - 2.0;
            ModelParams::imaginary_potential(t1, t2, u).unwrap()
        };
        let k = PI * (2.0 * rng.gen::<f64>() - 1.0);
        let h = bloch_matrix(&params, k).entries;
        let r = d_vector(&params, k).dot_sigma();
        for i in 0..2 {
            for j in 0..2 {
                let err = (h[i][j] - r[i][j]).norm();
                assert!(err < 1e-12, "reconstruction error {err:e} at trial {trial}");
            }
        }
    }
}

#[test]
fn winding_matches_oracle_on_delta_plane() {
    // 50x50 grid over (d1, d2) in [-2, 2]^2 for both dimerizations.
    for (t1, t2) in [(1.0, 2.0), (1.0, 0.5)] {
        for iy in 0..50 {
            let d2 = -2.0 + 4.0 * iy as f64 / 49.0;
            for ix in 0..50 {
                let d1 = -2.0 + 4.0 * ix as f64 / 49.0;
                let params = ModelParams::non_reciprocal(t1, t2, d1, d2).unwrap();
                let oracle = match winding_nu_oracle(&params) {
                    Ok(v) => v,
                    Err(TopologyError::IndeterminateBoundary) => continue,
                    Err(e) => panic!("unexpected oracle error {e}"),
                };
                let numeric = winding_nu(&params, 1024)
                    .unwrap_or_else(|e| panic!("winding failed at ({d1}, {d2}): {e}"));
                assert_eq!(
                    numeric.nu, oracle,
                    "nu mismatch at t2={t2}, d1={d1}, d2={d2}"
                );
            }
        }
    }
}

#[test]
fn phi_imag_closure_vanishes_on_random_sets() {
    let mut rng = SmallRng::seed_from_u64(23);
    let mut checked = 0;
    while checked < 100 {
        let params = random_nonreciprocal(&mut rng);
        match phi_imag_closure(&params, 4096) {
            Ok(value) => {
                assert!(
                    value.abs() < 1e-8,
                    "phi_I closure {value:e} for {params:?}"
                );
                checked += 1;
            }
            // On a transition line the integrand collapses; draw again.
            Err(TopologyError::TransitionLine { .. }) => continue,
            Err(e) => panic!("unexpected error {e}"),
        }
    }
}

#[test]
fn nu_prime_matches_monte_carlo_on_random_triples() {
    let mut rng = SmallRng::seed_from_u64(37);
    for trial in 0..100 {
        let t1 = 0.2 + 1.8 * rng.gen::<f64>();
        let t2 = 0.2 + 1.8 * rng.gen::<f64>();
        let u = 4.0 * rng.gen::<f64>();
        let params = ModelParams::imaginary_potential(t1, t2, u).unwrap();
        let exact = winding_nu_prime(&params);
        let mc = winding_nu_prime_oracle(&params, 1_000_000);
        assert!(
            (exact - mc).abs() < 5e-3,
            "trial {trial}: t1={t1} t2={t2} u={u}: exact {exact} vs mc {mc}"
        );
    }
}

#[test]
fn berry_phase_tracks_winding_on_gapped_sets() {
    let mut rng = SmallRng::seed_from_u64(51);
    let two_pi = 2.0 * PI;
    let mut checked = 0;
    while checked < 20 {
        let t1 = 0.3 + 1.7 * rng.gen::<f64>();
        let t2 = 0.3 + 1.7 * rng.gen::<f64>();
        if (t1 - t2).abs() < 0.05 {
            continue;
        }
        // Gapped on either side of the band-crossing interval.
        let u = if rng.gen::<bool>() {
            0.9 * (t1 - t2).abs() * rng.gen::<f64>()
        } else {
            (t1 + t2) * 1.05 + 2.0 * rng.gen::<f64>()
        };
        let params = ModelParams::imaginary_potential(t1, t2, u).unwrap();
        let berry = complex_berry_phase(&params, 4096).unwrap();
        let winding = winding_nu_h2(&params, 4096).unwrap();
        assert!(
            (berry.q_global / two_pi - winding).abs() < 1e-6,
            "q_global/2pi = {} vs nu = {winding} at t1={t1} t2={t2} u={u}",
            berry.q_global / two_pi
        );
        checked += 1;
    }
}

#[test]
fn dispersion_pairs_respect_symmetries_on_random_points() {
    let mut rng = SmallRng::seed_from_u64(67);
    for _ in 0..1000 {
        let k = PI * (2.0 * rng.gen::<f64>() - 1.0);

        // Chiral pairing: -E accompanies E.
        let p = random_nonreciprocal(&mut rng);
        let (ep, em) = dispersion(&p, k);
        assert_eq!(em, -ep);

        // PT pairing: the spectrum {E, -E} is closed under conjugation.
        let t1 = 0.2 + 1.8 * rng.gen::<f64>();
        let t2 = 0.2 + 1.8 * rng.gen::<f64>();
        let u = 4.0 * rng.gen::<f64>();
        let p = ModelParams::imaginary_potential(t1, t2, u).unwrap();
        let (ep, em) = dispersion(&p, k);
        let conj_in_pair =
            (ep.conj() - ep).norm() < 1e-12 || (ep.conj() - em).norm() < 1e-12;
        assert!(conj_in_pair, "E* missing for E = {ep} at u={u}");
    }
}
