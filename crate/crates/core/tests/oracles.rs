//! Filter outputs checked against the independent references in `common`.

mod common;

use common::{gaussian_kl, golden_min, log_uniform, normal_vec, random_spd, rel_close, GenericKalman};
use nalgebra::{DMatrix, DVector};
use problms::baselines::{rls_classic_step, BaselineState};
use problms::exact::{exact_step, FullGaussianState};
use problms::klproj::{kl_full_to_iso, project_isotropic};
use problms::model::{prior_full, prior_iso, RegressionSample, SsmParams};
use problms::problms::{problms_step, problms_step_ou, IsoGaussianState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn exact_matches_generic_kalman() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for run in 0..5 {
        let m = 1 + run;
        let lambda = if run % 2 == 0 { 1.0 } else { rng.random_range(0.8..1.0) };
        let p = SsmParams::new(m, log_uniform(&mut rng, -2.0, 0.0), log_uniform(&mut rng, -5.0, -2.0))
            .with_forgetting(lambda);
        let mut state = prior_full(&p).unwrap();
        let mut oracle = GenericKalman::new(m, p.prior_var, lambda, p.drift_var, p.obs_noise_var);
        for _ in 0..1000 {
            let x = normal_vec(&mut rng, m);
            let y = rng.random_range(-2.0..2.0);
            state = exact_step(&state, &RegressionSample::new(x.clone(), y), &p).unwrap().0;
            oracle.step(&x, y);
        }
        assert!((&state.mean - &oracle.x).amax() <= 1e-10 * oracle.x.amax().max(1.0));
        assert!((&state.cov - &oracle.p).amax() <= 1e-10 * oracle.p.amax());
    }
}

#[test]
fn scalar_problms_equals_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for lambda in [1.0, 0.9] {
        let p = SsmParams::new(1, 0.3, 1e-3).with_forgetting(lambda);
        let mut iso = prior_iso(&p).unwrap();
        let mut full = prior_full(&p).unwrap();
        for _ in 0..1000 {
            let s = RegressionSample::new(normal_vec(&mut rng, 1), rng.random_range(-1.0..1.0));
            iso = problms_step_ou(&iso, &s, &p).unwrap().0;
            full = exact_step(&full, &s, &p).unwrap().0;
            assert!(rel_close(iso.mean[0], full.mean[0], 1e-12, 1e-12));
            assert!(rel_close(iso.var, full.cov[(0, 0)], 1e-12, 0.0));
        }
    }
}

#[test]
fn problms_step_is_projected_exact_step() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for m in 1..=8 {
        let p = SsmParams::new(m, 0.1, 1e-3);
        let mut iso = IsoGaussianState::new(normal_vec(&mut rng, m), 0.5).unwrap();
        for _ in 0..20 {
            let s = RegressionSample::new(normal_vec(&mut rng, m), rng.random_range(-1.0..1.0));
            let from_iso = FullGaussianState::new(iso.mean.clone(), DMatrix::identity(m, m) * iso.var).unwrap();
            let projected = project_isotropic(&exact_step(&from_iso, &s, &p).unwrap().0).unwrap();
            let (next, _) = problms_step(&iso, &s, &p).unwrap();
            for j in 0..m {
                assert!(rel_close(next.mean[j], projected.mean[j], 1e-12, 1e-12));
            }
            assert!(rel_close(next.var, projected.var, 1e-12, 0.0));
            iso = next;
        }
    }
}

#[test]
fn classic_rls_equals_exact_mean() {
    // With λ = 1 and no drift, RLS with P_0 = c·I is the exact posterior mean
    // under prior variance c·σ_n².
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (m, noise, c) = (4, 0.2, 0.5);
    let p = SsmParams::new(m, noise, 0.0).with_prior_var(c * noise);
    let mut rls = BaselineState::rls(m, c).unwrap();
    let mut exact = prior_full(&p).unwrap();
    for _ in 0..100 {
        let s = RegressionSample::new(normal_vec(&mut rng, m), rng.random_range(-1.0..1.0));
        rls = rls_classic_step(&rls, &s, 1.0).unwrap();
        exact = exact_step(&exact, &s, &p).unwrap().0;
        assert!((&rls.weights - &exact.mean).amax() <= 1e-8);
    }
}

#[test]
fn kl_matches_general_gaussian_kl() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let m = rng.random_range(1..=4);
        let cov = random_spd(&mut rng, m);
        let p = FullGaussianState::new(normal_vec(&mut rng, m), cov.clone()).unwrap();
        let var = log_uniform(&mut rng, -2.0, 2.0);
        let q = IsoGaussianState::new(normal_vec(&mut rng, m), var).unwrap();
        let oracle = gaussian_kl(&p.mean, &cov, &q.mean, &(DMatrix::identity(m, m) * var));
        let got = kl_full_to_iso(&p, &q).unwrap();
        assert!(rel_close(got, oracle, 1e-10, 1e-10), "{got} vs {oracle}");
    }
}

#[test]
fn kl_minimizer_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let m = rng.random_range(1..=4);
        let cov = random_spd(&mut rng, m);
        let eig = cov.clone().symmetric_eigenvalues();
        let mean = normal_vec(&mut rng, m);
        let p = FullGaussianState::new(mean.clone(), cov).unwrap();
        let kl_at = |log_var: f64| {
            kl_full_to_iso(&p, &IsoGaussianState { mean: mean.clone(), var: log_var.exp() }).unwrap()
        };
        let best = golden_min(kl_at, (1e-3 * eig.min()).ln(), (1e3 * eig.max()).ln(), 200).exp();
        let projected = project_isotropic(&p).unwrap().var;
        assert!(rel_close(best, projected, 1e-6, 0.0), "{best} vs {projected}");
    }
}

#[test]
fn scalar_kl_value() {
    let p = FullGaussianState::new(DVector::zeros(1), DMatrix::identity(1, 1)).unwrap();
    let q = IsoGaussianState::new(DVector::zeros(1), 2.0).unwrap();
    let oracle = gaussian_kl(&p.mean, &p.cov, &q.mean, &DMatrix::from_element(1, 1, 2.0));
    assert!((kl_full_to_iso(&p, &q).unwrap() - oracle).abs() < 1e-15);
    assert!((oracle - 0.096_573_590_279_972_65).abs() < 1e-15);
}
