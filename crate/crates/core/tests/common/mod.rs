//! Reference implementations used as independent oracles. None of these
//! call into the filter code they check.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

/// Textbook Kalman filter for `w_k = F w_{k-1} + q`, `y_k = H w_k + r`
/// with a 1×M observation row, written with dense matrix products and an
/// explicit innovation-covariance inverse.
pub struct GenericKalman {
    pub x: DVector<f64>,
    pub p: DMatrix<f64>,
    pub f: DMatrix<f64>,
    pub q: DMatrix<f64>,
    pub r: f64,
}

impl GenericKalman {
    pub fn new(dim: usize, prior_var: f64, lambda: f64, drift_var: f64, noise_var: f64) -> Self {
        GenericKalman {
            x: DVector::zeros(dim),
            p: DMatrix::identity(dim, dim) * prior_var,
            f: DMatrix::identity(dim, dim) * lambda,
            q: DMatrix::identity(dim, dim) * drift_var,
            r: noise_var,
        }
    }

    pub fn step(&mut self, regressor: &DVector<f64>, y: f64) {
        let n = self.x.len();
        let h = DMatrix::from_row_slice(1, n, regressor.as_slice());
        let x_pred = &self.f * &self.x;
        let p_pred = &self.f * &self.p * self.f.transpose() + &self.q;
        let s = &h * &p_pred * h.transpose() + DMatrix::from_element(1, 1, self.r);
        let s_inv = s.try_inverse().expect("innovation covariance invertible");
        let k = &p_pred * h.transpose() * s_inv;
        let resid = y - (&h * &x_pred)[(0, 0)];
        self.x = &x_pred + &k * resid;
        self.p = (DMatrix::identity(n, n) - &k * &h) * p_pred;
    }
}

/// General Gaussian KL divergence `KL(N(m1, s1) ‖ N(m2, s2))` via LU
/// inverse and determinants.
pub fn gaussian_kl(m1: &DVector<f64>, s1: &DMatrix<f64>, m2: &DVector<f64>, s2: &DMatrix<f64>) -> f64 {
    let k = m1.len() as f64;
    let s2_inv = s2.clone().try_inverse().expect("invertible");
    let d = m2 - m1;
    let quad = (d.transpose() * &s2_inv * &d)[(0, 0)];
    0.5 * ((&s2_inv * s1).trace() + quad - k + (s2.determinant() / s1.determinant()).ln())
}

/// Golden-section minimization of a unimodal function on `[lo, hi]`.
pub fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - g * (hi - lo);
    let mut b = lo + g * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    for _ in 0..iters {
        if fa < fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = f(b);
        }
    }
    0.5 * (lo + hi)
}

pub fn normal_vec<R: Rng>(rng: &mut R, n: usize) -> DVector<f64> {
    DVector::from_fn(n, |_, _| rng.sample(StandardNormal))
}

/// Random symmetric positive-definite matrix `A Aᵀ + δI` with moderate conditioning.
pub fn random_spd<R: Rng>(rng: &mut R, n: usize) -> DMatrix<f64> {
    let a = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let scale = 10f64.powf(rng.random_range(-2.0..2.0));
    (&a * a.transpose() + DMatrix::identity(n, n) * 0.1) * scale
}

/// Log-uniform draw from `[10^lo, 10^hi]`.
pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    10f64.powf(rng.random_range(lo..hi))
}

/// `|a − b| ≤ tol · max(|a|, |b|, floor)`.
pub fn rel_close(a: f64, b: f64, tol: f64, floor: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(floor)
}
