//! Exact posterior inference: the full-covariance Kalman recursion whose
//! posterior mode is the RLS estimate.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::model::{validate_params, RegressionSample, SsmParams};

/// Gaussian posterior with full covariance.
#[derive(Debug, Clone, PartialEq)]
pub struct FullGaussianState {
    pub mean: DVector<f64>,
    pub cov: DMatrix<f64>,
}

impl FullGaussianState {
    pub fn new(mean: DVector<f64>, cov: DMatrix<f64>) -> Result<Self> {
        let m = mean.len();
        if cov.nrows() != m || cov.ncols() != m {
            return Err(Error::DimensionMismatch { expected: m, found: cov.nrows() });
        }
        let state = FullGaussianState { mean, cov };
        state.check_finite()?;
        Ok(state)
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    fn check_finite(&self) -> Result<()> {
        if self.mean.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("state mean"));
        }
        if self.cov.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("state covariance"));
        }
        Ok(())
    }

    /// Largest `|Σ_ij − Σ_ji|` relative to the largest entry magnitude.
    pub fn asymmetry(&self) -> f64 {
        let scale = self.cov.amax().max(f64::MIN_POSITIVE);
        (&self.cov - self.cov.transpose()).amax() / scale
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.cov.clone().symmetric_eigenvalues().min()
    }
}

/// Gain applied in one update.
#[derive(Debug, Clone, PartialEq)]
pub enum Gain {
    /// `K_k` of the exact recursion.
    Matrix(DMatrix<f64>),
    /// Step size `η_k` of the isotropic recursion.
    Scalar(f64),
}

impl Gain {
    pub fn scalar(&self) -> Option<f64> {
        match self {
            Gain::Scalar(eta) => Some(*eta),
            Gain::Matrix(_) => None,
        }
    }
}

/// Diagnostics produced by one filter step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepDetail {
    pub gain: Gain,
    /// `y_k − x_kᵀ μ_{k|k-1}`.
    pub innovation: f64,
    /// Variance of the one-step predictive distribution of `y_k`.
    pub predicted_obs_var: f64,
}

/// One predict/update cycle of the exact recursion.
///
/// With predictive moments `m = λμ_{k-1}` and `P = λ²Σ_{k-1} + σ_d²I`:
///
/// ```text
/// K_k = P / (x_kᵀ P x_k + σ_n²)
/// μ_k = m + K_k (y_k − x_kᵀ m) x_k
/// Σ_k = (I − K_k x_k x_kᵀ) P
/// ```
///
/// `K_k x_k x_kᵀ P` is evaluated as an outer product of `P x_k`, so the step
/// costs O(M²). The covariance is re-symmetrized afterwards.
pub fn exact_step(
    state: &FullGaussianState,
    sample: &RegressionSample,
    params: &SsmParams,
) -> Result<(FullGaussianState, StepDetail)> {
    let params = validate_params(*params)?;
    let m = params.dim;
    if state.dim() != m || state.cov.nrows() != m || state.cov.ncols() != m {
        return Err(Error::DimensionMismatch { expected: m, found: state.dim() });
    }
    state.check_finite()?;
    sample.check(m)?;

    let lambda = params.forgetting;
    let x = &sample.regressor;

    let pred_mean = &state.mean * lambda;
    let mut pred_cov = &state.cov * (lambda * lambda);
    for i in 0..m {
        pred_cov[(i, i)] += params.drift_var;
    }

    let px = &pred_cov * x;
    let predicted_obs_var = x.dot(&px) + params.obs_noise_var;
    let innovation = sample.observation - x.dot(&pred_mean);

    let gain = &pred_cov / predicted_obs_var;
    let mean = pred_mean + &px * (innovation / predicted_obs_var);

    let mut cov = pred_cov;
    cov.ger(-1.0 / predicted_obs_var, &px, &px, 1.0);
    symmetrize(&mut cov);

    let detail = StepDetail { gain: Gain::Matrix(gain), innovation, predicted_obs_var };
    Ok((FullGaussianState { mean, cov }, detail))
}

/// Posterior mode, which for a Gaussian is its mean: the RLS estimate.
pub fn rls_map_estimate(state: &FullGaussianState) -> DVector<f64> {
    state.mean.clone()
}

pub(crate) fn symmetrize(cov: &mut DMatrix<f64>) {
    let n = cov.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (cov[(i, j)] + cov[(j, i)]);
            cov[(i, j)] = avg;
            cov[(j, i)] = avg;
        }
    }
}
