//! Hyperparameters and priors of the random-walk linear-Gaussian model
//!
//! ```text
//! y_k = x_kᵀ w_k + v_k,          v_k ~ N(0, obs_noise_var)
//! w_k = λ w_{k-1} + d_k,         d_k ~ N(0, drift_var · I)
//! w_0 ~ N(0, prior_var · I)
//! ```
//!
//! `λ = 1` is the pure random walk; `λ < 1` is the Ornstein-Uhlenbeck
//! variant. `drift_var = 0` is the stationary model.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::exact::FullGaussianState;
use crate::problms::IsoGaussianState;

/// Model hyperparameters shared by every inference routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SsmParams {
    /// Observation-noise variance σ_n².
    pub obs_noise_var: f64,
    /// Per-coordinate drift variance σ_d² of the random walk.
    pub drift_var: f64,
    /// Filter length M.
    pub dim: usize,
    /// Variance of the isotropic prior on w_0.
    pub prior_var: f64,
    /// Forgetting factor λ of the transition mean.
    pub forgetting: f64,
}

impl SsmParams {
    /// Random-walk parameters with the default prior: `prior_var = drift_var`
    /// when the drift is positive, 1 in the stationary case.
    pub fn new(dim: usize, obs_noise_var: f64, drift_var: f64) -> Self {
        SsmParams {
            obs_noise_var,
            drift_var,
            dim,
            prior_var: default_prior_var(drift_var),
            forgetting: 1.0,
        }
    }

    pub fn with_prior_var(mut self, prior_var: f64) -> Self {
        self.prior_var = prior_var;
        self
    }

    pub fn with_forgetting(mut self, forgetting: f64) -> Self {
        self.forgetting = forgetting;
        self
    }

    pub fn validate(self) -> Result<Self> {
        validate_params(self)
    }
}

pub fn default_prior_var(drift_var: f64) -> f64 {
    if drift_var > 0.0 {
        drift_var
    } else {
        1.0
    }
}

/// Returns the parameters unchanged if every invariant holds.
pub fn validate_params(params: SsmParams) -> Result<SsmParams> {
    let SsmParams { obs_noise_var, drift_var, dim, prior_var, forgetting } = params;
    if dim < 1 {
        return Err(Error::param("dim", "must be at least 1"));
    }
    if !(obs_noise_var.is_finite() && obs_noise_var > 0.0) {
        return Err(Error::param("obs_noise_var", format!("must be finite and > 0, got {obs_noise_var}")));
    }
    if !(drift_var.is_finite() && drift_var >= 0.0) {
        return Err(Error::param("drift_var", format!("must be finite and >= 0, got {drift_var}")));
    }
    if !(prior_var.is_finite() && prior_var > 0.0) {
        return Err(Error::param("prior_var", format!("must be finite and > 0, got {prior_var}")));
    }
    if !(forgetting > 0.0 && forgetting <= 1.0) {
        return Err(Error::param("forgetting", format!("must lie in (0, 1], got {forgetting}")));
    }
    Ok(params)
}

/// One time step of streaming data.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionSample {
    pub regressor: DVector<f64>,
    pub observation: f64,
}

impl RegressionSample {
    pub fn new(regressor: DVector<f64>, observation: f64) -> Self {
        RegressionSample { regressor, observation }
    }

    pub fn from_slice(regressor: &[f64], observation: f64) -> Self {
        RegressionSample { regressor: DVector::from_column_slice(regressor), observation }
    }

    pub fn dim(&self) -> usize {
        self.regressor.len()
    }

    /// Checks the sample against the model dimension and for finiteness.
    pub fn check(&self, dim: usize) -> Result<()> {
        if self.regressor.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.regressor.len() });
        }
        if !self.observation.is_finite() {
            return Err(Error::NonFinite("observation"));
        }
        if self.regressor.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("regressor"));
        }
        Ok(())
    }
}

/// Zero-mean prior with covariance `prior_var · I`.
pub fn prior_full(params: &SsmParams) -> Result<FullGaussianState> {
    let p = validate_params(*params)?;
    Ok(FullGaussianState {
        mean: DVector::zeros(p.dim),
        cov: DMatrix::identity(p.dim, p.dim) * p.prior_var,
    })
}

/// The same prior in the isotropic family.
pub fn prior_iso(params: &SsmParams) -> Result<IsoGaussianState> {
    let p = validate_params(*params)?;
    Ok(IsoGaussianState { mean: DVector::zeros(p.dim), var: p.prior_var })
}
