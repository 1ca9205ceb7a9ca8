//! Probabilistic LMS.
//!
//! The posterior is kept inside the isotropic family `N(μ̂_k, σ̂_k² I)`. One
//! step runs the exact predict/update from the isotropic state and then
//! projects the filtered Gaussian back onto the family (see
//! [`crate::klproj`]). Because the predictive covariance is a multiple of
//! the identity, the whole cycle collapses to vector operations:
//!
//! ```text
//! s    = λ² σ̂²_{k-1} + σ_d²
//! η_k  = s / (s ‖x_k‖² + σ_n²)
//! μ̂_k  = λ μ̂_{k-1} + η_k (y_k − λ x_kᵀ μ̂_{k-1}) x_k
//! σ̂²_k = (1 − η_k ‖x_k‖² / M) s
//! ```
//!
//! `η_k` acts as the step size of an LMS filter; it shrinks as the posterior
//! variance does. Each step is O(M) and allocates only the new mean.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::exact::{Gain, StepDetail};
use crate::model::{validate_params, RegressionSample, SsmParams};

/// Lower bound on σ̂² so long stationary runs never underflow to zero.
pub const VAR_FLOOR: f64 = 1e-300;

/// Gaussian posterior with isotropic covariance `var · I`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoGaussianState {
    pub mean: DVector<f64>,
    pub var: f64,
}

impl IsoGaussianState {
    pub fn new(mean: DVector<f64>, var: f64) -> Result<Self> {
        let state = IsoGaussianState { mean, var };
        state.check()?;
        Ok(state)
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    /// Standard deviation σ̂.
    pub fn std_dev(&self) -> f64 {
        self.var.sqrt()
    }

    fn check(&self) -> Result<()> {
        if !(self.var.is_finite() && self.var > 0.0) {
            return Err(Error::param("var", format!("must be finite and > 0, got {}", self.var)));
        }
        if self.mean.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("state mean"));
        }
        Ok(())
    }
}

/// One step under the random-walk model. Requires `params.forgetting == 1`;
/// use [`problms_step_ou`] for `λ < 1`.
pub fn problms_step(
    state: &IsoGaussianState,
    sample: &RegressionSample,
    params: &SsmParams,
) -> Result<(IsoGaussianState, StepDetail)> {
    if params.forgetting != 1.0 {
        return Err(Error::param(
            "forgetting",
            format!("random-walk step requires forgetting = 1, got {}", params.forgetting),
        ));
    }
    problms_step_ou(state, sample, params)
}

/// One step under the Ornstein-Uhlenbeck transition `w_k ~ N(λ w_{k-1}, σ_d² I)`.
/// With `λ = 1` this is bit-identical to [`problms_step`].
pub fn problms_step_ou(
    state: &IsoGaussianState,
    sample: &RegressionSample,
    params: &SsmParams,
) -> Result<(IsoGaussianState, StepDetail)> {
    let params = validate_params(*params)?;
    let m = params.dim;
    if state.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: state.dim() });
    }
    state.check()?;
    sample.check(m)?;

    let lambda = params.forgetting;
    let x = &sample.regressor;

    let s = lambda * lambda * state.var + params.drift_var;
    let energy = x.norm_squared();
    let predicted_obs_var = s * energy + params.obs_noise_var;
    let eta = s / predicted_obs_var;

    let mut mean = &state.mean * lambda;
    let innovation = sample.observation - x.dot(&mean);
    mean.axpy(eta * innovation, x, 1.0);

    let var = ((1.0 - eta * energy / m as f64) * s).max(VAR_FLOOR);

    let detail = StepDetail { gain: Gain::Scalar(eta), innovation, predicted_obs_var };
    Ok((IsoGaussianState { mean, var }, detail))
}

/// Posterior mode: the adaptive-step LMS weight estimate.
pub fn lms_map_estimate(state: &IsoGaussianState) -> DVector<f64> {
    state.mean.clone()
}

/// Per-coordinate band `μ̂ ∓ width·σ̂`.
///
/// # Panics
///
/// If `width` is not positive.
pub fn predictive_band(state: &IsoGaussianState, width: f64) -> (DVector<f64>, DVector<f64>) {
    assert!(width > 0.0, "band width must be positive, got {width}");
    let half = width * state.std_dev();
    (state.mean.add_scalar(-half), state.mean.add_scalar(half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::prior_iso;

    fn iso(mean: &[f64], var: f64) -> IsoGaussianState {
        IsoGaussianState::new(DVector::from_column_slice(mean), var).unwrap()
    }

    #[test]
    fn zero_regressor_is_a_noop() {
        let p = SsmParams::new(3, 0.5, 0.0);
        let s = iso(&[1.0, 2.0, 3.0], 2.0);
        let (next, detail) = problms_step(&s, &RegressionSample::from_slice(&[0.0; 3], 9.0), &p).unwrap();
        assert_eq!(detail.gain, Gain::Scalar(2.0 / 0.5));
        assert_eq!(next, s);
    }

    #[test]
    fn zero_regressor_with_drift_inflates() {
        let p = SsmParams::new(2, 0.5, 0.25);
        let s = iso(&[1.0, 2.0], 2.0);
        let (next, _) = problms_step(&s, &RegressionSample::from_slice(&[0.0; 2], 9.0), &p).unwrap();
        assert_eq!(next.mean, s.mean);
        assert_eq!(next.var, 2.25);
    }

    #[test]
    fn two_dim_hand_evaluation() {
        let p = SsmParams::new(2, 1.0, 0.0);
        let s = iso(&[0.0, 0.0], 1.0);
        let (next, detail) = problms_step(&s, &RegressionSample::from_slice(&[1.0, 0.0], 1.0), &p).unwrap();
        assert_eq!(detail.gain, Gain::Scalar(0.5));
        assert_eq!(detail.innovation, 1.0);
        assert_eq!(detail.predicted_obs_var, 2.0);
        assert_eq!(next.mean, DVector::from_vec(vec![0.5, 0.0]));
        assert_eq!(next.var, 0.75);
        assert_eq!(lms_map_estimate(&next), DVector::from_vec(vec![0.5, 0.0]));
    }

    #[test]
    fn ou_hand_evaluation() {
        let p = SsmParams::new(2, 1.0, 0.0).with_forgetting(0.9);
        let s = iso(&[1.0, 1.0], 1.0);
        let (next, _) = problms_step_ou(&s, &RegressionSample::from_slice(&[0.0, 0.0], 3.0), &p).unwrap();
        assert_eq!(next.mean, DVector::from_vec(vec![0.9, 0.9]));
        assert!((next.var - 0.81).abs() < 1e-15);
    }

    #[test]
    fn random_walk_step_rejects_forgetting() {
        let p = SsmParams::new(1, 1.0, 0.0).with_forgetting(0.9);
        let s = iso(&[0.0], 1.0);
        assert!(problms_step(&s, &RegressionSample::from_slice(&[1.0], 1.0), &p).is_err());
        assert!(problms_step_ou(&s, &RegressionSample::from_slice(&[1.0], 1.0), &p).is_ok());
    }

    #[test]
    fn input_errors() {
        let p = SsmParams::new(2, 1.0, 0.0);
        let s = prior_iso(&p).unwrap();
        assert!(matches!(
            problms_step(&s, &RegressionSample::from_slice(&[1.0], 1.0), &p),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(
            problms_step(&s, &RegressionSample::from_slice(&[1.0, f64::NAN], 1.0), &p),
            Err(Error::NonFinite(_))
        ));
        assert!(IsoGaussianState::new(DVector::zeros(2), 0.0).is_err());
    }

    #[test]
    fn variance_floor_holds() {
        let p = SsmParams::new(1, 1e-300, 0.0);
        let mut s = iso(&[0.0], 1e-290);
        for _ in 0..100 {
            s = problms_step(&s, &RegressionSample::from_slice(&[1e10], 0.0), &p).unwrap().0;
            assert!(s.var >= VAR_FLOOR);
        }
    }

    #[test]
    fn bands() {
        let (lo, hi) = predictive_band(&iso(&[0.0], 4.0), 2.0);
        assert_eq!((lo[0], hi[0]), (-4.0, 4.0));

        let (lo, hi) = predictive_band(&iso(&[1.0, -1.0], 0.25), 1.0);
        assert_eq!(lo, DVector::from_vec(vec![0.5, -1.5]));
        assert_eq!(hi, DVector::from_vec(vec![1.5, -0.5]));

        let s = iso(&[3.0], VAR_FLOOR);
        let (lo, hi) = predictive_band(&s, 2.0);
        assert_eq!((lo[0], hi[0]), (3.0, 3.0));

        let prior = prior_iso(&SsmParams::new(3, 1.0, 0.0)).unwrap();
        assert_eq!(lms_map_estimate(&prior), DVector::zeros(3));
    }
}
