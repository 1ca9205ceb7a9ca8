//! Classical adaptive filters used for comparison: fixed-step LMS, NLMS,
//! variable-step NLMS and exponentially weighted RLS.
//!
//! Step functions take a state by reference and return the next one.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::exact::symmetrize;
use crate::model::RegressionSample;

/// Default regularizer added to `‖x‖²` in the normalized filters.
pub const DEFAULT_EPS: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum BaselineAux {
    None,
    /// Smoothed normalized gradient `p_k` and the last step size `μ_k`.
    Vss { smoothed: DVector<f64>, step: f64 },
    /// Inverse correlation matrix `P_k`.
    Rls { inv_corr: DMatrix<f64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineState {
    pub weights: DVector<f64>,
    pub aux: BaselineAux,
}

impl BaselineState {
    /// Zero weights, no auxiliary state (LMS, NLMS).
    pub fn zeros(dim: usize) -> Self {
        BaselineState { weights: DVector::zeros(dim), aux: BaselineAux::None }
    }

    pub fn vss(dim: usize) -> Self {
        BaselineState {
            weights: DVector::zeros(dim),
            aux: BaselineAux::Vss { smoothed: DVector::zeros(dim), step: 0.0 },
        }
    }

    /// RLS start with `P_0 = eps_inv · I`.
    pub fn rls(dim: usize, eps_inv: f64) -> Result<Self> {
        positive("eps_inv", eps_inv)?;
        Ok(BaselineState {
            weights: DVector::zeros(dim),
            aux: BaselineAux::Rls { inv_corr: DMatrix::identity(dim, dim) * eps_inv },
        })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Last VSS step size `μ_k`, if this is a VSS state.
    pub fn vss_step(&self) -> Option<f64> {
        match &self.aux {
            BaselineAux::Vss { step, .. } => Some(*step),
            _ => None,
        }
    }

    pub fn inv_corr(&self) -> Option<&DMatrix<f64>> {
        match &self.aux {
            BaselineAux::Rls { inv_corr } => Some(inv_corr),
            _ => None,
        }
    }

    fn error(&self, sample: &RegressionSample) -> Result<f64> {
        sample.check(self.dim())?;
        if self.weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite("weights"));
        }
        Ok(sample.observation - sample.regressor.dot(&self.weights))
    }
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::param(name, format!("must be finite and > 0, got {v}")))
    }
}

/// `w_k = w_{k-1} + μ e_k x_k`.
pub fn lms_step(state: &BaselineState, sample: &RegressionSample, mu: f64) -> Result<BaselineState> {
    positive("mu", mu)?;
    let e = state.error(sample)?;
    let mut next = state.clone();
    next.weights.axpy(mu * e, &sample.regressor, 1.0);
    Ok(next)
}

/// `w_k = w_{k-1} + μ/(ε + ‖x_k‖²) e_k x_k`.
pub fn nlms_step(state: &BaselineState, sample: &RegressionSample, mu: f64, eps: f64) -> Result<BaselineState> {
    positive("mu", mu)?;
    positive("eps", eps)?;
    let e = state.error(sample)?;
    let norm = eps + sample.regressor.norm_squared();
    let mut next = state.clone();
    next.weights.axpy(mu * e / norm, &sample.regressor, 1.0);
    Ok(next)
}

/// Variable step-size NLMS driven by a smoothed normalized gradient:
///
/// ```text
/// p_k = α p_{k-1} + (1 − α) e_k x_k / (ε + ‖x_k‖²)
/// μ_k = μ_max ‖p_k‖² / (‖p_k‖² + C)
/// w_k = w_{k-1} + μ_k e_k x_k / (ε + ‖x_k‖²)
/// ```
pub fn vss_nlms_step(
    state: &BaselineState,
    sample: &RegressionSample,
    mu_max: f64,
    alpha: f64,
    c: f64,
    eps: f64,
) -> Result<BaselineState> {
    positive("mu_max", mu_max)?;
    positive("c", c)?;
    positive("eps", eps)?;
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::param("alpha", format!("must lie in [0, 1), got {alpha}")));
    }
    let BaselineAux::Vss { smoothed, .. } = &state.aux else {
        return Err(Error::param("state", "VSS-NLMS needs a state built with BaselineState::vss"));
    };
    let e = state.error(sample)?;
    let x = &sample.regressor;
    let norm = eps + x.norm_squared();

    let mut smoothed = smoothed * alpha;
    smoothed.axpy((1.0 - alpha) * e / norm, x, 1.0);
    let energy = smoothed.norm_squared();
    let step = mu_max * energy / (energy + c);

    let mut weights = state.weights.clone();
    weights.axpy(step * e / norm, x, 1.0);
    Ok(BaselineState { weights, aux: BaselineAux::Vss { smoothed, step } })
}

/// Exponentially weighted RLS:
///
/// ```text
/// g = P x / (λ + xᵀ P x)
/// w ← w + g e
/// P ← (P − g xᵀ P) / λ
/// ```
pub fn rls_classic_step(state: &BaselineState, sample: &RegressionSample, lam: f64) -> Result<BaselineState> {
    if !(lam > 0.0 && lam <= 1.0) {
        return Err(Error::param("lambda", format!("must lie in (0, 1], got {lam}")));
    }
    let BaselineAux::Rls { inv_corr } = &state.aux else {
        return Err(Error::param("state", "RLS needs a state built with BaselineState::rls"));
    };
    let e = state.error(sample)?;
    let x = &sample.regressor;

    let px = inv_corr * x;
    let denom = lam + x.dot(&px);
    let gain = &px / denom;

    let mut weights = state.weights.clone();
    weights.axpy(e, &gain, 1.0);

    // P symmetric, so xᵀP = (Px)ᵀ.
    let mut inv_corr = inv_corr.clone();
    inv_corr.ger(-1.0, &gain, &px, 1.0);
    inv_corr /= lam;
    symmetrize(&mut inv_corr);

    Ok(BaselineState { weights, aux: BaselineAux::Rls { inv_corr } })
}
