//! KL divergence from a full-covariance Gaussian to an isotropic one, and
//! the isotropic Gaussian that minimizes it.
//!
//! ```text
//! KL(N(μ₁, Σ₁) ‖ N(μ₂, σ₂² I)) =
//!     ½ [ −M + Tr(Σ₁)/σ₂² + ‖μ₂ − μ₁‖²/σ₂² + M ln σ₂² − ln det Σ₁ ]
//! ```
//!
//! Setting the derivatives to zero gives `μ₂ = μ₁` and `σ₂² = Tr(Σ₁)/M`,
//! the unique stationary point on σ₂² > 0.

use nalgebra::Cholesky;

use crate::error::{Error, Result};
use crate::exact::FullGaussianState;
use crate::problms::IsoGaussianState;

pub type GaussianFull = FullGaussianState;
pub type GaussianIso = IsoGaussianState;

/// Covariances with a larger eigenvalue spread are rejected by [`kl_full_to_iso`].
pub const MAX_CONDITION: f64 = 1e12;

pub fn kl_full_to_iso(p: &GaussianFull, q: &GaussianIso) -> Result<f64> {
    let m = p.dim();
    if q.dim() != m || p.cov.nrows() != m || p.cov.ncols() != m {
        return Err(Error::DimensionMismatch { expected: m, found: q.dim() });
    }
    if !(q.var.is_finite() && q.var > 0.0) {
        return Err(Error::param("var", format!("must be finite and > 0, got {}", q.var)));
    }

    let eig = p.cov.clone().symmetric_eigenvalues();
    let (lo, hi) = (eig.min(), eig.max());
    let condition = if lo > 0.0 { hi / lo } else { f64::INFINITY };
    if !(condition <= MAX_CONDITION) {
        return Err(Error::Singular { condition });
    }
    let chol = Cholesky::new(p.cov.clone()).ok_or(Error::Singular { condition })?;
    let log_det = 2.0 * chol.l_dirty().diagonal().iter().map(|d| d.ln()).sum::<f64>();

    let mf = m as f64;
    let dist2 = (&q.mean - &p.mean).norm_squared();
    Ok(0.5 * (-mf + p.cov.trace() / q.var + dist2 / q.var + mf * q.var.ln() - log_det))
}

/// Moment-matched isotropic approximation: same mean, `var = Tr(Σ)/M`.
pub fn project_isotropic(p: &GaussianFull) -> Result<GaussianIso> {
    let m = p.dim();
    if p.cov.nrows() != m || p.cov.ncols() != m {
        return Err(Error::DimensionMismatch { expected: m, found: p.cov.nrows() });
    }
    let var = p.cov.trace() / m as f64;
    if !var.is_finite() {
        return Err(Error::NonFinite("covariance trace"));
    }
    if var <= 0.0 {
        return Err(Error::ZeroTrace);
    }
    Ok(IsoGaussianState { mean: p.mean.clone(), var })
}
