//! Mean-square deviation curves and uncertainty coverage.
//!
//! Everything is accumulated on a linear scale; decibels only at reporting.

use nalgebra::DVector;

use crate::error::{Error, Result};

/// Trial-averaged `‖w_k − ŵ_k‖²` per step.
#[derive(Debug, Clone, PartialEq)]
pub struct MsdCurve {
    pub per_step_msd: Vec<f64>,
    pub n_trials: usize,
}

impl MsdCurve {
    /// Averages per-trial squared-deviation traces. Summation runs in the
    /// order given, so a fixed trial order gives bit-identical curves.
    pub fn from_traces<T: AsRef<[f64]>>(traces: &[T]) -> Result<Self> {
        let first = traces.first().ok_or_else(|| Error::ShapeMismatch("no trials".into()))?;
        let len = first.as_ref().len();
        let mut sum = vec![0.0; len];
        for (i, trace) in traces.iter().enumerate() {
            let trace = trace.as_ref();
            if trace.len() != len {
                return Err(Error::ShapeMismatch(format!("trial {i} has {} steps, trial 0 has {len}", trace.len())));
            }
            for (acc, v) in sum.iter_mut().zip(trace) {
                *acc += v;
            }
        }
        let n = traces.len() as f64;
        Ok(MsdCurve { per_step_msd: sum.into_iter().map(|s| s / n).collect(), n_trials: traces.len() })
    }

    pub fn len(&self) -> usize {
        self.per_step_msd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_step_msd.is_empty()
    }

    pub fn db(&self) -> Vec<f64> {
        self.per_step_msd.iter().map(|&v| to_db(v)).collect()
    }
}

pub fn to_db(v: f64) -> f64 {
    10.0 * v.log10()
}

/// Squared deviation `‖w_k − ŵ_k‖²` of one trajectory.
pub fn squared_deviation_trace(estimates: &[DVector<f64>], truths: &[DVector<f64>]) -> Result<Vec<f64>> {
    if estimates.len() != truths.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} estimates vs {} truth vectors",
            estimates.len(),
            truths.len()
        )));
    }
    estimates
        .iter()
        .zip(truths)
        .enumerate()
        .map(|(k, (est, w))| {
            if est.len() != w.len() {
                return Err(Error::ShapeMismatch(format!("step {k}: estimate dim {} vs truth dim {}", est.len(), w.len())));
            }
            Ok((w - est).norm_squared())
        })
        .collect()
}

/// `per_step_msd[k]` = mean over trials of `‖w_k^o − ŵ_k‖²`.
pub fn msd_curve(estimates: &[Vec<DVector<f64>>], truths: &[Vec<DVector<f64>>]) -> Result<MsdCurve> {
    if estimates.len() != truths.len() {
        return Err(Error::ShapeMismatch(format!("{} estimate trials vs {} truth trials", estimates.len(), truths.len())));
    }
    let traces = estimates
        .iter()
        .zip(truths)
        .map(|(e, t)| squared_deviation_trace(e, t))
        .collect::<Result<Vec<_>>>()?;
    MsdCurve::from_traces(&traces)
}

/// `10·log₁₀` of the mean of the last `window` entries.
pub fn steady_state_msd_db(curve: &MsdCurve, window: usize) -> Result<f64> {
    if window == 0 {
        return Err(Error::param("window", "must be at least 1"));
    }
    if window > curve.len() {
        return Err(Error::param("window", format!("{window} exceeds curve length {}", curve.len())));
    }
    let tail = &curve.per_step_msd[curve.len() - window..];
    Ok(to_db(tail.iter().sum::<f64>() / window as f64))
}

/// Default steady-state window: the final 10% of steps, at least one.
pub fn default_window(n_steps: usize) -> usize {
    (n_steps / 10).max(1)
}

/// Number of coordinates with `|w − μ̂| ≤ width·σ̂` at one step.
pub fn covered_count(mean: &DVector<f64>, var: f64, truth: &DVector<f64>, width: f64) -> usize {
    let half = width * var.sqrt();
    mean.iter().zip(truth.iter()).filter(|(m, w)| (*w - *m).abs() <= half).count()
}

/// Fraction of (step, coordinate) pairs whose truth lies within
/// `width` posterior standard deviations of the estimate.
pub fn coverage(
    estimate_means: &[DVector<f64>],
    estimate_vars: &[f64],
    truths: &[DVector<f64>],
    width: f64,
) -> Result<f64> {
    if !(width > 0.0) {
        return Err(Error::param("width", format!("must be > 0, got {width}")));
    }
    if estimate_means.len() != truths.len() || estimate_vars.len() != truths.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} means, {} variances, {} truth vectors",
            estimate_means.len(),
            estimate_vars.len(),
            truths.len()
        )));
    }
    let mut hits = 0usize;
    let mut total = 0usize;
    for (k, ((mean, &var), w)) in estimate_means.iter().zip(estimate_vars).zip(truths).enumerate() {
        if mean.len() != w.len() {
            return Err(Error::ShapeMismatch(format!("step {k}: estimate dim {} vs truth dim {}", mean.len(), w.len())));
        }
        hits += covered_count(mean, var, w, width);
        total += w.len();
    }
    if total == 0 {
        return Err(Error::ShapeMismatch("nothing to cover".into()));
    }
    Ok(hits as f64 / total as f64)
}
