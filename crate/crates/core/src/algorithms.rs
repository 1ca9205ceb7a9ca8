//! Registry of runnable filters and a uniform stepping interface over them.
//!
//! An algorithm is selected by a spec string `name[:label][,key=value...]`,
//! e.g. `problms:probLMS2,misspec=0.01` or `lms,mu=0.01`. Whitespace works
//! as a separator too.

use nalgebra::DVector;

use crate::baselines::{self, BaselineState, DEFAULT_EPS};
use crate::error::{Error, Result};
use crate::exact::{self, FullGaussianState};
use crate::model::{default_prior_var, prior_full, prior_iso, RegressionSample, SsmParams};
use crate::problms::{self, IsoGaussianState};

pub struct ParamInfo {
    pub name: &'static str,
    /// `None` means "taken from the scenario".
    pub default: Option<f64>,
    pub help: &'static str,
}

pub struct AlgorithmInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamInfo],
}

const MODEL_PARAMS: [ParamInfo; 5] = [
    ParamInfo { name: "misspec", default: Some(1.0), help: "factor applied to the scenario's noise variance" },
    ParamInfo { name: "forgetting", default: Some(1.0), help: "transition forgetting factor in (0, 1]" },
    ParamInfo { name: "obs_noise_var", default: None, help: "observation noise variance (overrides scenario)" },
    ParamInfo { name: "drift_var", default: None, help: "random-walk drift variance (overrides scenario)" },
    ParamInfo { name: "prior_var", default: None, help: "prior variance (default: drift_var, or 1 if zero)" },
];

static REGISTRY: [AlgorithmInfo; 6] = [
    AlgorithmInfo {
        name: "problms",
        summary: "probabilistic LMS: isotropic approximate posterior, adaptive step size",
        params: &MODEL_PARAMS,
    },
    AlgorithmInfo {
        name: "exact",
        summary: "exact full-covariance posterior (Kalman / RLS-equivalent)",
        params: &MODEL_PARAMS,
    },
    AlgorithmInfo {
        name: "lms",
        summary: "fixed step-size LMS",
        params: &[ParamInfo { name: "mu", default: Some(0.01), help: "step size" }],
    },
    AlgorithmInfo {
        name: "nlms",
        summary: "normalized LMS",
        params: &[
            ParamInfo { name: "mu", default: Some(0.5), help: "normalized step size" },
            ParamInfo { name: "eps", default: Some(DEFAULT_EPS), help: "regularizer" },
        ],
    },
    AlgorithmInfo {
        name: "vss-nlms",
        summary: "variable step-size NLMS with smoothed gradient",
        params: &[
            ParamInfo { name: "mu_max", default: Some(1.0), help: "largest step size" },
            ParamInfo { name: "alpha", default: Some(0.95), help: "gradient smoothing factor in [0, 1)" },
            ParamInfo { name: "c", default: Some(1e-4), help: "step-size saturation constant" },
            ParamInfo { name: "eps", default: Some(DEFAULT_EPS), help: "regularizer" },
        ],
    },
    AlgorithmInfo {
        name: "rls-classic",
        summary: "exponentially weighted RLS",
        params: &[
            ParamInfo { name: "lambda", default: Some(1.0), help: "forgetting factor in (0, 1]" },
            ParamInfo { name: "eps_inv", default: Some(0.01), help: "initial inverse correlation P_0 = eps_inv * I" },
        ],
    },
];

pub fn list_algorithms() -> &'static [AlgorithmInfo] {
    &REGISTRY
}

fn known_names() -> String {
    REGISTRY.iter().map(|a| a.name).collect::<Vec<_>>().join(", ")
}

/// Model settings for the Bayesian filters, resolved against a scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSettings {
    pub misspec: f64,
    pub forgetting: f64,
    pub obs_noise_var: Option<f64>,
    pub drift_var: Option<f64>,
    pub prior_var: Option<f64>,
}

impl Default for ModelSettings {
    fn default() -> Self {
        ModelSettings { misspec: 1.0, forgetting: 1.0, obs_noise_var: None, drift_var: None, prior_var: None }
    }
}

impl ModelSettings {
    /// Builds model parameters from the scenario's generating parameters
    /// (if any) and the explicit overrides here. `fallback` supplies
    /// experiment-wide overrides.
    pub fn resolve(&self, dim: usize, hint: Option<&SsmParams>, fallback: &ModelSettings) -> Result<SsmParams> {
        let noise = self
            .obs_noise_var
            .or(fallback.obs_noise_var)
            .or(hint.map(|h| h.obs_noise_var))
            .ok_or_else(|| Error::Config("obs_noise_var is required for ingested data".into()))?;
        let drift = self.drift_var.or(fallback.drift_var).or(hint.map(|h| h.drift_var)).unwrap_or(0.0);
        let prior = self.prior_var.or(fallback.prior_var).unwrap_or_else(|| default_prior_var(drift));
        let misspec = self.misspec * fallback.misspec;
        if !(misspec.is_finite() && misspec > 0.0) {
            return Err(Error::param("misspec", format!("must be > 0, got {misspec}")));
        }
        SsmParams { obs_noise_var: noise * misspec, drift_var: drift, dim, prior_var: prior, forgetting: self.forgetting }
            .validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgorithmKind {
    ProbLms(ModelSettings),
    Exact(ModelSettings),
    Lms { mu: f64 },
    Nlms { mu: f64, eps: f64 },
    VssNlms { mu_max: f64, alpha: f64, c: f64, eps: f64 },
    RlsClassic { lambda: f64, eps_inv: f64 },
}

impl AlgorithmKind {
    pub fn name(&self) -> &'static str {
        match self {
            AlgorithmKind::ProbLms(_) => "problms",
            AlgorithmKind::Exact(_) => "exact",
            AlgorithmKind::Lms { .. } => "lms",
            AlgorithmKind::Nlms { .. } => "nlms",
            AlgorithmKind::VssNlms { .. } => "vss-nlms",
            AlgorithmKind::RlsClassic { .. } => "rls-classic",
        }
    }

    pub fn is_isotropic(&self) -> bool {
        matches!(self, AlgorithmKind::ProbLms(_))
    }
}

/// A configured algorithm with its report label.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmSpec {
    pub label: String,
    pub kind: AlgorithmKind,
}

impl AlgorithmSpec {
    pub fn new(label: impl Into<String>, kind: AlgorithmKind) -> Self {
        AlgorithmSpec { label: label.into(), kind }
    }

    /// Parses `name[:label][,key=value...]`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut tokens = spec.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty());
        let head = tokens.next().ok_or_else(|| Error::Config("empty algorithm spec".into()))?;
        let (name, label) = match head.split_once(':') {
            Some((n, l)) if !l.is_empty() => (n, l.to_string()),
            Some((n, _)) => (n, n.to_string()),
            None => (head, head.to_string()),
        };
        let info = REGISTRY
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| Error::UnknownAlgorithm { name: name.to_string(), known: known_names() })?;

        let mut values: Vec<(&'static str, Option<f64>)> = info.params.iter().map(|p| (p.name, p.default)).collect();
        for token in tokens {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("`{token}` in `{spec}` is not key=value")))?;
            let slot = values.iter_mut().find(|(k, _)| *k == key).ok_or_else(|| {
                let accepted = info.params.iter().map(|p| p.name).collect::<Vec<_>>().join(", ");
                Error::Config(format!("`{name}` has no parameter `{key}` (accepted: {accepted})"))
            })?;
            let v: f64 = value
                .parse()
                .map_err(|_| Error::Config(format!("cannot parse `{value}` for `{key}` in `{spec}`")))?;
            slot.1 = Some(v);
        }
        let get = |k: &str| values.iter().find(|(n, _)| *n == k).and_then(|(_, v)| *v);
        let req = |k: &str| get(k).expect("registry parameter has a default");

        let kind = match name {
            "problms" | "exact" => {
                let settings = ModelSettings {
                    misspec: req("misspec"),
                    forgetting: req("forgetting"),
                    obs_noise_var: get("obs_noise_var"),
                    drift_var: get("drift_var"),
                    prior_var: get("prior_var"),
                };
                if name == "problms" {
                    AlgorithmKind::ProbLms(settings)
                } else {
                    AlgorithmKind::Exact(settings)
                }
            }
            "lms" => AlgorithmKind::Lms { mu: req("mu") },
            "nlms" => AlgorithmKind::Nlms { mu: req("mu"), eps: req("eps") },
            "vss-nlms" => AlgorithmKind::VssNlms { mu_max: req("mu_max"), alpha: req("alpha"), c: req("c"), eps: req("eps") },
            "rls-classic" => AlgorithmKind::RlsClassic { lambda: req("lambda"), eps_inv: req("eps_inv") },
            _ => unreachable!("registry and parser disagree on `{name}`"),
        };
        Ok(AlgorithmSpec { label, kind })
    }

    /// Instantiates a fresh filter for data of dimension `dim`.
    pub fn build(&self, dim: usize, hint: Option<&SsmParams>, defaults: &ModelSettings) -> Result<Filter> {
        Ok(match &self.kind {
            AlgorithmKind::ProbLms(s) => {
                let params = s.resolve(dim, hint, defaults)?;
                Filter::ProbLms { state: prior_iso(&params)?, params, eta: None }
            }
            AlgorithmKind::Exact(s) => {
                let params = s.resolve(dim, hint, defaults)?;
                Filter::Exact { state: prior_full(&params)?, params }
            }
            AlgorithmKind::Lms { mu } => Filter::Lms { state: BaselineState::zeros(dim), mu: *mu },
            AlgorithmKind::Nlms { mu, eps } => Filter::Nlms { state: BaselineState::zeros(dim), mu: *mu, eps: *eps },
            AlgorithmKind::VssNlms { mu_max, alpha, c, eps } => Filter::VssNlms {
                state: BaselineState::vss(dim),
                mu_max: *mu_max,
                alpha: *alpha,
                c: *c,
                eps: *eps,
            },
            AlgorithmKind::RlsClassic { lambda, eps_inv } => {
                Filter::RlsClassic { state: BaselineState::rls(dim, *eps_inv)?, lambda: *lambda }
            }
        })
    }
}

/// A running filter instance.
#[derive(Debug, Clone)]
pub enum Filter {
    ProbLms { state: IsoGaussianState, params: SsmParams, eta: Option<f64> },
    Exact { state: FullGaussianState, params: SsmParams },
    Lms { state: BaselineState, mu: f64 },
    Nlms { state: BaselineState, mu: f64, eps: f64 },
    VssNlms { state: BaselineState, mu_max: f64, alpha: f64, c: f64, eps: f64 },
    RlsClassic { state: BaselineState, lambda: f64 },
}

impl Filter {
    pub fn step(&mut self, sample: &RegressionSample) -> Result<()> {
        match self {
            Filter::ProbLms { state, params, eta } => {
                let (next, detail) = problms::problms_step_ou(state, sample, params)?;
                *state = next;
                *eta = detail.gain.scalar();
            }
            Filter::Exact { state, params } => *state = exact::exact_step(state, sample, params)?.0,
            Filter::Lms { state, mu } => *state = baselines::lms_step(state, sample, *mu)?,
            Filter::Nlms { state, mu, eps } => *state = baselines::nlms_step(state, sample, *mu, *eps)?,
            Filter::VssNlms { state, mu_max, alpha, c, eps } => {
                *state = baselines::vss_nlms_step(state, sample, *mu_max, *alpha, *c, *eps)?
            }
            Filter::RlsClassic { state, lambda } => *state = baselines::rls_classic_step(state, sample, *lambda)?,
        }
        Ok(())
    }

    /// Current weight estimate.
    pub fn estimate(&self) -> &DVector<f64> {
        match self {
            Filter::ProbLms { state, .. } => &state.mean,
            Filter::Exact { state, .. } => &state.mean,
            Filter::Lms { state, .. }
            | Filter::Nlms { state, .. }
            | Filter::VssNlms { state, .. }
            | Filter::RlsClassic { state, .. } => &state.weights,
        }
    }

    /// Isotropic posterior variance σ̂², for the probabilistic LMS filter.
    pub fn iso_var(&self) -> Option<f64> {
        match self {
            Filter::ProbLms { state, .. } => Some(state.var),
            _ => None,
        }
    }

    /// Step size used by the last update, where the algorithm has one.
    pub fn step_size(&self) -> Option<f64> {
        match self {
            Filter::ProbLms { eta, .. } => *eta,
            Filter::VssNlms { state, .. } => state.vss_step(),
            _ => None,
        }
    }
}
