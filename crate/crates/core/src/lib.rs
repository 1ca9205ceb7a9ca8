//! Probabilistic LMS adaptive filtering.
//!
//! The unknown weights of a linear regression `y_k = x_kᵀw_k + noise` follow
//! a Gaussian random walk. Exact Bayesian inference in this model is the
//! Kalman/RLS recursion ([`exact`]). Keeping the posterior isotropic instead,
//! by KL projection after each update ([`klproj`]), yields an LMS filter whose
//! step size and scalar uncertainty both come out of the model ([`problms`]).
//!
//! [`baselines`] holds the classical comparison filters, [`synth`] the
//! scenario generators and CSV ingestion, [`metrics`] MSD and coverage, and
//! [`experiment`] the Monte Carlo runner behind the `problms` CLI.

// Negated comparisons are used on purpose so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algorithms;
pub mod baselines;
pub mod error;
pub mod exact;
pub mod experiment;
pub mod klproj;
pub mod metrics;
pub mod model;
pub mod plot;
pub mod problms;
pub mod synth;

pub use algorithms::{list_algorithms, AlgorithmSpec, Filter};
pub use error::{Error, Result};
pub use exact::{exact_step, rls_map_estimate, FullGaussianState, Gain, StepDetail};
pub use experiment::{run_experiment, simulate, ExperimentConfig, ExperimentResults};
pub use klproj::{kl_full_to_iso, project_isotropic};
pub use model::{prior_full, prior_iso, validate_params, RegressionSample, SsmParams};
pub use problms::{lms_map_estimate, predictive_band, problms_step, problms_step_ou, IsoGaussianState};
pub use synth::{gen_random_walk, gen_stationary, load_tracking_csv, RegressorKind, Scenario};
