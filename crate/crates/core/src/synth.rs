//! Synthetic system-identification scenarios and CSV ingestion.
//!
//! Generators are pure functions of their arguments: the same seed always
//! yields a bit-identical [`Scenario`]. Randomness comes from ChaCha8.
//!
//! Noise variance is derived from the SNR assuming unit signal power. That
//! holds because the true weight vector starts at unit norm and the
//! regressors are white with unit variance, so `E[(x_kᵀw)²] = ‖w‖² = 1`.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Normal, StandardNormal, Uniform};

use crate::error::{Error, Result};
use crate::model::{RegressionSample, SsmParams};

/// How regressor vectors are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegressorKind {
    /// Independent `N(0, I)` vectors.
    #[default]
    Iid,
    /// Tapped delay line over a white scalar input: `x_k[j] = u_{k-j}`.
    Shift,
}

impl std::str::FromStr for RegressorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iid" => Ok(RegressorKind::Iid),
            "shift" => Ok(RegressorKind::Shift),
            other => Err(Error::Config(format!("unknown regressor kind `{other}` (expected iid or shift)"))),
        }
    }
}

/// A stream of samples together with the weights that generated them.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    /// True weights per step; empty when the data carries no ground truth.
    pub truth: Vec<DVector<f64>>,
    pub samples: Vec<RegressionSample>,
    /// Generating parameters; `None` for ingested data.
    pub params_hint: Option<SsmParams>,
    /// Generator seed (0 for ingested data).
    pub seed: u64,
}

impl Scenario {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.samples.first().map_or(0, RegressionSample::dim)
    }

    pub fn has_truth(&self) -> bool {
        !self.truth.is_empty()
    }
}

/// Noise variance giving `snr_db` against a unit-power signal.
pub fn noise_var_for_snr(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 10.0)
}

/// Fixed unit-norm weights (uniform entries on [−1, 1], normalized), white
/// Gaussian regressors, additive Gaussian noise at the requested SNR.
pub fn gen_stationary(m: usize, snr_db: f64, n_steps: usize, seed: u64) -> Result<Scenario> {
    gen_random_walk(m, snr_db, 0.0, n_steps, seed, RegressorKind::Iid)
}

/// Like [`gen_stationary`] but the weights diffuse:
/// `w_k = w_{k-1} + N(0, drift_var · I)`, starting from the unit-norm `w_0`
/// stored in `truth[0]`.
pub fn gen_random_walk(
    m: usize,
    snr_db: f64,
    drift_var: f64,
    n_steps: usize,
    seed: u64,
    regressor_kind: RegressorKind,
) -> Result<Scenario> {
    if m < 1 {
        return Err(Error::param("m", "must be at least 1"));
    }
    if n_steps < 1 {
        return Err(Error::param("n_steps", "must be at least 1"));
    }
    if !snr_db.is_finite() {
        return Err(Error::param("snr_db", "must be finite"));
    }
    if !(drift_var.is_finite() && drift_var >= 0.0) {
        return Err(Error::param("drift_var", format!("must be finite and >= 0, got {drift_var}")));
    }
    let noise_var = noise_var_for_snr(snr_db);
    let params_hint = SsmParams::new(m, noise_var, drift_var).validate()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let uniform = Uniform::new_inclusive(-1.0, 1.0).expect("valid range");
    let noise = Normal::new(0.0, noise_var.sqrt()).expect("finite std dev");
    let drift = Normal::new(0.0, drift_var.sqrt()).expect("finite std dev");

    let mut w: DVector<f64> = loop {
        let w: DVector<f64> = DVector::from_fn(m, |_, _| rng.sample(uniform));
        let norm = w.norm();
        if norm > 0.0 {
            break w / norm;
        }
    };

    // Tap line holds u_k, u_{k-1}, ..., u_{k-M+1}; pre-filled so x_0 is defined.
    let mut taps: DVector<f64> = match regressor_kind {
        RegressorKind::Shift => DVector::from_fn(m, |_, _| rng.sample(StandardNormal)),
        RegressorKind::Iid => DVector::zeros(0),
    };

    let mut truth = Vec::with_capacity(n_steps);
    let mut samples = Vec::with_capacity(n_steps);
    for k in 0..n_steps {
        if k > 0 && drift_var > 0.0 {
            for wi in w.iter_mut() {
                *wi += rng.sample(drift);
            }
        }
        let x = match regressor_kind {
            RegressorKind::Iid => DVector::from_fn(m, |_, _| rng.sample(StandardNormal)),
            RegressorKind::Shift => {
                if k > 0 {
                    for j in (1..m).rev() {
                        taps[j] = taps[j - 1];
                    }
                    taps[0] = rng.sample(StandardNormal);
                }
                taps.clone()
            }
        };
        let y = x.dot(&w) + rng.sample(noise);
        truth.push(w.clone());
        samples.push(RegressionSample::new(x, y));
    }

    Ok(Scenario { truth, samples, params_hint: Some(params_hint), seed })
}

/// Shortest representation that parses back to the same bits.
pub(crate) fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e15).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Writes `k,y,x_0..x_{M-1}[,w_0..w_{M-1}]`, one row per step.
pub fn write_tracking_csv(scenario: &Scenario, path: &Path) -> Result<()> {
    let ctx = || format!("writing {}", path.display());
    let m = scenario.dim();
    let mut out = std::io::BufWriter::new(File::create(path).map_err(|e| Error::io(ctx(), e))?);

    let mut header = vec!["k".to_string(), "y".to_string()];
    header.extend((0..m).map(|j| format!("x_{j}")));
    if scenario.has_truth() {
        header.extend((0..m).map(|j| format!("w_{j}")));
    }
    writeln!(out, "{}", header.join(",")).map_err(|e| Error::io(ctx(), e))?;

    for (k, sample) in scenario.samples.iter().enumerate() {
        let mut row = vec![k.to_string(), fmt_f64(sample.observation)];
        row.extend(sample.regressor.iter().map(|&v| fmt_f64(v)));
        if let Some(w) = scenario.truth.get(k) {
            row.extend(w.iter().map(|&v| fmt_f64(v)));
        }
        writeln!(out, "{}", row.join(",")).map_err(|e| Error::io(ctx(), e))?;
    }
    out.flush().map_err(|e| Error::io(ctx(), e))
}

/// Reads the tracking CSV schema written by [`write_tracking_csv`]. Truth
/// columns are optional.
pub fn load_tracking_csv(path: &Path) -> Result<Scenario> {
    let csv_err = |line: usize, message: String| Error::Csv { path: path.to_path_buf(), line, message };

    let file = File::open(path).map_err(|e| Error::io(format!("opening {}", path.display()), e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(file);

    let header = reader.headers().map_err(|e| csv_err(1, e.to_string()))?.clone();
    let names: Vec<&str> = header.iter().collect();
    if names.len() < 3 || names[0] != "k" || names[1] != "y" {
        return Err(csv_err(1, "header must start with `k,y,x_0`".into()));
    }
    let m = names[2..].iter().take_while(|n| n.starts_with("x_")).count();
    if m == 0 {
        return Err(csv_err(1, "no regressor columns `x_0..`".into()));
    }
    for (j, name) in names[2..2 + m].iter().enumerate() {
        if *name != format!("x_{j}") {
            return Err(csv_err(1, format!("expected column `x_{j}`, found `{name}`")));
        }
    }
    let rest = &names[2 + m..];
    let has_truth = match rest.len() {
        0 => false,
        n if n == m => {
            for (j, name) in rest.iter().enumerate() {
                if *name != format!("w_{j}") {
                    return Err(csv_err(1, format!("expected column `w_{j}`, found `{name}`")));
                }
            }
            true
        }
        n => return Err(csv_err(1, format!("{m} regressor columns but {n} trailing columns"))),
    };
    let width = names.len();

    let mut truth = Vec::new();
    let mut samples = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            csv_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != width {
            return Err(csv_err(line, format!("expected {width} fields, found {}", record.len())));
        }
        let values = record
            .iter()
            .skip(1)
            .map(|f| {
                let v: f64 = f.parse().map_err(|_| csv_err(line, format!("cannot parse `{f}` as a number")))?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(csv_err(line, format!("non-finite value `{f}`")))
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        samples.push(RegressionSample::new(DVector::from_column_slice(&values[1..1 + m]), values[0]));
        if has_truth {
            truth.push(DVector::from_column_slice(&values[1 + m..]));
        }
    }
    if samples.is_empty() {
        return Err(csv_err(1, "no data rows".into()));
    }

    Ok(Scenario { truth, samples, params_hint: None, seed: 0 })
}

/// Complex-valued channel as two real scenarios: real and imaginary parts.
pub fn load_tracking_csv_pair(real: &Path, imag: &Path) -> Result<(Scenario, Scenario)> {
    let re = load_tracking_csv(real)?;
    let im = load_tracking_csv(imag)?;
    if re.len() != im.len() || re.dim() != im.dim() {
        return Err(Error::ShapeMismatch(format!(
            "real part has {}x{} samples, imaginary part {}x{}",
            re.len(),
            re.dim(),
            im.len(),
            im.dim()
        )));
    }
    Ok((re, im))
}
