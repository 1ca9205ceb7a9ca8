use std::fs;
use std::path::Path;

use problms::algorithms::AlgorithmSpec;
use problms::error::Error;
use problms::experiment::{run_experiment, simulate, ExperimentConfig, Metric, ScenarioConfig, ScenarioKind};
use problms::synth::{gen_random_walk, write_tracking_csv, RegressorKind};

fn small(dir: &Path) -> ExperimentConfig {
    ExperimentConfig {
        scenario: ScenarioConfig { m: 5, n_steps: 300, ..Default::default() },
        n_trials: 4,
        seed: 17,
        out_dir: dir.to_path_buf(),
        ..Default::default()
    }
}

fn read(dir: &Path, name: &str) -> Vec<u8> {
    fs::read(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn writes_every_report() {
    let dir = tempfile::tempdir().unwrap();
    run_experiment(&small(dir.path())).unwrap();
    for name in ["msd.csv", "summary.csv", "uncertainty.csv", "msd.svg", "band.svg"] {
        assert!(dir.path().join(name).is_file(), "{name} missing");
    }
    let msd = String::from_utf8(read(dir.path(), "msd.csv")).unwrap();
    assert_eq!(msd.lines().next().unwrap(), "k,lms,nlms,vss-nlms,rls-classic,probLMS1,probLMS2,exact");
    assert_eq!(msd.lines().count(), 301);
    let summary = String::from_utf8(read(dir.path(), "summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 8);
    let unc = String::from_utf8(read(dir.path(), "uncertainty.csv")).unwrap();
    assert_eq!(unc.lines().count(), 1 + 2 * 300);
}

#[test]
fn minimal_run_has_single_row_bodies() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = small(dir.path());
    cfg.n_trials = 1;
    cfg.scenario.n_steps = 1;
    cfg.algorithms = vec![AlgorithmSpec::parse("problms").unwrap()];
    run_experiment(&cfg).unwrap();
    for name in ["msd.csv", "summary.csv", "uncertainty.csv"] {
        let text = String::from_utf8(read(dir.path(), name)).unwrap();
        assert_eq!(text.lines().count(), 2, "{name}");
    }
}

#[test]
fn identical_output_for_any_worker_count() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let mut cfg = small(a.path());
    cfg.scenario.kind = ScenarioKind::RandomWalk;
    cfg.scenario.drift_var = 1e-4;
    cfg.scenario.regressors = RegressorKind::Shift;
    run_experiment(&cfg).unwrap();
    cfg.out_dir = b.path().to_path_buf();
    cfg.workers = 3;
    run_experiment(&cfg).unwrap();
    for name in ["msd.csv", "summary.csv", "uncertainty.csv", "msd.svg", "band.svg"] {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name} differs");
    }
}

#[test]
fn seed_changes_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = small(dir.path());
    let a = simulate(&cfg).unwrap();
    cfg.seed += 1;
    let b = simulate(&cfg).unwrap();
    assert_ne!(a.algorithms[0].curve, b.algorithms[0].curve);
}

#[test]
fn unknown_algorithm_is_a_usage_error() {
    let e = ExperimentConfig::parse("algo = nope", Path::new(".")).unwrap_err();
    assert!(matches!(e, Error::UnknownAlgorithm { .. }));
    assert!(e.is_usage());
    assert!(e.to_string().contains("problms"));
}

#[test]
fn csv_scenarios_with_and_without_truth() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    let mut s = gen_random_walk(3, 20.0, 1e-4, 200, 4, RegressorKind::Iid).unwrap();
    write_tracking_csv(&s, &data).unwrap();

    let text = format!("kind = csv\ncsv = {}\nobs_noise_var = 0.01\ndrift_var = 1e-4\nn_trials = 1\nalgo = problms\nalgo = lms\n", data.display());
    let mut cfg = ExperimentConfig::parse(&text, dir.path()).unwrap();
    cfg.out_dir = dir.path().join("out");
    let r = run_experiment(&cfg).unwrap();
    assert_eq!(r.metric, Metric::Msd);
    assert_eq!(r.n_steps, 200);
    assert!(r.algorithms[0].uncertainty.as_ref().unwrap().coverage.is_some());

    s.truth.clear();
    write_tracking_csv(&s, &data).unwrap();
    let r = run_experiment(&cfg).unwrap();
    assert_eq!(r.metric, Metric::PredictionError);
    assert!(r.algorithms[0].uncertainty.as_ref().unwrap().coverage.is_none());

    // The Bayesian filters need a noise level for ingested data.
    let text = format!("kind = csv\ncsv = {}\nalgo = problms\n", data.display());
    let cfg = ExperimentConfig::parse(&text, dir.path()).unwrap();
    assert!(matches!(simulate(&cfg), Err(Error::Config(_))));
}

#[test]
fn csv_errors_propagate() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("bad.csv");
    fs::write(&data, "k,y,x_0\n0,1\n").unwrap();
    let cfg = ExperimentConfig::parse(&format!("kind = csv\ncsv = {}\nobs_noise_var = 1\nalgo = lms", data.display()), dir.path()).unwrap();
    let e = simulate(&cfg).unwrap_err();
    assert!(matches!(e, Error::Csv { line: 2, .. }), "{e}");
    assert!(!e.is_usage());
}

#[test]
fn unwritable_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let mut cfg = small(&blocker.join("sub"));
    cfg.n_trials = 1;
    cfg.scenario.n_steps = 5;
    assert!(matches!(run_experiment(&cfg), Err(Error::Io { .. })));
}
