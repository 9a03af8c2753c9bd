use std::path::Path;
use std::process::{Command, Output};

fn qcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcoh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value_of(text: &str, label: &str) -> f64 {
    let line = text.lines().find(|l| l.trim_start().starts_with(label)).unwrap_or_else(|| panic!("{label} missing"));
    line.split_whitespace().last().unwrap().parse().unwrap()
}

#[test]
fn inspect_maximally_coherent() {
    let o = qcoh(&["inspect", "--state", "mcs:4"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert!((value_of(&t, "C_l1") - 3.0).abs() < 1e-6);
    assert!((value_of(&t, "C_r (nats)") - 4f64.ln()).abs() < 1e-6);
}

#[test]
fn inspect_state_file_with_maximally_mixed_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.txt");
    let mut text = String::from("# I/4\n4\n");
    for i in 0..4 {
        for j in 0..4 {
            text.push_str(if i == j { "0.25 0\n" } else { "0 0\n" });
        }
    }
    std::fs::write(&path, text).unwrap();
    let o = qcoh(&["inspect", "--state-file", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let t = stdout(&o);
    for label in ["C_l1", "C_l2", "C_r (nats)", "C_g"] {
        assert!(value_of(&t, label).abs() < 1e-9, "{label}");
    }
    assert!((value_of(&t, "M_l") - 1.0).abs() < 1e-9);
}

#[test]
fn bad_state_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "2\n1 0\n1 0\n0 0\n0 0\n").unwrap();
    let o = qcoh(&["inspect", "--state-file", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = qcoh(&["inspect", "--state", "nonsense"]);
    assert!(!o.status.success());
}

#[test]
fn dicke_run_writes_csv_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dicke.csv");
    let o = qcoh(&["run", "dicke_curves", "--qubits", "3-6", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,r,measure,normalized,delta_closed,delta_direct"));
    // r <= n/2 for n = 3..6 gives 1 + 2 + 2 + 3 states, two measures each
    assert_eq!(lines.count(), 16);
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("dicke.meta.json")).unwrap()).unwrap();
    for key in ["seed", "version", "wall_time_s"] {
        assert!(meta.get(key).is_some(), "{key}");
    }
}

#[test]
fn histogram_run_conserves_mass() {
    let o = qcoh(&[
        "run", "tradeoff_histograms", "--qubits", "3", "--ranks", "2,3", "--samples", "60", "--bins", "10",
    ]);
    assert!(o.status.success());
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("panel,rank,n_qubits,bin_lo,bin_hi,rel_freq"));
    let mut sums = std::collections::BTreeMap::new();
    for l in lines {
        let f: Vec<&str> = l.split(',').collect();
        *sums.entry((f[0].to_string(), f[1].to_string())).or_insert(0.0) += f[5].parse::<f64>().unwrap();
    }
    assert_eq!(sums.len(), 8);
    assert!(sums.values().all(|s| (s - 1.0).abs() < 1e-9));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "experiment = additivity_table\nqubits = 3\nranks = 2\nsamples = 40\nseed = 9\n").unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec!["run", "additivity_table", "--config", cfg.to_str().unwrap()];
        args.extend_from_slice(extra);
        qcoh(&args)
    };
    let o = run(&[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let t = stdout(&o);
    assert_eq!(t.lines().count(), 1 + 5);
    assert!(t.lines().skip(1).all(|l| l.starts_with("2,3,") && l.ends_with(",40,9")));
    let t = stdout(&run(&["--samples", "20"]));
    assert!(t.lines().skip(1).all(|l| l.ends_with(",20,9")));
}

#[test]
fn invalid_configurations_fail() {
    for args in [
        &["run", "additivity_table", "--samples", "0"][..],
        &["run", "additivity_table", "--qubits", "2"][..],
        &["run", "tradeoff_histograms", "--bins", "1"][..],
        &["run", "unknown_experiment"][..],
        &["run", "additivity_table", "--preset", "huge"][..],
    ] {
        let o = qcoh(args);
        assert!(!o.status.success(), "{args:?} should fail");
    }
}

#[test]
fn single_state_through_run() {
    let o = qcoh(&["run", "single_state", "--state", "dicke:3,1"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert!(t.contains("additivity (pivot 0)") && t.contains("Delta1"));
    assert!(!Path::new("single_state").exists());
}
