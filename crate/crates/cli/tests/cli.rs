//! Command-line behaviour: exit codes, output schemas, provenance and
//! cross-checks against the library solvers.

use pbs_core::model::{parse_instance, random_costs, PbsTree};
use pbs_core::solver::brute_force;
use std::path::Path;
use std::process::Command;

fn run_in(dir: &Path, args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pbs-cqaoa"))
        .arg("--out")
        .arg(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_star_instance(dir: &Path, seed: u64) -> std::path::PathBuf {
    let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
    let inst = random_costs(&tree, 4, seed);
    let path = dir.join("star.json");
    std::fs::write(&path, inst.to_json().to_string()).unwrap();
    path
}

#[test]
fn missing_instance_file_exits_2_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["solve", "--classical", "--instance", "/nonexistent/foo.json"],
    );
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("error"), "stderr: {stderr}");
}

#[test]
fn usage_error_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["solve", "--classical"]);
    assert_eq!(out.status.code(), Some(2), "no instance source given");

    let out = run_in(dir.path(), &["benchmark", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classical_solve_matches_brute_force_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_star_instance(dir.path(), 7);
    let out = run_in(
        dir.path(),
        &["solve", "--classical", "--instance", path.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("solve_result.json")).unwrap())
            .unwrap();
    let inst = parse_instance(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (oracle_assignment, oracle_cost) = brute_force(&inst).unwrap();
    assert_eq!(doc["result"]["cost"].as_f64().unwrap(), oracle_cost);
    let sites: Vec<usize> = doc["result"]["assignment"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    assert_eq!(sites, oracle_assignment.sites());
    // provenance: the source block names the file
    assert_eq!(doc["source"]["kind"], "file");
}

#[test]
fn quantum_solve_reports_distribution_and_success_probability() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_star_instance(dir.path(), 3);
    let out = run_in(
        dir.path(),
        &[
            "solve",
            "--quantum",
            "-p",
            "2",
            "--instance",
            path.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("solve_result.json")).unwrap())
            .unwrap();
    let record = &doc["result"];
    assert!(record["p_alpha"].as_f64().unwrap() > 0.0);
    assert_eq!(record["feasible_count"].as_u64().unwrap(), 24);
    let top = record["top_assignments"].as_array().unwrap();
    assert!(!top.is_empty());
    assert!(top[0]["probability"].as_f64().unwrap() > 0.0);
    assert!(!record["trace"].as_array().unwrap().is_empty());
    assert_eq!(record["config"]["layers"].as_u64().unwrap(), 2);
}

#[test]
fn decomposed_solve_equals_plain_solve() {
    let dir = tempfile::tempdir().unwrap();
    // two chains below the root give non-trivial crops
    let out = run_in(
        dir.path(),
        &[
            "solve",
            "--classical",
            "--auto-crop",
            "1",
            "--edges",
            "1-0,2-1,3-0,4-3",
            "--sites",
            "3",
            "--cost-seed",
            "5",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("solve_result.json")).unwrap())
            .unwrap();
    let decomposed_cost = doc["result"]["cost"].as_f64().unwrap();
    assert!(!doc["result"]["crop_nodes"].as_array().unwrap().is_empty());

    let out = run_in(
        dir.path(),
        &[
            "solve",
            "--classical",
            "--edges",
            "1-0,2-1,3-0,4-3",
            "--sites",
            "3",
            "--cost-seed",
            "5",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("solve_result.json")).unwrap())
            .unwrap();
    assert_eq!(doc["result"]["cost"].as_f64().unwrap(), decomposed_cost);
}

#[test]
fn benchmark_covers_the_layer_sweep_with_uniform_baseline() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "benchmark",
            "--edges",
            "1-0,2-0,3-0",
            "--sites",
            "4",
            "--cost-seed",
            "7",
            "--layers",
            "0,1,3",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let palpha = std::fs::read_to_string(dir.path().join("palpha.csv")).unwrap();
    assert!(palpha.starts_with("# config "));
    let rows: Vec<&str> = palpha.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "layers,P_alpha,expectation,seed");
    assert_eq!(rows.len(), 4);
    // the p=0 row is the analytic uniform baseline over |F| = 24
    let p0: Vec<&str> = rows[1].split(',').collect();
    assert_eq!(p0[0], "0");
    let baseline: f64 = p0[1].parse().unwrap();
    // recompute the baseline independently: near-optimal count / |F|
    let tree = PbsTree::new(4, vec![(1, 0), (2, 0), (3, 0)]).unwrap();
    let inst = random_costs(&tree, 4, 7);
    let feasible = pbs_core::model::enumerate_feasible(&tree, 4, 10_000).unwrap();
    let costs: Vec<f64> = feasible
        .iter()
        .map(|f| pbs_core::model::cost(f, &inst))
        .collect();
    let c_min = costs.iter().copied().fold(f64::INFINITY, f64::min);
    let near = costs.iter().filter(|&&c| c < 1.1 * c_min).count();
    assert!((baseline - near as f64 / 24.0).abs() < 1e-12);

    let hist = std::fs::read_to_string(dir.path().join("cost_hist.csv")).unwrap();
    let total: f64 = hist
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("cost_bin"))
        .map(|l| l.split(',').nth(1).unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-9, "histogram total {total}");
}

#[test]
fn export_qubo_round_trips_against_the_cost_function() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_star_instance(dir.path(), 11);
    let out = run_in(
        dir.path(),
        &["export-qubo", "--instance", path.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("qubo.txt")).unwrap();
    let mut lines = text.lines();
    let offset: f64 = lines
        .next()
        .unwrap()
        .strip_prefix("offset ")
        .unwrap()
        .parse()
        .unwrap();
    let terms: Vec<(usize, usize, f64)> = lines
        .map(|l| {
            let mut it = l.split_whitespace();
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    // evaluate the export on the one-hot encoding of a feasible assignment
    let inst = parse_instance(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let assignment = pbs_core::model::Assignment(vec![0, 1, 2, 3]);
    let bits = pbs_core::model::onehot_bits(&assignment, 4);
    let value: f64 = offset
        + terms
            .iter()
            .filter(|&&(a, b, _)| bits[a] && bits[b])
            .map(|&(_, _, c)| c)
            .sum::<f64>();
    let expected = pbs_core::model::cost(&assignment, &inst);
    assert!((value - expected).abs() < 1e-12);
    // sidecar provenance exists
    assert!(dir.path().join("qubo_config.json").exists());
}

#[test]
fn export_qubo_rejects_non_positive_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_star_instance(dir.path(), 1);
    let out = run_in(
        dir.path(),
        &[
            "export-qubo",
            "--instance",
            path.to_str().unwrap(),
            "--lambda1",
            "0",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn full_backend_with_reduced_mixer_runs_small_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "solve",
            "--quantum",
            "-p",
            "1",
            "--backend",
            "full",
            "--mixer",
            "reduced",
            "--edges",
            "1-0",
            "--sites",
            "2",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("solve_result.json")).unwrap())
            .unwrap();
    assert!(doc["result"]["leakage"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn qubit_cap_env_var_limits_the_full_backend() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_star_instance(dir.path(), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_pbs-cqaoa"))
        .arg("--out")
        .arg(dir.path())
        .env("PBS_CQAOA_MAX_QUBITS", "8")
        .args([
            "solve",
            "--quantum",
            "-p",
            "1",
            "--backend",
            "full",
            "--mixer",
            "big_mcp",
            "--instance",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    // 16 qubits needed but capped at 8: runtime failure
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("cap"), "stderr: {stderr}");
}

#[test]
fn benchmark_reruns_are_bit_identical() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let out = run_in(
            dir.path(),
            &[
                "benchmark",
                "--edges",
                "1-0,2-0",
                "--sites",
                "3",
                "--cost-seed",
                "9",
                "--layers",
                "0,2",
                "--seed",
                "4",
            ],
        );
        assert_eq!(out.status.code(), Some(0));
    }
    for file in ["palpha.csv", "cost_hist.csv"] {
        let a = std::fs::read(dir_a.path().join(file)).unwrap();
        let b = std::fs::read(dir_b.path().join(file)).unwrap();
        assert_eq!(a, b, "{file} must be deterministic");
    }
}
