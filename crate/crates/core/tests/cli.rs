use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use xmodcat::cli::schema::InstanceFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_xmodcat"))
}

fn instance(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("instances").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn validate_bs3_passes() {
    let out = run(&["validate", instance("bs3-conj").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], "v1");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["summary"], "crossed module valid");
}

#[test]
fn two_initial_search_fails_with_witness() {
    let out = run(&["search", instance("bz2-plus-initial-two-initial").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let w = &report(&out)["result"]["verdict"]["witness"];
    assert_eq!(w["elements"], serde_json::json!([0, 1]));
}

#[test]
fn coinserter_homcount_on_z2() {
    let path = instance("b2-coinserter");
    let out = run(&["coinserter", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["text"], "⟨ b, t | b^2 ⟩");
    let out = run(&["verify-homcount", "--panel", "Z2", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let c = &report(&out)["result"]["counts"][0];
    assert_eq!((c["lhs"].as_u64(), c["rhs"].as_u64()), (Some(4), Some(4)));
}

#[test]
fn every_bundled_instance_has_its_expected_exit_code() {
    let cases = [
        ("validate", "bz2-conj", 0),
        ("isotropy", "groups-1-z2-s3", 0),
        ("two-cells", "ab-negation", 0),
        ("check-2d", "bz2-connected", 0),
        ("search", "bs3-cotensor", 1),
        ("obstructions", "bz2-plus-initial", 1),
        ("obstructions", "poset-01", 0),
        ("coinserter", "s3-hnn", 0),
        ("coequifier", "s3-coequifier", 0),
        ("tensor-free", "b2-tensor-free", 0),
        ("verify-homcount", "s3-hnn", 0),
        ("verify-homcount", "s3-coequifier", 0),
        ("extend-functor", "ab-negation", 0),
    ];
    for (cmd, inst, code) in cases {
        let out = run(&[cmd, instance(inst).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "{cmd} {inst}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(report(&out)["command"], cmd);
    }
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"schema":"v0"}"#).unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("schema"));
    assert_eq!(run(&["validate", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn tiny_budget_exits_3() {
    let out = run(&["--budget", "10", "search", instance("bs3-cotensor").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out)["status"], "budget-exceeded");
}

#[test]
fn generated_instances() {
    let out = run(&["generate", "delooping", "--group", "Z2"]);
    assert_eq!(out.status.code(), Some(0));
    let f = InstanceFile::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let xm = f.crossed_module().unwrap();
    assert_eq!((xm.base.object_count(), xm.base.morphism_count()), (1, 2));

    let out = run(&["generate", "poset", "--objects", "2", "--relations", "0<1"]);
    let f = InstanceFile::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let c = f.category().unwrap();
    assert_eq!(c.object_count(), 2);
    assert_eq!(c.initial_object(), Some(0));
}

#[test]
fn random_xmod_is_reproducible_and_valid() {
    let args = ["--seed", "7", "generate", "random-xmod", "--max-objects", "3", "--max-order", "4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, &a.stdout).unwrap();
    assert_eq!(run(&["validate", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn report_flag_writes_file_and_reports_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let inst = instance("groups-1-z2-s3");
    let out = run(&["--report", path.to_str().unwrap(), "isotropy", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    for threads in ["1", "2"] {
        let again = run(&["--threads", threads, "isotropy", inst.to_str().unwrap()]);
        assert_eq!(again.stdout, written);
    }
    assert!(!String::from_utf8_lossy(&written).contains("timings"));
    let timed = run(&["--timings", "isotropy", inst.to_str().unwrap()]);
    assert!(report(&timed)["timings"]["total_ms"].is_number());
}

#[test]
fn broken_module_fails_validate_and_is_rejected_elsewhere() {
    let text = std::fs::read_to_string(instance("ab-negation")).unwrap();
    let mut f = InstanceFile::parse(&text).unwrap();
    f.payload = None;
    let act = f.crossed_module.as_mut().unwrap().actions.last_mut().unwrap();
    act.reverse();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, f.to_json()).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out)["summary"].as_str().unwrap().starts_with("crossed module invalid"));
    assert_eq!(run(&["isotropy", path.to_str().unwrap()]).status.code(), Some(2));
}
