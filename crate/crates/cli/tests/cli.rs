use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn scripts() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scripts")
}

fn exotic4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exotic4")).args(args).output().expect("binary runs")
}

fn run_json(path: &Path, extra: &[&str]) -> (i32, Value, Vec<u8>) {
    let mut args = vec!["run", path.to_str().unwrap(), "--report", "json"];
    args.extend_from_slice(extra);
    let out = exotic4(&args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, out.stdout)
}

fn write_script(dir: &Path, name: &str, script: &Value) -> PathBuf {
    let p = dir.join(format!("{name}.json"));
    std::fs::write(&p, serde_json::to_string_pretty(script).unwrap()).unwrap();
    p
}

#[test]
fn shipped_script_passes_with_json_report() {
    let (code, v, _) = run_json(&scripts().join("cp2_7.json"), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["script"], "cp2_7");
    assert_eq!(v["status"], "AllExpectationsMet");
    assert_eq!(v["failures"], json!([]));
    let steps = v["steps"].as_array().unwrap();
    assert!(steps.iter().all(|s| s.get("millis").is_none()));
    assert!(steps.iter().any(|s| s["op"] == "prove_trivial"));
}

#[test]
fn reports_are_byte_identical() {
    let p = scripts().join("cp2_5.json");
    let (_, _, a) = run_json(&p, &[]);
    let (_, _, b) = run_json(&p, &[]);
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let text = |_: ()| exotic4(&["run", p.to_str().unwrap()]).stdout;
    assert_eq!(text(()), text(()));
}

#[test]
fn timing_is_opt_in() {
    let (code, v, _) = run_json(&scripts().join("sum_arithmetic.json"), &["--timing"]);
    assert_eq!(code, 0);
    assert!(v["steps"].as_array().unwrap().iter().all(|s| s["millis"].is_u64()));
}

#[test]
fn params_override_defaults() {
    let p = scripts().join("cp2_3.json");
    let (code, v, _) = run_json(&p, &["--param", "n=3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["params"]["n"], 3);
    let (code, _, _) = run_json(&p, &["--param", "m=3"]);
    assert_eq!(code, 2);
}

#[test]
fn failed_expectation_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_script(
        dir.path(),
        "bad_numbers",
        &json!({
            "name": "bad_numbers",
            "provenance": "test",
            "steps": [
                {"op": "numbers", "args": {"e": 6, "sigma": -2}, "bind": "X"},
                {"op": "numbers_sum", "args": {"left": "X", "right": [12, -8], "genus": 1}, "expect": {"e": 17}}
            ]
        }),
    );
    let (code, v, _) = run_json(&p, &[]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "Failures");
    assert_eq!(v["failures"].as_array().unwrap().len(), 1);
}

#[test]
fn expected_errors_pass() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_script(
        dir.path(),
        "degenerate",
        &json!({
            "name": "degenerate",
            "provenance": "test",
            "steps": [
                {"op": "product", "args": {"g": 0, "h": 0}, "expect_error": "InvalidArgument"}
            ]
        }),
    );
    let (code, v, _) = run_json(&p, &[]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn inconsistent_manifold_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let mut m: Value = serde_json::from_str(&exotic4::topmodel::product_block(1, 1).unwrap().to_json()).unwrap();
    m["e"] = json!(4);
    std::fs::write(dir.path().join("m.json"), m.to_string()).unwrap();
    let p = write_script(
        dir.path(),
        "broken",
        &json!({
            "name": "broken",
            "provenance": "test",
            "steps": [
                {"op": "load", "args": {"path": "m.json"}, "bind": "M"},
                {"op": "numbers", "args": {"e": 0, "sigma": 0}}
            ]
        }),
    );
    let (code, v, _) = run_json(&p, &[]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "Inconsistent");
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
}

#[test]
fn unreadable_scripts_exit_two() {
    let out = exotic4(&["run", "/nonexistent/script.json"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("junk.json");
    std::fs::write(&p, "{\"name\": ").unwrap();
    assert_eq!(exotic4(&["run", p.to_str().unwrap()]).status.code(), Some(2));
    let p = write_script(
        dir.path(),
        "dangling",
        &json!({"name": "dangling", "provenance": "", "steps": [{"op": "blow_up", "args": {"manifold": "Nope", "meets": []}}]}),
    );
    assert_eq!(exotic4(&["run", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn load_errors_outrank_failures() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_script(
        dir.path(),
        "bad",
        &json!({"name": "bad", "provenance": "", "steps": [{"op": "numbers", "args": {"e": 2, "sigma": 0}, "expect": {"e": 3}}]}),
    );
    assert_eq!(exotic4(&["run", bad.to_str().unwrap()]).status.code(), Some(1));
    let out = exotic4(&["run", bad.to_str().unwrap(), "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_passes_on_shipped_corpus() {
    let out = exotic4(&["verify-all", "--jobs", "4", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let all = v.as_array().unwrap();
    assert_eq!(all.len(), std::fs::read_dir(scripts()).unwrap().count());
    assert!(all.iter().all(|r| r["status"] == "AllExpectationsMet"));
}

#[test]
fn verify_all_on_empty_dir_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = exotic4(&["verify-all", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
