use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blocktilt"))
        .args(args)
        .env_remove("BLOCKTILT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&out)))
}

fn body_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn classify_zero_is_dominant_integral() {
    let v = json(&["classify", "--type", "A", "--weight", "0"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["flags"]["integral"], true);
    assert_eq!(v["flags"]["dominant_integral"], true);
    assert_eq!(v["dot_regular"], true);
}

#[test]
fn classify_half_integral_weight() {
    let v = json(&["classify", "--type", "C", "--weight", "1/2,0"]);
    assert_eq!(v["flags"]["integral"], false);
    assert_eq!(v["flags"]["nonintegral"], false);
    assert_eq!(v["limit_descriptor"], "C_inf");
}

#[test]
fn malformed_weights_exit_two() {
    for w in ["1,,2", "1/0", "x"] {
        let out = run(&["classify", "--type", "A", "--weight", w]);
        assert_eq!(out.status.code(), Some(2), "{w}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.starts_with("error: ParseError:"), "{err}");
    }
    let v = json(&["classify", "--type", "A", "--weight", "1,,2"]);
    assert_eq!(v["error"]["kind"], "ParseError");
}

#[test]
fn weights_round_trip_through_json() {
    let v = json(&["classify", "--type", "B", "--weight", "3,1/2,0,-2", "--level", "5"]);
    let coords: Vec<&str> = v["weight"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coords, ["3", "1/2", "0", "-2"]);
}

#[test]
fn depth_zero_character_is_one_term() {
    let out = run(&["character", "--type", "A", "--weight", "0", "--depth", "0"]);
    assert!(out.status.success());
    assert_eq!(body_lines(&stdout(&out)), ["0 1"]);
}

#[test]
fn verma_character_at_depth_two() {
    let out = run(&["character", "--type", "A", "--weight", "0", "--depth", "2", "--level", "3"]);
    let text = stdout(&out);
    let lines = body_lines(&text);
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"-1,0,1 2"));
}

#[test]
fn rank_one_tilting_character() {
    let v = json(&["character", "--type", "A", "--weight", "1,0", "--kind", "tilting", "--depth", "2", "--level", "2"]);
    let terms = v["terms"].as_array().unwrap();
    let coeffs: Vec<i64> = terms.iter().map(|t| t["coefficient"].as_i64().unwrap()).collect();
    assert_eq!(coeffs, [1, 1, 2]);
}

#[test]
fn tilting_mult_rank_one_pair() {
    let v = json(&["tilting-mult", "--type", "A", "--lambda", "1,0", "--mu", "-1,2", "--verify"]);
    assert_eq!(v["value"], 1);
    assert_eq!(v["witness"]["x_word"], serde_json::json!([1]));
    assert_eq!(v["witness"]["y_word"], serde_json::json!([]));
    let v = json(&["tilting-mult", "--type", "A", "--lambda", "0", "--mu", "0"]);
    assert_eq!(v["value"], 1);
}

#[test]
fn singular_and_incomparable_inputs_exit_three() {
    let out = run(&["tilting-mult", "--type", "A", "--lambda", "3,-2", "--mu", "3,-2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SingularBlockUnsupported"));
    let v = json(&["tilting-mult", "--type", "B", "--lambda", "1,0", "--mu", "1,1"]);
    assert_eq!(v["error"]["kind"], "NotComparable");
}

#[test]
fn kl_polynomials() {
    let out = run(&["kl", "A2", "1", "1 2"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["kl", "A3", "e", "2 1 3 2"]);
    assert_eq!(stdout(&out).trim(), "1 + q");
}

#[test]
fn block_of_equal_weights() {
    let v = json(&["block", "--type", "B", "--lambda", "1,0", "--mu", "1,0"]);
    assert_eq!(v["same_block"], true);
    assert_eq!(v["equivalence_hint"]["stabilizers_match"], true);
}

#[test]
fn branch_to_the_ambient_level_is_identity() {
    let out = run(&["branch", "--type", "A", "--weight", "2,-1", "--n", "3", "--depth", "3", "--level", "3"]);
    assert_eq!(body_lines(&stdout(&out)), ["2,-1,0 1"]);
}

fn cache_lines(dir: &Path) -> usize {
    std::fs::read_to_string(dir.join("kl-cache.ndjson"))
        .map(|s| s.lines().count())
        .unwrap_or(0)
}

#[test]
fn cache_persists_and_only_grows() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = run(&["kl", "A3", "e", "2 1 3 2", "--cache-dir", d]);
    assert!(first.status.success());
    let after_first = cache_lines(dir.path());
    assert!(after_first > 0);
    let again = run(&["kl", "A3", "e", "2 1 3 2", "--cache-dir", d]);
    assert_eq!(stdout(&first), stdout(&again));
    assert_eq!(cache_lines(dir.path()), after_first);
    run(&["kl", "B2", "e", "1 2 1", "--cache-dir", d]);
    assert!(cache_lines(dir.path()) > after_first);
}

#[test]
fn unusable_cache_dir_exits_four() {
    let file = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["kl", "A2", "e", "1", "--cache-dir", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}
