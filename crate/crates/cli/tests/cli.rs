use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn critnum(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_critnum"))
        .args(args)
        .env_remove("CRITNUM_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    } else {
        drop(child.stdin.take());
    }
    let Output { status, stdout, .. } = child.wait_with_output().unwrap();
    let doc = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    (status.code().unwrap(), doc)
}

const SHIMURA: &str =
    r#"{"pi": {"n": 2, "w": 4, "l": [3, -3], "delta": 0}, "sigma": {"n": 1, "w": 0, "l": [0]}}"#;
const RANKIN: &str = r#"{"pi": {"mu": [5, 1]}, "sigma": {"mu": [3, 1]}}"#;
const GJ: &str = r#"{"pi": {"w": 0, "l": [6, 0, -6], "delta": 1}, "sigma": {"mu": [0]}}"#;
const FOUR_BY_TWO: &str =
    r#"{"pi": {"w": 0, "l": [5, 1, -1, -5]}, "sigma": {"w": 1, "l": [2, -2]}}"#;

#[test]
fn crit_fixtures() {
    let (code, doc) = critnum(&["crit"], Some(SHIMURA));
    assert_eq!(code, 0);
    assert_eq!(doc["crit"], json!(["3/2", "5/2", "7/2"]));
    assert_eq!(doc["agreement"], json!(true));

    let (code, doc) = critnum(&["crit", "-"], Some(GJ));
    assert_eq!(code, 0);
    assert_eq!(doc["crit"], json!(["-2", "0", "1", "3"]));

    let (_, doc) = critnum(&["crit", "--engine", "inequality"], Some(RANKIN));
    assert_eq!(doc["crit"], json!(["5", "6"]));
}

#[test]
fn crit_reads_files() {
    let path = std::env::temp_dir().join(format!("critnum-{}.json", std::process::id()));
    std::fs::write(&path, SHIMURA).unwrap();
    let (code, doc) = critnum(&["crit", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(doc["crit"].as_array().unwrap().len(), 3);

    let (code, doc) = critnum(&["crit", "/nonexistent/pair.json"], None);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["rule"], json!("Io"));
}

#[test]
fn invalid_input_names_the_rule() {
    let bad = r#"{"pi": {"w": 4, "l": [3, -2]}, "sigma": {"mu": [0]}}"#;
    let (code, doc) = critnum(&["crit"], Some(bad));
    assert_eq!(code, 1);
    let rules: Vec<&str> = doc["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["rule"].as_str().unwrap())
        .collect();
    assert!(rules.contains(&"NotAntisymmetric"));
    assert_eq!(doc["error"]["field"], json!("pi.l"));

    let (code, doc) = critnum(&["crit"], Some("{not json"));
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["rule"], json!("Parse"));

    let one = r#"{"pi": {"mu": [0]}, "sigma": {"mu": [0]}}"#;
    let (code, doc) = critnum(&["crit"], Some(one));
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["rule"], json!("RankPairExcluded"));
}

#[test]
fn trace_documents() {
    let (code, doc) = critnum(&["trace"], Some(RANKIN));
    assert_eq!(code, 0);
    assert_eq!(doc["d"], json!(3));
    assert_eq!(doc["mu_tilde"], json!([2, 1]));
    assert_eq!(doc["lambda_tilde"], json!([3, 3]));
    assert_eq!(doc["normalized"], json!(false));

    let (_, doc) = critnum(&["trace"], Some(FOUR_BY_TWO));
    assert_eq!(doc["emb_intervals"], json!([[1, 1], [1, 1]]));
    assert_eq!(doc["crit"], json!(["1"]));

    let swapped = r#"{"pi": {"w": 1, "l": [2, -2]}, "sigma": {"w": 0, "l": [5, 1, -1, -5]}}"#;
    let (_, doc) = critnum(&["trace"], Some(swapped));
    assert_eq!(doc["normalized"], json!(true));
}

#[test]
fn fuzz_campaign() {
    let (code, doc) = critnum(&["fuzz", "--trials", "1000", "--seed", "42"], None);
    assert_eq!(code, 0);
    assert_eq!(doc["mismatches"], json!(0));
    assert_eq!(doc["trials"], json!(1000));
    assert_eq!(doc["seed"], json!(42));

    let (code, _) = critnum(&["fuzz", "--n-max", "6", "--l-bound", "3"], None);
    assert_eq!(code, 64);
}

#[test]
fn fuzz_seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_critnum"))
        .args(["fuzz", "--trials", "10"])
        .env("CRITNUM_SEED", "7")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["seed"], json!(7));
}

#[test]
fn convert_both_ways() {
    let (code, doc) = critnum(&["convert", "--mu", "3,1"], None);
    assert_eq!(code, 0);
    assert_eq!(doc, json!({"w": 4, "l": [3, -3]}));
    let (_, doc) = critnum(&["convert", "--w", "4", "--l", "3,-3"], None);
    assert_eq!(doc, json!({"mu": [3, 1]}));
    let (code, doc) = critnum(&["convert", "--mu", "1,3"], None);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["rule"], json!("NotDominant"));
}

#[test]
fn branch_commands() {
    let (code, doc) = critnum(&["branch", "--beta", "0", "--alpha", "-1,-3"], None);
    assert_eq!(code, 0);
    assert_eq!(doc, json!({"emb": [1, 3]}));
    let (_, doc) = critnum(&["branch", "--alpha", "1,0,-1"], None);
    assert_eq!(doc["branches"], json!([[1, 0], [1, -1], [0, 0], [0, -1]]));
    let (_, doc) = critnum(
        &["branch", "--beta", "0", "--alpha", "-1,-3", "--tate"],
        None,
    );
    assert_eq!(doc["tate"], json!({"1": 1, "2": 1, "3": 1}));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(critnum(&[], None).0, 64);
    assert_eq!(critnum(&["frobnicate"], None).0, 64);
    assert_eq!(critnum(&["fuzz", "--trials", "many"], None).0, 64);
    assert_eq!(
        critnum(&["convert", "--mu", "1", "--w", "2", "--l", "1,-1"], None).0,
        64
    );
    assert_eq!(critnum(&["branch", "--tate", "--alpha", "1,0"], None).0, 64);
    assert_eq!(critnum(&["--help"], None).0, 0);
}
