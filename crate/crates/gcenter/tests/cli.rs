use std::path::PathBuf;
use std::process::{Command, Output};

fn gcenter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcenter")).args(args).output().expect("run gcenter")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn validate_bundled_and_fixture() {
    let o = gcenter(&["validate", "z4_to_z2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("z4_to_z2: valid"));
    let o = gcenter(&["validate", &fixture("z4_to_z2.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["valid"], true);
}

#[test]
fn validation_failures_exit_3_and_name_the_axiom() {
    let o = gcenter(&["validate", &fixture("wrong_grade.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL  grading"));
    let o = gcenter(&["validate", &fixture("corrupted_fusion.json"), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["ok"] == false)
        .map(|c| c["axiom"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"associativity"), "{failed:?}");
    let o = gcenter(&["smatrix", &fixture("wrong_grade.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("grading"));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(gcenter(&["validate", "no_such_example"]).status.code(), Some(2));
    assert_eq!(gcenter(&["validate", &fixture("malformed.json")]).status.code(), Some(2));
    assert_eq!(gcenter(&["dims"]).status.code(), Some(2));
    assert_eq!(gcenter(&["dims", &fixture("z4_to_z2.json"), "--order", "8"]).status.code(), Some(2));
    assert_eq!(gcenter(&["coend", "z4_to_z2", "--alpha", "2", "--beta", "0"]).status.code(), Some(2));
    assert_eq!(gcenter(&["center-simples", "z4_to_z2", "--grade", "7"]).status.code(), Some(2));
}

#[test]
fn small_order_is_non_split() {
    let o = gcenter(&["center-simples", "z8_to_z2", "--order", "2"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not split"));
}

#[test]
fn dims_and_center_simples() {
    let v = json(&gcenter(&["dims", "z4_to_z2", "--format", "json"]));
    assert_eq!(v["components"][0]["dim"], "2");
    let v = json(&gcenter(&["center-simples", "z4_to_z2", "--format", "json"]));
    assert_eq!(v["simples"].as_array().unwrap().len(), 8);
    let v = json(&gcenter(&["center-simples", "z4_to_z2", "--grade", "1", "--format", "json"]));
    assert!(v["simples"].as_array().unwrap().iter().all(|s| s["grade"] == 1));
}

#[test]
fn crossing_table_is_a_permutation() {
    let v = json(&gcenter(&["crossing-table", "z6_to_z3", "--format", "json"]));
    let labels: Vec<String> = v["simples"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
    for row in v["table"].as_array().unwrap() {
        let mut imgs: Vec<String> = row["images"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
        imgs.sort();
        let mut l = labels.clone();
        l.sort();
        assert_eq!(imgs, l);
    }
}

#[test]
fn generated_example_is_modular() {
    let dir = std::env::temp_dir().join(format!("gcenter-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z4_to_z2.json");
    let p = path.display().to_string();
    assert_eq!(gcenter(&["gen-example", "z4_to_z2", "--out", &p]).status.code(), Some(0));
    let v = json(&gcenter(&["modular", &p, "--format", "json"]));
    assert_eq!(v["is_g_modular"], true);
    assert_eq!(v["determinant"], "-16");
    let o = gcenter(&["smatrix", &p]);
    assert!(stdout(&o).contains("[1, -1, -1, 1]"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coend_report() {
    let o = gcenter(&["coend", "z4_to_z2", "--alpha", "1", "--beta", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["grade"], 0);
    assert_eq!(v["commutator"], 0);
    assert_eq!(v["universal"], true);
    assert_eq!(v["decomposition"]["multiplicities"], v["decomposition"]["expected"]);
}

#[test]
fn compare_dpi_with_explicit_section() {
    let o = gcenter(&["compare-dpi", "z4_to_z2", "--section", "0,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["reports"][0]["section"], serde_json::json!([0, 3]));
    assert_eq!(v["reports"][0]["matching"].as_array().unwrap().len(), 8);
    assert_eq!(gcenter(&["compare-dpi", "z4_to_z2", "--section", "0,2"]).status.code(), Some(2));
}

#[test]
fn selftest_toric_code() {
    let o = gcenter(&["selftest", "z2_to_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn reports_are_byte_identical() {
    let a = gcenter(&["crossing-table", "z4_to_z2", "--format", "json"]);
    let b = gcenter(&["crossing-table", "z4_to_z2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = gcenter(&["gen-example", "z6_to_z3"]);
    let b = gcenter(&["gen-example", "z6_to_z3"]);
    assert_eq!(a.stdout, b.stdout);
}
