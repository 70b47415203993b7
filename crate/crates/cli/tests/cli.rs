use std::fs;
use std::process::{Command, Output};

fn contact3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contact3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(o: &Output) -> Vec<Vec<String>> {
    csv::Reader::from_reader(o.stdout.as_slice())
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classify_json_reports_d3_and_binding_number() {
    let o = contact3(&[
        "classify", "-p", "0", "-q", "1", "-r", "-2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["invariants"]["d3"],
        serde_json::json!({"num": 1, "den": 4})
    );
    assert_eq!(v["binding_number"], 2);
}

#[test]
fn singular_triple_exits_3_with_reason() {
    let o = contact3(&["classify", "-p", "4", "-q", "4", "-r", "-2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("c1-non-torsion"), "{}", stderr(&o));
    assert!(stderr(&o).contains("InfiniteH1"));
}

#[test]
fn empty_diagram_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    fs::write(&path, r#"{"components": [], "linking": []}"#).unwrap();
    let o = contact3(&["invariants", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn invalid_diagrams_exit_2_naming_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("asym.json");
    fs::write(
        &path,
        r#"{"components":[{"id":"a","tb":-1,"rot":0,"coeff":1},{"id":"b","tb":-1,"rot":0,"coeff":1}],
            "linking":[[0,-1],[1,0]]}"#,
    )
    .unwrap();
    let o = contact3(&["invariants", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("linking[0][1]"), "{}", stderr(&o));

    let o = contact3(&[
        "invariants",
        dir.path().join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn family_json_round_trips_through_invariants() {
    let o = contact3(&[
        "family", "-p", "-1", "-q", "2", "-r", "-2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    fs::write(&path, o.stdout).unwrap();
    let o = contact3(&["invariants", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: contact3::InvariantReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.d3, Some(contact3::Rational::new(1, 2)));
}

#[test]
fn table_rows_and_header() {
    let o = contact3(&[
        "table", "-r", "0", "-p", "-3:3", "-q", "-3:3", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,q,r,type,tight,c1_order,d3,bn"));
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 49);
    let row = rows.iter().find(|r| r[..3] == ["1", "-2", "0"]).unwrap();
    assert_eq!(row[7], "2");

    let o = contact3(&[
        "table", "-r", "-1", "-p", "2", "-q", "-2", "--format", "csv",
    ]);
    let rows = csv_rows(&o);
    assert_eq!(rows[0][3], "L(4,1)");
    assert!(rows[0][5].parse::<u64>().unwrap() > 1);
    assert_eq!(rows[0][7], "3");
}

#[test]
fn empty_range_gives_header_only() {
    let o = contact3(&["table", "-r", "1:0", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "p,q,r,type,tight,c1_order,d3,bn\n");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table", "-r", "-3:3", "-p", "-4:4", "-q", "-4:4", "--format", "csv",
    ];
    assert_eq!(contact3(&args).stdout, contact3(&args).stdout);
    let args = ["sphere-search", "--bound", "4", "--format", "json"];
    assert_eq!(contact3(&args).stdout, contact3(&args).stdout);
}

#[test]
fn bounds_are_enforced() {
    assert_eq!(
        contact3(&["classify", "-p", "65", "-q", "0", "-r", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(contact3(&["table", "-r", "-70:0"]).status.code(), Some(2));
    assert_eq!(
        contact3(&["sphere-search", "--bound", "17"]).status.code(),
        Some(2)
    );
    assert_eq!(contact3(&["table", "-r", "x"]).status.code(), Some(2));
}

#[test]
fn compare_witnesses() {
    let o = contact3(&["compare", "family:0,-1,-2", "eta:2"]);
    assert_eq!(stdout(&o).trim(), "distinguishable (witness: d3)");
    let o = contact3(&["compare", "family:1,0,-4", "eta:4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "indistinguishable");
    let o = contact3(&["compare", "s3", "eta:2"]);
    assert_eq!(stdout(&o).trim(), "distinguishable (witness: h1)");
}

#[test]
fn sphere_search_text() {
    let o = contact3(&["sphere-search", "--bound", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = contact3(&["sphere-search", "--bound", "4", "--format", "csv"]);
    let rows = csv_rows(&o);
    assert!(rows.contains(
        &["1", "1", "0", "S3#S3", "-1/2", "1"]
            .map(String::from)
            .to_vec()
    ));
}
