use std::process::{Command, Output};

fn charlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn table_of_d8() {
    let o = charlab(&["table", "--recipe", "dihedral:8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let degrees: Vec<&str> = out.lines().filter_map(|l| l.strip_prefix("chi_")).collect();
    assert_eq!(degrees.len(), 5);
    assert_eq!(degrees.iter().filter(|l| l.contains("(degree 1)")).count(), 4);
    assert!(degrees[4].contains("(degree 2)"));
    assert!(out.contains("size 2"));
}

#[test]
fn table_of_trivial_group() {
    let o = charlab(&["table", "--recipe", "cyclic:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("chi_")).count(), 1);
}

#[test]
fn structured_table() {
    let o = charlab(&["table", "--recipe", "Q8", "--output", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["characters"].as_array().unwrap().len(), 5);
}

#[test]
fn bad_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.grp");
    std::fs::write(&path, "format: perm\ndegree: 3\n(1 2 3)\n(1 2\n").unwrap();
    let o = charlab(&["table", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 4"), "{err}");
    assert!(err.contains("(1 2"), "{err}");
}

#[test]
fn caps_exit_3() {
    let o = charlab(&["table", "--recipe", "cyclic:100", "--max-order", "50"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_charlab"))
        .args(["table", "--recipe", "cyclic:100"])
        .env("CHARLAB_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn zero_caps_are_rejected() {
    assert_eq!(charlab(&["table", "--recipe", "C2", "--max-order", "0"]).status.code(), Some(2));
    assert_eq!(charlab(&["scan", "--bundled", "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn analyze_examples() {
    let d8 = stdout(&charlab(&["analyze", "--recipe", "D8"]));
    assert!(d8.contains("GVZ: yes"));
    assert!(d8.contains("cd: {1,2}"));
    assert!(d8.contains("nilpotency class: 2"));

    let s3 = stdout(&charlab(&["analyze", "--recipe", "S3"]));
    assert!(s3.contains("GVZ: no"));
    assert!(s3.contains("nonzero at class"));

    let c12 = stdout(&charlab(&["analyze", "--recipe", "cyclic:12"]));
    assert!(c12.contains("GVZ: not applicable"));
}

#[test]
fn verify_examples() {
    let o = charlab(&["verify", "--recipe", "heisenberg:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("12 records, 0 failures"));

    let o = charlab(&["verify", "--recipe", "symmetric:3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("L_class2  n/a"));
    assert!(out.contains("L_linear_iff  pass"));
}

#[test]
fn verify_selected_theorems() {
    let o = charlab(&["verify", "--recipe", "D8", "--theorem", "nl_quotient", "--theorem", "L_class2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 records"));
    assert_eq!(charlab(&["verify", "--recipe", "D8", "--theorem", "T_nope"]).status.code(), Some(2));
}

#[test]
fn injected_fault_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.grp");
    std::fs::write(&path, "format: perm\nname: D8\ndegree: 4\n(1 2 3 4)\n(1 3)\n").unwrap();
    let o = charlab(&["verify", "--file", path.to_str().unwrap(), "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: "));
}

#[test]
fn scan_bundled_passes() {
    let o = charlab(&["scan", "--bundled"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    let groups: usize = last.split_whitespace().next().unwrap().parse().unwrap();
    assert!(groups >= 25);
    assert!(last.ends_with(" 0 failures"));
}

#[test]
fn scan_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = charlab(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 groups, 0 records, 0 failures"));
}

#[test]
fn scan_directory_records_unreadable_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s3.grp"), "format: perm\nname: S3\ndegree: 3\n(1 2 3)\n(1 2)\n").unwrap();
    std::fs::write(dir.path().join("broken.grp"), "format: perm\ndegree: 3\n(1 5)\n").unwrap();
    let o = charlab(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("broken"));
    assert!(out.contains("S3  L_linear_iff  pass"));
}

#[test]
fn structured_scan_is_schema_valid_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.json");
    let o = charlab(&["scan", "--bundled", "--output", "structured", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = charlab_core::catalog::report::parse_report(&text).unwrap();
    assert!(doc.groups.len() >= 25);
    assert_eq!(doc.failures(), 0);
}
