//! End-to-end tests of the `wardforge` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use wardforge::iso::are_isomorphic;
use wardforge::Magma;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wardforge"))
        .args(args)
        .env_remove("WARDFORGE_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn json(o: &Output) -> Value {
    let v: Value = serde_json::from_str(&stdout(o)).expect("valid JSON");
    assert!(v["command"].is_string() && v["inputs"].is_object() && v["results"].is_array());
    v
}

/// Parses a table file's rows by hand (1-based entries, optional header).
fn read_table(path: &Path) -> (Magma, Option<usize>) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut point = None;
    let mut numbers = Vec::new();
    for line in text.lines() {
        if let Some(k) = line.strip_prefix("# point = ") {
            point = Some(k.trim().parse::<usize>().unwrap() - 1);
        } else if !line.starts_with('#') {
            numbers.extend(line.split_whitespace().map(|t| t.parse::<usize>().unwrap()));
        }
    }
    let n = numbers[0];
    let cells = numbers[1..].iter().map(|v| v - 1).collect();
    (Magma::new(n, cells).unwrap(), point)
}

const W3: &str = "# point = 1\n3\n1 3 2\n2 1 3\n3 2 1\n";
const Z3: &str = "3\n1 2 3\n2 3 1\n3 1 2\n";
const PRINTED_6X6: &str = "6\n3 6 1 5 4 2\n6 5 4 3 2 1\n1 4 6 2 5 4\n5 3 2 6 1 4\n4 2 5 1 3 6\n2 1 3 4 6 5\n";

#[test]
fn check_reports_ward_membership() {
    let dir = TempDir::new().unwrap();
    let w3 = write(&dir, "w3.tbl", W3);
    let o = run(&["check", &w3]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("quasigroup: yes"), "{out}");
    assert!(out.contains("ward: yes (e=1)"), "{out}");
    assert!(out.contains("unipotent: yes (x.x = 1)"), "{out}");
    assert!(out.contains("translatable: yes (k = 1)"), "{out}");
    assert!(out.contains("group: no"), "{out}");
}

#[test]
fn check_scans_points_and_honours_pointed() {
    // x·y = -x-y (mod 3) is double Ward at every point.
    let dir = TempDir::new().unwrap();
    let dw = write(&dir, "dw.tbl", "3\n1 3 2\n3 2 1\n2 1 3\n");
    let out = stdout(&run(&["check", &dw]));
    assert!(out.contains("double ward: yes (e=1, 2, 3)"), "{out}");
    let out = stdout(&run(&["check", &dw, "--pointed", "2"]));
    assert!(out.contains("double ward: yes (e=2)"), "{out}");
    assert_eq!(code(&run(&["check", &dw, "--pointed", "4"])), 2);
}

#[test]
fn check_flags_the_printed_six_by_six_table() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "t6.tbl", PRINTED_6X6);
    let o = run(&["check", &t]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("quasigroup: NO (row 3 duplicates 4)"));
}

#[test]
fn check_rejects_ragged_files_with_a_position() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "bad.tbl", "3\n1 2 3\n2 3\n3 1 2\n");
    let o = run(&["check", &t]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3, column"), "{}", stderr(&o));
}

#[test]
fn check_json_uses_external_labels() {
    let o = run(&["check", "cyclic:3", "--json"]);
    let v = json(&o);
    assert_eq!(v["command"], "check");
    let group = v["results"].as_array().unwrap().iter().find(|r| r["property"] == "group").unwrap();
    assert_eq!(group["holds"], true);
    assert_eq!(group["unit"], 1);
}

#[test]
fn derive_der_writes_w3_with_its_point() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("w3.tbl");
    let o = run(&["derive", "der", "cyclic:3", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), W3);
}

#[test]
fn derive_parastrophe_two_of_z3_is_w3() {
    let dir = TempDir::new().unwrap();
    let z3 = write(&dir, "z3.tbl", Z3);
    let o = run(&["derive", "parastrophe:2", &z3]);
    assert_eq!(code(&o), 0);
    // x∘₂y = z where z·y = x, i.e. z = x - y.
    assert_eq!(stdout(&o), "3\n1 3 2\n2 1 3\n3 2 1\n");
}

#[test]
fn derive_precondition_failures_exit_three() {
    let dir = TempDir::new().unwrap();
    let z3 = write(&dir, "z3.tbl", Z3);
    let o = run(&["derive", "ret", &z3]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("input fails WARD at witness"), "{}", stderr(&o));
    let t = write(&dir, "t6.tbl", PRINTED_6X6);
    let o = run(&["derive", "parastrophe:1", &t]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("row 3 duplicates 4"), "{}", stderr(&o));
}

#[test]
fn derive_round_trips_through_files() {
    let dir = TempDir::new().unwrap();
    let p = |name: &str| dir.path().join(name).display().to_string();
    for spec in ["cyclic:5", "sym3", "klein", "dihedral:4"] {
        let g = p("g.tbl");
        assert_eq!(code(&run(&["derive", "dual", spec, "--out", &g])), 0);
        assert_eq!(code(&run(&["derive", "dual", &g, "--out", &g])), 0);
        assert_eq!(code(&run(&["derive", "der", &g, "--out", &p("w.tbl")])), 0);
        assert_eq!(code(&run(&["derive", "ret", &p("w.tbl"), "--out", &p("back.tbl")])), 0);
        assert_eq!(read_table(Path::new(&p("back.tbl"))), read_table(Path::new(&g)), "{spec}");
        assert_eq!(code(&run(&["derive", "D", &p("w.tbl"), "--out", &p("dw.tbl")])), 0);
        assert_eq!(code(&run(&["derive", "D", &p("dw.tbl"), "--out", &p("w2.tbl")])), 0);
        assert_eq!(read_table(Path::new(&p("w2.tbl"))), read_table(Path::new(&p("w.tbl"))), "{spec}");
    }
}

#[test]
fn derive_affine_and_translatable() {
    let o = run(&["derive", "affine:3:-1:-1:1"]);
    assert_eq!(code(&o), 0);
    // x·y = 1 - x - y (mod 3) on 0-based labels.
    assert_eq!(stdout(&o), "3\n2 1 3\n1 3 2\n3 2 1\n");
    let dir = TempDir::new().unwrap();
    let row = write(&dir, "row.tbl", "3\n1 3 2\n1 3 2\n1 3 2\n");
    let o = run(&["derive", "translatable:1", &row]);
    assert_eq!(stdout(&o), "3\n1 3 2\n2 1 3\n3 2 1\n");
    assert_eq!(code(&run(&["derive", "nonsense", "cyclic:3"])), 2);
    assert_eq!(code(&run(&["derive", "der", "no-such-file-or-spec"])), 2);
}

#[test]
fn identity_reports_one_based_witnesses() {
    let o = run(&["identity", "(x.z).(y.z) = x.y", "--table", "cyclic:3"]);
    assert_eq!(code(&o), 0);
    // (x+z)+(y+z) = x+y fails first at x=y=0, z=1 (0-based).
    assert!(stdout(&o).contains("fails, witness x=1 y=1 z=2"), "{}", stdout(&o));

    let dir = TempDir::new().unwrap();
    let w3 = write(&dir, "w3.tbl", W3);
    let o = run(&["identity", "(x.z).(y.z) = x.y", "--table", &w3, "--json"]);
    let v = json(&o);
    assert_eq!(v["results"][0]["holds"], true);

    let o = run(&["identity", "e.x = x", "--table", "cyclic:3", "--e", "1"]);
    assert!(stdout(&o).contains("holds"));
    let o = run(&["identity", "x.1 = x", "--table", "cyclic:3"]);
    assert!(stdout(&o).contains("holds"), "{}", stdout(&o));
    let o = run(&["identity", "DOUBLE_WARD", "--table", "cyclic:3", "--e", "2", "--json"]);
    assert_eq!(json(&o)["results"][0]["holds"], false);
}

#[test]
fn identity_usage_errors_exit_two() {
    let cases: [&[&str]; 5] = [
        &["identity", "(x.y)*(z.w) = (x*z).(y*w)", "--table", "cyclic:3"],
        &["identity", "x.y = ", "--table", "cyclic:3"],
        &["identity", "e.x = x", "--table", "cyclic:3"],
        &["identity", "x.4 = x", "--table", "cyclic:3"],
        &["identity", "x.0 = x", "--table", "cyclic:3"],
    ];
    for args in cases {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
    let o = run(&["identity", "x.y = ", "--table", "cyclic:3"]);
    assert!(stderr(&o).contains("column"), "{}", stderr(&o));
}

#[test]
fn pair_classification() {
    let dir = TempDir::new().unwrap();
    let w3 = write(&dir, "w3.tbl", W3);
    let dual = dir.path().join("dual.tbl").display().to_string();
    run(&["derive", "dual", &w3, "--out", &dual]);
    let out = stdout(&run(&["pair", &w3, &dual]));
    assert!(out.starts_with("plain: yes, lateral: no (witness"), "{out}");
    assert!(out.contains("reversible: yes, proper: yes"), "{out}");
    let out = stdout(&run(&["pair", "cyclic:2", "cyclic:2"]));
    assert_eq!(out.trim(), "plain: yes, lateral: yes, reversible: yes, proper: no");
    assert_eq!(code(&run(&["pair", "cyclic:2", "cyclic:3"])), 2);
    let v = json(&run(&["pair", &w3, &dual, "--json"]));
    assert_eq!(v["results"][0]["proper"], true);
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = run(&["verify", "T7_1", "--max-order", "4"]);
    assert_eq!(code(&o), 0);
    let first = stdout(&o).lines().next().unwrap().to_string();
    let fields: Vec<&str> = first.split_whitespace().collect();
    assert_eq!(&fields[..3], ["T7_1", "confirmed", "591"]);

    let o = run(&["verify", "BOGUS"]);
    assert_eq!(code(&o), 2);

    // Refutations are results: exit 0, also under --strict when expected.
    let o = run(&["verify", "E2_1b", "--max-order", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("refuted"));
    assert_eq!(code(&run(&["verify", "E2_1b", "--strict", "--max-order", "3"])), 0);

    let v = json(&run(&["verify", "CEX4_TABLE", "--json"]));
    assert_eq!(v["results"][0]["verdict"], "refuted");
    assert_eq!(v["results"][0]["known_discrepancy"], true);
}

#[test]
fn verify_all_and_environment_cap() {
    let o = run(&["verify", "all", "--max-order", "3", "--strict", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), wardforge::suite::registry_ids().len());
    assert!(results.iter().all(|r| r["as_expected"] == true));

    let o = Command::new(env!("CARGO_BIN_EXE_wardforge"))
        .args(["verify", "T7_1", "--json"])
        .env("WARDFORGE_MAX_ORDER", "2")
        .output()
        .unwrap();
    let v = json(&o);
    assert_eq!(v["inputs"]["max_order"], 2);
    // One Latin square of order 1 and two of order 2.
    assert_eq!(v["results"][0]["instances"], 3);
}

#[test]
fn enumerate_counts_and_files() {
    let o = run(&["enumerate", "--order", "3"]);
    assert!(stdout(&o).contains("# 12 of 12 quasigroups of order 3 pass"));
    let o = run(&["enumerate", "--order", "3", "--filter", "MEDIAL"]);
    assert!(stdout(&o).contains("# 12 of 12 quasigroups of order 3 pass the filter"));
    let o = run(&["enumerate", "--order", "4", "--limit", "5", "--json"]);
    assert_eq!(json(&o)["results"].as_array().unwrap().len(), 5);
    assert_eq!(code(&run(&["enumerate", "--order", "6"])), 2);
    assert_eq!(code(&run(&["enumerate", "--order", "3", "--filter", "INTERCHANGE"])), 2);

    let dir = TempDir::new().unwrap();
    let o = run(&["enumerate", "--order", "3", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 12);
}

#[test]
fn enumerate_double_ward_order_four() {
    let dir = TempDir::new().unwrap();
    let o = run(&["enumerate", "--order", "4", "--filter", "DOUBLE_WARD", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let der = |spec: &str| {
        let g = wardforge::constructions::build_group(&spec.parse().unwrap()).unwrap();
        wardforge::constructions::double_der(&g).unwrap().into_magma()
    };
    let (z4, klein) = (der("cyclic:4"), der("klein"));
    let mut files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    // Relabelings of Der(G): 4!/|Aut G| each, 24/2 + 24/6.
    assert_eq!(files.len(), 16);
    let (mut n_z4, mut n_klein) = (0, 0);
    for f in &files {
        let (m, point) = read_table(f);
        assert!(point.is_some());
        match (are_isomorphic(&m, &z4).unwrap(), are_isomorphic(&m, &klein).unwrap()) {
            (true, false) => n_z4 += 1,
            (false, true) => n_klein += 1,
            other => panic!("{}: {other:?}", f.display()),
        }
    }
    assert_eq!((n_z4, n_klein), (12, 4));
}
