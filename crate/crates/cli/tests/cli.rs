use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn tilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilt")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const A2: &str = "[algebra]\nfield 2\nvertices 1 2\na: 1 -> 2\n";

#[test]
fn classify_kronecker_chain() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let o = tilt(&["classify", path(&corpus("kronecker_chain.case")), "--n", "2", "--json", path(&json)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("n-pre-AIR                  yes"), "{out}");
    assert!(out.contains("n-silting                  no"), "{out}");
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["n"], 2);
    assert_eq!(report["verdicts"]["strongly_n_quasi_tilting"]["value"], "yes");
    assert_eq!(report["verdicts"]["n_air"]["value"], "no");
    assert_eq!(report["universe_bound"], serde_json::json!([2, 2, 2]));
}

#[test]
fn classify_regular_module_is_all_yes() {
    let o = tilt(&["classify", path(&corpus("a2_regular.case")), "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let json: serde_json::Value = serde_json::from_str(&out[out.find('{').unwrap()..]).unwrap();
    for (k, v) in json["verdicts"].as_object().unwrap() {
        assert_eq!(v["value"], "yes", "{k}");
    }
}

#[test]
fn classify_is_deterministic() {
    let case = corpus("oriented_three_cycle.case");
    let args = ["classify", path(&case), "--n", "2", "--seed", "9", "--json", "-"];
    assert_eq!(stdout(&tilt(&args)), stdout(&tilt(&args)));
}

#[test]
fn separate_module_file_and_imported_census() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("a2.alg");
    let module = dir.path().join("s1.mod");
    let cen = dir.path().join("a2.census");
    std::fs::write(&alg, A2).unwrap();
    std::fs::write(&module, "[module]\ndims 1 0\n").unwrap();
    let o = tilt(&["census", path(&alg), "--bound", "1,1", "--out", path(&cen)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("3 indecomposables"));
    let o = tilt(&["classify", path(&alg), path(&module), "--census", path(&cen), "--json", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("(3 indecomposables)"), "{out}");
    assert!(out.contains("strongly n-AIR             yes"), "{out}");
}

#[test]
fn examples_pass_on_builtin_corpus() {
    let o = tilt(&["examples"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("6 passed, 0 failed"));
}

#[test]
fn corrupted_expectation_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(corpus("oriented_three_cycle.case")).unwrap();
    std::fs::write(dir.path().join("bad.case"), text.replace("pd 3", "pd 2")).unwrap();
    let o = tilt(&["examples", "--dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.contains("FAIL bad.case"), "{out}");
    assert!(out.contains("pd: expected `2`, observed `3`"), "{out}");
}

#[test]
fn empty_corpus_directory_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = tilt(&["examples", "--dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no corpus"));
}

#[test]
fn parse_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.alg");
    std::fs::write(&f, "[algebra]\nfield 2\nvertices 1 2\na: 1 -> 3\n[module]\ndims 1 1\n").unwrap();
    let o = tilt(&["classify", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(tilt(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(tilt(&["classify", path(&corpus("a2_regular.case")), "--n", "0"]).status.code(), Some(1));
    let o = tilt(&["classify", path(&corpus("a2_regular.case")), "--field", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("conflicts"));
}

#[test]
fn census_cap_exits_with_two() {
    let o = tilt(&["census", path(&corpus("kronecker_chain.case")), "--bound", "4,4,4"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("exceeds cap"));
}

#[test]
fn hunt_on_a2_finds_nothing_separating() {
    let o = tilt(&["hunt", path(&corpus("a2_regular.case")), "--n", "1", "--bound", "1,1", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("n-AIR-tilting: 5"), "{out}");
    assert!(out.contains("separating: 0"), "{out}");
}

#[test]
fn complex_check_on_kronecker_chain() {
    let o = tilt(&["complex", "check", path(&corpus("kronecker_chain.case")), "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("presilting: yes"));
    assert!(out.contains("rank condition: no"));
    assert!(out.contains("generation: unknown"));
}

#[test]
fn phi_refuses_kronecker_chain_complex() {
    let o = tilt(&["complex", "phi", path(&corpus("kronecker_chain.case")), "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("silting gate"));
}

#[test]
fn phi_of_regular_stalk_is_regular() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("stalk.cx");
    std::fs::write(&f, format!("{A2}[complex]\nterm 0: 1 1\n")).unwrap();
    let o = tilt(&["complex", "phi", path(&f)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("dims 1 2"));
}

#[test]
fn psi_then_phi_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = tilt(&["complex", "psi", path(&corpus("a2_simple_top.case"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("presilting: yes, rank condition: yes, generation: yes"), "{out}");
    let f = dir.path().join("psi.cx");
    std::fs::write(&f, format!("{A2}{out}")).unwrap();
    let o = tilt(&["complex", "phi", path(&f)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("dims 1 0"), "{}", stdout(&o));
}

#[test]
fn psi_refuses_modules_that_are_not_air() {
    let o = tilt(&["complex", "psi", path(&corpus("kronecker_chain.case")), "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("refused"));
}
