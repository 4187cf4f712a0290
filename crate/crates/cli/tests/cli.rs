use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const HOPF: &str = "X 1 4 2 3; X 3 2 4 1";
const TREFOIL: &str = "X 1 5 2 4; X 3 1 4 6; X 5 3 6 2";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_khtwist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hopf_bracket() {
    let o = run(&["bracket", "--pd", HOPF]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap() == "-A^6 - A^2 - A^-2 - A^-6");
    assert!(stdout(&o).contains("routes agree: true"));
}

#[test]
fn empty_input_is_the_unknot() {
    let o = run(&["bracket", "--pd", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("A^2 + A^-2\n"));
}

#[test]
fn bracket_json_follows_the_table_schema() {
    let o = run(&["bracket", "--json", "--pd", TREFOIL]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ranks = v["ranks"].as_array().unwrap();
    assert!(ranks.iter().all(|r| r.as_array().unwrap().len() == 3));
    assert_eq!(
        v["bracket"],
        serde_json::json!([[7, 0, -1], [3, 0, -1], [-1, 0, -1], [-9, 0, 1]])
    );
    assert_eq!(v["bracket"], v["state_sum"]);
    assert_eq!(v["routes_agree"], Value::Bool(true));
}

#[test]
fn json_output_is_deterministic() {
    for cmd in ["bracket", "homology", "graphs", "adequacy", "twist", "faces"] {
        let a = stdout(&run(&[cmd, "--json", "--pd", TREFOIL]));
        let b = stdout(&run(&[cmd, "--json", "--pd", TREFOIL]));
        assert_eq!(a, b, "{cmd}");
        serde_json::from_str::<Value>(&a).unwrap();
    }
    let a = run(&["verify", "--json"]);
    let b = run(&["verify", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bundled_corpus_verifies() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert!(last.starts_with("passed 79 of 79"), "{last}");
}

#[test]
fn verify_json_lines_has_one_report_per_entry() {
    let o = run(&["verify", "--json-lines"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 79);
    assert!(lines.iter().all(|v| v["passed"] == Value::Bool(true)));
    assert_eq!(lines[0]["pairing_used"], "paper");
}

#[test]
fn non_alternating_entry_is_skipped() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "name: trefoil\n{}\nname: kinked\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\nX 7 7 8 8\n",
        TREFOIL.replace("; ", "\n")
    )
    .unwrap();
    writeln!(f, "name: nonalt\nX 2 5 1 4\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8").unwrap();
    let o = run(&["verify", "--file", f.path().to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("passed 1 of 1 (skipped 2"), "{out}");
    assert!(
        out.lines()
            .any(|l| l.starts_with("nonalt") && l.contains("not alternating")),
        "{out}"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bracket", "--pd", "X 1 2 3"]).status.code(), Some(2));
    assert_eq!(
        run(&["bracket", "--file", "/nonexistent/pd.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["bracket", "--pd", HOPF, "--file", "x"]).status.code(), Some(2));
    assert_eq!(
        run(&["bracket", "--pd", HOPF, "--homology-cap", "0"]).status.code(),
        Some(2)
    );
    let o = run(&["bracket", "--pd", TREFOIL, "--homology-cap", "2", "--statesum-cap", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    assert_eq!(
        run(&["homology", "--pd", TREFOIL, "--homology-cap", "2"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["skein", "--pd", HOPF, "--crossing", "3"]).status.code(), Some(2));
}

#[test]
fn state_sum_only_when_homology_is_capped() {
    let o = run(&["bracket", "--pd", TREFOIL, "--homology-cap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "state sum: -iA^7 - iA^3 - iA^-1 + iA^-9\n");
}

#[test]
fn graphs_of_trefoil() {
    let v: Value = serde_json::from_str(&stdout(&run(&["graphs", "--json", "--pd", TREFOIL]))).unwrap();
    let mut shapes = [
        (
            v["g"]["faces"].as_array().unwrap().len(),
            v["g"]["edges"].as_array().unwrap().len(),
        ),
        (
            v["g_star"]["faces"].as_array().unwrap().len(),
            v["g_star"]["edges"].as_array().unwrap().len(),
        ),
    ];
    shapes.sort();
    assert_eq!(shapes, [(2, 3), (3, 3)]);
    let mut psis = [v["psi_g"].as_i64().unwrap(), v["psi_gstar"].as_i64().unwrap()];
    psis.sort();
    assert_eq!(psis, [0, 1]);
}

#[test]
fn adequacy_and_twist() {
    let kink: Value = serde_json::from_str(&stdout(&run(&["adequacy", "--json", "--pd", "X 1 2 2 1"]))).unwrap();
    assert_eq!(kink["plus_adequate"], Value::Bool(false));
    assert_eq!(kink["minus_adequate"], Value::Bool(true));
    let o = run(&["twist", "--pd", "X 4 2 5 1; X 8 6 1 5; X 6 3 7 4; X 2 7 3 8"]);
    assert!(stdout(&o).starts_with("twist number: 2\n"));
}

#[test]
fn skein_reports_every_check() {
    let o = run(&["skein", "--pd", HOPF, "--crossing", "1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["crossing"], 0);
    assert!(v["ses"]["buckets"]
        .as_array()
        .unwrap()
        .iter()
        .all(|b| b["image_is_kernel"] == Value::Bool(true)));
    assert!(v["les"]["degree_classes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["alternating_sum"] == 0));
    assert_eq!(v["lemma"]["printed"].as_array().unwrap().len(), 4);
    assert!(v["lemma"]["corrected"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["holds"] == Value::Bool(true)));
    // The identities with multiplier `i` fail, so the command reports failure.
    assert_eq!(o.status.code(), Some(1));
    let all = run(&["skein", "--pd", TREFOIL, "--json-lines"]);
    assert_eq!(stdout(&all).lines().count(), 3);
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_khtwist"))
        .arg("bracket")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(HOPF.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(stdout(&o).starts_with("-A^6 - A^2 - A^-2 - A^-6"));
}
