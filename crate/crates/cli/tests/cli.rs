use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn wordrep(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wordrep"))
        .args(args)
        .env_remove("WORDREP_ALLOW_LARGE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).expect("golden file exists")
}

fn generate(args: &[&str]) -> String {
    let r = wordrep(&[&["generate"], args].concat(), "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout.trim().to_string()
}

#[test]
fn census_six_matches_golden() {
    let r = wordrep(&["census", "6"], "");
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, golden("census_6.txt"));
    assert!(r.stdout.contains("1 non-representable"));
    assert!(r.stdout.lines().next().unwrap().ends_with(" W5"));
}

#[test]
fn split_census_on_seven_vertices() {
    let r = wordrep(&["census", "7", "--filter", "split", "--expected", "3"], "");
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, golden("census_7_split.txt"));
    let json = wordrep(&["census", "7", "--filter", "split", "--json"], "");
    assert_eq!(json.stdout, golden("census_7_split.json"));
    let rows: Vec<Value> = json.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let names: Vec<&str> = rows[..3].iter().map(|r| r["isomorphic_to"].as_str().unwrap()).collect();
    assert_eq!(names, ["T1", "T2", "T3"]);
    assert_eq!(rows[3]["summary"]["non_representable"], 3);
}

#[test]
fn census_expectations_and_guard() {
    assert_eq!(wordrep(&["census", "7", "--connected", "--expected", "25"], "").code, 0);
    let total = wordrep(&["census", "7", "--expected", "25"], "");
    assert_eq!(total.code, 2);
    assert!(total.stderr.contains("found 26"));
    assert_eq!(wordrep(&["census", "9"], "").code, 1);
}

#[test]
fn classify_matches_golden() {
    let input = golden("classify_input.txt");
    let text = wordrep(&["classify"], &input);
    assert_eq!(text.code, 0);
    assert_eq!(text.stdout, golden("classify.txt"));
    let json = wordrep(&["classify", "--json"], &input);
    assert_eq!(json.stdout, golden("classify.json"));
    for line in json.stdout.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert!(v["graph6"].is_string() && v["representable"].is_boolean() && v["reason"].is_string());
    }
    let file = wordrep(&["classify", golden_path("classify_input.txt").to_str().unwrap()], "");
    assert_eq!(file.stdout, text.stdout);
}

#[test]
fn classify_flags() {
    let verified = wordrep(&["classify", "--verify", "--witness"], &golden("classify_input.txt"));
    assert_eq!(verified.code, 0, "{}", verified.stderr);
    assert!(verified.stdout.contains("C~ representable COMPARABILITY orientation 000000"));
    assert_eq!(verified.stdout.lines().count(), 6);
}

#[test]
fn unparseable_lines_are_reported_with_positions() {
    let r = wordrep(&["classify"], "Bw\n\n# comment\nzz\n");
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "Bw representable CLIQUE_LE_3\n");
    assert!(r.stderr.contains("<stdin>:4:"));
}

#[test]
fn generate_examples() {
    let t1 = generate(&["T1"]);
    assert_eq!(generate(&["A_GRAPH", "4"]), generate(&["A_GRAPH(4)"]));
    let same = wordrep(&["classify"], &format!("{}\n", generate(&["A_GRAPH", "4"])));
    assert!(same.stdout.contains("witness T1"));
    assert!(wordrep(&["classify"], &format!("{t1}\n")).stdout.contains("witness T1"));
    assert_eq!(generate(&["K_L_K", "5", "3"]), generate(&["K_L_K(5,3)"]));
    let dot = generate(&["K_TRIANGLE", "6", "--dot"]);
    assert!(dot.starts_with("digraph G {") && dot.contains("0 -> 11;") && dot.contains("11 -> 5;"));
    assert_eq!(generate(&["T4", "--orientation"]), format!("{} none", generate(&["T4"])));
    assert_eq!(wordrep(&["generate", "K_L_K", "3", "3"], "").code, 1);
    assert_eq!(wordrep(&["generate", "NOPE"], "").code, 1);
}

#[test]
fn orient_examples() {
    let k3 = generate(&["K_TRIANGLE", "3"]);
    let count = wordrep(&["orient", "--count", "--fix-clique"], &format!("{k3}\n"));
    assert_eq!(count.stdout, format!("{k3} 4\n"));
    let free = wordrep(&["orient", "--count"], "Bw\n");
    assert_eq!(free.stdout, "Bw 6\n");
    let all = wordrep(&["orient", "--all"], "Bw\n");
    assert_eq!(all.stdout.lines().count(), 6);
    let fixed = wordrep(&["orient", "--count", "--fix", "0>1", "--fix", "1>2"], "Bw\n");
    assert_eq!(fixed.stdout, "Bw 1\n");
    let t4 = generate(&["T4"]);
    assert_eq!(wordrep(&["orient"], &format!("{t4}\n")).stdout, format!("{t4} none\n"));
    let types = wordrep(&["orient", "--classify-types"], &generate(&["K_TRIANGLE", "6", "--orientation"]));
    assert_eq!(types.stdout, golden("orient_k_triangle_6_types.txt"));
    let kinds: Vec<String> = types
        .stdout
        .lines()
        .filter_map(|l| serde_json::from_str::<Value>(l.trim()).ok())
        .filter_map(|v| v["kind"].as_str().map(str::to_string))
        .collect();
    assert_eq!(kinds, ["B", "B", "B", "B", "B", "C"]);
}

#[test]
fn orient_checks_given_orientations() {
    let c4 = wordrep(&["orient"], "Cl 0000\n");
    assert_eq!(c4.code, 0);
    assert!(c4.stdout.starts_with("Cl 0000 "));
    let acyclic = wordrep(&["orient"], "Bw 001\n");
    assert_eq!(acyclic.stdout, "Bw 001 semi-transitive\n");
    let cyclic = wordrep(&["orient"], "Bw 010\n");
    assert_eq!(cyclic.stdout, "Bw 010 cyclic\n");
    let bad = wordrep(&["orient", "--classify-types"], "Cl\n");
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("split"));
}

#[test]
fn word_commands() {
    let fig2 = generate(&["FIG2_EXAMPLE"]);
    assert_eq!(wordrep(&["word", "check", "--one-based", "1213423", &fig2], "").code, 0);
    assert_eq!(wordrep(&["word", "check", "0102312", &fig2], "").code, 0);
    let wrong = wordrep(&["word", "check", "0123", "Cl"], "");
    assert_eq!(wrong.code, 2);
    let graph = wordrep(&["word", "graph", "--one-based", "23125413241362"], "");
    assert_eq!(graph.code, 0);
    let w5 = generate(&["W5"]);
    assert_eq!(wordrep(&["word", "find", &w5], "").stdout, "none\n");
    let c5 = wordrep(&["word", "find", &generate(&["C", "5"])], "");
    let word = c5.stdout.trim();
    assert_eq!(wordrep(&["word", "check", word, &generate(&["C", "5"])], "").code, 0);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(wordrep(&["bogus"], "").code, 1);
    assert_eq!(wordrep(&["orient", "--all", "--count"], "").code, 1);
    assert_eq!(wordrep(&["--help"], "").code, 0);
}
