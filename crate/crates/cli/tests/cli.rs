use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_shadowbracket"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
        .trim()
}

fn example(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["examples"];
    full.extend_from_slice(args);
    let o = run(&full, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    o.stdout
}

#[test]
fn fig14_genus_three() {
    let s = example(&["fig14", "--genus", "3"]);
    let o = run(&["eval", "-"], Some(&s));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(line(&out, "ord_i:"), "-2");
    assert_eq!(line(&out, "ribbon:"), "not ribbon; ribbon genus ≥ 2");
    assert!(line(&out, "certificate:").starts_with("complete (heuristic"));
}

#[test]
fn theta_222_cone() {
    let s = example(&["cone", "2", "2", "2"]);
    let out = stdout(&run(&["eval", "-"], Some(&s)));
    assert_eq!(line(&out, "ord_i:"), "-1");
}

#[test]
fn surface_example() {
    let s = example(&["surface", "--chi", "-1", "--color", "1"]);
    let out = stdout(&run(&["eval", "-"], Some(&s)));
    assert_eq!(line(&out, "ord_i:"), "-1");
}

#[test]
fn closed_form_tet() {
    let o = run(&["closed-form", "tet", "2", "2", "2", "2", "2", "2"], None);
    let out = stdout(&o);
    assert_eq!(line(&out, "value:"), "(q^6 + 2q^2 + 2q^-2 + q^-6)/(q^2 + 2 + q^-2)");
    assert_eq!(line(&out, "ord_i:"), "-2");
}

#[test]
fn compile_then_eval_matches_skein() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["hopf", "trefoil", "figure-eight", "unknot-kink+", "unlink2"] {
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, example(&["diagram", name])).unwrap();
        let p = path.to_str().unwrap();
        let report = dir.path().join("report.json");
        let c = run(&["compile", p, "--report", report.to_str().unwrap()], None);
        assert!(c.status.success(), "{}", String::from_utf8_lossy(&c.stderr));
        assert!(Path::new(&report).exists());
        let ev = stdout(&run(&["eval", "-"], Some(&c.stdout)));
        let sk = stdout(&run(&["skein", p], None));
        assert_eq!(line(&ev, "bracket:"), line(&sk, "bracket:"), "{name}");
        assert_eq!(line(&ev, "ord_i:"), line(&sk, "ord_i:"), "{name}");
    }
}

#[test]
fn reports_are_byte_identical() {
    let s = example(&["fig14", "--genus", "2", "--color", "3"]);
    let args = ["verify", "-", "--states", "--format", "json"];
    let a = run(&args, Some(&s));
    let b = run(&args, Some(&s));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verification"]["failures"], 0);
    assert_eq!(v["state_list"].as_array().unwrap().len(), v["states"].as_u64().unwrap() as usize);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str], input: &str| run(args, Some(input.as_bytes())).status.code();
    assert_eq!(code(&["eval", "-"], "{"), Some(3));
    assert_eq!(code(&["skein", "-"], r#"{"arcs": [1]}"#), Some(3));
    let missing = r#"{"boundary_edges": [{"id": "K", "kind": "circle", "region": "D", "color": 1}]}"#;
    assert_eq!(code(&["eval", "-"], missing), Some(4));
    let lonely = r#"{"regions": [{"id": "D", "chi": 1, "gleam2": 0}]}"#;
    assert_eq!(code(&["eval", "-"], lonely), Some(5));
    let unanchored = r#"{"regions": [{"id": "A", "chi": 1, "gleam2": 0}, {"id": "B", "chi": 1, "gleam2": 0},
        {"id": "C", "chi": 0, "gleam2": 0}],
        "interior_edges": [{"id": "e", "kind": "circle", "regions": ["A", "B", "C"]}]}"#;
    assert_eq!(code(&["eval", "-", "--cap", "4"], unanchored), Some(0));
    assert_eq!(code(&["eval", "-", "--cap", "4", "--strict"], unanchored), Some(7));
    assert_eq!(run(&["eval"], None).status.code(), Some(2));
    assert_eq!(run(&["examples", "cone", "1", "2"], None).status.code(), Some(2));
}

#[test]
fn timing_goes_to_stderr() {
    let s = example(&["fig14", "--genus", "1"]);
    let a = run(&["eval", "-", "--timing"], Some(&s));
    let b = run(&["eval", "-"], Some(&s));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("elapsed"));
}

#[test]
fn compile_rejects_degenerate_crossing() {
    let d = r#"{"arcs": ["a", "b"], "crossings": [{"id": "X", "over": 1, "ends": [
        {"arc": "a", "which_end": 0}, {"arc": "a", "which_end": 1},
        {"arc": "b", "which_end": 0}, {"arc": "b", "which_end": 1}]}],
        "outer_face": {"arc": "a", "side": "right"}}"#;
    let o = run(&["compile", "-"], Some(d.as_bytes()));
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("isotope"));
}
