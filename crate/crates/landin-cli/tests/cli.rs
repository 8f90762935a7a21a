use std::io::Write;
use std::process::{Command, Output};

fn program(src: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

fn landin(args: &[&str], src: &str) -> (String, i32) {
    let f = program(src);
    let out: Output = Command::new(env!("CARGO_BIN_EXE_landin"))
        .args(args)
        .arg(f.path())
        .output()
        .unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn run_reports_values_and_exit_codes() {
    assert_eq!(landin(&["run", "--semantics", "secd-felleisen"], "(succ 4)"), ("value: 5\n".into(), 0));
    assert_eq!(
        landin(&["run", "--semantics", "cek-j"], "(lam x x)"),
        ("value: #procedure\n".into(), 0)
    );
    assert_eq!(
        landin(&["run", "--semantics", "secd-burge"], "((J (lam k k)) 0)"),
        ("stuck: j-outside-lambda\n".into(), 1)
    );
    assert_eq!(
        landin(&["run", "--semantics", "secd-modern", "--fuel", "100"], "((lam x (x x)) (lam x (x x)))"),
        ("fuel-exhausted\n".into(), 2)
    );
    assert_eq!(landin(&["run", "--semantics", "cek"], "(lam x").1, 3);
    assert_eq!(landin(&["run", "--semantics", "cek"], "y").1, 3);
}

#[test]
fn run_traces_one_closure_per_contraction() {
    let (out, code) = landin(&["run", "--semantics", "rs-lrhoj", "--trace"], "(succ 4)");
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("reduce | "), "{out}");
    assert!(lines.iter().all(|l| l.starts_with("reduce | ") || l.starts_with("value: ")));
    assert_eq!(*lines.last().unwrap(), "value: 5");
}

#[test]
fn compare_prints_the_matrix() {
    let (out, code) = landin(&["compare"], "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)");
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().any(|l| l == "secd-felleisen\t1"));
    assert!(out.lines().any(|l| l == "sim-thielecke\t1"));
    assert_eq!(out.lines().last(), Some("verdict\tagree"));
}

#[test]
fn compare_json_is_keyed_by_engine() {
    let (out, code) = landin(&["compare", "--json"], "((J (lam k k)) 0)");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["secd-felleisen"], 0);
    assert_eq!(v["secd-burge"], "stuck");
    assert!(v.get("cek").is_none());
}

#[test]
fn compare_with_a_subset_filter() {
    let (out, _) = landin(&["compare", "--subset", "unrestricted"], "(succ 4)");
    assert!(!out.contains("cek-stack"));
    let (out, _) = landin(&["compare", "--subset", "pure-lambda"], "(succ 4)");
    assert!(out.contains("cek-stack\t5"));
}

#[test]
fn translate_prints_the_image() {
    let (out, code) = landin(&["translate", "--simulation", "sim-cps2"], "(succ 4)");
    assert_eq!(code, 0);
    assert!(out.starts_with('('));
    assert!(!out.contains("shift"));
    let (_, code) = landin(&["translate", "--simulation", "sim-burge-ds"], "((J (lam k k)) 0)");
    assert_eq!(code, 1);
    let (_, code) = landin(&["translate", "--simulation", "sim-nope"], "1");
    assert_eq!(code, 64);
}

#[test]
fn fib_prints_both_traces() {
    let out = Command::new(env!("CARGO_BIN_EXE_landin")).args(["fib", "5"]).output().unwrap();
    let out = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        out,
        "cps\t(5,[1,0,1,2,3,0,1,2,1,0,1,2,3,4,5])\ndefunctionalized\t(5,[1,0,1,2,3,0,1,2,1,0,1,2,3,4,5])\n"
    );
}

#[test]
fn check_runs_a_small_suite() {
    let out = Command::new(env!("CARGO_BIN_EXE_landin"))
        .args(["check", "--seed", "3", "--cases", "20"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().all(|l| l.starts_with("pass\t")));
    assert!(text.contains("fuzz-anywhere"));
}
