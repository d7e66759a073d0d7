use std::process::{Command, Output};

fn diagmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagmon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const H1: &str = "W3:1-2,1'-2',3-3';0";

#[test]
fn zimin_word() {
    let o = diagmon(&["zimin", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1 x2 x1 x3 x1 x2 x1\n");
    assert_eq!(diagmon(&["zimin", "0"]).status.code(), Some(2));
}

#[test]
fn chip_arithmetic() {
    let o = diagmon(&["mul", H1, H1]);
    assert_eq!(stdout(&o), "W3:1-2,1'-2',3-3';1\n");
    let o = diagmon(&["star", "W3:1-2',2-1',3-3';4"]);
    assert_eq!(stdout(&o), "W3:1-2',1'-2,3-3';4\n");
    let o = diagmon(&["rotate", "W3:1-1',2-3,2'-3';0"]);
    assert_eq!(stdout(&o), format!("{H1}\n"));
    assert_eq!(diagmon(&["planar", H1]).status.code(), Some(0));
    assert_eq!(diagmon(&["planar", "W2:1-2',2-1';0"]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    let o = diagmon(&["mul", H1, "W2:1-2,1'-2';0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degree 3") && stderr(&o).contains("degree 2"));

    let o = diagmon(&["star", "W3:1-2,1'-2',3-3'"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column"), "{}", stderr(&o));

    let o = diagmon(&["star", "W3:1-2,1'-2,3-3';0"]);
    assert!(stderr(&o).contains("column 11: pin 2 is used twice"), "{}", stderr(&o));

    assert_eq!(diagmon(&["eval", "x1", "using", "x1=c", "in", "k3"]).status.code(), Some(2));
    assert_eq!(diagmon(&["verify", "no-such"]).status.code(), Some(2));
    assert_eq!(diagmon(&["eval", "x1*", "with", "x1=h1", "in", "k3"]).status.code(), Some(2));
}

#[test]
fn enumeration_and_bounds() {
    let o = diagmon(&["enumerate", "jones", "4", "--count"]);
    assert_eq!(stdout(&o), "count: 14\n");
    let o = diagmon(&["enumerate", "brauer", "3"]);
    assert_eq!(stdout(&o).lines().count(), 16);
    let o = Command::new(env!("CARGO_BIN_EXE_diagmon"))
        .args(["enumerate", "brauer", "4", "--count"])
        .env("DIAGMON_BRAUER_BOUND", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bound 3"));
}

#[test]
fn evaluation_targets() {
    let o = diagmon(&["eval", "x1 x2 x1", "with", "x1=h1,x2=h2", "in", "k3"]);
    assert_eq!(stdout(&o), format!("{H1}\n"));
    let o = diagmon(&["eval", "x1 x1", "with", &format!("x1={H1}"), "in", "k3"]);
    assert_eq!(stdout(&o), "W3:1-2,1'-2',3-3';1\n");
    let o = diagmon(&["eval", "x1*", "with", "x1=h1h2", "in", "k3", "--involution", "rotation"]);
    assert_eq!(stdout(&o), "W3:1-2,1'-3,2'-3';0\n");
    let o = diagmon(&["eval", "x1 x2", "with", "x1=a,x2=b", "in", "b21"]);
    assert_eq!(stdout(&o), "ab\n");
}

#[test]
fn identities_and_tables() {
    let dir = std::env::temp_dir().join(format!("diagmon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tsl.txt");
    let o = diagmon(&["export", "tsl"]);
    std::fs::write(&path, stdout(&o)).unwrap();
    let p = path.to_str().unwrap();

    let o = diagmon(&["check-identity", "x1 x1 = x1", "in", "table", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = diagmon(&["check-identity", "x1 x2 = x1", "in", p]);
    assert_eq!(o.status.code(), Some(1));
    let o = diagmon(&["check-identity", "x1 x2 x1 x2 x1 = x1 x2 x1", "in", "b21"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x1 -> 1, x2 -> a"));

    std::fs::write(&path, "2\n0 1\n1 x\n").unwrap();
    let o = diagmon(&["check-identity", "x1 = x1", "in", p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn refutation_and_isoterms() {
    let o = diagmon(&["refute", "x1 x2 = x2 x1", "in", "k3", "depth", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("refuted"));
    let o = diagmon(&["refute", "x1 x1 x1 = x1 x1", "in", "b21", "depth", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = diagmon(&["isoterm", "x1 x2 x1", "in", "b21", "maxlen", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = diagmon(&["isoterm", "x1 x1", "in", "b21", "maxlen", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x1 x1 = x1 x1 x1"));
}

#[test]
fn rees_classification() {
    let o = diagmon(&["rees", "classify", "e,e;e,(0|1)", "over", "Z"]);
    assert_eq!(stdout(&o), "form 3 at rows 1,2 columns 1,2\n");
    let o = diagmon(&["rees", "classify", "0,e;e,0", "over", "trivial"]);
    assert_eq!(stdout(&o), "form 2 at rows 1,2 columns 1,2\n");
    let o = diagmon(&["rees", "classify", "e,e;e,e", "over", "Z"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "no certificate\n".to_string()));
    assert_eq!(diagmon(&["rees", "classify", "e,e;e", "over", "Z"]).status.code(), Some(2));
}

#[test]
fn rendering() {
    let o = diagmon(&["render", "W2:1-1',2-2';0"]);
    assert_eq!(stdout(&o), "1 ─── 1'\n2 ─── 2'\ncircles: 0\n");
    let o = diagmon(&["render", "W3:1-1',2-2',3-3';1", "--format", "ascii"]);
    assert!(stdout(&o).ends_with("circles: 1 ○\n"));
    let o = diagmon(&["render", H1, "--format", "svg"]);
    assert!(stdout(&o).starts_with("<svg") && stdout(&o).matches("<path").count() == 3);
}

#[test]
fn verify_scenarios() {
    let o = diagmon(&["verify", "catalan"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS catalan"));
    assert!(stdout(&o).contains("summary scenario=catalan criterion=2 status=pass"));

    // the quotient is isomorphic to B_2^1 under reflection, but the rotation
    // fixes ab and ba, so the scenario reports the bijection and fails
    let o = diagmon(&["verify", "k3-quotient"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("bijection: 1 -> 1, h1 -> a, h2 -> b, h1h2 -> ab, h2h1 -> ba, 0 -> 0"));
    assert!(out.contains("rotation on the quotient: 1 -> 1, a -> b, b -> a, ab -> ab, ba -> ba, 0 -> 0"));

    let o = diagmon(&["verify", "--list"]);
    assert_eq!(stdout(&o).lines().count(), 13);
}

#[test]
fn verify_all_in_parallel_keeps_order() {
    let o = diagmon(&["verify", "all", "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let heads: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL "))
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(heads.len(), 13);
    assert_eq!(heads[0], "relations");
    assert_eq!(heads[12], "cross-oracle");
    assert_eq!(out.matches("summary scenario=").count(), 13);
    assert_eq!(out.matches("status=fail").count(), 1);
}
