use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rootchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootchi")).args(args).output().unwrap()
}

fn piped(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rootchi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn poly_examples() {
    let o = rootchi(&["poly", "BR[2; 1 1 1]", "--invariant", "alexander"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "t - 1 + t^-1");
    let o = rootchi(&["poly", "unknot", "--invariant", "sln", "--n", "4", "--variant", "unreduced"]);
    assert_eq!(stdout(&o).trim(), "q^3 + q + q^-1 + q^-3");
    assert_eq!(code(&rootchi(&["poly", "PD[X[1,4,2,5]]"])), 2);
    assert_eq!(code(&rootchi(&["poly", "no_such_knot"])), 2);
}

#[test]
fn poly_json_and_corpus_names() {
    let o = rootchi(&["poly", "3_1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariant"], "homfly");
    let value: rootchi::laurent::LaurentPoly = v["value"].as_str().unwrap().parse().unwrap();
    let again: rootchi::laurent::LaurentPoly = stdout(&rootchi(&["poly", "3_1"])).trim().parse().unwrap();
    assert_eq!(value, again);
}

#[test]
fn crossing_bound_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_rootchi"))
        .args(["poly", "9_40"])
        .env("ROOTCHI_MAX_CROSSINGS", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn complex_examples() {
    let h = rootchi(&["complex", "unknot-hfkn", "--n", "2"]);
    assert_eq!(code(&h), 0);
    let chi = piped(&["complex", "chi"], &stdout(&h));
    assert_eq!(stdout(&chi).trim(), "0");
    let one = r#"{"n":3,"generators":[{"name":"x","deg_times_n":0}],"differential":[[0]]}"#;
    assert_eq!(stdout(&piped(&["complex", "chi"], one)).trim(), "1");
    let two = r#"{"n":1,"generators":[{"name":"x","deg_times_n":0,"filt":0},{"name":"y","deg_times_n":1,"filt":1}],"differential":[[0,0],[1,0]]}"#;
    let ss = stdout(&piped(&["complex", "ss"], two));
    assert!(ss.contains("E1: 0@0:1 1@1:1"), "{ss}");
    assert!(ss.contains("E2: 0"), "{ss}");
    assert!(ss.contains("Einf: 0"), "{ss}");
}

#[test]
fn complex_errors_name_the_invariant() {
    let deg = r#"{"n":2,"generators":[{"name":"x","deg_times_n":0},{"name":"y","deg_times_n":1}],"differential":[[0,0],[1,0]]}"#;
    let o = piped(&["complex", "hom"], deg);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("degree"));
    let filt = r#"{"n":1,"generators":[{"name":"x","deg_times_n":0,"filt":1},{"name":"y","deg_times_n":1,"filt":0}],"differential":[[0,0],[1,0]]}"#;
    let o = piped(&["complex", "ss"], filt);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("filtration"));
    let sq = r#"{"n":1,"generators":[{"name":"x","deg_times_n":0},{"name":"y","deg_times_n":1},{"name":"w","deg_times_n":2}],"differential":[[0,0,0],[1,0,0],[0,1,0]]}"#;
    let o = piped(&["complex", "chi"], sq);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("d²"));
    assert_eq!(code(&rootchi(&["complex", "chi", "/nonexistent/file.json"])), 4);
}

#[test]
fn table_commands() {
    let t = stdout(&rootchi(&["table", "unknot-hfkn", "--n", "3"]));
    let o = piped(&["table", "collapse", "--n", "3", "--convention", "hfk"], &t);
    assert_eq!(stdout(&o), "-2/3\t1\n0\t1\n2/3\t1\nchi: 0\n");
    let tre = r#"{"labels":["gr_T","gr_M"],"half":[true,false],"entries":[{"deg":[1,0],"dim":1},{"deg":[0,-1],"dim":1},{"deg":[-1,-2],"dim":1}]}"#;
    assert_eq!(stdout(&piped(&["table", "chi"], tre)).trim(), "t - 1 + t^-1");
}

#[test]
fn verify_small_corpora() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "tre: BR[2; 1 1 1] ; alexander = t - 1 + t^-1\nhopf: BR[2; 1 1]\n").unwrap();
    let report = dir.path().join("r.json");
    let o = rootchi(&["verify", "--corpus", good.to_str().unwrap(), "--n-range", "1..4", "--report", report.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r: Vec<rootchi::verify::VerifyReport> = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r.len(), 10);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "tre: BR[2; 1 1 1] ; alexander = t - 2 + t^-1\n").unwrap();
    let o = rootchi(&["verify", "--corpus", bad.to_str().unwrap(), "--n-range", "2..3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL tre (l=1): expected.alexander"));

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let o = rootchi(&["verify", "--corpus", empty.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&report).unwrap().trim(), "[]");

    assert_eq!(code(&rootchi(&["verify", "--corpus", "/nonexistent/corpus.txt"])), 4);
    let o = rootchi(&["verify", "--corpus", good.to_str().unwrap(), "--report", "/nonexistent/dir/r.json"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn jobs_do_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let run = |jobs: &str, out: &std::path::Path| {
        rootchi(&["verify", "--n-range", "1..3", "--jobs", jobs, "--no-timing", "--approx", "--report", out.to_str().unwrap()])
    };
    let (x, y) = (run("1", &a), run("3", &b));
    assert_eq!(code(&x), 0);
    assert_eq!(stdout(&x), stdout(&y));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(std::fs::read_to_string(&a).unwrap().contains("lhs_approx"));
}
