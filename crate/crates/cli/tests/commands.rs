use std::fs;

use ewmat_cli::run_command;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["ewmat"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(argv, &mut input, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn field<'a>(cert: &'a str, key: &str) -> Option<&'a str> {
    cert.lines().find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
}

fn paley(q: &str) -> String {
    let r = run(&["gen", "paley", "--q", q], "");
    assert_eq!(r.code, 0, "{}", r.err);
    r.out
}

#[test]
fn conference_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paley8.mat");
    fs::write(&path, paley("7")).unwrap();
    let r = run(&["verify", "--property", "conference", path.to_str().unwrap()], "");
    assert_eq!(r.code, 0);
    assert_eq!(field(&r.out, "result"), Some("PASS"));
    assert!(r.out.ends_with("\n\n"));
}

#[test]
fn bad_paley_order_is_usage_error() {
    let r = run(&["gen", "paley", "--q", "9"], "");
    assert_eq!(r.code, 2);
    assert!(r.out.is_empty());
    assert!(r.err.contains("9"));
}

#[test]
fn wrong_charpoly_tournament_fails() {
    // transitive tournament of order 5
    let t5 = "5 tournament\n0++++\n00+++\n000++\n0000+\n00000\n";
    let r = run(&["convert", "tournament-to-ew", "-"], t5);
    assert_eq!(r.code, 1);
    assert_eq!(field(&r.out, "result"), Some("FAIL"));
    assert!(field(&r.out, "reason").is_some());
}

#[test]
fn malformed_file_names_the_line() {
    let r = run(&["charpoly", "-"], "# header comment\n3 int\n0 1 1\n1 0\n1 1 0\n");
    assert_eq!(r.code, 2);
    assert!(r.err.contains("line 4"), "{}", r.err);
    assert_eq!(r.err.lines().count(), 1);

    let r = run(&["charpoly", "-"], "2 seidel-skew\n0+\n+0\n");
    assert_eq!(r.code, 2, "explicit kind must be validated");
}

#[test]
fn charpoly_is_ascending_and_deterministic() {
    let p = paley("7");
    let a = run(&["charpoly", "-"], &p);
    let b = run(&["charpoly", "-"], &p);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    assert_eq!(field(&a.out, "charpoly"), Some("2401 0 1372 0 294 0 28 0 1"));
    assert_eq!(field(&a.out, "factors"), Some("[7 0 1]^4"));
}

#[test]
fn delete_then_complete_round_trip() {
    let p = paley("11");
    let d = run(&["delete", "--indices", "0,4,7", "-"], &p);
    assert_eq!(d.code, 0, "{}", d.err);
    assert!(d.out.starts_with("9 seidel-skew"));

    let sf = run(&["square-form", "-"], &d.out);
    assert_eq!(sf.code, 0, "{}", sf.err);
    assert_eq!(field(&sf.out, "stage"), Some("minus3"));
    assert_eq!(field(&sf.out, "t"), Some("2"));

    let c = run(&["complete", "--to-conference", "-"], &d.out);
    assert_eq!(c.code, 0, "{}", c.err);
    let v = run(&["verify", "--property", "conference", "-"], &c.out);
    assert_eq!(v.code, 0);
    assert_eq!(field(&v.out, "gram"), Some("11I"));

    let one = run(&["complete", "-"], &d.out);
    assert!(one.out.starts_with("10 seidel-skew"));
}

#[test]
fn complete_rejects_unknown_spectrum() {
    let p = paley("13");
    let d = run(&["delete", "--indices", "0,1,2,3,4", "-"], &p);
    let c = run(&["complete", "-"], &d.out);
    assert_eq!(c.code, 1);
    assert_eq!(field(&c.out, "result"), Some("FAIL"));
}

#[test]
fn spectrum_needs_family() {
    let p = paley("7");
    let r = run(&["verify", "--property", "spectrum", "-"], &p);
    assert_eq!(r.code, 2);
    let r = run(&["verify", "--property", "spectrum", "--family", "skew_i", "--t", "1", "-"], &p);
    assert_eq!(r.code, 0);
    let r = run(&["verify", "--property", "spectrum", "--family", "skew_i", "--t", "2", "-"], &p);
    assert_eq!(r.code, 1);
}

#[test]
fn ew_generation_and_tournament_round_trip() {
    let g = run(&["gen", "ew", "--order", "6", "--skew"], "");
    assert_eq!(g.code, 0, "{}", g.err);
    let v = run(&["verify", "--property", "ew", "-"], &g.out);
    assert_eq!(v.code, 0);
    assert_eq!(field(&v.out, "abs_det"), Some("160"));
    let skew = run(&["verify", "--property", "skew-type", "-"], &g.out);
    assert_eq!(skew.code, 0);

    let t = run(&["convert", "ew-to-tournament", "-"], &g.out);
    assert_eq!(t.code, 0, "{}", t.err);
    let c = run(&["charpoly", "-"], &t.out);
    assert_eq!(field(&c.out, "charpoly"), Some("-3 -3 -4 0 0 1"));
    let back = run(&["convert", "tournament-to-ew", "-"], &t.out);
    assert_eq!(back.code, 0);
    assert_eq!(run(&["verify", "--property", "ew", "-"], &back.out).code, 0);
}

#[test]
fn ew_search_reports_exhaustion() {
    let r = run(&["gen", "ew", "--order", "10", "--skew", "--node-limit", "500"], "");
    assert_eq!(r.code, 1);
    assert!(field(&r.out, "reason").unwrap().contains("budget"));
    let r = run(&["gen", "ew", "--order", "8"], "");
    assert_eq!(r.code, 2);
}

#[test]
fn ew_verify_on_hadamard_fails() {
    let p = paley("7");
    let h = run(&["convert", "conference-to-hadamard", "-"], &p);
    assert_eq!(run(&["verify", "--property", "hadamard", "-"], &h.out).code, 0);
    assert_eq!(run(&["verify", "--property", "ew", "-"], &h.out).code, 1);
}

#[test]
fn scramble_is_seeded_and_preserves_charpoly() {
    let p = paley("11");
    let a = run(&["scramble", "--seed", "5", "-"], &p);
    let b = run(&["scramble", "--seed", "5", "-"], &p);
    let c = run(&["scramble", "--seed", "6", "-"], &p);
    assert_eq!(a.out, b.out);
    assert_ne!(a.out, c.out);
    let chi = |s: &str| field(&run(&["charpoly", "-"], s).out, "charpoly").unwrap().to_string();
    assert_eq!(chi(&a.out), chi(&p));

    let t5 = "5 tournament\n0+0+0\n00+0+\n+00+0\n0+00+\n+0+00\n";
    let s = run(&["scramble", "--seed", "1", "-"], t5);
    assert_eq!(s.code, 0, "{}", s.err);
    assert!(s.out.lines().nth(1).unwrap().starts_with("5 tournament"));
}

#[test]
fn seidel_tournament_conversions() {
    let t5 = "5 tournament\n0+0+0\n00+0+\n+00+0\n0+00+\n+0+00\n";
    let s = run(&["convert", "tournament-to-seidel", "-"], t5);
    assert_eq!(s.code, 0);
    assert!(s.out.starts_with("5 seidel-skew"));
    let back = run(&["convert", "seidel-to-tournament", "-"], &s.out);
    assert_eq!(back.out, t5);
}

#[test]
fn angles_of_minus3_stage() {
    let p = paley("7");
    let d = run(&["delete", "--indices", "0,1,2", "-"], &p);
    let r = run(&["angles", "-"], &d.out);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(field(&r.out, "total"), Some("5"));
    assert_eq!(field(&r.out, "alpha[0]"), Some("7/3"));
}

#[test]
fn out_path_receives_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.txt");
    let r = run(&["--out", path.to_str().unwrap(), "verify", "--property", "det-mod4", "-"], &paley("5"));
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(field(&text, "property"), Some("det_mod4"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"], "").code, 2);
    assert_eq!(run(&["verify", "--property", "nope", "-"], "").code, 2);
    assert_eq!(run(&["charpoly", "/nonexistent/file.mat"], "").code, 2);
    assert_eq!(run(&["--help"], "").code, 0);
}
