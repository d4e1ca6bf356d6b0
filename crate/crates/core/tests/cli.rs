// End-to-end runs of the `origami` binary: output, JSON and exit codes.

use std::process::{Command, Output};

use origami::cli::{Payload, Status};

fn origami(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_origami")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Payload) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = origami(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("json payload"))
}

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/one-fifth.trace");

#[test]
fn decide_reports_minpoly_and_profile() {
    let o = origami(&["decide", "sqrt(2+sqrt(2))"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: origami number"));
    assert!(text.contains("minpoly: x^4-4x^2+2"));
    assert!(text.contains("conjugates: 4 real, 0 complex pairs"));
    assert!(text.contains("value: [1.847759065022, 1.847759065023]"), "{text}");

    let (code, p) = json(&["decide", "sqrt(1+sqrt(2))"]);
    assert_eq!(code, 1);
    assert_eq!(p.status, Status::VerdictFalse);
    assert_eq!((p.real_roots, p.complex_pairs), (Some(2), Some(1)));
    assert_eq!(p.reason.as_deref(), Some("not totally real"));
}

#[test]
fn precision_flag_sets_enclosure_width() {
    let (_, p) = json(&["--precision", "1e-3", "decide", "sqrt(2)"]);
    assert_eq!(p.value_enclosure, Some(["1.414".to_string(), "1.415".to_string()]));
}

#[test]
fn minpoly_check_and_synthesize() {
    let (code, p) = json(&["minpoly-check", "x^3-2"]);
    assert_eq!(code, 1);
    let f = &p.factors.unwrap()[0];
    assert_eq!((f.real_roots, f.complex_pairs, f.totally_real), (1, 1, false));

    let o = origami(&["synthesize", "sqrt(3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("hyp(hyp(1))"));
    let (code, p) = json(&["synthesize", "sqrt(4+2*sqrt(2))"]);
    assert_eq!((code, p.expression.as_deref()), (0, Some("hyp(1+hyp(1))")));
}

#[test]
fn annihilator_subcommands() {
    let cases = [
        (vec!["annihilator", "neg", "x^3-2"], "x^3+2"),
        (vec!["annihilator", "inv", "x^2-2"], "x^2-1/2"),
        (vec!["annihilator", "hyp", "x^2-2"], "x^4-6x^2+9"),
        (vec!["annihilator", "sum", "x^2-2", "x^2-3"], "x^4-10x^2+1"),
        (vec!["annihilator", "product", "x^2-2", "x^2-3"], "x^4-12x^2+36"),
    ];
    for (args, want) in cases {
        let o = origami(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn replay_closure_and_render() {
    let (code, p) = json(&["replay", FIXTURE]);
    assert_eq!(code, 0);
    assert!(p.objects.unwrap().iter().any(|o| o.value == "(1/5, 0)"));

    let o = origami(&["closure", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(0, 1/2)"));

    let (code, p) = json(&["closure", "--target", "0,1/4"]);
    assert_eq!(code, 0);
    assert_eq!(p.trace.unwrap().last().map(|s| s.ends_with("(0, 1/4)")), Some(true));
    assert_eq!(origami(&["closure", "--depth", "1", "--target", "1/5,0"]).status.code(), Some(1));
    assert_eq!(origami(&["closure", "--budget", "10", "--target", "1/5,0"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fifth.svg");
    let o = origami(&["render", FIXTURE, "--svg", svg.to_str().unwrap(), "--viewport=-0.5,1.5,-0.5,1.5"]);
    assert_eq!(o.status.code(), Some(0));
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg") && picture.contains("<circle"));
}

#[test]
fn error_paths_have_documented_exit_codes() {
    // usage errors
    for args in [vec!["decide", "1/("], vec!["nonsense"], vec!["decide"], vec!["replay", "/no/such/file"], vec!["minpoly-check", "x^^2"]] {
        assert_eq!(origami(&args).status.code(), Some(2), "{args:?}");
    }
    // computation errors
    assert_eq!(origami(&["decide", "1/0"]).status.code(), Some(3));
    // a non-real subexpression is a negative verdict, not a failure
    assert_eq!(origami(&["decide", "sqrt(-1)"]).status.code(), Some(1));
    assert_eq!(origami(&["--max-degree", "2", "decide", "sqrt(2)+sqrt(3)"]).status.code(), Some(3));
    let (code, p) = json(&["decide", "1/0"]);
    assert_eq!((code, p.status), (3, Status::Error));
    assert!(p.error.is_some());

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.trace");
    std::fs::write(&bad, "2 line-through 0 1 -> [0, 1, 0]\n").unwrap();
    assert_eq!(origami(&["replay", bad.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(origami(&["--help"]).status.code(), Some(0));
}
