use std::process::Command as Proc;

use clap::Parser;
use condense_cli::{render, run, Cli, CliError, Report};

fn report(args: &[&str]) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("condense").chain(args.iter().copied())).expect("arguments parse");
    run(&cli).expect("request succeeds")
}

fn bin(args: &[&str]) -> std::process::Output {
    Proc::new(env!("CARGO_BIN_EXE_condense")).args(args).output().expect("binary runs")
}

#[test]
fn star_failure_in_semigroup_ring() {
    let r = report(&["check-star", "--ring", "SGR(2,3;trunc=24)", "--a", "t^2,t^3", "--b", "t^2,t^3"]);
    assert_eq!(r.verdict, "Fails");
    assert_eq!(r.witness["witness"], "t^8");
    assert_eq!(r.witness["lhs"], "ideal(t^10, t^11)");
    assert_eq!(r.witness["rhs"], "ideal(t^8, t^9)");
}

#[test]
fn quartic_field_is_not_vs_closed() {
    let r = report(&["vs-closed", "--l", "NumField(x^4-2)"]);
    assert_eq!(r.verdict, "No");
    assert_eq!(r.witness["pair"], "(th, th^2)");
    assert_eq!(r.witness["independent"], "true");
    assert!(!r.transcript.is_empty());
}

#[test]
fn factor_over_integers_with_rational_tail() {
    let r = report(&["factor", "--ring", "DXL(D=Z;L=Q)", "--a", "ideal0(2)", "--b", "ideal0(3)", "--x", "6+X"]);
    assert_eq!(r.verdict, "Holds");
    assert_eq!(r.witness["a"], "2");
    assert_eq!(r.witness["b"], "3 + (1/2)*X");
}

#[test]
fn citations_follow_the_subcommand() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["check-star", "--ring", "Z", "--a", "2", "--b", "3"], &["Proposition A6"]),
        (&["check-primal", "--ring", "Z", "--x", "6", "--height", "3"], &["Proposition A6", "Proposition A7"]),
        (&["check-atom-prime", "--ring", "Z", "--a", "7", "--height", "3"], &["Proposition A2", "Corollary A3"]),
        (&["certificates", "--ring", "Z", "--height", "4"], &["Lemma A1"]),
        (&["certificates", "--ring", "Z", "--x", "2", "--a", "3", "--b", "5"], &["Lemma A"]),
        (&["pr-witness", "--ring", "Z[X]"], &["Proposition B"]),
        (&["check-condensed-pair", "--ring", "Z[X]", "--a", "ideal(2, X)", "--b", "ideal(3, X)"], &["Proposition B"]),
        (&["vs-closed", "--l", "NumField(x^2-3)"], &["Proposition J", "Example M"]),
        (&["sm-closed", "--ring", "DXL(D=Z;L=Q)", "--a", "1/2, 1/3"], &["Corollary L"]),
        (&["dplusxl-check", "--ring", "DXL(D=Z;L=Q)"], &["Theorem F"]),
        (&["dplusxl-check", "--ring", "DXL(D=Q;L=NumField(x^4-3))"], &["Proposition J", "Corollary L"]),
        (&["factor", "--ring", "DXL(D=Z;L=Q)", "--a", "full(1)", "--b", "ideal0(3)", "--x", "X+3X^2"], &["Lemma G"]),
        (&["factor", "--ring", "DXL(D=Z;L=Q)", "--a", "full(2)", "--b", "ideal0(3)", "--x", "3X^2"], &["Lemma E1"]),
    ];
    for (args, cites) in cases {
        let r = report(args);
        assert_eq!(r.citations, cites.iter().map(|s| s.to_string()).collect::<Vec<_>>(), "{args:?}");
    }
}

#[test]
fn ideal_calculator_operations() {
    let r = report(&["ideal-calc", "--ring", "Zsqrt(-5)", "--op", "product", "--a", "ideal(2,1+w)", "--b", "ideal(2,1+w)"]);
    assert_eq!(r.witness["result"], "ideal(2)");
    let r = report(&["ideal-calc", "--ring", "Z", "--op", "intersection", "--a", "ideal(4)", "--b", "ideal(6)"]);
    assert_eq!(r.witness["result"], "ideal(12)");
    let r = report(&["ideal-calc", "--ring", "Z", "--op", "v-coprime", "--a", "4", "--b", "9"]);
    assert_eq!(r.verdict, "Holds");
    assert_eq!(r.witness["op"], "v-coprime");
    let r = report(&["ideal-calc", "--ring", "Zsqrt(-5)", "--op", "member", "--a", "ideal(3,1+w)", "--x", "-2+w"]);
    assert_eq!(r.verdict, "Holds");
}

#[test]
fn subtle_element_split_is_reported() {
    let r = report(&["check-condensed-pair", "--ring", "Z", "--a", "ideal(4)", "--b", "ideal(6)", "--x", "48"]);
    assert_eq!(r.verdict, "Holds");
    assert_eq!(r.witness["i"].parse::<i64>().unwrap() * r.witness["j"].parse::<i64>().unwrap(), 48);
}

#[test]
fn strategies_agree() {
    let base = ["certificates", "--ring", "Zsqrt(-5)", "--height", "3", "--json"];
    let cli = Cli::try_parse_from(std::iter::once("condense").chain(base)).unwrap();
    let seq = Cli::try_parse_from(std::iter::once("condense").chain(base).chain(["--sequential"])).unwrap();
    assert_eq!(render(&cli).unwrap(), render(&seq).unwrap());
}

#[test]
fn binary_output_is_deterministic() {
    let args = ["vs-closed", "--l", "NumField(x^3-2)", "--json"];
    let a = bin(&args);
    let b = bin(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "No");
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["check-star", "--ring", "Z", "--a", "2,x", "--b", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["factor", "--ring", "Q", "--x", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
    let out = bin(&["factor", "--ring", "DXL(D=Z;L=Q)", "--a", "ideal0(2)", "--b", "ideal0(3)", "--x", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in"));
    let unknown = bin(&["sm-closed", "--ring", "DXL(D=Z;L=NumField(x^2-2))", "--a", "1, th"]);
    assert_eq!(unknown.status.code(), Some(0));
    let e = CliError::Core(condense_core::Error::Consistency("replay".into()));
    assert_eq!(e.exit_code(), 3);
}

#[test]
fn out_flag_and_height_env() {
    let dir = std::env::temp_dir().join(format!("condense-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = Proc::new(env!("CARGO_BIN_EXE_condense"))
        .args(["certificates", "--ring", "Z", "--json", "--out", path.to_str().unwrap()])
        .env("CONDENSE_HEIGHT", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["bound"]["height"], 4);
    assert_eq!(v["verdict"], "NoCertificate");
    std::fs::remove_dir_all(&dir).unwrap();
}
