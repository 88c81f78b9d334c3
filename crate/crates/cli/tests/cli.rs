use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(rel: &str) -> String {
    fixtures().join(rel).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_active-sum"))
        .args(args)
        .env_remove("ACTIVESUM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in\n{report}"))
}

#[test]
fn transpositions_of_s3() {
    let o = run(&["active-sum", "--group", "sym3", "--family", "cyclic:2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "family_members"), "3");
    assert_eq!(value(&r, "exponent_divides"), "true");
    assert_eq!(value(&r, "order_S"), "6");
    assert_eq!(value(&r, "iso"), "true");
}

#[test]
fn non_generating_seed() {
    let o = run(&["active-sum", "--group", "sym3", "--seed", "(0 1 2)"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "order_S"), "3");
    assert_eq!(value(&r, "generating"), "false");
    assert_eq!(value(&r, "iso"), "false");
}

#[test]
fn sl32_order_three_elements() {
    let o = run(&["active-sum", "--group", "sl:3:2", "--family", "cyclic:3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    let order: u64 = value(&r, "order_S").parse().unwrap();
    assert_eq!(order % 168, 0);
    assert_eq!(value(&r, "image_phi"), "168");
}

#[test]
fn encodings_and_strategies_agree() {
    let order = |extra: &[&str]| {
        let mut args = vec!["active-sum", "--group", "alt4", "--family", "cyclic:3"];
        args.extend_from_slice(extra);
        value(&stdout(&run(&args)), "order_S").to_string()
    };
    let base = order(&[]);
    assert_eq!(base, "24");
    assert_eq!(order(&["--encoding", "regular"]), base);
    assert_eq!(order(&["--strategy", "felsch"]), base);
}

#[test]
fn certify_coxeter_file() {
    let o = run(&["certify", "--coxeter", &fixture("a3.cox"), "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "verified"), "true");
    assert_eq!(value(&r, "iso"), "true");
    assert_eq!(value(&r, "certificate"), "C_2-cellular");
    assert!(r.contains("rule self-cellular m=2"));
}

#[test]
fn certify_coxeter_name_with_schur_checks() {
    let o = run(&["certify", "--coxeter", "B3", "--n", "2", "--schur", &fixture("schur.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "schur_primes_check"), "pass");
    assert_eq!(value(&r, "injection_iso_check"), "pass");
}

#[test]
fn certify_rejects_exponent_violation() {
    let o = run(&["certify", "--group", "sym3", "--family", "A3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("hypothesis violated (exponent)"), "{err}");
}

#[test]
fn certify_alt4_writes_certificate_file() {
    let dir = std::env::temp_dir().join(format!("active-sum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("alt4.cert");
    let p = path.to_string_lossy().into_owned();
    let o = run(&["certify", "--group", "alt4", "--family", "cyclic:3", "--n", "3", "--certificate-out", &p]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "order_S"), "24");
    assert_eq!(value(&r, "kernel_phi"), "2");
    assert_eq!(value(&r, "verified"), "true");
    let cert = std::fs::read_to_string(&path).unwrap();
    assert!(cert.starts_with("certificate C_3-cellular"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn family_and_group_files() {
    let o = run(&[
        "active-sum",
        "--group",
        &fixture("groups/s4_explicit.group"),
        "--family",
        &fixture("families/transpositions4.family"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "family_members"), "6");
    assert_eq!(value(&r, "order_S"), "24");
}

#[test]
fn sweep_is_deterministic_and_clean() {
    let a = run(&["property-sweep", "--orders", "1..6", "--n", "2,4,6"]);
    let b = run(&["sweep", "--orders", "1..6", "--n", "2,4,6", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(value(&stdout(&a), "violations"), "0");
}

#[test]
fn sweep_catalog_names() {
    let o = run(&["sweep", "--catalog", "S3,Q8", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "groups"), "2");
    assert_eq!(run(&["sweep", "--catalog", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["sweep", "--orders", "1..40"]).status.code(), Some(2));
}

#[test]
fn enumerate_presentations() {
    let o = run(&["enumerate", "--presentation", &fixture("presentations/a5.pres")]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert_eq!(value(&r, "index"), "60");
    assert_eq!(value(&r, "abelian_invariants"), "");

    let o = run(&["enumerate", "--presentation", &fixture("presentations/q8.pres"), "--subgroup", "a"]);
    assert_eq!(value(&stdout(&o), "index"), "2");
}

#[test]
fn invalid_permutations_exit_1() {
    assert_eq!(run(&["active-sum", "--group", "sym3", "--seed", "(0 1"]).status.code(), Some(1));
    assert_eq!(run(&["active-sum", "--group", "sym3", "--seed", "(0 7)"]).status.code(), Some(1));
}

#[test]
fn budget_exit_code_and_env() {
    let z2 = fixture("presentations/z2.pres");
    let o = run(&["enumerate", "--presentation", &z2, "--budget", "40"]);
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_active-sum"))
        .args(["enumerate", "--presentation", &z2])
        .env("ACTIVESUM_BUDGET", "40")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_3() {
    assert_eq!(run(&["active-sum", "--bogus"]).status.code(), Some(3));
    let path = std::env::temp_dir().join(format!("active-sum-bad-{}.group", std::process::id()));
    std::fs::write(&path, "degree 3\n(0 1)\n(0 1\n").unwrap();
    let o = run(&["active-sum", "--group", &path.to_string_lossy(), "--family", "cyclic:2"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));
    assert_eq!(run(&["certify", "--group", "sym3", "--family", "cyclic:2", "--n", "0"]).status.code(), Some(3));
}

#[test]
fn output_flag_writes_report() {
    let path = std::env::temp_dir().join(format!("active-sum-report-{}.txt", std::process::id()));
    let p = path.to_string_lossy().into_owned();
    let o = run(&["active-sum", "--group", "sym3", "--family", "cyclic:2", "-o", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(value(&text, "order_S"), "6");
    std::fs::remove_file(&path).unwrap();
}
