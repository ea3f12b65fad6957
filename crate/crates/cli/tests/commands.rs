use std::path::PathBuf;

use bitop_cli::{run_args, Output, EXIT_INVALID, EXIT_OK};
use bitop_core::catalog;
use bitop_core::format::parse_space;
use bitop_core::sobriety;

fn cli(args: &[&str]) -> Output {
    run_args(std::iter::once("bitop").chain(args.iter().copied()))
}

fn has(out: &Output, line: &str) -> bool {
    out.stdout.lines().any(|l| l == line)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bitop-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_reports() {
    let t = cli(&["classify", "T4X3"]);
    assert_eq!(t.code, EXIT_OK);
    assert!(has(&t, "T4 = true"));
    assert!(has(&t, "pairwiseNormal = false"));
    assert_eq!(t.stdout.lines().count(), 24);
    let p = cli(&["classify", "pnorm3"]);
    assert!(has(&p, "pairwiseNormal = true") && has(&p, "normal = false"));
}

#[test]
fn space_files() {
    let good = scratch(
        "t4x3.space",
        "# three points\nspace FILE\npoints: x y z\ntt-subbasis: {x y} {z}\nff-opens: {} {x} {y z} {x y z}\n",
    );
    let out = cli(&["classify", good.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(has(&out, "space = FILE") && has(&out, "T4 = true"));

    let missing_full = scratch("bad.space", "space BAD\npoints: a b\ntt-opens: {} {a}\nff-opens: {} {a b}\n");
    let out = cli(&["classify", missing_full.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stdout.contains("line 3"), "{}", out.stdout);

    let out = cli(&["oracle", missing_full.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    assert_eq!(cli(&["classify", "/nonexistent/space"]).code, EXIT_INVALID);
}

#[test]
fn order_formats() {
    let kv = cli(&["order", "CHAIN2"]);
    assert!(has(&kv, "omega(0,1) = ff") && has(&kv, "omega(1,0) = tt"));
    let text = cli(&["--format", "text", "order", "T4X3"]);
    assert!(text.stdout.contains("x   1 tt  0"), "{}", text.stdout);
}

#[test]
fn sobriety_and_hm() {
    let s = cli(&["sobriety", "T4X3"]);
    assert!(has(&s, "b_sober = false") && has(&s, "d_sober = true"));
    assert!(has(&s, "witness = ({z}, {x})"));
    let s = cli(&["sobriety", "SIERP"]);
    assert!(has(&s, "b_points = 4") && has(&s, "witness = none"));
    let h = cli(&["hm", "SIERP"]);
    assert!(has(&h, "bijection_holds = true") && has(&h, "failures = []"));
    let h = cli(&["hm", "T4X3"]);
    assert_eq!(h.code, EXIT_OK);
    assert!(has(&h, "part_iii = not-applicable-with-findings"));
}

#[test]
fn sobrify_writes_a_parseable_space() {
    let dir = std::env::temp_dir().join(format!("bitop-cli-sobrify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t4x3-hat.space");
    let out = cli(&["sobrify", "T4X3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert!(has(&out, "points = 4") && has(&out, "b_sober = true") && has(&out, "unit_bijective = false"));
    let back = parse_space(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back.carrier.names(), ["g0", "g1", "g2", "g3"]);
    assert!(sobriety::is_b_sober(&back));

    let d = cli(&["sobrify", "T4X3", "--d"]);
    let back = parse_space(&d.stdout).unwrap();
    assert_eq!(back.len(), 3);
}

#[test]
fn dframe_and_catalog() {
    let d = cli(&["dframe", "SIERP"]);
    assert!(has(&d, "elements = 9") && has(&d, "violations = []"));
    let c = cli(&["catalog"]);
    assert_eq!(c.code, EXIT_OK);
    for name in catalog::NAMES {
        assert!(has(&c, &format!("{name}.expectations = pass")), "{name}");
    }
}

#[test]
fn search_commands() {
    let a = cli(&["search", "--points", "2", "--check-implications"]);
    assert!(has(&a, "spaces = 16") && has(&a, "violations = 0"));
    let f = cli(&["search", "--points", "2", "--find", "joinT1 & !T1", "--limit", "1"]);
    assert!(has(&f, "witness.tt-opens = {} {p1} {p0 p1}"), "{}", f.stdout);
    assert!(has(&f, "witness.ff-opens = {} {p0} {p0 p1}"), "{}", f.stdout);
    assert_eq!(cli(&["search", "--points", "5", "--check-implications"]).code, EXIT_INVALID);
    assert_eq!(cli(&["search", "--points", "2", "--find", "T1 &"]).code, EXIT_INVALID);
    let h = cli(&["search", "--points", "2", "--hausdorff-refinement"]);
    assert!(has(&h, "hausdorff_refinement = found"));
}

#[test]
fn oracle_reports() {
    for name in ["T4X3", "SIERP"] {
        let o = cli(&["oracle", name]);
        assert_eq!(o.code, EXIT_OK);
        assert!(has(&o, "all_agree = true"));
        assert!(!o.stdout.contains("disagree"));
    }
    let o = cli(&["--max-elements", "0", "oracle", "SIERP"]);
    assert!(o.stdout.contains("b_points_filter_pairs_vs_brute_force = skipped"), "{}", o.stdout);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "DOT22"][..],
        &["search", "--points", "3", "--find", "T1 & !cwT0"],
        &["sobrify", "PNORM3"],
    ] {
        assert_eq!(cli(args), cli(args));
    }
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_INVALID);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}
