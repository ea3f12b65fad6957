//! The nine acceptance criteria. Prints one `PASS`/`FAIL` line per
//! criterion and exits non-zero if any fails.

use std::time::{Duration, Instant};

use bitop_cli::{run_args, Output};
use bitop_core::catalog;
use bitop_core::dframe::{all_valid_dframes, d_o, f_functor, g_functor, SliceObject};
use bitop_core::hm::verify_hm;
use bitop_core::oracle::{dual_paths, Outcome};
use bitop_core::search::all_spaces;
use bitop_core::separation::{check, Axiom};
use bitop_core::sobriety;
use bitop_core::space::find_homeomorphism;

const ORDER_LIMIT: Duration = Duration::from_secs(1);
const EXAMPLES_LIMIT: Duration = Duration::from_secs(5);
const AUDIT_LIMIT: Duration = Duration::from_secs(60);
const HM_LIMIT: Duration = Duration::from_secs(10);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn cli(args: &[&str]) -> Output {
    run_args(std::iter::once("bitop").chain(args.iter().copied()))
}

fn value<'a>(out: &'a Output, key: &str) -> Option<&'a str> {
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(" = "))
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f()?;
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{v}; took {took:?}, limit {limit:?}"));
    }
    Ok(format!("{v}; {took:.2?}"))
}

fn order_table() -> Verdict {
    timed(ORDER_LIMIT, || {
        let out = cli(&["order", "T4X3"]);
        let want = [
            ("x", "x", "1"),
            ("x", "y", "tt"),
            ("x", "z", "0"),
            ("y", "x", "tt"),
            ("y", "y", "1"),
            ("y", "z", "ff"),
            ("z", "x", "0"),
            ("z", "y", "ff"),
            ("z", "z", "1"),
        ];
        for (x, y, v) in want {
            let got = value(&out, &format!("omega({x},{y})"));
            if got != Some(v) {
                return Err(format!("omega({x},{y}) = {got:?}, expected {v}"));
            }
        }
        Ok("9/9 entries match".into())
    })
}

fn example_suite() -> Verdict {
    timed(EXAMPLES_LIMIT, || {
        let expectations: &[(&str, &[(&str, &str)])] = &[
            (
                "T4X3",
                &[
                    ("T1", "true"),
                    ("T4", "true"),
                    ("T3", "true"),
                    ("Hausdorff", "true"),
                    ("pairwiseRegular", "false"),
                    ("pairwiseNormal", "false"),
                    ("pairwiseHausdorff", "false"),
                ],
            ),
            ("PNORM3", &[("pairwiseNormal", "true"), ("normal", "false")]),
            ("SIERP", &[("T0", "true"), ("b_sober", "true")]),
            (
                "DOT22",
                &[("T1", "true"), ("Hausdorff", "true"), ("b_sober", "true"), ("cwT0", "false")],
            ),
            ("CHAIN2", &[("joinT1", "true"), ("R0", "false"), ("T1", "false")]),
        ];
        let mut checked = 0;
        for (space, facts) in expectations {
            let classify = cli(&["classify", space]);
            let sober = cli(&["sobriety", space]);
            for (key, want) in *facts {
                let got = value(&classify, key).or_else(|| value(&sober, key));
                if got != Some(want) {
                    return Err(format!("{space}: {key} = {got:?}, expected {want}"));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} facts over 5 spaces"))
    })
}

fn implication_audit() -> Verdict {
    timed(AUDIT_LIMIT, || {
        let out = cli(&["search", "--points", "3", "--check-implications"]);
        let spaces = value(&out, "spaces");
        let violations = value(&out, "violations");
        if spaces != Some("841") || violations != Some("0") || out.code != 0 {
            return Err(format!("spaces = {spaces:?}, violations = {violations:?}, exit {}", out.code));
        }
        Ok("841 spaces, 0 violations".into())
    })
}

fn dual_path_agreement() -> Verdict {
    let mut spaces = 0;
    let mut brute_force_runs = 0;
    for n in 1..=3 {
        for s in all_spaces(n) {
            spaces += 1;
            let r = dual_paths(&s);
            if let Some(c) = r.disagreements().next() {
                return Err(format!("{}: {} ({:?})", s.name, c.name, c.outcome));
            }
            for c in &r.checks {
                if c.name.starts_with("B-points") {
                    match (&c.outcome, s.btopology_size() <= sobriety::BRUTE_FORCE_BOUND) {
                        (Outcome::Agree, true) => brute_force_runs += 1,
                        (Outcome::Skipped(_), false) => {}
                        (o, _) => return Err(format!("{}: B-point oracle {o:?}", s.name)),
                    }
                }
            }
        }
    }
    Ok(format!("{spaces} spaces, 0 disagreements, {brute_force_runs} brute-force B-point runs"))
}

fn sobriety_chain() -> Verdict {
    let mut spaces = 0;
    for n in 1..=3 {
        for s in all_spaces(n) {
            spaces += 1;
            let b = sobriety::is_b_sober(&s);
            let d = sobriety::is_d_sober(&s);
            let j = sobriety::is_join_sober(&s);
            let h = check(&s, Axiom::Hausdorff);
            if (b && !d) || (d && !j) || (h && !d) {
                return Err(format!("{}: b={b} d={d} join={j} hausdorff={h}", s.name));
            }
        }
    }
    Ok(format!("{spaces} spaces, 0 violations"))
}

fn sobrification() -> Verdict {
    for s in catalog::spaces() {
        let sob = sobriety::sobrify(&s);
        if !sobriety::is_b_sober(&sob.space) {
            return Err(format!("sobrify({}) is not B-sober", s.name));
        }
        if sob.unit_is_homeomorphism(&s) != sobriety::is_b_sober(&s) {
            return Err(format!("{}: unit homeomorphism disagrees with B-sobriety", s.name));
        }
        let twice = sobriety::sobrify(&sob.space).space;
        if find_homeomorphism(&sob.space, &twice, 8).map_err(|e| e.to_string())?.is_none() {
            return Err(format!("{}: sobrify is not idempotent", s.name));
        }
    }
    Ok("5 catalog spaces".into())
}

fn hofmann_mislove() -> Verdict {
    let mut notes = Vec::new();
    for name in ["SIERP", "DOT22", "T4X3"] {
        let s = catalog::by_name(name).expect("catalog space");
        let note = timed(HM_LIMIT, || {
            let r = verify_hm(&s).map_err(|e| e.to_string())?;
            let ok = if name == "T4X3" {
                r.part_i_holds && r.eq_ii_holds
            } else {
                r.b_sober && r.bijection_holds && r.eq_ii_holds && r.part_i_holds
            };
            if !ok {
                return Err(format!("{name}: {r:?}"));
            }
            Ok(format!("{name} {} sets/{} filters", r.n_saturated_inhabited, r.n_bfilters))
        })?;
        notes.push(note);
    }
    Ok(notes.join(", "))
}

fn d_frames() -> Verdict {
    for s in catalog::spaces() {
        let d = d_o(&s);
        let v = d.validate();
        if !v.is_empty() {
            return Err(format!("dO({}) fails {v:?}", s.name));
        }
        let f = f_functor(&g_functor(&d));
        let v = f.validate();
        if !v.is_empty() {
            return Err(format!("F(G(dO({}))) fails {v:?}", s.name));
        }
    }
    let valid = all_valid_dframes(&SliceObject::boolean()).map_err(|e| e.to_string())?;
    if valid.len() != 1 {
        return Err(format!("{} valid (con, tot) pairs on the 4-element algebra", valid.len()));
    }
    Ok("10 d-frames valid, 1 of 256 pairs on the 4-element algebra".into())
}

fn discrepancy_report() -> Verdict {
    let out = cli(&["sobriety", "T4X3"]);
    let criterion = value(&out, "audit.component_criterion");
    let direct = value(&out, "audit.direct_b_sober");
    let witness = value(&out, "witness");
    if criterion != Some("true") || direct != Some("false") || witness != Some("({z}, {x})") {
        return Err(format!("criterion {criterion:?}, direct {direct:?}, witness {witness:?}"));
    }
    let found = bitop_core::search::find(
        3,
        &bitop_core::search::Expr::parse("b_sober-discrepancy").map_err(|e| e.to_string())?,
        usize::MAX,
    )
    .map_err(|e| e.to_string())?;
    let t = catalog::t4x3();
    let mut hit = false;
    for w in &found.witnesses {
        if find_homeomorphism(w, &t, 8).map_err(|e| e.to_string())?.is_some() {
            hit = true;
            break;
        }
    }
    if !hit {
        return Err("no space homeomorphic to T4X3 among the discrepancy witnesses".into());
    }
    Ok(format!(
        "T4X3: criterion true, direct false, witness ({{z}}, {{x}}); {} of {} 3-point spaces disagree",
        found.matches, found.spaces
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("specialization table of T4X3", order_table),
        ("catalog example suite", example_suite),
        ("implication audit on 3 points", implication_audit),
        ("dual-path agreement on <=3 points", dual_path_agreement),
        ("sobriety chain on <=3 points", sobriety_chain),
        ("sobrification on the catalog", sobrification),
        ("Hofmann-Mislove correspondence", hofmann_mislove),
        ("d-frame validity", d_frames),
        ("B-sobriety discrepancy report", discrepancy_report),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("criterion {}: PASS {name} ({note})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
