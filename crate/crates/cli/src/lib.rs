//! Command implementations behind the `bitop` binary. Each command renders
//! its report to a string and chooses an exit code: 0 when everything
//! holds, 1 on parse or validation errors, 2 when an audit finds violations.

use std::fmt::Write as _;
use std::path::PathBuf;

use bitop_core::catalog;
use bitop_core::dframe::d_o;
use bitop_core::format::{parse_space, render_space};
use bitop_core::hm::verify_hm;
use bitop_core::oracle::{run_within, Outcome};
use bitop_core::search::{self, Expr};
use bitop_core::separation::{audit_report, AxiomReport};
use bitop_core::sobriety::{self, Sobrification};
use bitop_core::{BOrder, BSpace};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATIONS: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key = value` lines
    #[default]
    Kv,
    /// Tables for reading
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "bitop", version, about = "Finite bitopological spaces as B-valued topological spaces")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Kv)]
    pub format: Format,
    /// Largest B-topology the brute-force oracles will enumerate.
    #[arg(long, global = true, default_value_t = sobriety::BRUTE_FORCE_BOUND)]
    pub max_elements: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide every separation axiom.
    Classify { space: String },
    /// Print the specialization B-order.
    Order { space: String },
    /// B-points, d-points and the sobriety deciders.
    Sobriety { space: String },
    /// Write the B-sobrification (or d-sobrification) in the space file format.
    Sobrify {
        space: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep only the points of the d-sobrification.
        #[arg(long)]
        d: bool,
    },
    /// Compact saturated sets against B-filters.
    Hm { space: String },
    /// The d-frame of open pairs and its axioms.
    Dframe { space: String },
    /// List the built-in spaces and re-check their expected facts.
    Catalog,
    /// Enumerate every space on a few points.
    Search {
        #[arg(long)]
        points: usize,
        /// Audit the implications and equivalences between axioms.
        #[arg(long)]
        check_implications: bool,
        /// Print spaces satisfying a boolean combination of axiom keys.
        #[arg(long)]
        find: Option<String>,
        /// Largest number of witnesses printed by `--find`.
        #[arg(long, default_value_t = 5)]
        limit: usize,
        /// Look for a non-Hausdorff refinement of a Hausdorff space.
        #[arg(long)]
        hausdorff_refinement: bool,
    },
    /// Run every two-way cross-check.
    Oracle { space: String },
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { stdout, code: EXIT_OK }
    }

    fn with_code(stdout: String, failed: bool) -> Output {
        Output {
            stdout,
            code: if failed { EXIT_VIOLATIONS } else { EXIT_OK },
        }
    }
}

/// A catalog name or the path of a space file.
pub fn load_space(arg: &str) -> Result<BSpace, String> {
    if let Some(s) = catalog::by_name(arg) {
        return Ok(s);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| {
        format!(
            "`{arg}` is neither a catalog space ({}) nor a readable file: {e}",
            catalog::NAMES.join(", ")
        )
    })?;
    parse_space(&text).map_err(|e| format!("{arg}: {e}"))
}

struct Report {
    format: Format,
    out: String,
}

impl Report {
    fn new(format: Format) -> Report {
        Report { format, out: String::new() }
    }

    fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Kv => writeln!(self.out, "{key} = {value}"),
            Format::Text => writeln!(self.out, "{key:<28} {value}"),
        }
        .expect("writing to a string");
    }

    fn raw(&mut self, text: &str) {
        self.out.push_str(text);
    }
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|i| format!("\"{i}\"")).collect();
    format!("[{}]", parts.join(", "))
}

pub fn classify(space: &BSpace, format: Format) -> Output {
    let report = AxiomReport::of(space);
    let mut r = Report::new(format);
    r.field("space", &space.name);
    for (a, v) in report.iter() {
        r.field(a.key(), v);
    }
    let violations = audit_report(&report);
    for v in &violations {
        r.field("violation", &v.rule);
    }
    Output::with_code(r.out, !violations.is_empty())
}

pub fn order(space: &BSpace, format: Format) -> Output {
    let omega = BOrder::specialization(space);
    let mut r = Report::new(format);
    match format {
        Format::Kv => {
            r.field("space", &space.name);
            r.raw(&omega.render_kv(&space.carrier));
        }
        Format::Text => {
            r.raw(&format!("specialization B-order of {} (row x, column y: omega(x,y))\n", space.name));
            r.raw(&omega.render_table(&space.carrier));
        }
    }
    Output::ok(r.out)
}

pub fn sobriety(space: &BSpace, format: Format) -> Output {
    let mut r = Report::new(format);
    r.field("space", &space.name);
    r.field("b_points", sobriety::b_points(space).len());
    r.field("d_points", sobriety::d_points(space).len());
    r.field("b_sober", sobriety::is_b_sober(space));
    r.field("d_sober", sobriety::is_d_sober(space));
    r.field("join_sober", sobriety::is_join_sober(space));
    let witness = sobriety::b_sober_witness(space);
    r.field(
        "witness",
        witness
            .as_ref()
            .map_or("none".to_string(), |w| w.render(&space.carrier)),
    );
    let d = sobriety::discrepancy(space);
    r.field("audit.component_criterion", d.criterion);
    r.field("audit.direct_b_sober", d.b_sober);
    r.field("audit.status", if d.disagrees() { "disagree" } else { "agree" });
    Output::ok(r.out)
}

fn render_sobrification(source: &BSpace, sob: &Sobrification) -> String {
    let mut out = String::new();
    for (g, gamma) in sob.space.carrier.names().iter().zip(&sob.points) {
        let _ = writeln!(out, "# {g} = {}", source.carrier.render_bset(gamma));
    }
    for (x, &g) in sob.unit.iter().enumerate() {
        let _ = writeln!(out, "# unit {} -> {}", source.carrier.name(x), sob.space.carrier.name(g));
    }
    out.push_str(&render_space(&sob.space));
    out
}

pub fn sobrify(space: &BSpace, out: Option<&std::path::Path>, d: bool, format: Format) -> Output {
    let sob = if d { sobriety::d_sobrify(space) } else { sobriety::sobrify(space) };
    let file = render_sobrification(space, &sob);
    let Some(path) = out else {
        return Output::ok(file);
    };
    if let Err(e) = std::fs::write(path, &file) {
        return Output {
            stdout: format!("error = cannot write {}: {e}\n", path.display()),
            code: EXIT_INVALID,
        };
    }
    let mut r = Report::new(format);
    r.field("space", &sob.space.name);
    r.field("points", sob.points.len());
    r.field("b_sober", sobriety::is_b_sober(&sob.space));
    r.field("d_sober", sobriety::is_d_sober(&sob.space));
    r.field("unit_bijective", sob.unit_is_bijective());
    r.field("unit_homeomorphism", sob.unit_is_homeomorphism(space));
    r.field("written", path.display());
    Output::ok(r.out)
}

pub fn hm(space: &BSpace, format: Format) -> Output {
    let rep = match verify_hm(space) {
        Ok(rep) => rep,
        Err(e) => return error_output(&e.to_string()),
    };
    let mut r = Report::new(format);
    r.field("space", &space.name);
    r.field("n_saturated_inhabited", rep.n_saturated_inhabited);
    r.field("n_bfilters", rep.n_bfilters);
    r.field("b_sober", rep.b_sober);
    r.field("part_i_holds", rep.part_i_holds);
    r.field("eq_ii_holds", rep.eq_ii_holds);
    r.field("bijection_holds", rep.bijection_holds);
    r.field(
        "part_iii",
        if rep.b_sober { "applicable" } else { "not-applicable-with-findings" },
    );
    r.field("failures", list(&rep.failures));
    let failed = !rep.part_i_holds || !rep.eq_ii_holds || (rep.b_sober && !rep.bijection_holds);
    Output::with_code(r.out, failed)
}

pub fn dframe(space: &BSpace, format: Format) -> Output {
    let d = d_o(space);
    let violations: Vec<&str> = d.validate().iter().map(|a| a.tag()).collect();
    let mut r = Report::new(format);
    r.field("space", &space.name);
    r.field("elements", d.len());
    r.field("con", d.con_size());
    r.field("tot", d.tot_size());
    r.field("violations", list(&violations));
    Output::with_code(r.out, !violations.is_empty())
}

pub fn catalog_listing(format: Format) -> Output {
    let mut r = Report::new(format);
    let mut failed = false;
    for e in catalog::entries() {
        let report = AxiomReport::of(&e.space);
        let mut mismatches: Vec<String> = e
            .axioms
            .iter()
            .filter(|(a, want)| report.get(*a) != *want)
            .map(|(a, want)| format!("{a} expected {want}"))
            .collect();
        for (fact, want) in &e.facts {
            let got = match fact {
                catalog::Fact::BSober => sobriety::is_b_sober(&e.space),
                catalog::Fact::DSober => sobriety::is_d_sober(&e.space),
            };
            if got != *want {
                mismatches.push(format!("{} expected {want}", fact.key()));
            }
        }
        failed |= !mismatches.is_empty();
        r.field(&format!("{}.points", e.name), e.space.len());
        r.field(&format!("{}.description", e.name), e.description);
        r.field(
            &format!("{}.expectations", e.name),
            if mismatches.is_empty() {
                "pass".to_string()
            } else {
                format!("fail {}", list(&mismatches))
            },
        );
    }
    Output::with_code(r.out, failed)
}

fn witness_fields(r: &mut Report, key: &str, s: &BSpace) {
    r.field(key, &s.name);
    let sets = |t: &bitop_core::FinTopology| {
        t.opens()
            .iter()
            .map(|&u| s.carrier.render_set(u))
            .collect::<Vec<_>>()
            .join(" ")
    };
    r.field(&format!("{key}.tt-opens"), sets(&s.tt));
    r.field(&format!("{key}.ff-opens"), sets(&s.ff));
}

pub struct SearchOptions<'a> {
    pub points: usize,
    pub check_implications: bool,
    pub find: Option<&'a str>,
    pub limit: usize,
    pub hausdorff_refinement: bool,
}

pub fn search(opts: &SearchOptions, format: Format) -> Output {
    let mut r = Report::new(format);
    r.field("points", opts.points);
    let mut failed = false;
    let expr = match opts.find.map(Expr::parse).transpose() {
        Ok(e) => e,
        Err(e) => return error_output(&format!("--find: {e}")),
    };
    if opts.check_implications {
        match search::check_implications(opts.points) {
            Ok(a) => {
                r.field("spaces", a.spaces);
                r.field("violations", a.violations.len());
                for v in &a.violations {
                    r.field("violation", v);
                }
                failed |= !a.violations.is_empty();
            }
            Err(e) => return error_output(&e.to_string()),
        }
    }
    if let Some(expr) = expr {
        match search::find(opts.points, &expr, opts.limit) {
            Ok(f) => {
                r.field("find", opts.find.unwrap_or_default());
                r.field("find.spaces", f.spaces);
                r.field("find.matches", f.matches);
                for w in &f.witnesses {
                    witness_fields(&mut r, "witness", w);
                }
            }
            Err(e) => return error_output(&e.to_string()),
        }
    }
    if opts.hausdorff_refinement {
        match search::hausdorff_non_monotonicity(opts.points) {
            Ok(Some((coarse, fine))) => {
                r.field("hausdorff_refinement", "found");
                witness_fields(&mut r, "hausdorff_refinement.coarser", &coarse);
                witness_fields(&mut r, "hausdorff_refinement.finer", &fine);
            }
            Ok(None) => r.field("hausdorff_refinement", "absent"),
            Err(e) => return error_output(&e.to_string()),
        }
    }
    Output::with_code(r.out, failed)
}

fn slug(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

pub fn oracle(space: &BSpace, max_elements: usize, format: Format) -> Output {
    let rep = run_within(space, max_elements);
    let mut r = Report::new(format);
    r.field("space", &space.name);
    for c in &rep.checks {
        let value = match &c.outcome {
            Outcome::Agree => "agree".to_string(),
            Outcome::Disagree(d) => format!("disagree {d}"),
            Outcome::Skipped(why) => format!("skipped ({why})"),
        };
        r.field(&slug(c.name), value);
    }
    r.field("all_agree", rep.all_agree());
    Output::with_code(r.out, !rep.all_agree())
}

fn error_output(message: &str) -> Output {
    Output {
        stdout: format!("error = {message}\n"),
        code: EXIT_INVALID,
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Output {
    let f = cli.format;
    let with_space = |arg: &str, k: &dyn Fn(&BSpace) -> Output| match load_space(arg) {
        Ok(s) => k(&s),
        Err(e) => error_output(&e),
    };
    match &cli.command {
        Command::Classify { space } => with_space(space, &|s| classify(s, f)),
        Command::Order { space } => with_space(space, &|s| order(s, f)),
        Command::Sobriety { space } => with_space(space, &|s| sobriety(s, f)),
        Command::Sobrify { space, out, d } => with_space(space, &|s| sobrify(s, out.as_deref(), *d, f)),
        Command::Hm { space } => with_space(space, &|s| hm(s, f)),
        Command::Dframe { space } => with_space(space, &|s| dframe(s, f)),
        Command::Catalog => catalog_listing(f),
        Command::Search {
            points,
            check_implications,
            find,
            limit,
            hausdorff_refinement,
        } => search(
            &SearchOptions {
                points: *points,
                check_implications: *check_implications,
                find: find.as_deref(),
                limit: *limit,
                hausdorff_refinement: *hausdorff_refinement,
            },
            f,
        ),
        Command::Oracle { space } => with_space(space, &|s| oracle(s, cli.max_elements, f)),
    }
}

/// Parses `args` (program name first) and runs the command. Usage errors
/// exit with [`EXIT_INVALID`]; help and version exit with [`EXIT_OK`].
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            Output {
                stdout: e.render().to_string(),
                code,
            }
        }
    }
}
