//! `p4surf` command-line front end. [`run`] does all the work and returns the
//! streams and exit code, so the binary is a thin wrapper.

pub mod render;

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand};
use serde::Serialize;

use p4surf_core::fn_systems::FnClassification;
use p4surf_core::reason::join_tags;
use p4surf_core::{
    classify_fn_systems, classify_ruled, cross_validate, oracle_enumerate, verify_paper_with, FnOptions,
    NumericalInvariants, SearchBox, Status, Targets, VerificationReport,
};

use render::{json, opt, Format, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "p4surf", version, about = "Numerical classification of rational surfaces in P^4")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,

    /// Enumerate with f_a(d) < 0 instead of f_a(d) <= 0.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Values of n for which (n, b, r) solutions are listed, as A..B.
    #[arg(long, global = true, value_name = "A..B", value_parser = parse_interval, default_value = "0..20")]
    pub n_window: RangeInclusive<i64>,

    /// Oracle box as a,b,n,r intervals: "3..9,0..60,0..6,0..120"
    /// (names optional: "a=3..9,b=0..60,...").
    #[arg(long = "box", global = true, value_name = "RANGES", value_parser = parse_box)]
    pub search_box: Option<BoxRanges>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree, sectional genus, K², χ and double point residual of aC_0 + bf - ΣE_i.
    Invariants {
        #[arg(short = 'a', allow_negative_numbers = true)]
        a: i64,
        #[arg(short = 'b', allow_negative_numbers = true)]
        b: i64,
        #[arg(short = 'n')]
        n: i64,
        #[arg(short = 'r')]
        r: i64,
    },
    /// Table of numerical possibilities for a-ruled surfaces.
    Ruled {
        #[arg(short = 'a', allow_negative_numbers = true)]
        a: i64,
    },
    /// Candidates for linear systems with simple base points on F_n.
    FnSystems,
    /// Brute-force box enumeration cross-checked against the sieve.
    Oracle {
        /// Minimum degree (overrides the default of 13).
        #[arg(long)]
        d_min: Option<i64>,
    },
    /// Recompute every published claim and compare.
    VerifyPaper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRanges {
    pub a: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
}

pub fn parse_interval(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lower bound {lo:?}: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad upper bound {hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty interval {s:?}"));
    }
    Ok(lo..=hi)
}

pub fn parse_box(s: &str) -> Result<BoxRanges, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four intervals a,b,n,r, got {}", parts.len()));
    }
    let mut ranges = Vec::with_capacity(4);
    for (part, name) in parts.iter().zip(["a", "b", "n", "r"]) {
        let body = match part.split_once('=') {
            Some((key, body)) if key.trim() == name => body,
            Some((key, _)) => return Err(format!("expected {name}=..., got {key}=")),
            None => part,
        };
        ranges.push(parse_interval(body)?);
    }
    let r = ranges.pop().unwrap();
    let n = ranges.pop().unwrap();
    let b = ranges.pop().unwrap();
    let a = ranges.pop().unwrap();
    Ok(BoxRanges { a, b, n, r })
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(stderr: String) -> Self {
        Self { stdout: String::new(), stderr, code: EXIT_USAGE }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::usage(text),
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Invariants { a, b, n, r } => cmd_invariants(*a, *b, *n, *r, cli.format),
        Command::Ruled { a } => cmd_ruled(*a, cli.format),
        Command::FnSystems => cmd_fn_systems(cli),
        Command::Oracle { d_min } => cmd_oracle(cli, *d_min),
        Command::VerifyPaper => cmd_verify_paper(&Targets::default(), cli.format),
    };
    result.unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")))
}

type CmdResult = Result<Outcome, p4surf_core::Error>;

pub fn cmd_invariants(a: i64, b: i64, n: i64, r: i64, format: Format) -> CmdResult {
    let inv = NumericalInvariants::of_simple_system(a, b, n, r)?;
    let mut t = Table::new(vec!["d", "pi", "k_squared", "chi", "dp_residual"]);
    t.push([inv.d, inv.pi, inv.k_squared, inv.chi, inv.dp_residual].iter().map(i64::to_string).collect());
    Ok(Outcome::ok(match format {
        Format::Json => json(&inv),
        Format::Csv => t.to_csv(),
        Format::Table => t.to_text(),
    }))
}

fn snake<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

pub fn cmd_ruled(a: i64, format: Format) -> CmdResult {
    let records = classify_ruled(a)?;
    if format == Format::Json {
        return Ok(Outcome::ok(json(&records)));
    }
    let mut t = Table::new(vec!["a", "d", "pi", "branch", "verdict", "reasons"]);
    for r in &records {
        t.push(vec![
            r.a.to_string(),
            r.d.to_string(),
            opt(r.pi),
            snake(&r.branch),
            snake(&r.verdict),
            join_tags(&r.reasons),
        ]);
    }
    Ok(Outcome::ok(match format {
        Format::Csv => t.to_csv(),
        _ => t.to_text(),
    }))
}

fn solutions_cell(c: &p4surf_core::FnCandidate) -> String {
    c.b_solutions.iter().map(|s| format!("({},{},{})", s.n, s.b, s.r)).collect::<Vec<_>>().join(" ")
}

fn fn_table(class: &FnClassification) -> Table {
    let mut t = Table::new(vec!["a", "d", "f_value", "divisibility_ok", "pi", "verdict", "n_b_r", "reasons"]);
    for c in &class.candidates {
        t.push(vec![
            c.a.to_string(),
            c.d.to_string(),
            c.f_value.to_string(),
            c.divisibility_ok.to_string(),
            opt(c.pi),
            snake(&c.verdict),
            solutions_cell(c),
            join_tags(&c.reasons),
        ]);
    }
    t
}

pub fn cmd_fn_systems(cli: &Cli) -> CmdResult {
    let opts = FnOptions { strict: cli.strict, n_window: cli.n_window.clone(), ..FnOptions::default() };
    let class = classify_fn_systems(&opts)?;
    let table = fn_table(&class);
    let out = match cli.format {
        Format::Json => json(&class),
        Format::Csv => table.to_csv(),
        Format::Table => {
            let mut s = table.to_text();
            s.push('\n');
            for b in &class.delegated {
                let _ = writeln!(s, "a = {}: d <= {} ({})", b.a, b.max_degree, b.source.tag);
            }
            let sum = &class.summary;
            let _ = writeln!(
                s,
                "a >= 10: no candidates (f_a > 0 checked for a <= {}: {})",
                sum.lemma8_a_max, sum.lemma8_holds
            );
            if sum.boundary_zeros.is_empty() {
                let _ = writeln!(s, "strict and non-strict enumerations coincide (no f_a(d) = 0)");
            }
            let _ = writeln!(s, "surviving d > 12: {:?}", sum.surviving_above_12);
            let _ = writeln!(s, "max degree = {}", sum.max_degree);
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn search_box(cli: &Cli, d_min: Option<i64>) -> SearchBox {
    let mut bx = SearchBox::default();
    if let Some(r) = &cli.search_box {
        bx.a = r.a.clone();
        bx.b = r.b.clone();
        bx.n = r.n.clone();
        bx.r = r.r.clone();
    }
    if let Some(d) = d_min {
        bx.d_min = d;
    }
    bx
}

#[derive(Serialize)]
struct OracleOutput<'a> {
    tuples: Vec<p4surf_core::OracleTuple>,
    cross_validation: &'a p4surf_core::CrossValidation,
}

pub fn cmd_oracle(cli: &Cli, d_min: Option<i64>) -> CmdResult {
    let bx = search_box(cli, d_min);
    let tuples = oracle_enumerate(&bx)?;
    let cv = cross_validate(&bx)?;
    let code = if cv.status == Status::Pass { EXIT_OK } else { EXIT_FAIL };

    let mut stderr = String::new();
    for w in &cv.coverage_warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    for w in &cv.warnings {
        let t = w.tuple;
        let _ = writeln!(
            stderr,
            "warning: box may be clipped: ({},{},{},{}) passes on face {}",
            t.a,
            t.b,
            t.n,
            t.r,
            w.faces.join("+")
        );
    }

    let mut table = Table::new(vec!["a", "b", "n", "r", "d", "pi"]);
    for t in &tuples {
        table.push([t.a, t.b, t.n, t.r, t.d, t.pi].iter().map(i64::to_string).collect());
    }
    let stdout = match cli.format {
        Format::Json => {
            json(&OracleOutput { tuples: tuples.iter().copied().collect(), cross_validation: &cv })
        }
        Format::Csv => table.to_csv(),
        Format::Table => {
            let mut s = table.to_text();
            s.push('\n');
            let _ = writeln!(s, "tuples: {}", cv.tuples_checked);
            let _ = writeln!(s, "(a, d) with d > 12: {:?}", cv.above_12);
            if !cv.oracle_only.is_empty() || !cv.sieve_only.is_empty() || !cv.beyond_sieve.is_empty() {
                let _ = writeln!(s, "oracle only: {:?}", cv.oracle_only);
                let _ = writeln!(s, "sieve only: {:?}", cv.sieve_only);
                let _ = writeln!(s, "a >= 10 hits: {}", cv.beyond_sieve.len());
            }
            let _ = writeln!(s, "cross-validation: {}", snake(&cv.status));
            s
        }
    };
    Ok(Outcome { stdout, stderr, code })
}

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut t = Table::new(vec!["claim_id", "status", "expected", "computed", "citation"]);
    for e in &report.entries {
        t.push(vec![
            e.claim_id.clone(),
            snake(&e.status),
            e.expected.clone(),
            e.computed.clone(),
            e.citation.clone(),
        ]);
    }
    match format {
        Format::Csv => t.to_csv(),
        _ => {
            let mut s = t.to_text();
            let _ = writeln!(
                s,
                "\n{}/{} PASS, {} FAIL",
                report.summary.passed, report.summary.total, report.summary.failed
            );
            s
        }
    }
}

/// Runs the reproduction suite against `targets`; exit 1 on any failure.
pub fn cmd_verify_paper(targets: &Targets, format: Format) -> CmdResult {
    let report = verify_paper_with(targets)?;
    let code = if report.all_pass() { EXIT_OK } else { EXIT_FAIL };
    Ok(Outcome { stdout: render_report(&report, format), stderr: String::new(), code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        assert_eq!(parse_interval("0..9"), Ok(0..=9));
        assert_eq!(parse_interval("-3..=4"), Ok(-3..=4));
        assert!(parse_interval("5..1").is_err());
        assert!(parse_interval("5").is_err());
    }

    #[test]
    fn boxes() {
        let want = BoxRanges { a: 3..=9, b: 0..=60, n: 0..=6, r: 0..=120 };
        assert_eq!(parse_box("3..9,0..60,0..6,0..120"), Ok(want.clone()));
        assert_eq!(parse_box("a=3..9,b=0..60,n=0..6,r=0..120"), Ok(want));
        assert!(parse_box("3..9,0..60").is_err());
        assert!(parse_box("b=3..9,0..60,0..6,0..120").is_err());
    }
}
