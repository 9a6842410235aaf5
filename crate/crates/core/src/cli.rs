//! Command-line front end: `verify`, `eval` and `errata`.
//!
//! Exit codes: 0 success, 1 a gating identity mismatched at every
//! candidate, 2 an evaluation failed, 64 bad usage.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arithmetic::dirichlet_beta;
use crate::closed_forms::{self as cf, Candidate};
use crate::error::{Error, Result};
use crate::eta_series::{eta3_scaled, eta6_scaled, eta_product, eta_scaled12};
use crate::report::{timestamp, write_csv, ReportDocument};
use crate::verify::{self, GridOverride, Selection, SuiteOutcome, Verdict, DEFAULT_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Cases the errata command compares.
pub const ERRATA_CASES: [&str; 5] = ["glaisher-3.5", "thm1.1-sin", "thm1.2-sin", "thm1.3", "thm3.1"];

#[derive(Debug, Parser)]
#[command(name = "etaverify", version, about = "Verify eta-function integral identities numerically")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run identity cases over their parameter grids
    Verify(VerifyArgs),
    /// Evaluate a single function
    Eval(EvalArgs),
    /// Compare printed and derived right-hand sides
    Errata(ErrataArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Case id, or `all`; repeatable
    #[arg(long = "case", default_value = "all")]
    cases: Vec<String>,
    /// Absolute verdict tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Replace one grid axis, e.g. `c=0.5,1`; repeatable
    #[arg(long = "grid")]
    grid: Vec<String>,
    /// Only print the summary
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Eta,
    Eta3,
    Eta6,
    Eta12,
    Beta,
    Ab,
    Rhs11sin,
    Rhs11cos,
    Thm31lhs,
    Thm31rhs,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    function: Function,
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = CandidateArg::Printed)]
    candidate: CandidateArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CandidateArg {
    Printed,
    Derived,
}

impl From<CandidateArg> for Candidate {
    fn from(c: CandidateArg) -> Self {
        match c {
            CandidateArg::Printed => Candidate::Printed,
            CandidateArg::Derived => Candidate::Derived,
        }
    }
}

#[derive(Debug, Args)]
struct ErrataArgs {
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Errata(a) => cmd_errata(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Eval(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

enum CliError {
    Usage(String),
    Eval(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } => CliError::Eval(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn io_failure(what: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Eval(format!("{what}: {e}"))
}

fn check_tol(tol: f64) -> std::result::Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--tol must be positive, got {tol}")))
    }
}

fn selection(cases: &[String]) -> Selection {
    if cases.iter().any(|c| c == "all") {
        Selection::All
    } else {
        Selection::Ids(cases.to_vec())
    }
}

fn point_text(point: &verify::Point) -> String {
    point.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<i32, CliError> {
    check_tol(a.tol)?;
    let overrides = a
        .grid
        .iter()
        .map(|g| g.parse::<GridOverride>())
        .collect::<Result<Vec<_>>>()?;
    let outcome = verify::run_suite(&selection(&a.cases), a.tol, &overrides)?;
    if !a.quiet {
        print_reports(&outcome, out);
    }
    for f in &outcome.failures {
        let _ = writeln!(err, "evaluation failure: {f}");
    }
    let s = &outcome.summary;
    let _ = writeln!(
        out,
        "cases={} points={} match={} match_both={} printed_only={} derived_only={} mismatch_all={} inconclusive={} failures={}",
        s.cases,
        s.points,
        s.matched,
        s.match_both,
        s.match_printed_only,
        s.match_derived_only,
        s.mismatch_all,
        s.inconclusive,
        s.failures
    );
    if a.json.is_some() || a.csv.is_some() {
        write_outputs(&outcome, a.json.as_ref(), a.csv.as_ref())?;
    }
    Ok(s.exit_code)
}

fn print_reports(outcome: &SuiteOutcome, out: &mut dyn Write) {
    for r in &outcome.reports {
        let residuals = r
            .candidates
            .iter()
            .map(|c| format!("{}={:.3e}", c.label.label(), c.residual))
            .collect::<Vec<_>>()
            .join(" ");
        let tag = if r.gating { "" } else { " (diagnostic)" };
        let _ = writeln!(out, "{:<13} {:<22} {:<18} {residuals}{tag}", r.case_id, point_text(&r.point), r.verdict);
    }
}

fn write_outputs(
    outcome: &SuiteOutcome,
    json: Option<&PathBuf>,
    csv: Option<&PathBuf>,
) -> std::result::Result<(), CliError> {
    if let Some(path) = json {
        let doc = ReportDocument::new(outcome, timestamp());
        let text = doc.to_json().map_err(|e| io_failure("serializing report", e))?;
        std::fs::write(path, text + "\n").map_err(|e| io_failure(&path.display().to_string(), e))?;
    }
    if let Some(path) = csv {
        let file = File::create(path).map_err(|e| io_failure(&path.display().to_string(), e))?;
        write_csv(&outcome.reports, BufWriter::new(file)).map_err(|e| io_failure(&path.display().to_string(), e))?;
    }
    Ok(())
}

fn need(v: Option<f64>, flag: &str) -> std::result::Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this function")))
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    check_tol(a.tol)?;
    let cand: Candidate = a.candidate.into();
    let (label, value, bound) = match a.function {
        Function::Ab => {
            let (b, c) = (need(a.b, "b")?, need(a.c, "c")?);
            let p = cf::ab_pair(b, c)?;
            let _ = writeln!(out, "ab b={b} c={c} A={:.16e} B={:.16e}", p.a, p.b);
            return Ok(EXIT_OK);
        }
        Function::Eta => {
            let y = need(a.y, "y")?;
            let r = eta_product(y, a.tol)?;
            (format!("eta y={y}"), r.value, r.tail_bound)
        }
        Function::Eta3 => {
            let x = need(a.x, "x")?;
            let r = eta3_scaled(x, a.tol)?;
            (format!("eta3 x={x}"), r.value, r.tail_bound)
        }
        Function::Eta6 => {
            let x = need(a.x, "x")?;
            let r = eta6_scaled(x, a.tol)?;
            (format!("eta6 x={x}"), r.value, r.tail_bound)
        }
        Function::Eta12 => {
            let x = need(a.x, "x")?;
            let r = eta_scaled12(x, a.tol)?;
            (format!("eta12 x={x}"), r.value, r.tail_bound)
        }
        Function::Beta => {
            let s = need(a.s, "s")?;
            let r = dirichlet_beta(s, a.tol)?;
            (format!("beta s={s}"), r.value, r.tail_bound)
        }
        Function::Rhs11sin => {
            let (b, c) = (need(a.b, "b")?, need(a.c, "c")?);
            let v = cf::rhs_thm11_sin(b, c, cand)?;
            (format!("rhs11sin b={b} c={c} candidate={}", cand.label()), v, 0.0)
        }
        Function::Rhs11cos => {
            let (b, c) = (need(a.b, "b")?, need(a.c, "c")?);
            let v = cf::rhs_thm11_cos(b, c)?;
            (format!("rhs11cos b={b} c={c}"), v, 0.0)
        }
        Function::Thm31lhs => {
            let z = need(a.z, "z")?;
            let r = cf::thm31_lhs(z, a.tol)?;
            (format!("thm31lhs z={z}"), r.value, r.tail_bound)
        }
        Function::Thm31rhs => {
            let z = need(a.z, "z")?;
            let r = cf::thm31_rhs(z, a.tol, cand)?;
            (format!("thm31rhs z={z} candidate={}", cand.label()), r.value, r.tail_bound)
        }
    };
    let _ = writeln!(out, "{label} value={value:.16e} err<={bound:.16e}");
    Ok(EXIT_OK)
}

/// Per-case conclusion of the errata comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finding {
    PrintedConfirmed,
    DerivedConfirmed,
    Both,
    Unresolved,
}

impl Finding {
    pub fn as_str(self) -> &'static str {
        match self {
            Finding::PrintedConfirmed => "PRINTED_CONFIRMED",
            Finding::DerivedConfirmed => "DERIVED_CONFIRMED",
            Finding::Both => "BOTH",
            Finding::Unresolved => "UNRESOLVED",
        }
    }
}

/// `MATCH_BOTH` points are degenerate and skipped; the remaining points
/// must agree on a single candidate.
pub fn finding(verdicts: &[Verdict]) -> Finding {
    let informative: Vec<_> = verdicts.iter().filter(|v| **v != Verdict::MatchBoth).collect();
    if informative.is_empty() {
        return if verdicts.is_empty() { Finding::Unresolved } else { Finding::Both };
    }
    if informative.iter().all(|v| **v == Verdict::MatchPrintedOnly) {
        Finding::PrintedConfirmed
    } else if informative.iter().all(|v| **v == Verdict::MatchDerivedOnly) {
        Finding::DerivedConfirmed
    } else {
        Finding::Unresolved
    }
}

fn cmd_errata(a: ErrataArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<i32, CliError> {
    check_tol(a.tol)?;
    if a.tol > 1e-5 {
        let _ = writeln!(err, "warning: tol {} is loose; candidates may both match at more points", a.tol);
    }
    let ids = ERRATA_CASES.iter().map(|s| s.to_string()).collect();
    let outcome = verify::run_suite(&Selection::Ids(ids), a.tol, &[])?;
    for id in ERRATA_CASES {
        let reports: Vec<_> = outcome.reports.iter().filter(|r| r.case_id == id).collect();
        for r in &reports {
            let res = |l| r.candidate(l).map(|c| c.residual).unwrap_or(f64::NAN);
            let _ = writeln!(
                out,
                "{id} {} printed={:.3e} derived={:.3e} {}",
                point_text(&r.point),
                res(Candidate::Printed),
                res(Candidate::Derived),
                r.verdict
            );
        }
        let verdicts: Vec<_> = reports.iter().map(|r| r.verdict).collect();
        let _ = writeln!(out, "finding {id}: {}", finding(&verdicts).as_str());
    }
    for f in &outcome.failures {
        let _ = writeln!(err, "evaluation failure: {f}");
    }
    Ok(if outcome.failures.is_empty() { EXIT_OK } else { EXIT_FAILURE })
}
