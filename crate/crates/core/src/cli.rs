//! The `hfusion` command line.
//!
//! Exit codes: 0 when every check passes, 1 on a verification mismatch,
//! 2 on a usage error. JSON output is deterministic (sorted keys, exact
//! rational text) and carries `"schema": 1`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::groebner::localize_artinian;
use crate::ideal::{potential, potential_derivative_check, FunctorSpec, IdealPresentation};
use crate::koszul::{default_window, regseq1_check, regseq2_check, truncated_koszul_cohomology};
use crate::poly::format_rational;
use crate::verlinde::{compare_with_quotient, fusion_algebra};

pub const SCHEMA: u32 = 1;
pub const THREADS_ENV: &str = "HFUSION_THREADS";

#[derive(Parser, Debug)]
#[command(name = "hfusion", version, about = "Higher fusion ideals of SU(n): generators, quotients and cross-checks")]
pub struct Cli {
    /// Rank n of SU(n); required with --functor.
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Coefficients of F(t), lowest degree first, e.g. "1,0,-1/2".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub functor: Option<String>,
    /// Shorthand "n,k" for F(t) = (-t)^(n+k).
    #[arg(long, global = true)]
    pub classical: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Total-degree window "lo,hi" for the Koszul complex.
    #[arg(long, global = true)]
    pub degree_window: Option<String>,
    /// Run over every spec listed in this file.
    #[arg(long, global = true)]
    pub grid: Option<PathBuf>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// The generators q_i, c_F,j and their elementary-basis forms.
    Generators,
    /// The potential V and the derivative identity.
    Potential,
    /// Groebner basis, quotient algebra and its localization.
    Quotient,
    /// Fusion table against the quotient (classical specs only).
    Verlinde,
    /// Regular sequences and truncated Koszul cohomology.
    Koszul,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Generators => "generators",
            Command::Potential => "potential",
            Command::Quotient => "quotient",
            Command::Verlinde => "verlinde",
            Command::Koszul => "koszul",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// One functor spec as requested on the command line or in a grid file.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecRequest {
    Classical { n: usize, k: usize },
    Functor { rank: usize, coefficients: String },
}

impl SpecRequest {
    pub fn build(&self) -> Result<FunctorSpec, Error> {
        match self {
            SpecRequest::Classical { n, k } => FunctorSpec::classical(*n, *k),
            SpecRequest::Functor { rank, coefficients } => FunctorSpec::from_coefficients(*rank, coefficients),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub specs: Vec<SpecRequest>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub window: Option<(i64, i64)>,
    pub verbosity: u8,
}

#[derive(Debug)]
pub struct UsageError(pub String);

fn parse_pair<T: std::str::FromStr>(text: &str, what: &str) -> Result<(T, T), UsageError> {
    let bad = || UsageError(format!("{what} expects \"a,b\", got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Parses one grid line: `classical N,K` or `rank N functor C0,C1,..`.
pub fn parse_grid_line(line: &str) -> Result<SpecRequest, UsageError> {
    let words: Vec<&str> = line.split_whitespace().collect();
    match words.as_slice() {
        ["classical", nk] => {
            let (n, k) = parse_pair(nk, "classical")?;
            Ok(SpecRequest::Classical { n, k })
        }
        ["rank", n, "functor", coeffs] => Ok(SpecRequest::Functor {
            rank: n.parse().map_err(|_| UsageError(format!("bad rank in grid line {line:?}")))?,
            coefficients: coeffs.to_string(),
        }),
        _ => Err(UsageError(format!("unrecognized grid line {line:?}"))),
    }
}

pub fn parse_grid(text: &str) -> Result<Vec<SpecRequest>, UsageError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_grid_line)
        .collect()
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, UsageError> {
        let specs = if let Some(path) = &cli.grid {
            if cli.functor.is_some() || cli.classical.is_some() {
                return Err(UsageError("--grid cannot be combined with --functor or --classical".into()));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read grid {}: {e}", path.display())))?;
            let specs = parse_grid(&text)?;
            if specs.is_empty() {
                return Err(UsageError(format!("grid {} lists no specs", path.display())));
            }
            specs
        } else {
            match (&cli.functor, &cli.classical) {
                (Some(_), Some(_)) => return Err(UsageError("give either --functor or --classical, not both".into())),
                (None, None) => return Err(UsageError("one of --functor, --classical or --grid is required".into())),
                (Some(f), None) => {
                    let rank = cli.rank.ok_or_else(|| UsageError("--functor needs --rank".into()))?;
                    vec![SpecRequest::Functor {
                        rank,
                        coefficients: f.clone(),
                    }]
                }
                (None, Some(c)) => {
                    let (n, k) = parse_pair(c, "--classical")?;
                    if cli.rank.is_some_and(|r| r != n) {
                        return Err(UsageError(format!("--rank {} disagrees with --classical {c}", cli.rank.unwrap())));
                    }
                    vec![SpecRequest::Classical { n, k }]
                }
            }
        };
        if cli.command == Command::Verlinde && specs.iter().any(|s| !matches!(s, SpecRequest::Classical { .. })) {
            return Err(UsageError("verlinde needs classical specs".into()));
        }
        let window = cli
            .degree_window
            .as_deref()
            .map(|w| parse_pair::<i64>(w, "--degree-window"))
            .transpose()?;
        if let Some((lo, hi)) = window {
            if lo < 0 || lo > hi {
                return Err(UsageError(format!("--degree-window needs 0 <= lo <= hi, got {lo},{hi}")));
            }
        }
        Ok(RunConfig {
            command: cli.command,
            specs,
            out: cli.out.clone(),
            format: cli.format,
            window,
            verbosity: cli.verbose,
        })
    }
}

/// Outcome for one spec.
#[derive(Clone, Debug)]
pub struct SpecOutcome {
    pub report: Value,
    pub pass: bool,
    /// Set when the spec itself was unusable.
    pub usage_error: bool,
}

fn failed(e: &Error) -> SpecOutcome {
    let usage = matches!(e, Error::InvalidSpec(_) | Error::Parse(_) | Error::Domain(_));
    SpecOutcome {
        report: json!({ "error": e.to_string() }),
        pass: false,
        usage_error: usage,
    }
}

fn run_generators(spec: &FunctorSpec) -> Result<(Value, bool), Error> {
    let pres = IdealPresentation::build(spec)?;
    let texts = |ps: &[crate::poly::MPoly]| ps.iter().map(|p| p.to_text("t")).collect::<Vec<_>>();
    Ok((
        json!({
            "antisymmetric": texts(&pres.antisym),
            "symmetric": texts(&pres.sym),
            "elementary": pres.elem.iter().map(|e| e.to_text()).collect::<Vec<_>>(),
            "unit_ideal": pres.is_unit_ideal(),
        }),
        pres.check().is_ok(),
    ))
}

fn run_potential(spec: &FunctorSpec) -> Result<(Value, bool), Error> {
    let pot = potential(spec)?;
    let report = potential_derivative_check(spec)?;
    Ok((
        json!({
            "g": pot.g.coefficient_list(),
            "v": pot.power_sum_form.to_text("t"),
            "v_elementary": pot.elem_form.to_text(),
            "derivatives": report.entries.iter().map(|e| json!({
                "j": e.j,
                "variable": format!("c{}", e.k),
                "signed_derivative": e.signed_derivative.to_text(),
                "expected": e.expected.to_text(),
                "pass": e.pass,
            })).collect::<Vec<_>>(),
            "all_pass": report.all_pass(),
        }),
        report.all_pass(),
    ))
}

fn run_quotient(spec: &FunctorSpec) -> Result<(Value, bool), Error> {
    let (gb, algebra, _) = fusion_algebra(spec)?;
    let n = spec.rank();
    let product = (0..n).fold(crate::poly::MPoly::one(n), |acc, i| &acc * &spec.functor().in_variable(n, i));
    let u = crate::symm::to_elem_basis(&product)?.restricted();
    let loc = localize_artinian(&algebra, &u)?;
    let commute = algebra.matrices_commute() && loc.localized.matrices_commute();
    Ok((
        json!({
            "groebner_basis": gb.to_json("c"),
            "dimension": algebra.dimension(),
            "algebra": algebra.to_json("c"),
            "localization": {
                "inverted": u.to_text("c"),
                "kernel_dimension": loc.kernel.len(),
                "dimension": loc.localized.dimension(),
                "one": loc.localized.one().iter().map(format_rational).collect::<Vec<_>>(),
            },
            "matrices_commute": commute,
        }),
        commute,
    ))
}

fn run_verlinde(req: &SpecRequest) -> Result<(Value, bool), Error> {
    let SpecRequest::Classical { n, k } = req else {
        return Err(Error::Domain("verlinde needs a classical spec".into()));
    };
    let report = compare_with_quotient(*n, *k as u32)?;
    Ok((report.to_json(), report.pass()))
}

fn run_koszul(spec: &FunctorSpec, window: Option<(i64, i64)>) -> Result<(Value, bool), Error> {
    let r1 = regseq1_check(spec.rank(), spec.degree() as i32)?;
    let r2 = regseq2_check(spec)?;
    let window = window.unwrap_or_else(|| default_window(spec));
    let coh = truncated_koszul_cohomology(spec, window)?;
    let pass = r1.all_pass() && r2.all_pass() && coh.pass();
    Ok((
        json!({
            "regseq1": r1.to_json(),
            "regseq2": r2.to_json(),
            "cohomology": coh.to_json(),
            "all_pass": pass,
        }),
        pass,
    ))
}

pub fn run_spec(command: Command, req: &SpecRequest, window: Option<(i64, i64)>) -> SpecOutcome {
    let spec = match req.build() {
        Ok(s) => s,
        Err(e) => return failed(&e),
    };
    let result = match command {
        Command::Generators => run_generators(&spec),
        Command::Potential => run_potential(&spec),
        Command::Quotient => run_quotient(&spec),
        Command::Verlinde => run_verlinde(req),
        Command::Koszul => run_koszul(&spec, window),
    };
    match result {
        Ok((body, pass)) => {
            let mut report = json!({
                "spec": spec.label(),
                "rank": spec.rank(),
                "functor": spec.functor().coefficient_list(),
                "pass": pass,
            });
            report["result"] = body;
            SpecOutcome {
                report,
                pass,
                usage_error: false,
            }
        }
        Err(e) => {
            let mut out = failed(&e);
            out.report["spec"] = json!(spec.label());
            out
        }
    }
}

fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or(1)
}

/// Runs every spec, in parallel when the thread variable asks for it;
/// results keep the input order.
pub fn run_all(cfg: &RunConfig, log: &mut dyn Write) -> Vec<SpecOutcome> {
    let threads = thread_count().min(cfg.specs.len()).max(1);
    let run_one = |req: &SpecRequest| {
        let start = Instant::now();
        (run_spec(cfg.command, req, cfg.window), start.elapsed())
    };
    let timed: Vec<_> = if threads == 1 {
        cfg.specs.iter().map(run_one).collect()
    } else {
        let chunk = cfg.specs.len().div_ceil(threads);
        std::thread::scope(|s| {
            let handles: Vec<_> = cfg
                .specs
                .chunks(chunk)
                .map(|reqs| s.spawn(move || reqs.iter().map(run_one).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    timed
        .into_iter()
        .zip(&cfg.specs)
        .map(|((outcome, elapsed), req)| {
            if cfg.verbosity > 0 {
                let _ = writeln!(
                    log,
                    "{} {:?}: {} in {:.2?}",
                    cfg.command.name(),
                    req,
                    if outcome.pass { "pass" } else { "FAIL" },
                    elapsed
                );
            }
            outcome
        })
        .collect()
}

pub fn assemble(cfg: &RunConfig, outcomes: &[SpecOutcome]) -> Value {
    let reports: Vec<Value> = outcomes.iter().map(|o| o.report.clone()).collect();
    let mut top = Map::new();
    top.insert("schema".into(), json!(SCHEMA));
    top.insert("command".into(), json!(cfg.command.name()));
    top.insert("pass".into(), json!(outcomes.iter().all(|o| o.pass)));
    if reports.len() == 1 {
        top.insert("report".into(), reports.into_iter().next().unwrap());
    } else {
        top.insert("reports".into(), Value::Array(reports));
    }
    Value::Object(top)
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!("[{}]", items.iter().map(|i| scalar_text(i).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar_text(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        _ => unreachable!(),
    }
}

/// Aligned `key  value` lines.
pub fn render_text(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        out.push_str(&format!("{k:<width$}  {val}\n"));
    }
    out
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("json values serialize") + "\n",
        Format::Text => render_text(v),
    }
}

/// Parses `args` (including the program name), runs, and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let outcomes = run_all(&cfg, stderr);
    let text = render(&assemble(&cfg, &outcomes), cfg.format);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 2;
    }
    if outcomes.iter().any(|o| o.usage_error) {
        for o in outcomes.iter().filter(|o| o.usage_error) {
            let _ = writeln!(stderr, "error: {}", o.report["error"].as_str().unwrap_or("invalid spec"));
        }
        2
    } else if outcomes.iter().all(|o| o.pass) {
        0
    } else {
        1
    }
}
