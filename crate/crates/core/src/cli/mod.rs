//! The `quintsect` command line.
//!
//! Exit codes: 0 success or pass, 2 bad input or unknown case, 3 outside the
//! domain or not evaluable, 4 no convergence, 5 identity failed, 6 I/O.

pub mod parse;
pub mod table;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::catalog::{self, default_records, find_case, verify_case, CaseStatus, CatalogError};
use crate::hypergeom::{
    classify_fox_wright, classify_pfq, eval_fox_wright, eval_fox_wright_normalized, eval_pfq, ConvergenceDiagnostics,
    HypergeomError,
};
use crate::identity::{check_identity, IdentityResidual, SeriesSpec, TheoremId, TheoremInstance, Verdict};
use crate::numerics::{relative_residual, ComplexValue};
use crate::series::{SeriesEvaluation, ToleranceConfig};

use parse::{parse_complex, parse_expr, parse_fox_wright_spec, parse_pfq_spec, parse_real, Expr};
use table::{Format, RowBuilder, Table};

pub const MAX_TERMS_ENV: &str = "QUINTSECT_MAX_TERMS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("unknown case '{0}'")]
    UnknownCase(String),
    #[error("{0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    NotConverged(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::UnknownCase(_) => 2,
            CliError::Domain(_) => 3,
            CliError::NotConverged(_) => 4,
            CliError::Io(_) => 6,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<HypergeomError> for CliError {
    fn from(e: HypergeomError) -> Self {
        match e {
            HypergeomError::SpecInvalid(m) => CliError::Parse(m),
            e @ HypergeomError::NotSummable(_) => CliError::Domain(e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownCase(id) => CliError::UnknownCase(id),
            CatalogError::UnknownFunction(_) | CatalogError::Parse { .. } => CliError::Parse(e.to_string()),
            CatalogError::Domain(m) => CliError::Domain(m),
            CatalogError::NotConverged(s) => CliError::NotConverged(s.to_string()),
            CatalogError::Hypergeom(h) => h.into(),
            CatalogError::Io(io) => io.into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "quintsect", version, about = "Hypergeometric series and their fifth-root multisections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; inferred from the --out extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Relative truncation tolerance of every series.
    #[arg(long, global = true)]
    pub series_tol: Option<f64>,
    /// Term cap; overrides QUINTSECT_MAX_TERMS.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate `pfq A;B @ z`, `psi (a:A),..;(b:B),.. @ z`, `psistar ...` or `fn NAME[:p] @ x`.
    Eval {
        /// Use the independent oracle for `fn` instead of the series representation.
        #[arg(long)]
        oracle: bool,
        #[arg(required = true, num_args = 1.., trailing_var_arg = true, allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Check one catalog case or one theorem instance at a point.
    Verify(VerifyArgs),
    /// Run every catalog case at its sample points.
    VerifyAll {
        /// Identity tolerance on the relative residual.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Catalog file (JSON lines); the built-in catalog when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Also write the catalog back with measured statuses.
        #[arg(long)]
        dump_catalog: Option<PathBuf>,
    },
    /// Evaluate a case on a uniform grid with inclusive endpoints.
    Sweep {
        #[arg(long)]
        case: String,
        #[arg(long, allow_hyphen_values = true)]
        x_min: String,
        #[arg(long, allow_hyphen_values = true)]
        x_max: String,
        #[arg(long)]
        steps: usize,
        /// Case parameter (gamma or a).
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Convergence classification of a series expression without summing it.
    Diagnose {
        #[arg(required = true, num_args = 1.., trailing_var_arg = true, allow_hyphen_values = true)]
        expr: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["theorem", "spec", "c"])]
    pub case: Option<String>,
    #[arg(long, requires_all = ["spec", "c"])]
    pub theorem: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub spec: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Case parameter (gamma or a).
    #[arg(long, allow_hyphen_values = true)]
    pub param: Option<String>,
    /// Identity tolerance on the relative residual.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

/// What a command produced: the rendered table and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub table: Table,
    pub exit_code: u8,
    /// Short line for stderr, e.g. the reason a side was not evaluable.
    pub message: Option<String>,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Self { table, exit_code: 0, message: None }
    }
}

pub fn tolerance(cli: &Cli) -> Result<ToleranceConfig, CliError> {
    let mut tol = ToleranceConfig::default();
    let env_max = match std::env::var(MAX_TERMS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| CliError::Parse(format!("{MAX_TERMS_ENV}='{v}' is not a count")))?),
        Err(_) => None,
    };
    if let Some(m) = cli.max_terms.or(env_max) {
        tol = tol.with_max_terms(m).map_err(|e| CliError::Parse(e.to_string()))?;
    }
    if let Some(r) = cli.series_tol {
        tol = tol.with_rel_tol(r).map_err(|e| CliError::Parse(e.to_string()))?;
    }
    Ok(tol)
}

fn diagnostics_cells<'a>(row: RowBuilder<'a>, d: &ConvergenceDiagnostics) -> RowBuilder<'a> {
    let nan = ComplexValue::new(f64::NAN, f64::NAN);
    row.cell("classification", d.classification.label())
        .complex(("omega_re", "omega_im"), d.omega.unwrap_or(nan))
        .cell("delta_star", d.delta_star)
        .cell("delta_small_star", d.delta_small_star)
        .complex(("mu_star_re", "mu_star_im"), d.mu_star)
        .cell("sigma_star", d.sigma_star)
}

fn series_expr(expr: &Expr) -> Result<(String, &'static str, ConvergenceDiagnostics, ComplexValue), CliError> {
    match expr {
        Expr::Pfq(s, z) => Ok((s.to_string(), "pfq", classify_pfq(s, *z), *z)),
        Expr::Psi(s, z) => Ok((s.to_string(), "psi", classify_fox_wright(s, *z), *z)),
        Expr::PsiStar(s, z) => Ok((s.to_string(), "psistar", classify_fox_wright(s, *z), *z)),
        Expr::Function(..) => Err(CliError::Parse("diagnose takes pfq, psi or psistar expressions".into())),
    }
}

fn cmd_eval(expr: &[String], oracle: bool, tol: &ToleranceConfig) -> Result<Outcome, CliError> {
    let expr = parse_expr(&expr.join(" "))?;
    let mut t = Table::default();
    if let Expr::Function(f, x) = expr {
        let (value, method, oracle_value) = if oracle {
            (catalog::eval_oracle(f, x)?, "oracle", None)
        } else {
            (catalog::eval_by_representation(f, x, tol)?, "representation", catalog::eval_oracle(f, x).ok())
        };
        let row = t.row().cell("function", f.to_string()).cell("method", method).complex(("x_re", "x_im"), x);
        let row = row.complex(("value_re", "value_im"), value);
        let cross = oracle_value.map(|o| relative_residual(value, o));
        row.cell("oracle_residual", cross).finish();
        return Ok(Outcome::ok(t));
    }
    let (spec, kind, diag, z) = series_expr(&expr)?;
    let ev: SeriesEvaluation = match &expr {
        Expr::Pfq(s, z) => eval_pfq(s, *z, tol)?,
        Expr::Psi(s, z) => eval_fox_wright(s, *z, tol)?,
        Expr::PsiStar(s, z) => eval_fox_wright_normalized(s, *z, tol)?,
        Expr::Function(..) => unreachable!(),
    };
    if !ev.status.is_converged() {
        return Err(CliError::NotConverged(format!(
            "{kind} {spec} at z = {z}: {} after {} terms (partial sum {})",
            ev.status, ev.terms_used, ev.value
        )));
    }
    let row = t.row().cell("kind", kind).cell("spec", spec).complex(("z_re", "z_im"), z);
    let row = row
        .complex(("value_re", "value_im"), ev.value)
        .cell("terms_used", ev.terms_used)
        .cell("tail_estimate", ev.tail_estimate)
        .cell("status", ev.status.label())
        .cell("low_confidence", ev.low_confidence);
    diagnostics_cells(row, &diag).finish();
    Ok(Outcome::ok(t))
}

fn cmd_diagnose(expr: &[String]) -> Result<Outcome, CliError> {
    let expr = parse_expr(&expr.join(" "))?;
    let (spec, kind, diag, z) = series_expr(&expr)?;
    let mut t = Table::default();
    let row = t.row().cell("kind", kind).cell("spec", spec).complex(("z_re", "z_im"), z);
    diagnostics_cells(row.cell("summable", diag.classification.is_summable()), &diag).finish();
    Ok(Outcome::ok(t))
}

fn residual_row(t: &mut Table, label: (&'static str, String), x: ComplexValue, r: &IdentityResidual) {
    let nan = ComplexValue::new(f64::NAN, f64::NAN);
    t.row()
        .cell(label.0, label.1)
        .complex(("x_re", "x_im"), x)
        .complex(("lhs_re", "lhs_im"), r.lhs)
        .complex(("rhs_re", "rhs_im"), r.rhs)
        .cell("residual", r.residual)
        .cell("verdict", r.verdict.label())
        .complex(("ratio_re", "ratio_im"), r.ratio.unwrap_or(nan))
        .cell("note", r.note.clone())
        .finish();
}

fn verdict_outcome(t: Table, r: &IdentityResidual) -> Outcome {
    let exit_code = match r.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 5,
        Verdict::NotEvaluable => 3,
    };
    let message = (r.verdict != Verdict::Pass).then(|| match &r.note {
        Some(n) => format!("{}: {n}", r.verdict),
        None => format!("{}: residual {}", r.verdict, table::fmt_num(r.residual)),
    });
    Outcome { table: t, exit_code, message }
}

fn case_with_param(id: &str, param: Option<&str>) -> Result<catalog::ApplicationCase, CliError> {
    let case = find_case(id)?;
    match param {
        None => Ok(case),
        Some(_) if case.parameter().is_none() => Err(CliError::Parse(format!("case {id} takes no parameter"))),
        Some(p) => Ok(case.with_parameter(parse_real(p)?)),
    }
}

fn cmd_verify(args: &VerifyArgs, tol: &ToleranceConfig) -> Result<Outcome, CliError> {
    let x = parse_complex(&args.x)?;
    let mut t = Table::default();
    if let Some(id) = &args.case {
        let case = case_with_param(id, args.param.as_deref())?;
        let r = verify_case(&case, x, tol, args.tol);
        residual_row(&mut t, ("case", case.case_id.to_string()), x, &r);
        return Ok(verdict_outcome(t, &r));
    }
    let (Some(theorem), Some(spec), Some(c)) = (&args.theorem, &args.spec, &args.c) else {
        return Err(CliError::Parse("verify needs --case, or --theorem with --spec and --c".into()));
    };
    let theorem: TheoremId = theorem.parse().map_err(|e: crate::identity::IdentityError| CliError::Parse(e.to_string()))?;
    let spec: String = spec.chars().filter(|ch| !ch.is_whitespace()).collect();
    let spec = if spec.contains('(') { SeriesSpec::FoxWright(parse_fox_wright_spec(&spec)?) } else { SeriesSpec::Pfq(parse_pfq_spec(&spec)?) };
    let inst = TheoremInstance::new(theorem, spec, parse_complex(c)?, x).map_err(|e| CliError::Parse(e.to_string()))?;
    let r = check_identity(&inst, tol, args.tol);
    residual_row(&mut t, ("theorem", theorem.label().to_string()), x, &r);
    Ok(verdict_outcome(t, &r))
}

fn cmd_verify_all(
    identity_tol: f64,
    catalog_path: Option<&Path>,
    dump: Option<&Path>,
    tol: &ToleranceConfig,
) -> Result<Outcome, CliError> {
    let records = match catalog_path {
        Some(p) => catalog::read_catalog(p)?,
        None => default_records(),
    };
    let report = catalog::verify_all(&records, tol, identity_tol)?;
    let mut t = Table::default();
    for row in &report.rows {
        let pick = |f: fn(&IdentityResidual) -> f64| row.points.iter().map(|p| f(&p.result)).collect::<Vec<_>>();
        t.row()
            .cell("case_id", row.case_id.as_str())
            .cell("printed_label", row.printed_label.as_str())
            .cell("function", row.function.to_string())
            .cell("status", row.status.label())
            .cell("sample_points", row.points.iter().map(|p| p.x).collect::<Vec<_>>())
            .cell("residuals", pick(|r| r.residual))
            .cell("ratio_re", pick(|r| r.ratio.map_or(f64::NAN, |z| z.re)))
            .cell("ratio_im", pick(|r| r.ratio.map_or(f64::NAN, |z| z.im)))
            .cell("note", row.note.clone())
            .finish();
    }
    if let Some(path) = dump {
        catalog::write_catalog(&catalog::records_from_report(&records, &report), path)?;
    }
    let unverified = report.count(CaseStatus::Unverified);
    let message = format!(
        "{} cases: {} verified, {} discrepant, {} unverified",
        report.rows.len(),
        report.count(CaseStatus::Verified),
        report.count(CaseStatus::Discrepant),
        unverified
    );
    Ok(Outcome { table: t, exit_code: if unverified > 0 { 3 } else { 0 }, message: Some(message) })
}

fn cmd_sweep(
    case: &str,
    bounds: (&str, &str),
    steps: usize,
    param: Option<&str>,
    identity_tol: f64,
    tol: &ToleranceConfig,
) -> Result<Outcome, CliError> {
    let case = case_with_param(case, param)?;
    let (lo, hi) = (parse_real(bounds.0)?, parse_real(bounds.1)?);
    if steps == 0 {
        return Err(CliError::Parse("--steps must be at least 1".into()));
    }
    let mut t = Table::default();
    let mut failing = 0;
    for i in 0..=steps {
        let x = if i == steps { hi } else { lo + (hi - lo) * i as f64 / steps as f64 };
        let r = verify_case(&case, ComplexValue::new(x, 0.0), tol, identity_tol);
        if r.verdict != Verdict::Pass {
            failing += 1;
        }
        t.row()
            .cell("x", x)
            .complex(("lhs_re", "lhs_im"), r.lhs)
            .complex(("rhs_re", "rhs_im"), r.rhs)
            .cell("residual", r.residual)
            .finish();
    }
    let message = (failing > 0).then(|| format!("{failing} of {} points did not pass at {identity_tol:e}", steps + 1));
    Ok(Outcome { table: t, exit_code: 0, message })
}

/// Runs the command without touching stdout or the output file.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let tol = tolerance(cli)?;
    match &cli.command {
        Command::Eval { oracle, expr } => cmd_eval(expr, *oracle, &tol),
        Command::Verify(args) => cmd_verify(args, &tol),
        Command::VerifyAll { tol: id_tol, catalog, dump_catalog } => {
            cmd_verify_all(*id_tol, catalog.as_deref(), dump_catalog.as_deref(), &tol)
        }
        Command::Sweep { case, x_min, x_max, steps, param, tol: id_tol } => {
            cmd_sweep(case, (x_min, x_max), *steps, param.as_deref(), *id_tol, &tol)
        }
        Command::Diagnose { expr } => cmd_diagnose(expr),
    }
}

/// Writes to a temporary file beside `path`, then renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e.error)))?;
    Ok(())
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let format = cli.format.unwrap_or_else(|| Format::infer(cli.out.as_deref()));
    let text = outcome.table.render(format);
    let written = match &cli.out {
        Some(path) => write_atomic(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(CliError::from),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    if let Some(m) = outcome.message {
        eprintln!("{m}");
    }
    outcome.exit_code
}
