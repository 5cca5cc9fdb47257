//! Grammar for numbers and series expressions on the command line.
//!
//! ```text
//! number   := decimal | int/int
//! complex  := number [, number]
//! list     := number {, number}          (may be empty)
//! wlist    := (number:number) {, (number:number)}
//! expr     := pfq list;list @ complex
//!           | psi wlist;wlist @ complex
//!           | psistar wlist;wlist @ complex
//!           | fn NAME[:number] @ complex
//! ```
//!
//! A `pfq` numerator list may be replaced by its `pFq` tag when empty, so
//! `0F1;1.5` reads as `pFq[; 1.5]`.

use crate::catalog::SpecialFunctionId;
use crate::hypergeom::{FoxWrightSpec, PfqSpec, WeightedParam};
use crate::numerics::ComplexValue;

use super::CliError;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// A decimal or a ratio of two decimals, e.g. `-0.25`, `1/3`.
pub fn parse_real(s: &str) -> Result<f64, CliError> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| bad(format!("bad number '{s}'")))?;
            let d: f64 = d.trim().parse().map_err(|_| bad(format!("bad number '{s}'")))?;
            if d == 0.0 {
                return Err(bad(format!("zero denominator in '{s}'")));
            }
            n / d
        }
        None => s.parse().map_err(|_| bad(format!("bad number '{s}'")))?,
    };
    if !v.is_finite() {
        return Err(bad(format!("non-finite number '{s}'")));
    }
    Ok(v)
}

/// `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<ComplexValue, CliError> {
    match s.split_once(',') {
        Some((re, im)) => Ok(ComplexValue::new(parse_real(re)?, parse_real(im)?)),
        None => Ok(ComplexValue::new(parse_real(s)?, 0.0)),
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_real).collect()
}

fn pfq_tag(s: &str) -> Option<(usize, usize)> {
    let (p, q) = s.trim().split_once(['F', 'f'])?;
    Some((p.parse().ok()?, q.parse().ok()?))
}

/// `a1,a2;b1`, or `pFq;b1,..` when there are no numerator parameters.
pub fn parse_pfq_spec(s: &str) -> Result<PfqSpec, CliError> {
    let (num, den) = s.split_once(';').ok_or_else(|| bad(format!("expected ';' in '{s}'")))?;
    let den = parse_list(den)?;
    let num = match pfq_tag(num) {
        Some((p, q)) => {
            if p != 0 || q != den.len() {
                return Err(bad(format!("tag {p}F{q} does not match an empty numerator and {} denominators", den.len())));
            }
            Vec::new()
        }
        None => parse_list(num)?,
    };
    PfqSpec::real(&num, &den).map_err(|e| bad(e.to_string()))
}

fn parse_weighted_list(s: &str) -> Result<Vec<WeightedParam>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s;
    loop {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| bad(format!("expected '(value:weight)' in '{s}'")))?;
        let (pair, tail) = body;
        let (v, w) = pair.split_once(':').ok_or_else(|| bad(format!("expected ':' in '({pair})'")))?;
        out.push(WeightedParam::real(parse_real(v)?, parse_real(w)?));
        let tail = tail.trim_start();
        if tail.is_empty() {
            return Ok(out);
        }
        rest = tail.strip_prefix(',').ok_or_else(|| bad(format!("expected ',' between pairs in '{s}'")))?.trim_start();
    }
}

/// `(a1:A1),..;(b1:B1),..`
pub fn parse_fox_wright_spec(s: &str) -> Result<FoxWrightSpec, CliError> {
    let (num, den) = s.split_once(';').ok_or_else(|| bad(format!("expected ';' in '{s}'")))?;
    FoxWrightSpec::new(parse_weighted_list(num)?, parse_weighted_list(den)?).map_err(|e| bad(e.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Pfq(PfqSpec, ComplexValue),
    Psi(FoxWrightSpec, ComplexValue),
    PsiStar(FoxWrightSpec, ComplexValue),
    Function(SpecialFunctionId, ComplexValue),
}

/// Parses one expression. Whitespace is insignificant apart from
/// separating the leading keyword.
pub fn parse_expr(s: &str) -> Result<Expr, CliError> {
    let s = s.trim();
    let (kw, rest) = s.split_once(char::is_whitespace).ok_or_else(|| bad(format!("expected 'KIND ... @ z', got '{s}'")))?;
    let (body, z) = rest.rsplit_once('@').ok_or_else(|| bad(format!("missing '@ z' in '{s}'")))?;
    let z = parse_complex(&z.replace(char::is_whitespace, ""))?;
    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    match kw {
        "pfq" => Ok(Expr::Pfq(parse_pfq_spec(&body)?, z)),
        "psi" => Ok(Expr::Psi(parse_fox_wright_spec(&body)?, z)),
        "psistar" => Ok(Expr::PsiStar(parse_fox_wright_spec(&body)?, z)),
        "fn" => Ok(Expr::Function(body.parse().map_err(|e: crate::catalog::CatalogError| bad(e.to_string()))?, z)),
        other => Err(bad(format!("unknown expression kind '{other}' (pfq, psi, psistar, fn)"))),
    }
}
