//! Both sides of the six hypergeometric multisection theorems, evaluated
//! independently and compared.
//!
//! The left side is always five directly summed series at the rotated
//! arguments `c (x alpha^k)^2`; the right side is one series with the
//! transformed parameter lists. Nothing is shared between the two except
//! the original spec.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergeom::{
    eval_fox_wright, eval_fox_wright_normalized, eval_pfq, FoxWrightSpec, HypergeomError, PfqSpec, WeightedParam,
};
use crate::numerics::{
    as_integer, fifth_root, is_nonpositive_integer, log_gamma, pochhammer, relative_residual, ComplexValue,
    PochhammerQuery, MULTISECTION_ORDER,
};
use crate::series::{SeriesEvaluation, SeriesStatus, ToleranceConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    PsiEven,
    PsiWeighted,
    PsistarEven,
    PsistarWeighted,
    PfqEven,
    PfqWeighted,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::PsiEven,
        TheoremId::PsiWeighted,
        TheoremId::PsistarEven,
        TheoremId::PsistarWeighted,
        TheoremId::PfqEven,
        TheoremId::PfqWeighted,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            TheoremId::PsiEven => "psi-even",
            TheoremId::PsiWeighted => "psi-weighted",
            TheoremId::PsistarEven => "psistar-even",
            TheoremId::PsistarWeighted => "psistar-weighted",
            TheoremId::PfqEven => "pfq-even",
            TheoremId::PfqWeighted => "pfq-weighted",
        }
    }

    /// Weighted variants multiply the k-th rotated copy by `alpha^k`.
    pub fn is_weighted(&self) -> bool {
        matches!(self, TheoremId::PsiWeighted | TheoremId::PsistarWeighted | TheoremId::PfqWeighted)
    }

    fn family(&self) -> Family {
        match self {
            TheoremId::PsiEven | TheoremId::PsiWeighted => Family::Psi,
            TheoremId::PsistarEven | TheoremId::PsistarWeighted => Family::PsiStar,
            TheoremId::PfqEven | TheoremId::PfqWeighted => Family::Pfq,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| IdentityError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Psi,
    PsiStar,
    Pfq,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityError {
    #[error("unknown theorem '{0}'")]
    UnknownTheorem(String),
    #[error("theorem {0} needs a {1} spec")]
    SpecKind(TheoremId, &'static str),
    #[error(transparent)]
    Hypergeom(#[from] HypergeomError),
}

/// The series a theorem is stated for.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesSpec {
    Pfq(PfqSpec),
    FoxWright(FoxWrightSpec),
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesSpec::Pfq(s) => s.fmt(f),
            SeriesSpec::FoxWright(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub spec: SeriesSpec,
    pub c: ComplexValue,
    pub x: ComplexValue,
}

impl TheoremInstance {
    pub fn new(theorem: TheoremId, spec: SeriesSpec, c: ComplexValue, x: ComplexValue) -> Result<Self, IdentityError> {
        match (theorem.family(), &spec) {
            (Family::Pfq, SeriesSpec::Pfq(_)) | (Family::Psi | Family::PsiStar, SeriesSpec::FoxWright(_)) => {}
            (Family::Pfq, _) => return Err(IdentityError::SpecKind(theorem, "pFq")),
            _ => return Err(IdentityError::SpecKind(theorem, "Fox-Wright")),
        }
        Ok(Self { theorem, spec, c, x })
    }

    /// The right side's argument `(c x^2 / 5^{1+q-p})^5` for `pFq`, `(c x^2 / 5)^5` otherwise.
    pub fn rhs_argument(&self) -> ComplexValue {
        let w = self.c * self.x * self.x;
        let scale = match &self.spec {
            SeriesSpec::Pfq(s) => 5f64.powi(1 + s.q() as i32 - s.p() as i32),
            SeriesSpec::FoxWright(_) => 5.0,
        };
        (w / scale).powu(5)
    }

    /// False for `pFq` instances outside the theorem's stated domain:
    /// `p <= q` always qualifies, `p = q + 1` needs `|(c x^2)^5| < 1`.
    pub fn in_domain(&self) -> bool {
        match &self.spec {
            SeriesSpec::Pfq(s) if s.p() == s.q() + 1 => self.rhs_argument().norm() < 1.0,
            SeriesSpec::Pfq(s) => s.p() <= s.q(),
            SeriesSpec::FoxWright(_) => true,
        }
    }
}

fn one() -> ComplexValue {
    ComplexValue::new(1.0, 0.0)
}

fn eval_spec(theorem: TheoremId, spec: &SeriesSpec, z: ComplexValue, tol: &ToleranceConfig) -> Result<SeriesEvaluation, HypergeomError> {
    match (theorem.family(), spec) {
        (Family::Pfq, SeriesSpec::Pfq(s)) => eval_pfq(s, z, tol),
        (Family::Psi, SeriesSpec::FoxWright(s)) => eval_fox_wright(s, z, tol),
        (Family::PsiStar, SeriesSpec::FoxWright(s)) => eval_fox_wright_normalized(s, z, tol),
        _ => unreachable!("spec kind checked on construction"),
    }
}

/// `sum_k w_k F(c (x alpha^k)^2)` with `w_k = 1` or `alpha^k`.
pub fn theorem_lhs(inst: &TheoremInstance, tol: &ToleranceConfig) -> Result<SeriesEvaluation, HypergeomError> {
    let mut parts = Vec::with_capacity(MULTISECTION_ORDER as usize);
    for k in 0..MULTISECTION_ORDER {
        let xk = inst.x * fifth_root(k);
        let weight = if inst.theorem.is_weighted() { fifth_root(k) } else { one() };
        parts.push((weight, eval_spec(inst.theorem, &inst.spec, inst.c * xk * xk, tol)?));
    }
    Ok(SeriesEvaluation::weighted_sum(&parts))
}

/// The right side's single series: its spec, argument and prefactor.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedSeries {
    pub spec: SeriesSpec,
    pub argument: ComplexValue,
    pub prefactor: ComplexValue,
}

// (v + shift) / 5, rejecting a result that lands on a nonpositive integer;
// the test is done on the integer v + shift, not on the quotient
fn fifth_shift(v: ComplexValue, shift: i64) -> Result<ComplexValue, HypergeomError> {
    if let Some(k) = as_integer(v) {
        let top = k + shift;
        if top <= 0 && top % 5 == 0 {
            return Err(HypergeomError::SpecInvalid(format!(
                "constructed parameter ({v} + {shift})/5 is a nonpositive integer"
            )));
        }
    }
    Ok((v + shift as f64) / 5.0)
}

fn pfq_lists(spec: &PfqSpec, weighted: bool) -> Result<PfqSpec, HypergeomError> {
    let (base, fixed): (i64, [f64; 4]) = if weighted { (2, [3.0, 4.0, 6.0, 7.0]) } else { (0, [1.0, 2.0, 3.0, 4.0]) };
    let mut num = Vec::with_capacity(5 * spec.p());
    for j in 0..5 {
        for &a in spec.numerator() {
            num.push((a + (base + j) as f64) / 5.0);
        }
    }
    let mut den: Vec<ComplexValue> = fixed.iter().map(|&f| ComplexValue::new(f / 5.0, 0.0)).collect();
    for j in 0..5 {
        for &b in spec.denominator() {
            den.push(fifth_shift(b, base + j)?);
        }
    }
    PfqSpec::new(num, den)
}

fn psi_lists(spec: &FoxWrightSpec, weighted: bool) -> Result<FoxWrightSpec, HypergeomError> {
    let shift = |p: &WeightedParam| if weighted { p.value + 2.0 * p.weight } else { p.value };
    let num = spec.numerator().iter().map(|p| WeightedParam::new(shift(p), 5.0 * p.weight)).collect();
    let fixed: [f64; 4] = if weighted { [3.0, 4.0, 6.0, 7.0] } else { [1.0, 2.0, 3.0, 4.0] };
    let mut den: Vec<WeightedParam> = fixed.iter().map(|&f| WeightedParam::real(f / 5.0, 1.0)).collect();
    den.extend(spec.denominator().iter().map(|p| WeightedParam::new(shift(p), 5.0 * p.weight)));
    FoxWrightSpec::new(num, den)
}

fn ln_gamma_fifths(fifths: [f64; 4]) -> ComplexValue {
    fifths.iter().map(|&f| log_gamma(ComplexValue::new(f / 5.0, 0.0)).expect("positive argument")).sum()
}

fn poch_two(v: ComplexValue, weight: f64) -> Result<ComplexValue, HypergeomError> {
    pochhammer(PochhammerQuery::new(v, ComplexValue::new(2.0 * weight, 0.0)))
        .map_err(|e| HypergeomError::SpecInvalid(format!("prefactor undefined: {e}")))
}

/// Builds the right side's parameter lists and prefactor as printed.
pub fn transformed_series(inst: &TheoremInstance) -> Result<TransformedSeries, HypergeomError> {
    let weighted = inst.theorem.is_weighted();
    let cx2 = inst.c * inst.x * inst.x;
    // 5 c^2 x^4 / 2, shared by every weighted variant
    let weighted_factor = 2.5 * cx2 * cx2;
    let argument = inst.rhs_argument();

    let (spec, prefactor) = match (&inst.spec, inst.theorem.family()) {
        (SeriesSpec::Pfq(s), _) => {
            let prefactor = if weighted {
                let up: ComplexValue = s.numerator().iter().map(|&a| a * (a + 1.0)).product();
                let down: ComplexValue = s.denominator().iter().map(|&b| b * (b + 1.0)).product();
                weighted_factor * up / down
            } else {
                ComplexValue::new(5.0, 0.0)
            };
            (SeriesSpec::Pfq(pfq_lists(s, weighted)?), prefactor)
        }
        (SeriesSpec::FoxWright(s), Family::Psi) => {
            let prefactor = if weighted {
                weighted_factor * ln_gamma_fifths([3.0, 4.0, 6.0, 7.0]).exp()
            } else {
                5.0 * ln_gamma_fifths([1.0, 2.0, 3.0, 4.0]).exp()
            };
            (SeriesSpec::FoxWright(psi_lists(s, weighted)?), prefactor)
        }
        (SeriesSpec::FoxWright(s), _) => {
            let prefactor = if weighted {
                for p in s.numerator().iter().chain(s.denominator()) {
                    if is_nonpositive_integer(p.value + 2.0 * p.weight) {
                        return Err(HypergeomError::SpecInvalid(format!(
                            "shifted parameter {} + 2*{} is a gamma pole",
                            p.value, p.weight
                        )));
                    }
                }
                let mut ratio = one();
                for p in s.numerator() {
                    ratio *= poch_two(p.value, p.weight)?;
                }
                for p in s.denominator() {
                    ratio /= poch_two(p.value, p.weight)?;
                }
                weighted_factor * ratio
            } else {
                ComplexValue::new(5.0, 0.0)
            };
            (SeriesSpec::FoxWright(psi_lists(s, weighted)?), prefactor)
        }
    };
    Ok(TransformedSeries { spec, argument, prefactor })
}

/// Prefactor times the transformed series at `(c x^2 / 5^{..})^5`.
pub fn theorem_rhs(inst: &TheoremInstance, tol: &ToleranceConfig) -> Result<SeriesEvaluation, HypergeomError> {
    let t = transformed_series(inst)?;
    if t.prefactor == ComplexValue::new(0.0, 0.0) {
        return Ok(SeriesEvaluation::exact(t.prefactor));
    }
    Ok(eval_spec(inst.theorem, &t.spec, t.argument, tol)?.scaled(t.prefactor))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotEvaluable,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotEvaluable => "not-evaluable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of comparing both sides. A side that could not be evaluated
/// has no status and a NaN value; `note` then says why.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResidual {
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub residual: f64,
    pub lhs_status: Option<SeriesStatus>,
    pub rhs_status: Option<SeriesStatus>,
    pub verdict: Verdict,
    /// `lhs / rhs`, when both are finite and `rhs` is nonzero.
    pub ratio: Option<ComplexValue>,
    pub note: Option<String>,
}

impl IdentityResidual {
    /// Judges two independently computed sides.
    pub fn judge(
        lhs: Result<SeriesEvaluation, String>,
        rhs: Result<SeriesEvaluation, String>,
        identity_tol: f64,
    ) -> Self {
        let nan = ComplexValue::new(f64::NAN, f64::NAN);
        let mut note = None;
        let mut side = |r: Result<SeriesEvaluation, String>, name: &str| match r {
            Ok(ev) => (ev.value, Some(ev.status)),
            Err(e) => {
                note.get_or_insert_with(|| format!("{name}: {e}"));
                (nan, None)
            }
        };
        let (l, ls) = side(lhs, "lhs");
        let (r, rs) = side(rhs, "rhs");
        let residual = relative_residual(l, r);
        let converged = ls.is_some_and(|s| s.is_converged()) && rs.is_some_and(|s| s.is_converged());
        let verdict = if !converged || !residual.is_finite() {
            Verdict::NotEvaluable
        } else if residual <= identity_tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        if note.is_none() {
            for (name, s) in [("lhs", ls), ("rhs", rs)] {
                if let Some(s) = s.filter(|s| !s.is_converged()) {
                    note = Some(format!("{name}: {s}"));
                    break;
                }
            }
        }
        let ratio = (l.is_finite() && r.is_finite() && r.norm() > 0.0).then(|| l / r);
        Self { lhs: l, rhs: r, residual, lhs_status: ls, rhs_status: rs, verdict, ratio, note }
    }
}

/// Evaluates both sides and compares them under `identity_tol`.
pub fn check_identity(inst: &TheoremInstance, tol: &ToleranceConfig, identity_tol: f64) -> IdentityResidual {
    if !inst.in_domain() {
        let msg = "outside the theorem's domain".to_string();
        return IdentityResidual::judge(Err(msg.clone()), Err(msg), identity_tol);
    }
    let lhs = theorem_lhs(inst, tol).map_err(|e| e.to_string());
    let rhs = theorem_rhs(inst, tol).map_err(|e| e.to_string());
    IdentityResidual::judge(lhs, rhs, identity_tol)
}
