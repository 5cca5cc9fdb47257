//! The application identities, one entry per printed equation.
//!
//! Left sides are weighted sums of oracle values at `x alpha^k`; right sides
//! are a single `pFq` with the parameter lists and prefactor copied from the
//! printed equation, typos included. Measurement decides the status.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{eval_oracle, CatalogError, SpecialFunctionId};
use crate::hypergeom::{eval_pfq, PfqSpec};
use crate::identity::{IdentityResidual, TheoremId, Verdict};
use crate::numerics::{fifth_root, pochhammer, principal_pow, ComplexValue, PochhammerQuery, MULTISECTION_ORDER};
use crate::series::{SeriesEvaluation, ToleranceConfig};

/// Fractions at which the default sample points sit inside the domain radius.
pub const SAMPLE_FRACTIONS: [f64; 3] = [0.2, 0.45, 0.7];

fn c(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

/// `alpha^s = exp(2 pi i s / 5)`, the principal power of `alpha` for real `s`.
pub fn alpha_power(s: f64) -> ComplexValue {
    if s.fract() == 0.0 {
        return fifth_root(s as i64);
    }
    ComplexValue::from_polar(1.0, 2.0 * PI * s / MULTISECTION_ORDER as f64)
}

/// Exponent of the k-th weight: `base.0 + base.1 p + k (step.0 + step.1 p)`,
/// where `p` is the case parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightRule {
    pub base: (f64, f64),
    pub step: (f64, f64),
}

impl WeightRule {
    const ONES: WeightRule = WeightRule { base: (0.0, 0.0), step: (0.0, 0.0) };
    const RISING: WeightRule = WeightRule { base: (0.0, 0.0), step: (1.0, 0.0) };

    const fn falling(from: f64, by: f64) -> Self {
        WeightRule { base: (from, 0.0), step: (-by, 0.0) }
    }

    pub fn exponent(&self, k: i64, param: f64) -> f64 {
        self.base.0 + self.base.1 * param + k as f64 * (self.step.0 + self.step.1 * param)
    }

    pub fn weight(&self, k: i64, param: f64) -> ComplexValue {
        alpha_power(self.exponent(k, param))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CaseDomain {
    /// The identity only holds for `|x| < radius`.
    Disk { radius: f64 },
    /// Entire in `x`; `radius` only sets the default sample points.
    Entire { radius: f64 },
}

impl CaseDomain {
    pub fn radius(&self) -> f64 {
        match *self {
            CaseDomain::Disk { radius } | CaseDomain::Entire { radius } => radius,
        }
    }

    pub fn contains(&self, x: ComplexValue) -> bool {
        match *self {
            CaseDomain::Disk { radius } => x.norm() < radius,
            CaseDomain::Entire { .. } => x.is_finite(),
        }
    }
}

/// Right side as printed: `prefactor * pFq(numerator; denominator; argument)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhsParts {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
    pub argument: ComplexValue,
    pub prefactor: ComplexValue,
}

type RhsRecipe = fn(f64, ComplexValue) -> RhsParts;

#[derive(Debug, Clone, Copy)]
pub struct ApplicationCase {
    pub case_id: &'static str,
    /// Equation number as printed, which is not unique.
    pub printed_label: &'static str,
    pub source: TheoremId,
    pub function: SpecialFunctionId,
    pub weights: WeightRule,
    pub domain: CaseDomain,
    pub note: Option<&'static str>,
    rhs: RhsRecipe,
}

impl ApplicationCase {
    pub fn parameter(&self) -> Option<f64> {
        self.function.parameter()
    }

    /// The case with its parameter (gamma or a) replaced.
    pub fn with_parameter(mut self, value: f64) -> Self {
        self.function = self.function.with_parameter(value);
        self
    }

    pub fn default_samples(&self) -> Vec<f64> {
        SAMPLE_FRACTIONS.iter().map(|f| f * self.domain.radius()).collect()
    }

    pub fn rhs_parts(&self, x: ComplexValue) -> RhsParts {
        (self.rhs)(self.parameter().unwrap_or(0.0), x)
    }

    /// `sum_k w_k f(x alpha^k)` from the oracle.
    pub fn lhs(&self, x: ComplexValue) -> Result<ComplexValue, CatalogError> {
        let p = self.parameter().unwrap_or(0.0);
        let mut acc = c(0.0);
        for k in 0..MULTISECTION_ORDER {
            acc += self.weights.weight(k, p) * eval_oracle(self.function, x * fifth_root(k))?;
        }
        Ok(acc)
    }

    pub fn rhs(&self, x: ComplexValue, tol: &ToleranceConfig) -> Result<SeriesEvaluation, CatalogError> {
        let parts = self.rhs_parts(x);
        let spec = PfqSpec::real(&parts.numerator, &parts.denominator)?;
        Ok(eval_pfq(&spec, parts.argument, tol)?.scaled(parts.prefactor))
    }
}

fn tenths(xs: &[i32]) -> Vec<f64> {
    xs.iter().map(|&n| f64::from(n) / 10.0).collect()
}

fn fifths(xs: &[i32]) -> Vec<f64> {
    xs.iter().map(|&n| f64::from(n) / 5.0).collect()
}

fn cat(a: Vec<f64>, b: Vec<f64>) -> Vec<f64> {
    a.into_iter().chain(b).collect()
}

// -(x/10)^10
fn trig_arg(x: ComplexValue) -> ComplexValue {
    -(x / 10.0).powu(10)
}

// -(x^2/5)^5
fn kummer_arg(x: ComplexValue) -> ComplexValue {
    -(x * x / 5.0).powu(5)
}

fn poch2(v: f64) -> f64 {
    pochhammer(PochhammerQuery::rising(c(v), 2)).expect("rising product").re
}

const COS_WEIGHTED_NOTE: &str = "printed left side reads cos(alpha^3), cos(alpha^4) without x; encoded with the rotated arguments x alpha^3, x alpha^4";
const E_WEIGHTED_NOTE: &str = "numerator list encoded as printed, including the entry 15/10";
const INCGAMMA_NOTE: &str = "fractional powers x^{2a}, alpha^{8a} and gamma(a, (x alpha^k)^2) taken on the principal branch";
const ARCSIN2_NOTE: &str = "repeated parameter entries encoded exactly as printed";

/// Every application identity, in printed order.
pub fn application_cases() -> Vec<ApplicationCase> {
    use SpecialFunctionId as F;
    use TheoremId::{PfqEven, PfqWeighted};
    let trig = CaseDomain::Entire { radius: 2.0 };
    let disk = CaseDomain::Disk { radius: 1.0 };
    vec![
        ApplicationCase {
            case_id: "eq4.1a-sin",
            printed_label: "(4.1)",
            source: PfqEven,
            function: F::Sin,
            weights: WeightRule::falling(4.0, 1.0),
            domain: trig,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![],
                denominator: cat(fifths(&[1, 2, 3, 4]), tenths(&[3, 5, 7, 9, 11])),
                argument: trig_arg(x),
                prefactor: 5.0 * x * alpha_power(4.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.2-sin",
            printed_label: "(4.2)",
            source: PfqWeighted,
            function: F::Sin,
            weights: WeightRule::ONES,
            domain: trig,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![],
                denominator: cat(fifths(&[3, 4, 6, 7]), tenths(&[7, 9, 11, 13, 15])),
                argument: trig_arg(x),
                prefactor: x.powu(5) / 24.0,
            },
        },
        ApplicationCase {
            case_id: "eq4.1b-cos",
            printed_label: "(4.1)",
            source: PfqEven,
            function: F::Cos,
            weights: WeightRule::ONES,
            domain: trig,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![],
                denominator: cat(fifths(&[1, 2, 3, 4]), tenths(&[1, 3, 5, 7, 9])),
                argument: trig_arg(x),
                prefactor: c(5.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.2b-cos",
            printed_label: "(4.2)",
            source: PfqWeighted,
            function: F::Cos,
            weights: WeightRule::RISING,
            domain: trig,
            note: Some(COS_WEIGHTED_NOTE),
            rhs: |_, x| RhsParts {
                numerator: vec![],
                denominator: cat(fifths(&[3, 4, 6, 7]), tenths(&[5, 7, 9, 11, 13])),
                argument: trig_arg(x),
                prefactor: 5.0 * x.powu(4) / 24.0,
            },
        },
        ApplicationCase {
            case_id: "eq4.5-arctan",
            printed_label: "(4.5)",
            source: PfqEven,
            function: F::Arctan,
            weights: WeightRule::falling(4.0, 1.0),
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![1.0, 0.1],
                denominator: vec![1.1],
                argument: -x.powu(10),
                prefactor: 5.0 * x * alpha_power(4.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.6-arctan",
            printed_label: "(4.6)",
            source: PfqWeighted,
            function: F::Arctan,
            weights: WeightRule::ONES,
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![1.0, 0.5],
                denominator: vec![1.5],
                argument: -x.powu(10),
                prefactor: x.powu(5),
            },
        },
        ApplicationCase {
            case_id: "eq4.7-E",
            printed_label: "(4.7)",
            source: PfqEven,
            function: F::E,
            weights: WeightRule::ONES,
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: tenths(&[-1, 1, 1, 3, 3, 5, 5, 7, 7, 9]),
                denominator: cat(fifths(&[1, 1, 2, 2, 3, 3, 4, 4]), vec![1.0]),
                argument: x.powu(10),
                prefactor: c(5.0 * PI / 2.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.8-E",
            printed_label: "(4.8)",
            source: PfqWeighted,
            function: F::E,
            weights: WeightRule::RISING,
            domain: disk,
            note: Some(E_WEIGHTED_NOTE),
            rhs: |_, x| RhsParts {
                numerator: tenths(&[3, 5, 15, 7, 7, 9, 9, 11, 11, 13]),
                denominator: cat(fifths(&[3, 3, 4, 4, 6, 6, 7, 7]), vec![1.0]),
                argument: x.powu(10),
                prefactor: -15.0 * x.powu(4) * PI / 128.0,
            },
        },
        ApplicationCase {
            case_id: "eq4.9-erf",
            printed_label: "(4.9)",
            source: PfqEven,
            function: F::Erf,
            weights: WeightRule::falling(4.0, 1.0),
            domain: trig,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![0.1],
                denominator: cat(vec![1.1], fifths(&[1, 2, 3, 4])),
                argument: kummer_arg(x),
                prefactor: 10.0 * x * alpha_power(4.0) / PI.sqrt(),
            },
        },
        ApplicationCase {
            case_id: "eq4.10-erf",
            printed_label: "(4.10)",
            source: PfqWeighted,
            function: F::Erf,
            weights: WeightRule::ONES,
            domain: trig,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![0.5],
                denominator: cat(vec![1.5], fifths(&[3, 4, 6, 7])),
                argument: kummer_arg(x),
                prefactor: x.powu(5) / PI.sqrt(),
            },
        },
        ApplicationCase {
            case_id: "eq4.11-arcsin2",
            printed_label: "(4.11)",
            source: PfqEven,
            function: F::ArcsinSquared,
            weights: WeightRule::falling(8.0, 2.0),
            domain: disk,
            note: Some(ARCSIN2_NOTE),
            rhs: |_, x| RhsParts {
                numerator: cat(fifths(&[1, 1, 2, 3, 4]), vec![1.0, 1.0]),
                denominator: cat(vec![1.2], tenths(&[3, 5, 7, 9, 11])),
                argument: x.powu(10),
                prefactor: 5.0 * x * x * alpha_power(8.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.12-arcsin2",
            printed_label: "(4.12)",
            source: PfqWeighted,
            function: F::ArcsinSquared,
            weights: WeightRule::falling(4.0, 1.0),
            domain: disk,
            note: Some(ARCSIN2_NOTE),
            rhs: |_, x| RhsParts {
                numerator: cat(fifths(&[3, 3, 4, 6, 7]), vec![1.0, 1.0]),
                denominator: cat(vec![1.6], tenths(&[7, 9, 11, 13, 15])),
                argument: x.powu(10),
                prefactor: 8.0 * x.powu(6) * alpha_power(4.0) / 9.0,
            },
        },
        ApplicationCase {
            case_id: "eq4.13-K",
            printed_label: "(4.13)",
            source: PfqEven,
            function: F::K,
            weights: WeightRule::ONES,
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: tenths(&[1, 1, 3, 3, 5, 5, 7, 7, 9, 9]),
                denominator: cat(fifths(&[1, 1, 2, 2, 3, 3, 4, 4]), vec![1.0]),
                argument: x.powu(10),
                prefactor: c(5.0 * PI / 2.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.14-K",
            printed_label: "(4.14)",
            source: PfqWeighted,
            function: F::K,
            weights: WeightRule::RISING,
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: tenths(&[5, 5, 7, 7, 9, 9, 11, 11, 13, 13]),
                denominator: cat(fifths(&[3, 3, 4, 4, 6, 6, 7, 7]), vec![1.0]),
                argument: x.powu(10),
                prefactor: 45.0 * x.powu(4) * PI / 128.0,
            },
        },
        ApplicationCase {
            case_id: "eq4.15-dilog",
            printed_label: "(4.15)",
            source: PfqEven,
            function: F::Dilog,
            weights: WeightRule::falling(8.0, 2.0),
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![0.2, 0.2, 1.0],
                denominator: vec![1.2, 1.2],
                argument: x.powu(10),
                prefactor: 5.0 * x * x * alpha_power(8.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.16-dilog",
            printed_label: "(4.16)",
            source: PfqWeighted,
            function: F::Dilog,
            weights: WeightRule::falling(4.0, 1.0),
            domain: disk,
            note: None,
            rhs: |_, x| RhsParts {
                numerator: vec![0.6, 0.6, 1.0],
                denominator: vec![1.6, 1.6],
                argument: x.powu(10),
                prefactor: 5.0 * x.powu(6) * alpha_power(4.0) / 9.0,
            },
        },
        ApplicationCase {
            case_id: "eq4.17-incgamma",
            printed_label: "(4.17)",
            source: PfqEven,
            function: F::LowerIncompleteGamma { a: 0.5 },
            weights: WeightRule { base: (0.0, 8.0), step: (0.0, -2.0) },
            domain: trig,
            note: Some(INCGAMMA_NOTE),
            rhs: |a, x| RhsParts {
                numerator: vec![a / 5.0],
                denominator: cat(vec![(a + 5.0) / 5.0], fifths(&[1, 2, 3, 4])),
                argument: kummer_arg(x),
                prefactor: 5.0 * principal_pow(x, c(2.0 * a)) * alpha_power(8.0 * a) / a,
            },
        },
        ApplicationCase {
            case_id: "eq4.18-incgamma",
            printed_label: "(4.18)",
            source: PfqWeighted,
            function: F::LowerIncompleteGamma { a: 0.5 },
            weights: WeightRule { base: (0.0, 8.0), step: (1.0, -2.0) },
            domain: trig,
            note: Some(INCGAMMA_NOTE),
            rhs: |a, x| RhsParts {
                numerator: vec![(a + 2.0) / 5.0],
                denominator: cat(vec![(a + 7.0) / 5.0], fifths(&[3, 4, 6, 7])),
                argument: kummer_arg(x),
                prefactor: 5.0 * principal_pow(x, c(2.0 * a + 4.0)) * alpha_power(8.0 * a) / (2.0 * (a + 2.0)),
            },
        },
        ApplicationCase {
            case_id: "eq4.19-conformal",
            printed_label: "(4.17)",
            source: PfqEven,
            function: F::ConformalPower { gamma: 1.0 },
            weights: WeightRule::ONES,
            domain: disk,
            note: None,
            rhs: |g, x| RhsParts {
                numerator: vec![
                    g / 5.0,
                    (g + 1.0) / 5.0,
                    (g + 2.0) / 5.0,
                    (g + 3.0) / 5.0,
                    (g + 4.0) / 5.0,
                    (2.0 * g - 1.0) / 10.0,
                    (2.0 * g + 1.0) / 10.0,
                    (2.0 * g + 3.0) / 10.0,
                    (2.0 * g + 5.0) / 10.0,
                    (2.0 * g + 7.0) / 10.0,
                ],
                denominator: cat(
                    fifths(&[1, 2, 3, 4]),
                    (0..5).map(|j| (2.0 * g + f64::from(j)) / 5.0).collect(),
                ),
                argument: x.powu(10),
                prefactor: c(5.0),
            },
        },
        ApplicationCase {
            case_id: "eq4.20-conformal",
            printed_label: "(4.17)",
            source: PfqWeighted,
            function: F::ConformalPower { gamma: 1.0 },
            weights: WeightRule::RISING,
            domain: disk,
            note: None,
            rhs: |g, x| RhsParts {
                numerator: cat(
                    (2..7).map(|j| (g + f64::from(j)) / 5.0).collect(),
                    [3, 5, 7, 9, 11].iter().map(|&j| (2.0 * g + f64::from(j)) / 10.0).collect(),
                ),
                denominator: cat(
                    fifths(&[3, 4, 6, 7]),
                    (2..7).map(|j| (2.0 * g + f64::from(j)) / 5.0).collect(),
                ),
                argument: x.powu(10),
                prefactor: 5.0 * poch2(g) * poch2(g - 0.5) * x.powu(4) / (2.0 * poch2(2.0 * g)),
            },
        },
    ]
}

pub fn find_case(case_id: &str) -> Result<ApplicationCase, CatalogError> {
    application_cases()
        .into_iter()
        .find(|c| c.case_id == case_id)
        .ok_or_else(|| CatalogError::UnknownCase(case_id.to_string()))
}

/// Oracle left side against printed right side at one point.
pub fn verify_case(
    case: &ApplicationCase,
    x: ComplexValue,
    tol: &ToleranceConfig,
    identity_tol: f64,
) -> IdentityResidual {
    if !case.domain.contains(x) {
        let msg = format!("x = {x} outside |x| < {}", case.domain.radius());
        return IdentityResidual::judge(Err(msg.clone()), Err(msg), identity_tol);
    }
    let lhs = case.lhs(x).map(SeriesEvaluation::exact).map_err(|e| e.to_string());
    let rhs = case.rhs(x, tol).map_err(|e| e.to_string());
    IdentityResidual::judge(lhs, rhs, identity_tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Verified,
    Discrepant,
    Unverified,
}

impl CaseStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CaseStatus::Verified => "verified",
            CaseStatus::Discrepant => "discrepant",
            CaseStatus::Unverified => "unverified",
        }
    }
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointReport {
    pub x: f64,
    pub result: IdentityResidual,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub case_id: String,
    pub printed_label: String,
    pub function: SpecialFunctionId,
    pub points: Vec<PointReport>,
    pub status: CaseStatus,
    pub note: Option<String>,
}

impl CaseReport {
    /// LHS/RHS ratios at the points that failed.
    pub fn discrepant_ratios(&self) -> Vec<(f64, ComplexValue)> {
        self.points
            .iter()
            .filter(|p| p.result.verdict == Verdict::Fail)
            .filter_map(|p| p.result.ratio.map(|r| (p.x, r)))
            .collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.points.iter().map(|p| p.result.residual).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogReport {
    pub identity_tol: f64,
    pub rows: Vec<CaseReport>,
}

impl CatalogReport {
    pub fn count(&self, status: CaseStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// Runs every record's case at its sample points.
///
/// A case is verified when every point passes, discrepant when all points
/// evaluate but some residual exceeds `identity_tol`, unverified otherwise.
pub fn verify_all(
    records: &[super::CatalogRecord],
    tol: &ToleranceConfig,
    identity_tol: f64,
) -> Result<CatalogReport, CatalogError> {
    let mut rows = Vec::with_capacity(records.len());
    for rec in records {
        let mut case = find_case(&rec.case_id)?;
        if let Some(p) = rec.parameter {
            case = case.with_parameter(p);
        }
        let points: Vec<PointReport> = rec
            .sample_points
            .iter()
            .map(|&x| PointReport { x, result: verify_case(&case, c(x), tol, identity_tol) })
            .collect();
        let status = if points.is_empty() || points.iter().any(|p| p.result.verdict == Verdict::NotEvaluable) {
            CaseStatus::Unverified
        } else if points.iter().any(|p| p.result.verdict == Verdict::Fail) {
            CaseStatus::Discrepant
        } else {
            CaseStatus::Verified
        };
        rows.push(CaseReport {
            case_id: case.case_id.to_string(),
            printed_label: case.printed_label.to_string(),
            function: case.function,
            points,
            status,
            note: case.note.map(str::to_string),
        });
    }
    rows.sort_by_cached_key(|r| case_order_key(&r.case_id));
    Ok(CatalogReport { identity_tol, rows })
}

/// Orders `eq4.2-sin` before `eq4.10-erf`: numeric runs compare as numbers.
pub fn case_order_key(case_id: &str) -> Vec<(u64, String)> {
    let mut key = Vec::new();
    let mut rest = case_id;
    while !rest.is_empty() {
        let text_len = rest.find(|ch: char| ch.is_ascii_digit()).unwrap_or(rest.len());
        let (text, tail) = rest.split_at(text_len);
        let num_len = tail.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(tail.len());
        let (num, tail) = tail.split_at(num_len);
        key.push((num.parse().unwrap_or(0), text.to_string()));
        rest = tail;
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::default_records;
    use crate::numerics::approx_eq;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn ids_unique_and_labels_duplicated_as_printed() {
        let cases = application_cases();
        assert_eq!(cases.len(), 20);
        let mut ids: Vec<_> = cases.iter().map(|c| c.case_id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 20);
        let printed_417 = cases.iter().filter(|c| c.printed_label == "(4.17)").count();
        assert_eq!(printed_417, 3);
    }

    #[test]
    fn arctan_fifth_power_example() {
        let case = find_case("eq4.6-arctan").unwrap();
        let res = verify_case(&case, c(0.5), &tol(), 1e-9);
        assert_eq!(res.verdict, Verdict::Pass);
        let closed = 0.5f64.powi(5).atan();
        assert!((closed - 0.031_239_833_430_268_277).abs() < 1e-17);
        assert!(approx_eq(res.rhs, c(closed), 1e-15));
        assert_eq!(verify_case(&case, c(1.5), &tol(), 1e-9).verdict, Verdict::NotEvaluable);
    }

    #[test]
    fn trivial_points() {
        let sin = find_case("eq4.2-sin").unwrap();
        let r = verify_case(&sin, c(0.0), &tol(), 1e-12);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.lhs.norm() < 1e-15 && r.rhs == c(0.0));
        let k = find_case("eq4.13-K").unwrap();
        let r = verify_case(&k, c(0.0), &tol(), 1e-12);
        assert!(approx_eq(r.lhs, c(2.5 * PI), 1e-15));
        assert_eq!(r.rhs, c(2.5 * PI));
    }

    #[test]
    fn incomplete_gamma_with_integer_parameter_verifies() {
        for id in ["eq4.17-incgamma", "eq4.18-incgamma"] {
            for a in [1.0, 2.0] {
                let case = find_case(id).unwrap().with_parameter(a);
                for x in case.default_samples() {
                    let r = verify_case(&case, c(x), &tol(), 1e-9);
                    assert_eq!(r.verdict, Verdict::Pass, "{id} a={a} x={x}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn principal_powers_compose() {
        for a in [0.1, 0.5, 1.3, 1.9] {
            for x in [0.3, 1.0, 1.7] {
                let lhs = principal_pow(c(x), c(2.0 * a)) * c(x).powu(4);
                let rhs = principal_pow(c(x), c(2.0 * a + 4.0));
                assert!(approx_eq(lhs, rhs, 1e-12));
            }
            let w = alpha_power(8.0 * a);
            assert!((w.norm() - 1.0).abs() < 1e-15);
            assert!(approx_eq(w, (ComplexValue::i() * 2.0 * PI * 8.0 * a / 5.0).exp(), 1e-15));
        }
    }

    #[test]
    fn default_catalog_statuses() {
        let report = verify_all(&default_records(), &tol(), 1e-9).unwrap();
        assert_eq!(report.rows.len(), 20);
        assert_eq!(report.count(CaseStatus::Unverified), 0);
        let discrepant: Vec<_> =
            report.rows.iter().filter(|r| r.status == CaseStatus::Discrepant).map(|r| r.case_id.as_str()).collect();
        assert_eq!(discrepant, ["eq4.8-E", "eq4.17-incgamma", "eq4.18-incgamma"]);
        for row in report.rows.iter().filter(|r| r.status == CaseStatus::Discrepant) {
            assert!(!row.discrepant_ratios().is_empty());
        }
    }

    #[test]
    fn verified_cases_survive_tighter_truncation() {
        let loose = verify_all(&default_records(), &tol(), 1e-9).unwrap();
        let tight = ToleranceConfig::default().with_rel_tol(tol().rel_tol / 10.0).unwrap();
        let strict = verify_all(&default_records(), &tight, 1e-9).unwrap();
        for (a, b) in loose.rows.iter().zip(&strict.rows) {
            if a.status == CaseStatus::Verified {
                assert_eq!(b.status, CaseStatus::Verified, "{}", a.case_id);
            }
        }
    }

    #[test]
    fn rows_in_case_id_order() {
        let report = verify_all(&default_records(), &tol(), 1e-9).unwrap();
        let ids: Vec<_> = report.rows.iter().map(|r| r.case_id.as_str()).collect();
        assert_eq!(&ids[..4], ["eq4.1a-sin", "eq4.1b-cos", "eq4.2-sin", "eq4.2b-cos"]);
        assert_eq!(ids[19], "eq4.20-conformal");
    }
}
