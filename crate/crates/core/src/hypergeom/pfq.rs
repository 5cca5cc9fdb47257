use super::{classify_pfq, HypergeomError, PfqSpec};
use crate::numerics::ComplexValue;
use crate::series::{sum_terms, SeriesEvaluation, ToleranceConfig};

/// Multiplier applied to `max_terms` on the boundary of the unit disk.
const BOUNDARY_TERM_FACTOR: usize = 10;

/// `sum_n prod (alpha_i)_n / prod (beta_j)_n z^n / n!` by the term ratio
/// `prod (alpha_i + n) / prod (beta_j + n) z / (n + 1)`.
///
/// A terminating series is summed over exactly `m + 1` terms. On `|z| = 1`
/// the term cap is raised tenfold and the result flagged low-confidence.
pub fn eval_pfq(spec: &PfqSpec, z: ComplexValue, tol: &ToleranceConfig) -> Result<SeriesEvaluation, HypergeomError> {
    if z == ComplexValue::new(0.0, 0.0) {
        return Ok(SeriesEvaluation::exact(ComplexValue::new(1.0, 0.0)));
    }
    let diag = classify_pfq(spec, z);
    if !diag.classification.is_summable() {
        return Err(HypergeomError::NotSummable(diag.classification));
    }
    let boundary = diag.classification.is_boundary();
    let mut tol = *tol;
    if boundary {
        tol.max_terms = tol.max_terms.saturating_mul(BOUNDARY_TERM_FACTOR);
    }

    let reduced = spec.reduced();
    let limit = spec.terminating_degree().map(|m| m + 1).unwrap_or(u64::MAX);
    let mut term = ComplexValue::new(1.0, 0.0);
    let terms = (0..limit).map(move |n| {
        if n > 0 {
            let k = (n - 1) as f64;
            let up: ComplexValue = reduced.numerator().iter().map(|a| a + k).product();
            let down: ComplexValue = reduced.denominator().iter().map(|b| b + k).product();
            term *= up / down * z / n as f64;
        }
        Some(term)
    });
    let mut out = sum_terms(terms, &tol);
    out.low_confidence = boundary;
    Ok(out)
}
