//! Truncated summation of power series with bounded coefficient sequences.
//!
//! Every series in the crate (multisection sides, pFq, Fox-Wright) goes
//! through [`sum_terms`], so truncation, divergence detection and status
//! reporting behave identically everywhere.

mod multisection;

pub use multisection::{theorem21_lhs, theorem21_rhs, theorem22_lhs, theorem22_rhs};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::ComplexValue;

/// Terms are only checked for monotone growth past this index.
const DIVERGENCE_START: usize = 50;
/// Number of consecutive growing terms that marks a series as diverging.
const DIVERGENCE_RUN: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(&'static str),
}

/// Truncation controls shared by all summations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub rel_tol: f64,
    pub consecutive_small: usize,
    pub max_terms: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-14, consecutive_small: 3, max_terms: 10_000 }
    }
}

impl ToleranceConfig {
    pub fn new(rel_tol: f64, consecutive_small: usize, max_terms: usize) -> Result<Self, SeriesError> {
        if !(rel_tol > 0.0 && rel_tol.is_finite()) {
            return Err(SeriesError::InvalidTolerance("rel_tol must be positive"));
        }
        if consecutive_small < 1 {
            return Err(SeriesError::InvalidTolerance("consecutive_small must be at least 1"));
        }
        if max_terms < 10 {
            return Err(SeriesError::InvalidTolerance("max_terms must be at least 10"));
        }
        Ok(Self { rel_tol, consecutive_small, max_terms })
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self, SeriesError> {
        Self::new(rel_tol, self.consecutive_small, self.max_terms)
    }

    pub fn with_max_terms(self, max_terms: usize) -> Result<Self, SeriesError> {
        Self::new(self.rel_tol, self.consecutive_small, max_terms)
    }
}

/// Outcome of a truncated summation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesStatus {
    Converged,
    MaxTermsExceeded,
    /// A term hit a gamma pole at the given summation index.
    TermPole { index: usize },
    Diverging,
}

impl SeriesStatus {
    pub fn is_converged(&self) -> bool {
        matches!(self, SeriesStatus::Converged)
    }

    pub fn label(&self) -> &'static str {
        match self {
            SeriesStatus::Converged => "converged",
            SeriesStatus::MaxTermsExceeded => "max-terms-exceeded",
            SeriesStatus::TermPole { .. } => "term-pole",
            SeriesStatus::Diverging => "diverging",
        }
    }
}

impl fmt::Display for SeriesStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesStatus::TermPole { index } => write!(f, "term-pole (n = {index})"),
            other => f.write_str(other.label()),
        }
    }
}

/// A summed series together with how it was truncated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvaluation {
    pub value: ComplexValue,
    pub terms_used: usize,
    /// Heuristic: `|last term| * consecutive_small`.
    pub tail_estimate: f64,
    pub status: SeriesStatus,
    /// Set when the series was summed on the boundary of its disk of
    /// convergence, where the stopping rule is unreliable.
    pub low_confidence: bool,
}

impl SeriesEvaluation {
    /// A value known exactly (empty tail).
    pub fn exact(value: ComplexValue) -> Self {
        Self { value, terms_used: 1, tail_estimate: 0.0, status: SeriesStatus::Converged, low_confidence: false }
    }

    pub fn scaled(self, factor: ComplexValue) -> Self {
        Self { value: self.value * factor, tail_estimate: self.tail_estimate * factor.norm(), ..self }
    }

    /// Weighted sum of independent evaluations, combined in slice order.
    /// The first non-converged constituent decides the combined status.
    pub fn weighted_sum(parts: &[(ComplexValue, SeriesEvaluation)]) -> Self {
        let mut out = Self {
            value: ComplexValue::new(0.0, 0.0),
            terms_used: 0,
            tail_estimate: 0.0,
            status: SeriesStatus::Converged,
            low_confidence: false,
        };
        for (w, part) in parts {
            out.value += w * part.value;
            out.terms_used += part.terms_used;
            out.tail_estimate += w.norm() * part.tail_estimate;
            out.low_confidence |= part.low_confidence;
            if out.status.is_converged() && !part.status.is_converged() {
                out.status = part.status;
            }
        }
        out
    }
}

/// Sums a term stream under `tol`. `None` marks a term sitting on a pole.
///
/// Stops once `consecutive_small` successive terms satisfy
/// `|term| <= rel_tol (1 + |partial|)` and the tail estimate is within the
/// same bound. A finite stream that runs out is an exact sum.
pub fn sum_terms<I>(terms: I, tol: &ToleranceConfig) -> SeriesEvaluation
where
    I: IntoIterator<Item = Option<ComplexValue>>,
{
    let mut partial = ComplexValue::new(0.0, 0.0);
    let mut small_run = 0usize;
    let mut grow_run = 0usize;
    let mut prev_mag = f64::INFINITY;
    let mut last_mag = 0.0;
    let mut used = 0usize;

    let finish = |partial, used, last_mag: f64, status| SeriesEvaluation {
        value: partial,
        terms_used: used,
        tail_estimate: last_mag * tol.consecutive_small as f64,
        status,
        low_confidence: false,
    };

    for (index, term) in terms.into_iter().enumerate() {
        if index >= tol.max_terms {
            return finish(partial, used, last_mag, SeriesStatus::MaxTermsExceeded);
        }
        let Some(term) = term else {
            return finish(partial, used, last_mag, SeriesStatus::TermPole { index });
        };
        let mag = term.norm();
        if !mag.is_finite() {
            return finish(partial, used, last_mag, SeriesStatus::Diverging);
        }
        partial += term;
        used += 1;
        last_mag = mag;

        if index > DIVERGENCE_START && mag > prev_mag {
            grow_run += 1;
            if grow_run >= DIVERGENCE_RUN {
                return finish(partial, used, last_mag, SeriesStatus::Diverging);
            }
        } else {
            grow_run = 0;
        }
        prev_mag = mag;

        let bound = tol.rel_tol * (1.0 + partial.norm());
        if mag <= bound {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= tol.consecutive_small && mag * tol.consecutive_small as f64 <= bound {
            return finish(partial, used, last_mag, SeriesStatus::Converged);
        }
    }
    SeriesEvaluation { tail_estimate: 0.0, ..finish(partial, used, last_mag, SeriesStatus::Converged) }
}

/// A coefficient sequence `r -> phi(r)` with a declared bound on `|phi(r)|`.
pub trait BoundedSequence {
    fn bound(&self) -> f64;
    /// `None` when `phi(r)` sits on a pole.
    fn value(&self, r: u64) -> Option<ComplexValue>;
}

/// A [`BoundedSequence`] backed by a closure.
pub struct FnSequence<F> {
    f: F,
    bound: f64,
}

impl<F> FnSequence<F>
where
    F: Fn(u64) -> Option<ComplexValue>,
{
    pub fn new(bound: f64, f: F) -> Self {
        Self { f, bound }
    }
}

impl<F> BoundedSequence for FnSequence<F>
where
    F: Fn(u64) -> Option<ComplexValue>,
{
    fn bound(&self) -> f64 {
        self.bound
    }

    fn value(&self, r: u64) -> Option<ComplexValue> {
        (self.f)(r)
    }
}

impl<S: BoundedSequence + ?Sized> BoundedSequence for &S {
    fn bound(&self) -> f64 {
        (**self).bound()
    }

    fn value(&self, r: u64) -> Option<ComplexValue> {
        (**self).value(r)
    }
}

/// The `c` and `x` of `sum phi(r) c^r x^{2r} / r!`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultisectionArgs {
    pub c: ComplexValue,
    pub x: ComplexValue,
}

impl MultisectionArgs {
    pub fn new(c: ComplexValue, x: ComplexValue) -> Self {
        debug_assert!(c.is_finite() && x.is_finite());
        Self { c, x }
    }
}

/// `sum_{r >= 0} phi(r) c^r x^{2r} / r!`, with `c^r x^{2r} / r!` carried
/// term to term by its ratio.
pub fn sum_power_series<S: BoundedSequence>(
    phi: &S,
    args: MultisectionArgs,
    tol: &ToleranceConfig,
) -> SeriesEvaluation {
    let w = args.c * args.x * args.x;
    let zero = ComplexValue::new(0.0, 0.0);
    let mut power = ComplexValue::new(1.0, 0.0);
    let terms = (0u64..).map(move |r| {
        if r > 0 {
            power *= w / r as f64;
        }
        if power == zero {
            Some(zero)
        } else {
            phi.value(r).map(|p| p * power)
        }
    });
    sum_terms(terms, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, pochhammer, PochhammerQuery};

    #[test]
    fn tolerance_validation() {
        assert!(ToleranceConfig::new(0.0, 3, 100).is_err());
        assert!(ToleranceConfig::new(1e-10, 0, 100).is_err());
        assert!(ToleranceConfig::new(1e-10, 3, 9).is_err());
        let d = ToleranceConfig::default();
        assert_eq!((d.rel_tol, d.consecutive_small, d.max_terms), (1e-14, 3, 10_000));
    }

    #[test]
    fn power_series_examples() {
        let tol = ToleranceConfig::default();
        let ones = FnSequence::new(1.0, |_| Some(c(1.0)));
        let at_zero = sum_power_series(&ones, MultisectionArgs::new(c(1.0), c(0.0)), &tol);
        assert_eq!(at_zero.value, c(1.0));
        assert!(at_zero.status.is_converged());

        // oracle: sum 1/r! by brute force
        let mut e = 0.0;
        let mut f = 1.0;
        for r in 0..30 {
            if r > 0 {
                f *= r as f64;
            }
            e += 1.0 / f;
        }
        let one = sum_power_series(&ones, MultisectionArgs::new(c(1.0), c(1.0)), &tol);
        assert!((one.value - c(e)).norm() < 1e-15);
        assert!((one.value.re - std::f64::consts::E).abs() < 1e-15);
        assert!(one.status.is_converged());
        assert!(one.tail_estimate <= tol.rel_tol * (1.0 + one.value.norm()));
    }

    #[test]
    fn factorial_sequence_diverges() {
        let tol = ToleranceConfig::default();
        let fact = FnSequence::new(f64::INFINITY, |r| {
            pochhammer(PochhammerQuery::rising(c(1.0), r)).ok()
        });
        let out = sum_power_series(&fact, MultisectionArgs::new(c(1.0), c(2.0)), &tol);
        assert_eq!(out.status, SeriesStatus::Diverging);
    }

    #[test]
    fn pole_and_cap() {
        let tol = ToleranceConfig::default();
        let poles = FnSequence::new(1.0, |r| if r == 3 { None } else { Some(c(1.0)) });
        let out = sum_power_series(&poles, MultisectionArgs::new(c(1.0), c(0.5)), &tol);
        assert_eq!(out.status, SeriesStatus::TermPole { index: 3 });

        let slow = FnSequence::new(1.0, |r| Some(c(1.0 / (r as f64 + 1.0))));
        let capped = ToleranceConfig::new(1e-14, 3, 10).unwrap();
        // harmonic terms never drop below the threshold
        let terms = (0..).map(|r: u64| slow.value(r));
        assert_eq!(sum_terms(terms, &capped).status, SeriesStatus::MaxTermsExceeded);
    }

    #[test]
    fn finite_stream_is_exact() {
        let out = sum_terms([Some(c(1.0)), Some(c(2.0))], &ToleranceConfig::default());
        assert_eq!(out.value, c(3.0));
        assert_eq!(out.tail_estimate, 0.0);
        assert!(out.status.is_converged());
    }

    #[test]
    fn weighted_sum_poisons_status() {
        let ok = SeriesEvaluation::exact(c(1.0));
        let bad = SeriesEvaluation { status: SeriesStatus::Diverging, ..ok };
        let mixed = SeriesEvaluation::weighted_sum(&[(c(1.0), ok), (c(2.0), bad), (c(1.0), ok)]);
        assert_eq!(mixed.value, c(4.0));
        assert_eq!(mixed.status, SeriesStatus::Diverging);
    }
}
