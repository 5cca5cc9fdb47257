//! Scalar numerics shared by every other module: complex helpers, the
//! complex log-gamma function, the Pochhammer symbol with its integer
//! branches, and fifth roots of unity.

mod gamma;
mod pochhammer;
mod roots;

pub use gamma::{gamma, log_gamma};
pub use pochhammer::{gauss_multiplication_residual, pochhammer, MultiplicationQuery, PochhammerQuery};
pub use roots::{fifth_root, identity_one_sum, identity_two_sum, RootOfUnity, MULTISECTION_ORDER};

use num_complex::Complex64;
use thiserror::Error;

/// The universal scalar of the crate.
pub type ComplexValue = Complex64;

/// Tolerance used to decide whether a complex value sits on an integer.
pub const INTEGER_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("gamma function pole at {0}")]
    Pole(ComplexValue),
    #[error("undefined gamma quotient for ({lambda})_({nu})")]
    UndefinedQuotient { lambda: ComplexValue, nu: ComplexValue },
}

/// Returns `Some(n)` when `z` is an integer within [`INTEGER_TOL`].
pub fn as_integer(z: ComplexValue) -> Option<i64> {
    if z.im.abs() > INTEGER_TOL || !z.re.is_finite() {
        return None;
    }
    let r = z.re.round();
    if (z.re - r).abs() <= INTEGER_TOL && r.abs() < 9.0e15 {
        Some(r as i64)
    } else {
        None
    }
}

/// True for 0, -1, -2, ...
pub fn is_nonpositive_integer(z: ComplexValue) -> bool {
    matches!(as_integer(z), Some(n) if n <= 0)
}

/// Principal power `w^s = exp(s (ln|w| + i Arg w))`, with `Arg` in (-pi, pi].
///
/// `0^s` is 1 for `s = 0` and 0 for `Re s > 0`; other powers of zero are NaN.
pub fn principal_pow(w: ComplexValue, s: ComplexValue) -> ComplexValue {
    if w == ComplexValue::new(0.0, 0.0) {
        if s == ComplexValue::new(0.0, 0.0) {
            return ComplexValue::new(1.0, 0.0);
        }
        if s.re > 0.0 {
            return ComplexValue::new(0.0, 0.0);
        }
        return ComplexValue::new(f64::NAN, f64::NAN);
    }
    (s * w.ln()).exp()
}

/// Scale-aware distance `|a - b| / (1 + max(|a|, |b|))`.
pub fn relative_residual(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / (1.0 + a.norm().max(b.norm()))
}

/// Test-style closeness: `|a - b| <= tol (1 + max(|a|, |b|))`.
pub fn approx_eq(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    relative_residual(a, b) <= tol
}

pub(crate) fn c(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}
