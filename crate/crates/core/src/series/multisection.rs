//! Both sides of the two fifth-order multisection theorems.
//!
//! Left sides sum five rotated copies of `sum phi(r) c^r x^{2r} / r!`; right
//! sides sum only the surviving residue class, with the factorial taken in
//! log space. The two routes share nothing but `phi`.

use super::{sum_power_series, sum_terms, BoundedSequence, MultisectionArgs, SeriesEvaluation, ToleranceConfig};
use crate::numerics::{fifth_root, log_gamma, ComplexValue, MULTISECTION_ORDER};

fn rotated_sum<S: BoundedSequence>(
    phi: &S,
    args: MultisectionArgs,
    tol: &ToleranceConfig,
    weight: impl Fn(i64) -> ComplexValue,
) -> SeriesEvaluation {
    let parts: Vec<_> = (0..MULTISECTION_ORDER)
        .map(|k| {
            let rotated = MultisectionArgs::new(args.c, args.x * fifth_root(k));
            (weight(k), sum_power_series(phi, rotated, tol))
        })
        .collect();
    SeriesEvaluation::weighted_sum(&parts)
}

/// `sum_{k=0}^{4} sum_r phi(r) c^r (x alpha^k)^{2r} / r!`.
pub fn theorem21_lhs<S: BoundedSequence>(phi: &S, args: MultisectionArgs, tol: &ToleranceConfig) -> SeriesEvaluation {
    rotated_sum(phi, args, tol, |_| ComplexValue::new(1.0, 0.0))
}

/// `sum_{k=0}^{4} alpha^k sum_r phi(r) c^r (x alpha^k)^{2r} / r!`.
pub fn theorem22_lhs<S: BoundedSequence>(phi: &S, args: MultisectionArgs, tol: &ToleranceConfig) -> SeriesEvaluation {
    rotated_sum(phi, args, tol, fifth_root)
}

// 5 sum_r phi(5r + offset) w^{5r+offset} / (5r+offset)!  with w = c x^2
fn decimated<S: BoundedSequence>(
    phi: &S,
    args: MultisectionArgs,
    tol: &ToleranceConfig,
    offset: u64,
) -> SeriesEvaluation {
    let w = args.c * args.x * args.x;
    let zero = ComplexValue::new(0.0, 0.0);
    let step = MULTISECTION_ORDER as u64;
    let terms = (0u64..).map(move |r| {
        let n = step * r + offset;
        if n == 0 {
            return phi.value(0);
        }
        if w == zero {
            return Some(zero);
        }
        let ln_fact = log_gamma(ComplexValue::new(n as f64 + 1.0, 0.0)).expect("positive argument");
        let magnitude = (n as f64 * w.ln() - ln_fact).exp();
        phi.value(n).map(|p| p * magnitude)
    });
    sum_terms(terms, tol).scaled(ComplexValue::new(5.0, 0.0))
}

/// `5 sum_r phi(5r) c^{5r} x^{10r} / (5r)!`.
pub fn theorem21_rhs<S: BoundedSequence>(phi: &S, args: MultisectionArgs, tol: &ToleranceConfig) -> SeriesEvaluation {
    decimated(phi, args, tol, 0)
}

/// `5 sum_r phi(5r+2) c^{5r+2} x^{10r+4} / (5r+2)!`.
pub fn theorem22_rhs<S: BoundedSequence>(phi: &S, args: MultisectionArgs, tol: &ToleranceConfig) -> SeriesEvaluation {
    decimated(phi, args, tol, 2)
}

#[cfg(test)]
mod tests {
    use std::cell::RefCell;

    use super::*;
    use crate::numerics::{approx_eq, c};
    use crate::series::FnSequence;

    fn ones() -> FnSequence<impl Fn(u64) -> Option<ComplexValue>> {
        FnSequence::new(1.0, |_| Some(c(1.0)))
    }

    #[test]
    fn zero_argument() {
        let tol = ToleranceConfig::default();
        let phi = FnSequence::new(1.0, |r| Some(c(0.5 / (r as f64 + 1.0))));
        let args = MultisectionArgs::new(c(1.0), c(0.0));
        assert_eq!(theorem21_lhs(&phi, args, &tol).value, c(2.5));
        assert_eq!(theorem21_rhs(&phi, args, &tol).value, c(2.5));
        assert!(theorem22_lhs(&phi, args, &tol).value.norm() < 1e-15);
        assert_eq!(theorem22_rhs(&phi, args, &tol).value, c(0.0));
    }

    #[test]
    fn exponential_sequence() {
        // oracle: five complex exponentials exp(0.25 alpha^{2k})
        let tol = ToleranceConfig::default();
        let args = MultisectionArgs::new(c(1.0), c(0.5));
        let oracle: ComplexValue = (0..5).map(|k| (c(0.25) * fifth_root(2 * k)).exp()).sum();
        assert!((oracle.re - 5.000_040_690_105_481).abs() < 1e-14);
        assert!(oracle.im.abs() < 1e-15);
        let lhs = theorem21_lhs(&ones(), args, &tol);
        let rhs = theorem21_rhs(&ones(), args, &tol);
        assert!(approx_eq(lhs.value, oracle, 1e-14));
        assert!(approx_eq(lhs.value, rhs.value, 1e-12));

        let lhs2 = theorem22_lhs(&ones(), args, &tol);
        let rhs2 = theorem22_rhs(&ones(), args, &tol);
        assert!(approx_eq(lhs2.value, rhs2.value, 1e-12));
        // leading term 5 (0.25)^2 / 2! dominates
        assert!((rhs2.value.re - 0.156_250_060_550_751_05).abs() < 1e-15);
        assert!(rhs2.value.re > 0.156_25);
    }

    #[test]
    fn harmonic_and_lorentzian_sequences() {
        let tol = ToleranceConfig::default();
        let harmonic = FnSequence::new(1.0, |r| Some(c(1.0 / (r as f64 + 1.0))));
        let args = MultisectionArgs::new(c(1.0), c(0.3));
        let l = theorem21_lhs(&harmonic, args, &tol).value;
        let r = theorem21_rhs(&harmonic, args, &tol).value;
        assert!(approx_eq(l, r, 1e-12));

        let lorentz = FnSequence::new(1.0, |r| Some(c(1.0 / (1.0 + (r * r) as f64))));
        let args = MultisectionArgs::new(c(-1.0), c(0.4));
        let l = theorem22_lhs(&lorentz, args, &tol).value;
        let r = theorem22_rhs(&lorentz, args, &tol).value;
        assert!(approx_eq(l, r, 1e-10));
    }

    #[test]
    fn decimation_trace() {
        let tol = ToleranceConfig::default();
        let seen = RefCell::new(Vec::new());
        let phi = FnSequence::new(1.0, |r| {
            seen.borrow_mut().push(r);
            Some(c(1.0))
        });
        let args = MultisectionArgs::new(c(0.7), c(0.9));
        theorem21_rhs(&phi, args, &tol);
        assert!(!seen.borrow().is_empty());
        assert!(seen.borrow().iter().all(|r| r % 5 == 0));
        seen.borrow_mut().clear();
        theorem22_rhs(&phi, args, &tol);
        assert!(!seen.borrow().is_empty());
        assert!(seen.borrow().iter().all(|r| r % 5 == 2));
    }

    #[test]
    fn non_converged_constituent_poisons_lhs() {
        let tol = ToleranceConfig::default();
        let pole = FnSequence::new(1.0, |r| if r == 4 { None } else { Some(c(1.0)) });
        let out = theorem21_lhs(&pole, MultisectionArgs::new(c(1.0), c(0.5)), &tol);
        assert!(!out.status.is_converged());
    }
}
