use super::{classify_fox_wright, FoxWrightSpec, HypergeomError, WeightedParam};
use crate::numerics::{
    as_integer, is_nonpositive_integer, log_gamma, pochhammer, ComplexValue, NumericsError, PochhammerQuery,
};
use crate::series::{sum_terms, SeriesEvaluation, ToleranceConfig};

const BOUNDARY_TERM_FACTOR: usize = 10;

fn zero() -> ComplexValue {
    ComplexValue::new(0.0, 0.0)
}

fn prepare(spec: &FoxWrightSpec, z: ComplexValue, tol: &ToleranceConfig) -> Result<(ToleranceConfig, bool), HypergeomError> {
    let diag = classify_fox_wright(spec, z);
    if !diag.classification.is_summable() {
        return Err(HypergeomError::NotSummable(diag.classification));
    }
    let boundary = diag.classification.is_boundary();
    let mut tol = *tol;
    if boundary {
        tol.max_terms = tol.max_terms.saturating_mul(BOUNDARY_TERM_FACTOR);
    }
    Ok((tol, boundary))
}

// ln of the n-th Fox-Wright term without the z^n / n! part; None on a numerator pole,
// Some(None) when a denominator pole makes the term vanish
fn ln_gamma_ratio(spec: &FoxWrightSpec, n: f64) -> Option<Option<ComplexValue>> {
    let mut acc = zero();
    for p in spec.numerator() {
        acc += log_gamma(p.value + p.weight * n).ok()?;
    }
    for p in spec.denominator() {
        match log_gamma(p.value + p.weight * n) {
            Ok(l) => acc -= l,
            Err(_) => return Some(None),
        }
    }
    Some(Some(acc))
}

/// `sum_n prod Gamma(a_i + A_i n) / prod Gamma(b_j + B_j n) z^n / n!`.
///
/// Each term is assembled as one exponential of log-gamma values. A
/// numerator pole stops the sum with `TermPole { index: n }`; a denominator
/// pole makes that term zero.
pub fn eval_fox_wright(spec: &FoxWrightSpec, z: ComplexValue, tol: &ToleranceConfig) -> Result<SeriesEvaluation, HypergeomError> {
    let reduced = spec.reduced();
    if z == zero() {
        let first = sum_terms([ln_gamma_ratio(&reduced, 0.0).map(|l| l.map_or(zero(), |v| v.exp()))], tol);
        return Ok(first);
    }
    let (tol, boundary) = prepare(spec, z, tol)?;
    let ln_z = z.ln();
    let terms = (0u64..).map(move |n| {
        let nf = n as f64;
        let ratio = ln_gamma_ratio(&reduced, nf)?;
        let Some(ratio) = ratio else { return Some(zero()) };
        let ln_fact = log_gamma(ComplexValue::new(nf + 1.0, 0.0)).expect("positive argument");
        let power = if n == 0 { zero() } else { nf * ln_z };
        Some((ratio + power - ln_fact).exp())
    });
    let mut out = sum_terms(terms, &tol);
    out.low_confidence = boundary;
    Ok(out)
}

/// `prod Gamma(a_i) / prod Gamma(b_j)`, the factor relating psi to psi*.
pub fn fox_wright_normalizer(spec: &FoxWrightSpec) -> Result<ComplexValue, HypergeomError> {
    let reduced = spec.reduced();
    check_normalizable(&reduced)?;
    let mut acc = zero();
    for p in reduced.numerator() {
        acc += log_gamma(p.value).expect("checked above");
    }
    for p in reduced.denominator() {
        acc -= log_gamma(p.value).expect("checked above");
    }
    Ok(acc.exp())
}

fn check_normalizable(spec: &FoxWrightSpec) -> Result<(), HypergeomError> {
    if let Some(p) = spec.numerator().iter().chain(spec.denominator()).find(|p| is_nonpositive_integer(p.value)) {
        return Err(HypergeomError::SpecInvalid(format!(
            "parameter {} sits on a gamma pole, so psi* is undefined",
            p.value
        )));
    }
    Ok(())
}

fn positive_integer_weight(p: &WeightedParam) -> Option<u64> {
    as_integer(ComplexValue::new(p.weight, 0.0)).filter(|&k| k > 0).map(|k| k as u64)
}

/// `psi* = sum_n prod (a_i)_{A_i n} / prod (b_j)_{B_j n} z^n / n!`.
///
/// With positive integer weights the Pochhammer ratios are carried by
/// their term-to-term ratio; otherwise each term calls [`pochhammer`].
pub fn eval_fox_wright_normalized(
    spec: &FoxWrightSpec,
    z: ComplexValue,
    tol: &ToleranceConfig,
) -> Result<SeriesEvaluation, HypergeomError> {
    let reduced = spec.reduced();
    check_normalizable(&reduced)?;
    if z == zero() {
        return Ok(SeriesEvaluation::exact(ComplexValue::new(1.0, 0.0)));
    }
    let (tol, boundary) = prepare(spec, z, tol)?;

    let integer_weights: Option<Vec<u64>> = reduced.numerator().iter().map(positive_integer_weight).collect();
    let den_weights: Option<Vec<u64>> = reduced.denominator().iter().map(positive_integer_weight).collect();

    let mut out = match (integer_weights, den_weights) {
        (Some(nw), Some(dw)) => {
            let mut term = ComplexValue::new(1.0, 0.0);
            let terms = (0u64..).map(move |n| {
                if n > 0 {
                    // (a)_{A n} / (a)_{A (n-1)} = prod_{k < A} (a + A (n-1) + k)
                    let step = |p: &WeightedParam, w: u64| -> ComplexValue {
                        (0..w).map(|k| p.value + (w * (n - 1) + k) as f64).product()
                    };
                    let up: ComplexValue = reduced.numerator().iter().zip(&nw).map(|(p, &w)| step(p, w)).product();
                    let down: ComplexValue = reduced.denominator().iter().zip(&dw).map(|(p, &w)| step(p, w)).product();
                    term *= up / down * z / n as f64;
                }
                Some(term)
            });
            sum_terms(terms, &tol)
        }
        _ => {
            let mut power = ComplexValue::new(1.0, 0.0);
            let terms = (0u64..).map(move |n| {
                if n > 0 {
                    power *= z / n as f64;
                }
                let mut acc = power;
                for p in reduced.numerator() {
                    acc *= pochhammer(PochhammerQuery::new(p.value, ComplexValue::new(p.weight * n as f64, 0.0))).ok()?;
                }
                for p in reduced.denominator() {
                    match pochhammer(PochhammerQuery::new(p.value, ComplexValue::new(p.weight * n as f64, 0.0))) {
                        Ok(v) => acc /= v,
                        // (b)_{Bn} infinite: the term vanishes
                        Err(NumericsError::Pole(_)) => return Some(zero()),
                        Err(_) => return None,
                    }
                }
                Some(acc)
            });
            sum_terms(terms, &tol)
        }
    };
    out.low_confidence = boundary;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::{eval_pfq, PfqSpec};
    use crate::numerics::{approx_eq, c, gamma};
    use crate::series::SeriesStatus;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn fw(num: &[(f64, f64)], den: &[(f64, f64)]) -> FoxWrightSpec {
        let lift = |xs: &[(f64, f64)]| xs.iter().map(|&(v, w)| WeightedParam::real(v, w)).collect();
        FoxWrightSpec::new(lift(num), lift(den)).unwrap()
    }

    #[test]
    fn exponential_closed_form() {
        // (1,1);(2,1) at z: (e^z - 1) / z
        let spec = fw(&[(1.0, 1.0)], &[(2.0, 1.0)]);
        let v = eval_fox_wright(&spec, c(1.0), &tol()).unwrap();
        assert!((v.value.re - (std::f64::consts::E - 1.0)).abs() < 1e-14);
        assert!((v.value.re - 1.718_281_828_459_045).abs() < 1e-14);
        let z = ComplexValue::new(-2.0, 1.5);
        let v = eval_fox_wright(&spec, z, &tol()).unwrap();
        assert!(approx_eq(v.value, (z.exp() - 1.0) / z, 1e-14));
    }

    #[test]
    fn zero_argument() {
        let spec = fw(&[(0.5, 2.0), (3.0, 1.0)], &[(1.5, 0.5)]);
        let v = eval_fox_wright(&spec, c(0.0), &tol()).unwrap();
        let expect = gamma(c(0.5)).unwrap() * gamma(c(3.0)).unwrap() / gamma(c(1.5)).unwrap();
        assert!(approx_eq(v.value, expect, 1e-14));
        assert_eq!(eval_fox_wright_normalized(&spec, c(0.0), &tol()).unwrap().value, c(1.0));
    }

    #[test]
    fn error_function_case() {
        // (1/2,1);(3/2,1) at -t^2 is Gamma(1/2)/Gamma(3/2) 1F1(1/2;3/2;-t^2) = sqrt(pi) erf(t) / t
        let spec = fw(&[(0.5, 1.0)], &[(1.5, 1.0)]);
        let v = eval_fox_wright(&spec, c(-0.25), &tol()).unwrap();
        // erf(0.5) from its own Maclaurin series, summed independently here
        let t = 0.5f64;
        let mut erf = 0.0;
        let mut fact = 1.0;
        for n in 0..30 {
            if n > 0 {
                fact *= n as f64;
            }
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            erf += sign * t.powi(2 * n + 1) / (fact * (2 * n + 1) as f64);
        }
        erf *= 2.0 / std::f64::consts::PI.sqrt();
        assert!((erf - 0.520_499_877_813_046_5).abs() < 1e-15);
        let expect = std::f64::consts::PI.sqrt() * erf / t;
        assert!((v.value.re - expect).abs() < 1e-14, "{} vs {expect}", v.value);
    }

    #[test]
    fn normalized_brute_force() {
        // (1,2);(1,1) at 0.1: sum (2n)!/n! 0.1^n / n!
        let spec = fw(&[(1.0, 2.0)], &[(1.0, 1.0)]);
        let v = eval_fox_wright_normalized(&spec, c(0.1), &tol()).unwrap();
        let mut brute = 0.0;
        for n in 0..30i32 {
            let two_n: f64 = (1..=2 * n).map(f64::from).product();
            let n_fact: f64 = (1..=n).map(f64::from).product();
            brute += two_n / (n_fact * n_fact) * 0.1f64.powi(n);
        }
        // central binomial generating function 1/sqrt(1 - 4z)
        assert!((brute - 1.0 / 0.6f64.sqrt()).abs() < 1e-6);
        assert!(v.value.re > brute);
        assert!((v.value.re - 1.0 / 0.6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn unit_weights_match_pfq() {
        let pfq = PfqSpec::real(&[0.7, 1.3], &[2.1]).unwrap();
        let spec = FoxWrightSpec::unit_weights(&pfq);
        let z = ComplexValue::new(0.3, -0.2);
        let a = eval_fox_wright_normalized(&spec, z, &tol()).unwrap();
        let b = eval_pfq(&pfq, z, &tol()).unwrap();
        assert!(approx_eq(a.value, b.value, 1e-14));
        let psi = eval_fox_wright(&spec, z, &tol()).unwrap();
        let norm = fox_wright_normalizer(&spec).unwrap();
        assert!(approx_eq(psi.value, norm * a.value, 1e-13));
    }

    #[test]
    fn half_weights_use_pochhammer_path() {
        let spec = fw(&[(0.8, 0.5), (1.2, 1.0)], &[(1.7, 2.0)]);
        let z = ComplexValue::new(0.4, 0.1);
        let star = eval_fox_wright_normalized(&spec, z, &tol()).unwrap();
        let psi = eval_fox_wright(&spec, z, &tol()).unwrap();
        assert!(star.status.is_converged() && psi.status.is_converged());
        assert!(approx_eq(psi.value, fox_wright_normalizer(&spec).unwrap() * star.value, 1e-12));
    }

    #[test]
    fn numerator_pole_reports_index() {
        // Gamma(2.5 - 0.5 n) hits a pole at n = 5
        let spec = fw(&[(2.5, -0.5)], &[(1.0, 1.0)]);
        let v = eval_fox_wright(&spec, c(0.2), &tol()).unwrap();
        assert_eq!(v.status, SeriesStatus::TermPole { index: 5 });
        // denominator pole: 1/Gamma(-1 + n) vanishes for n = 0, 1
        let spec = fw(&[(1.0, 1.0)], &[(-1.0, 1.0)]);
        let v = eval_fox_wright(&spec, c(0.5), &tol()).unwrap();
        assert!(v.status.is_converged());
        // sum_{n>=2} z^n / (n-2)! = z^2 e^z
        assert!(approx_eq(v.value, c(0.25 * 0.5f64.exp()), 1e-14));
        assert!(eval_fox_wright_normalized(&spec, c(0.5), &tol()).is_err());
    }

    #[test]
    fn unsupported_regime_rejected() {
        let spec = fw(&[(1.0, 2.0)], &[]);
        assert!(matches!(eval_fox_wright(&spec, c(0.1), &tol()), Err(HypergeomError::NotSummable(_))));
    }
}
