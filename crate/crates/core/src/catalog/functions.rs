//! The eleven tabulated functions, each twice: as a hypergeometric
//! representation and as an independent oracle.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::CatalogError;
use crate::hypergeom::{eval_pfq, PfqSpec};
use crate::numerics::{is_nonpositive_integer, principal_pow, ComplexValue};
use crate::series::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialFunctionId {
    Arcsin,
    Arctan,
    Sin,
    Cos,
    ArcsinSquared,
    /// `(2 / (1 + sqrt(1 - x^2)))^{2 gamma - 1}`
    ConformalPower { gamma: f64 },
    /// Complete elliptic integral of the first kind, modulus `x`.
    K,
    /// Complete elliptic integral of the second kind, modulus `x`.
    E,
    Erf,
    /// `gamma(a, x^2)`
    LowerIncompleteGamma { a: f64 },
    /// `Li_2(x^2)`
    Dilog,
}

impl SpecialFunctionId {
    /// One representative of every tag, parameters at their catalog defaults.
    pub const ALL: [SpecialFunctionId; 11] = [
        SpecialFunctionId::Arcsin,
        SpecialFunctionId::Arctan,
        SpecialFunctionId::Sin,
        SpecialFunctionId::Cos,
        SpecialFunctionId::ArcsinSquared,
        SpecialFunctionId::ConformalPower { gamma: 1.0 },
        SpecialFunctionId::K,
        SpecialFunctionId::E,
        SpecialFunctionId::Erf,
        SpecialFunctionId::LowerIncompleteGamma { a: 0.5 },
        SpecialFunctionId::Dilog,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            SpecialFunctionId::Arcsin => "arcsin",
            SpecialFunctionId::Arctan => "arctan",
            SpecialFunctionId::Sin => "sin",
            SpecialFunctionId::Cos => "cos",
            SpecialFunctionId::ArcsinSquared => "arcsin-squared",
            SpecialFunctionId::ConformalPower { .. } => "conformal-power",
            SpecialFunctionId::K => "K",
            SpecialFunctionId::E => "E",
            SpecialFunctionId::Erf => "erf",
            SpecialFunctionId::LowerIncompleteGamma { .. } => "lower-incomplete-gamma",
            SpecialFunctionId::Dilog => "dilog",
        }
    }

    pub fn parameter(&self) -> Option<f64> {
        match *self {
            SpecialFunctionId::ConformalPower { gamma } => Some(gamma),
            SpecialFunctionId::LowerIncompleteGamma { a } => Some(a),
            _ => None,
        }
    }

    /// Same tag with its parameter replaced; unparametrized tags are returned unchanged.
    pub fn with_parameter(self, value: f64) -> Self {
        match self {
            SpecialFunctionId::ConformalPower { .. } => SpecialFunctionId::ConformalPower { gamma: value },
            SpecialFunctionId::LowerIncompleteGamma { .. } => SpecialFunctionId::LowerIncompleteGamma { a: value },
            other => other,
        }
    }

    /// Representations built on `2F1` or `3F2` need `|x| < 1`.
    pub fn disk_limited(&self) -> bool {
        !matches!(
            self,
            SpecialFunctionId::Sin
                | SpecialFunctionId::Cos
                | SpecialFunctionId::Erf
                | SpecialFunctionId::LowerIncompleteGamma { .. }
        )
    }
}

impl fmt::Display for SpecialFunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(p) => write!(f, "{}:{}", self.tag(), p),
            None => f.write_str(self.tag()),
        }
    }
}

impl FromStr for SpecialFunctionId {
    type Err = CatalogError;

    /// `NAME` or `NAME:PARAM`; `conformal` and `incgamma` are accepted as short tags.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => {
                let v: f64 = p
                    .trim()
                    .parse()
                    .map_err(|_| CatalogError::UnknownFunction(format!("bad parameter in '{s}'")))?;
                (n.trim(), Some(v))
            }
            None => (s.trim(), None),
        };
        let base = match name {
            "conformal" => SpecialFunctionId::ConformalPower { gamma: 1.0 },
            "incgamma" => SpecialFunctionId::LowerIncompleteGamma { a: 0.5 },
            other => SpecialFunctionId::ALL
                .into_iter()
                .find(|f| f.tag() == other)
                .ok_or_else(|| CatalogError::UnknownFunction(other.to_string()))?,
        };
        match (param, base.parameter()) {
            (Some(v), Some(_)) => Ok(base.with_parameter(v)),
            (Some(_), None) => Err(CatalogError::UnknownFunction(format!("{name} takes no parameter"))),
            (None, _) => Ok(base),
        }
    }
}

fn c(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

fn check_parameter(f: SpecialFunctionId) -> Result<(), CatalogError> {
    match f {
        SpecialFunctionId::LowerIncompleteGamma { a } if is_nonpositive_integer(c(a)) => {
            Err(CatalogError::Domain(format!("incomplete gamma needs a not in {{0, -1, ...}}, got {a}")))
        }
        SpecialFunctionId::ConformalPower { gamma } if is_nonpositive_integer(c(2.0 * gamma)) => {
            Err(CatalogError::Domain(format!("conformal power needs 2 gamma not in {{0, -1, ...}}, got {gamma}")))
        }
        _ => Ok(()),
    }
}

/// `prefactor(x) * pFq(row parameters; argument(x))`.
pub fn eval_by_representation(
    f: SpecialFunctionId,
    x: ComplexValue,
    tol: &ToleranceConfig,
) -> Result<ComplexValue, CatalogError> {
    check_parameter(f)?;
    if f.disk_limited() && x.norm() >= 1.0 {
        return Err(CatalogError::Domain(format!("{} representation needs |x| < 1, got |x| = {}", f.tag(), x.norm())));
    }
    let x2 = x * x;
    let (num, den, z, pre): (Vec<f64>, Vec<f64>, ComplexValue, ComplexValue) = match f {
        SpecialFunctionId::Arcsin => (vec![0.5, 0.5], vec![1.5], x2, x),
        SpecialFunctionId::Arctan => (vec![1.0, 0.5], vec![1.5], -x2, x),
        SpecialFunctionId::Sin => (vec![], vec![1.5], -x2 / 4.0, x),
        SpecialFunctionId::Cos => (vec![], vec![0.5], -x2 / 4.0, c(1.0)),
        SpecialFunctionId::ArcsinSquared => (vec![1.0, 1.0, 1.0], vec![2.0, 1.5], x2, x2),
        SpecialFunctionId::ConformalPower { gamma } => (vec![gamma, gamma - 0.5], vec![2.0 * gamma], x2, c(1.0)),
        SpecialFunctionId::K => (vec![0.5, 0.5], vec![1.0], x2, c(PI / 2.0)),
        SpecialFunctionId::E => (vec![-0.5, 0.5], vec![1.0], x2, c(PI / 2.0)),
        SpecialFunctionId::Erf => (vec![0.5], vec![1.5], -x2, 2.0 * x / PI.sqrt()),
        SpecialFunctionId::LowerIncompleteGamma { a } => (vec![a], vec![1.0 + a], -x2, principal_pow(x2, c(a)) / a),
        SpecialFunctionId::Dilog => (vec![1.0, 1.0, 1.0], vec![2.0, 2.0], x2, x2),
    };
    let spec = PfqSpec::real(&num, &den)?;
    let ev = eval_pfq(&spec, z, tol)?;
    if !ev.status.is_converged() {
        return Err(CatalogError::NotConverged(ev.status));
    }
    Ok(pre * ev.value)
}

/// Independent evaluation that never touches the hypergeometric engine.
///
/// Trigonometric and inverse trigonometric rows come from the complex
/// scalar library; erf and the incomplete gamma from their Kummer-transformed
/// series; K and E from the arithmetic-geometric mean; `Li_2` from the
/// Bernoulli series in `-ln(1 - z)`.
pub fn eval_oracle(f: SpecialFunctionId, x: ComplexValue) -> Result<ComplexValue, CatalogError> {
    check_parameter(f)?;
    let x2 = x * x;
    match f {
        SpecialFunctionId::Arcsin => Ok(x.asin()),
        SpecialFunctionId::Arctan => Ok(x.atan()),
        SpecialFunctionId::Sin => Ok(x.sin()),
        SpecialFunctionId::Cos => Ok(x.cos()),
        SpecialFunctionId::ArcsinSquared => Ok(x.asin().powu(2)),
        SpecialFunctionId::ConformalPower { gamma } => {
            let base = 2.0 / (1.0 + (1.0 - x2).sqrt());
            Ok(principal_pow(base, c(2.0 * gamma - 1.0)))
        }
        SpecialFunctionId::K => elliptic_agm(x2).map(|(k, _)| k),
        SpecialFunctionId::E => elliptic_agm(x2).map(|(_, e)| e),
        SpecialFunctionId::Erf => Ok(erf_kummer(x)),
        SpecialFunctionId::LowerIncompleteGamma { a } => Ok(lower_gamma_kummer(a, x2)),
        SpecialFunctionId::Dilog => dilog(x2),
    }
}

const ORACLE_EPS: f64 = 1e-17;
const ORACLE_MAX_TERMS: usize = 2000;

// erf z = 2z/sqrt(pi) e^{-z^2} sum (2z^2)^n / (2n+1)!!
fn erf_kummer(z: ComplexValue) -> ComplexValue {
    let w = 2.0 * z * z;
    let mut term = c(1.0);
    let mut sum = term;
    for n in 1..ORACLE_MAX_TERMS {
        term *= w / (2 * n + 1) as f64;
        sum += term;
        if term.norm() <= ORACLE_EPS * sum.norm() {
            break;
        }
    }
    2.0 * z / PI.sqrt() * (-z * z).exp() * sum
}

// gamma(a, t) = t^a e^{-t} sum t^n / (a)_{n+1}
fn lower_gamma_kummer(a: f64, t: ComplexValue) -> ComplexValue {
    let mut term = c(1.0 / a);
    let mut sum = term;
    for n in 1..ORACLE_MAX_TERMS {
        term *= t / (a + n as f64);
        sum += term;
        if term.norm() <= ORACLE_EPS * sum.norm() {
            break;
        }
    }
    principal_pow(t, c(a)) * (-t).exp() * sum
}

/// `(K(m), E(m))` with `m = k^2` by the arithmetic-geometric mean.
fn elliptic_agm(m: ComplexValue) -> Result<(ComplexValue, ComplexValue), CatalogError> {
    if m.im == 0.0 && m.re >= 1.0 {
        return Err(CatalogError::Domain(format!("elliptic integrals need m off [1, inf), got m = {}", m.re)));
    }
    let mut a = c(1.0);
    let mut b = (1.0 - m).sqrt();
    // sum 2^{n-1} c_n^2 with c_0^2 = m
    let mut weighted = 0.5 * m;
    let mut scale = 0.5;
    for _ in 0..64 {
        let cn = (a - b) / 2.0;
        let next_a = (a + b) / 2.0;
        let mut next_b = (a * b).sqrt();
        // pick the root closer to the arithmetic mean so the iteration stays on the right branch
        if (next_a - next_b).norm() > (next_a + next_b).norm() {
            next_b = -next_b;
        }
        scale *= 2.0;
        weighted += scale * cn * cn;
        a = next_a;
        b = next_b;
        if (a - b).norm() <= 1e-16 * a.norm() {
            break;
        }
    }
    let k = PI / (2.0 * a);
    Ok((k, k * (1.0 - weighted)))
}

// B_n / n! for n < count, by sum_{k<=n} b_k / (n+1-k)! = 0
fn scaled_bernoulli(count: usize) -> Vec<f64> {
    let mut inv_fact = vec![1.0f64; count + 2];
    for n in 1..inv_fact.len() {
        inv_fact[n] = inv_fact[n - 1] / n as f64;
    }
    let mut b = vec![0.0f64; count];
    b[0] = 1.0;
    for n in 1..count {
        let s: f64 = (0..n).map(|k| b[k] * inv_fact[n + 1 - k]).sum();
        b[n] = -s / inv_fact[1];
    }
    b
}

/// `Li_2(z)` for `|z| <= 1`.
fn dilog(z: ComplexValue) -> Result<ComplexValue, CatalogError> {
    if z.norm() > 1.0 + 1e-15 {
        return Err(CatalogError::Domain(format!("dilogarithm oracle needs |z| <= 1, got {}", z.norm())));
    }
    if z == c(1.0) {
        return Ok(c(PI * PI / 6.0));
    }
    if z.re > 0.5 {
        // Li2(z) = pi^2/6 - ln z ln(1-z) - Li2(1-z)
        let w = 1.0 - z;
        let head = if z == c(0.0) { c(0.0) } else { z.ln() * w.ln() };
        return Ok(PI * PI / 6.0 - head - dilog_bernoulli(w));
    }
    Ok(dilog_bernoulli(z))
}

// sum_n B_n u^{n+1} / (n+1)!, u = -ln(1-z), valid for |u| < 2 pi
fn dilog_bernoulli(z: ComplexValue) -> ComplexValue {
    let b = scaled_bernoulli(60);
    let u = -(1.0 - z).ln();
    let mut power = u;
    let mut sum = c(0.0);
    for (n, &bn) in b.iter().enumerate() {
        let term = bn * power / (n + 1) as f64;
        sum += term;
        // odd-index Bernoulli numbers past B_1 vanish, so test the power, not the term
        if n > 2 && power.norm() / (n + 1) as f64 * (2.0 * PI).powi(-(n as i32)) <= ORACLE_EPS * sum.norm() {
            break;
        }
        power *= u;
    }
    sum
}
