use super::{as_integer, c, is_nonpositive_integer, log_gamma, ComplexValue, NumericsError};

/// Above this many factors the rising product is replaced by a log-gamma
/// difference so `(5r)!`-sized values do not overflow mid-product.
const MAX_DIRECT_PRODUCT: i64 = 50;

/// Arguments of `(lambda)_nu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PochhammerQuery {
    pub lambda: ComplexValue,
    pub nu: ComplexValue,
}

impl PochhammerQuery {
    pub fn new(lambda: ComplexValue, nu: ComplexValue) -> Self {
        Self { lambda, nu }
    }

    pub fn rising(lambda: ComplexValue, n: u64) -> Self {
        Self { lambda, nu: c(n as f64) }
    }
}

/// The Pochhammer symbol `(lambda)_nu = Gamma(lambda + nu) / Gamma(lambda)`.
///
/// Branches, tried in order:
/// 1. `nu = 0` gives 1 (including `(0)_0 = 1`);
/// 2. `nu = n > 0`, `lambda` not in {0, -1, ...}: the rising product;
/// 3. `lambda = -k`, `nu = n <= k`: `(-1)^n k! / (k - n)!`;
/// 4. `lambda = -k`, `nu = n > k`: exactly 0;
/// 5. `nu = -n`: `(-1)^n / (1 - lambda)_n`;
/// 6. otherwise the gamma quotient, evaluated in log space.
pub fn pochhammer(q: PochhammerQuery) -> Result<ComplexValue, NumericsError> {
    let PochhammerQuery { lambda, nu } = q;
    let nu_int = as_integer(nu);
    let lambda_int = as_integer(lambda).filter(|&k| k <= 0);

    match (nu_int, lambda_int) {
        (Some(0), _) => Ok(c(1.0)),
        (Some(n), None) if n > 0 => Ok(rising_product(lambda, n)),
        (Some(n), Some(minus_k)) if n > 0 => {
            let k = -minus_k;
            if n > k {
                Ok(c(0.0))
            } else {
                // (-k)(-k+1)...(-k+n-1) = (-1)^n k!/(k-n)!, exact in floating point
                let mut acc = 1.0f64;
                for j in 0..n {
                    acc *= (j - k) as f64;
                }
                Ok(c(acc))
            }
        }
        (Some(n), _) => {
            let m = -n;
            let denom = pochhammer(PochhammerQuery::rising(c(1.0) - lambda, m as u64))?;
            if denom == c(0.0) {
                return Err(NumericsError::Pole(lambda + nu));
            }
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            Ok(c(sign) / denom)
        }
        (None, _) => gamma_quotient(lambda, nu),
    }
}

fn rising_product(lambda: ComplexValue, n: i64) -> ComplexValue {
    if n > MAX_DIRECT_PRODUCT {
        if let Ok(v) = gamma_quotient(lambda, c(n as f64)) {
            return v;
        }
    }
    let mut acc = c(1.0);
    for j in 0..n {
        acc *= lambda + j as f64;
    }
    acc
}

fn gamma_quotient(lambda: ComplexValue, nu: ComplexValue) -> Result<ComplexValue, NumericsError> {
    let top = lambda + nu;
    match (is_nonpositive_integer(top), is_nonpositive_integer(lambda)) {
        (true, true) => Err(NumericsError::UndefinedQuotient { lambda, nu }),
        (true, false) => Err(NumericsError::Pole(top)),
        (false, true) => Ok(c(0.0)),
        (false, false) => Ok((log_gamma(top)? - log_gamma(lambda)?).exp()),
    }
}

/// Arguments of the Gauss multiplication check `(b)_{mn} = m^{mn} prod_j ((b+j-1)/m)_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicationQuery {
    pub b: ComplexValue,
    pub m: u32,
    pub n: u32,
}

/// Relative difference between both sides of the Gauss multiplication formula.
///
/// The left side is one Pochhammer call, the right side `m` separate ones.
/// When the left side vanishes the absolute difference is returned.
pub fn gauss_multiplication_residual(q: MultiplicationQuery) -> Result<f64, NumericsError> {
    assert!(q.m >= 1, "multiplication order must be positive");
    let mn = u64::from(q.m) * u64::from(q.n);
    let lhs = pochhammer(PochhammerQuery::rising(q.b, mn))?;

    let m = f64::from(q.m);
    let mut rhs = c(m.powi(i32::try_from(mn).unwrap_or(i32::MAX)));
    for j in 1..=q.m {
        let shifted = (q.b + f64::from(j) - 1.0) / m;
        rhs *= pochhammer(PochhammerQuery::rising(shifted, u64::from(q.n)))?;
    }
    let diff = (lhs - rhs).norm();
    let scale = lhs.norm();
    Ok(if scale > 0.0 { diff / scale } else { diff })
}
