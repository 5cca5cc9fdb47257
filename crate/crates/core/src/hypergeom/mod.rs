//! Generalized hypergeometric `pFq`, the Fox-Wright function and its
//! normalized form, plus the convergence classification that gates them.

mod classify;
mod fox_wright;
mod pfq;

pub use classify::{classify_fox_wright, classify_pfq};
pub use fox_wright::{eval_fox_wright, eval_fox_wright_normalized, fox_wright_normalizer};
pub use pfq::eval_pfq;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{is_nonpositive_integer, ComplexValue};

// numerator/denominator entries closer than this are cancelled
const CANCEL_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypergeomError {
    #[error("invalid spec: {0}")]
    SpecInvalid(String),
    #[error("series cannot be summed here (classification {0})")]
    NotSummable(Classification),
}

/// Parameter lists of `pFq(alpha_1..alpha_p; beta_1..beta_q; z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    numerator: Vec<ComplexValue>,
    denominator: Vec<ComplexValue>,
}

impl PfqSpec {
    pub fn new(numerator: Vec<ComplexValue>, denominator: Vec<ComplexValue>) -> Result<Self, HypergeomError> {
        if let Some(b) = denominator.iter().find(|b| is_nonpositive_integer(**b)) {
            return Err(HypergeomError::SpecInvalid(format!("denominator parameter {b} is a nonpositive integer")));
        }
        if numerator.iter().chain(&denominator).any(|v| !v.is_finite()) {
            return Err(HypergeomError::SpecInvalid("non-finite parameter".into()));
        }
        Ok(Self { numerator, denominator })
    }

    /// Real-parameter shorthand.
    pub fn real(numerator: &[f64], denominator: &[f64]) -> Result<Self, HypergeomError> {
        Self::new(
            numerator.iter().map(|&a| ComplexValue::new(a, 0.0)).collect(),
            denominator.iter().map(|&b| ComplexValue::new(b, 0.0)).collect(),
        )
    }

    pub fn numerator(&self) -> &[ComplexValue] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[ComplexValue] {
        &self.denominator
    }

    pub fn p(&self) -> usize {
        self.numerator.len()
    }

    pub fn q(&self) -> usize {
        self.denominator.len()
    }

    /// Smallest `m` with some `alpha_i = -m`: the series is a polynomial of degree `m`.
    pub fn terminating_degree(&self) -> Option<u64> {
        self.numerator
            .iter()
            .filter_map(|a| crate::numerics::as_integer(*a).filter(|&k| k <= 0))
            .map(|k| k.unsigned_abs())
            .min()
    }

    // equal numerator/denominator pairs removed
    fn reduced(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = Vec::with_capacity(self.denominator.len());
        for &b in &self.denominator {
            match num.iter().position(|&a| (a - b).norm() <= CANCEL_TOL * (1.0 + b.norm())) {
                Some(i) => {
                    num.remove(i);
                }
                None => den.push(b),
            }
        }
        Self { numerator: num, denominator: den }
    }
}

impl fmt::Display for PfqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}F{}[", self.p(), self.q())?;
        write_list(f, &self.numerator)?;
        f.write_str("; ")?;
        write_list(f, &self.denominator)?;
        f.write_str("]")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[ComplexValue]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        if x.im == 0.0 {
            write!(f, "{}", x.re)?;
        } else {
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

/// One `(a, A)` pair of a Fox-Wright parameter list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedParam {
    pub value: ComplexValue,
    pub weight: f64,
}

impl WeightedParam {
    pub fn new(value: ComplexValue, weight: f64) -> Self {
        Self { value, weight }
    }

    pub fn real(value: f64, weight: f64) -> Self {
        Self { value: ComplexValue::new(value, 0.0), weight }
    }
}

/// Parameter lists of `pPsi_q[(a_i, A_i); (b_j, B_j); z]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightSpec {
    numerator: Vec<WeightedParam>,
    denominator: Vec<WeightedParam>,
}

impl FoxWrightSpec {
    pub fn new(numerator: Vec<WeightedParam>, denominator: Vec<WeightedParam>) -> Result<Self, HypergeomError> {
        for p in numerator.iter().chain(&denominator) {
            if p.weight == 0.0 || !p.weight.is_finite() {
                return Err(HypergeomError::SpecInvalid(format!("weight of parameter {} must be nonzero", p.value)));
            }
            if !p.value.is_finite() {
                return Err(HypergeomError::SpecInvalid("non-finite parameter".into()));
            }
        }
        Ok(Self { numerator, denominator })
    }

    /// The `pFq` parameters with every weight set to 1.
    pub fn unit_weights(spec: &PfqSpec) -> Self {
        let lift = |xs: &[ComplexValue]| xs.iter().map(|&v| WeightedParam::new(v, 1.0)).collect();
        Self { numerator: lift(spec.numerator()), denominator: lift(spec.denominator()) }
    }

    pub fn numerator(&self) -> &[WeightedParam] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[WeightedParam] {
        &self.denominator
    }

    pub fn p(&self) -> usize {
        self.numerator.len()
    }

    pub fn q(&self) -> usize {
        self.denominator.len()
    }

    fn reduced(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = Vec::with_capacity(self.denominator.len());
        for &b in &self.denominator {
            let hit = num.iter().position(|a| {
                a.weight == b.weight && (a.value - b.value).norm() <= CANCEL_TOL * (1.0 + b.value.norm())
            });
            match hit {
                Some(i) => {
                    num.remove(i);
                }
                None => den.push(b),
            }
        }
        Self { numerator: num, denominator: den }
    }
}

impl fmt::Display for FoxWrightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, xs: &[WeightedParam]| -> fmt::Result {
            for (i, p) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                if p.value.im == 0.0 {
                    write!(f, "({}:{})", p.value.re, p.weight)?;
                } else {
                    write!(f, "({}:{})", p.value, p.weight)?;
                }
            }
            Ok(())
        };
        write!(f, "{}Psi{}[", self.p(), self.q())?;
        list(f, &self.numerator)?;
        f.write_str("; ")?;
        list(f, &self.denominator)?;
        f.write_str("]")
    }
}

/// Where a series sits relative to its region of convergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Entire,
    UnitDisk,
    BoundaryAbs,
    BoundaryCond,
    Divergent,
    #[serde(rename = "case-II-III-unsupported")]
    CaseIIIIIUnsupported,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Entire => "entire",
            Classification::UnitDisk => "unit-disk",
            Classification::BoundaryAbs => "boundary-abs",
            Classification::BoundaryCond => "boundary-cond",
            Classification::Divergent => "divergent",
            Classification::CaseIIIIIUnsupported => "case-II-III-unsupported",
        }
    }

    /// True when the series may be summed term by term.
    pub fn is_summable(&self) -> bool {
        !matches!(self, Classification::Divergent | Classification::CaseIIIIIUnsupported)
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, Classification::BoundaryAbs | Classification::BoundaryCond)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `omega` is only defined for `pFq`; the starred quantities use unit
/// weights there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceDiagnostics {
    pub omega: Option<ComplexValue>,
    /// `Delta* = sum B - sum A`
    pub delta_star: f64,
    /// `delta* = prod |A|^{-A} prod |B|^{B}`
    pub delta_small_star: f64,
    /// `mu* = sum b - sum a + (p - q)/2`
    pub mu_star: ComplexValue,
    /// `sigma* = 1 - Delta*`
    pub sigma_star: f64,
    pub classification: Classification,
}
