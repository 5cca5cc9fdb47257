use std::f64::consts::PI;

use super::ComplexValue;

/// Order of every multisection in this crate.
pub const MULTISECTION_ORDER: i64 = 5;

/// `exp(2 pi i power / order)` with the order fixed at 5.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOfUnity {
    pub power: i64,
}

impl RootOfUnity {
    pub fn new(power: i64) -> Self {
        Self { power }
    }

    pub fn order(&self) -> i64 {
        MULTISECTION_ORDER
    }

    pub fn value(&self) -> ComplexValue {
        fifth_root(self.power)
    }
}

/// `alpha^power` for `alpha = exp(2 pi i / 5)`; the power is reduced mod 5
/// first so the result is one of five fixed points on the unit circle.
pub fn fifth_root(power: i64) -> ComplexValue {
    let k = power.rem_euclid(MULTISECTION_ORDER);
    if k == 0 {
        return ComplexValue::new(1.0, 0.0);
    }
    let theta = 2.0 * PI * k as f64 / MULTISECTION_ORDER as f64;
    ComplexValue::new(theta.cos(), theta.sin())
}

/// `1 + alpha^{2r} + alpha^{4r} + alpha^{6r} + alpha^{8r}`: 5 when `5 | r`, else 0.
pub fn identity_one_sum(r: u64) -> f64 {
    let residue = if r.is_multiple_of(5) { 5.0 } else { 0.0 };
    let direct = direct_root_sum(|k| 2 * k * r);
    assert!(
        (direct - ComplexValue::new(residue, 0.0)).norm() < 1e-12,
        "root sum disagrees with residue test at r = {r}: {direct}"
    );
    residue
}

/// `1 + alpha^{2r+1} + alpha^{4r+2} + alpha^{6r+3} + alpha^{8r+4}`: 5 when `r = 2 (mod 5)`, else 0.
pub fn identity_two_sum(r: u64) -> f64 {
    let residue = if r % 5 == 2 { 5.0 } else { 0.0 };
    let direct = direct_root_sum(|k| k * (2 * r + 1));
    assert!(
        (direct - ComplexValue::new(residue, 0.0)).norm() < 1e-12,
        "root sum disagrees with residue test at r = {r}: {direct}"
    );
    residue
}

// sum over k = 0..4 of alpha^{exponent(k)}, powers taken by repeated squaring
// of the unreduced root so the check does not lean on the mod-5 reduction
fn direct_root_sum(exponent: impl Fn(u64) -> u64) -> ComplexValue {
    let alpha = ComplexValue::from_polar(1.0, 2.0 * PI / 5.0);
    (0..5u64)
        .map(|k| alpha.powu(u32::try_from(exponent(k)).expect("exponent fits u32")))
        .sum()
}
