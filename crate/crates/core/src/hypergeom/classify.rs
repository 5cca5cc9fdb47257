use super::{Classification, ConvergenceDiagnostics, FoxWrightSpec, PfqSpec};
use crate::numerics::ComplexValue;

/// `|z|` within this distance of the critical radius counts as on the boundary.
pub(crate) const BOUNDARY_TOL: f64 = 1e-12;

fn starred(num: &[(ComplexValue, f64)], den: &[(ComplexValue, f64)]) -> (f64, f64, ComplexValue) {
    let delta_star = den.iter().map(|p| p.1).sum::<f64>() - num.iter().map(|p| p.1).sum::<f64>();
    let ln_delta_small: f64 = den.iter().map(|&(_, w)| w * w.abs().ln()).sum::<f64>()
        - num.iter().map(|&(_, w)| w * w.abs().ln()).sum::<f64>();
    let half_pq = (num.len() as f64 - den.len() as f64) / 2.0;
    let mu_star = den.iter().map(|p| p.0).sum::<ComplexValue>() - num.iter().map(|p| p.0).sum::<ComplexValue>() + half_pq;
    (delta_star, ln_delta_small.exp(), mu_star)
}

/// Convergence class of `pFq` at `z`, with `omega = sum beta - sum alpha`.
///
/// Terminating series (some `alpha_i` a nonpositive integer) are polynomials
/// and classify as entire whatever `p` and `q` are.
pub fn classify_pfq(spec: &PfqSpec, z: ComplexValue) -> ConvergenceDiagnostics {
    let unit = |xs: &[ComplexValue]| xs.iter().map(|&v| (v, 1.0)).collect::<Vec<_>>();
    let (delta_star, delta_small_star, mu_star) = starred(&unit(spec.numerator()), &unit(spec.denominator()));
    let omega = spec.denominator().iter().sum::<ComplexValue>() - spec.numerator().iter().sum::<ComplexValue>();

    let (p, q) = (spec.p(), spec.q());
    let r = z.norm();
    let classification = if spec.terminating_degree().is_some() || p <= q {
        Classification::Entire
    } else if p > q + 1 {
        Classification::Divergent
    } else if r < 1.0 - BOUNDARY_TOL {
        Classification::UnitDisk
    } else if (r - 1.0).abs() <= BOUNDARY_TOL {
        let at_one = (z - 1.0).norm() <= BOUNDARY_TOL;
        if omega.re > 0.0 {
            Classification::BoundaryAbs
        } else if omega.re > -1.0 && !at_one {
            Classification::BoundaryCond
        } else {
            Classification::Divergent
        }
    } else {
        Classification::Divergent
    };

    ConvergenceDiagnostics {
        omega: Some(omega),
        delta_star,
        delta_small_star,
        mu_star,
        sigma_star: 1.0 - delta_star,
        classification,
    }
}

/// Left-loop (Case I) classification of the Fox-Wright series at `z`.
///
/// Regimes that need the right-loop or vertical contour are reported as
/// unsupported; `Delta* = -1` on the critical circle with `Re mu* <= 1/2`
/// is divergent.
pub fn classify_fox_wright(spec: &FoxWrightSpec, z: ComplexValue) -> ConvergenceDiagnostics {
    let pairs = |xs: &[super::WeightedParam]| xs.iter().map(|p| (p.value, p.weight)).collect::<Vec<_>>();
    let (delta_star, delta_small_star, mu_star) = starred(&pairs(spec.numerator()), &pairs(spec.denominator()));

    let r = z.norm();
    let critical = (delta_star + 1.0).abs() <= BOUNDARY_TOL;
    let classification = if delta_star > -1.0 && !critical {
        Classification::Entire
    } else if !critical {
        Classification::CaseIIIIIUnsupported
    } else if r < delta_small_star * (1.0 - BOUNDARY_TOL) {
        Classification::UnitDisk
    } else if (r - delta_small_star).abs() <= BOUNDARY_TOL * delta_small_star.max(1.0) {
        if mu_star.re > 0.5 {
            Classification::BoundaryAbs
        } else {
            Classification::Divergent
        }
    } else {
        Classification::CaseIIIIIUnsupported
    };

    ConvergenceDiagnostics {
        omega: None,
        delta_star,
        delta_small_star,
        mu_star,
        sigma_star: 1.0 - delta_star,
        classification,
    }
}
