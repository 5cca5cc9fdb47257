//! The six multisection theorems checked on one spec each.

use quintsect::hypergeom::{FoxWrightSpec, PfqSpec, WeightedParam};
use quintsect::identity::{check_identity, transformed_series, SeriesSpec, TheoremId, TheoremInstance};
use quintsect::numerics::ComplexValue;
use quintsect::series::ToleranceConfig;

fn main() {
    let tol = ToleranceConfig::default();
    let pfq = SeriesSpec::Pfq(PfqSpec::real(&[0.7], &[1.3, 2.1]).unwrap());
    let psi = SeriesSpec::FoxWright(
        FoxWrightSpec::new(vec![WeightedParam::real(0.7, 1.0)], vec![WeightedParam::real(1.3, 1.0), WeightedParam::real(2.1, 1.0)])
            .unwrap(),
    );
    let c = ComplexValue::new(-0.6, 0.2);
    let x = ComplexValue::new(1.1, 0.0);
    for theorem in TheoremId::ALL {
        let spec = if matches!(theorem, TheoremId::PfqEven | TheoremId::PfqWeighted) { pfq.clone() } else { psi.clone() };
        let inst = TheoremInstance::new(theorem, spec, c, x).unwrap();
        let t = transformed_series(&inst).unwrap();
        let r = check_identity(&inst, &tol, 1e-10);
        println!("{:<17} rhs {} at {:.3e}: residual {:.2e} {}", theorem.label(), t.spec, t.argument, r.residual, r.verdict);
    }
}
