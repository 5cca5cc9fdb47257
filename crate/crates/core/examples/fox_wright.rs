//! Fox-Wright psi and its normalized form psi*.

use quintsect::hypergeom::{
    classify_fox_wright, eval_fox_wright, eval_fox_wright_normalized, fox_wright_normalizer, FoxWrightSpec,
    WeightedParam,
};
use quintsect::numerics::ComplexValue;
use quintsect::series::ToleranceConfig;

fn main() {
    let tol = ToleranceConfig::default();
    let z = ComplexValue::new(0.8, 0.3);
    let spec = FoxWrightSpec::new(
        vec![WeightedParam::real(1.5, 0.5), WeightedParam::real(0.75, 1.0)],
        vec![WeightedParam::real(2.0, 1.5)],
    )
    .unwrap();
    let d = classify_fox_wright(&spec, z);
    println!("{spec}: Delta* = {}, delta* = {:.6}, mu* = {}, {}", d.delta_star, d.delta_small_star, d.mu_star, d.classification);

    let psi = eval_fox_wright(&spec, z, &tol).unwrap();
    let star = eval_fox_wright_normalized(&spec, z, &tol).unwrap();
    let norm = fox_wright_normalizer(&spec).unwrap();
    println!("psi       = {:.15}", psi.value);
    println!("psi*      = {:.15}", star.value);
    println!("norm psi* = {:.15}", norm * star.value);

    let too_fast = FoxWrightSpec::new(vec![WeightedParam::real(1.0, 2.0)], vec![WeightedParam::real(1.0, 0.5)]).unwrap();
    println!("{too_fast}: {}", eval_fox_wright(&too_fast, z, &tol).unwrap_err());
}
