//! Each tabulated function from its series representation and from its oracle.

use quintsect::catalog::{eval_by_representation, eval_oracle, SpecialFunctionId};
use quintsect::numerics::ComplexValue;
use quintsect::series::ToleranceConfig;

fn main() {
    let tol = ToleranceConfig::default();
    let x = ComplexValue::new(0.45, 0.2);
    for f in SpecialFunctionId::ALL {
        let rep = eval_by_representation(f, x, &tol).unwrap();
        let orc = eval_oracle(f, x).unwrap();
        println!("{:<28} {:>40}  diff {:.1e}", f.to_string(), format!("{rep:.15}"), (rep - orc).norm());
    }
    let outside = eval_by_representation(SpecialFunctionId::K, ComplexValue::new(1.2, 0.0), &tol);
    println!("K at 1.2: {}", outside.unwrap_err());
}
