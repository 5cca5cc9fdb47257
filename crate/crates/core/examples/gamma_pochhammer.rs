//! Complex gamma, Pochhammer branches and the Gauss multiplication formula.

use quintsect::numerics::{
    gamma, gauss_multiplication_residual, log_gamma, pochhammer, ComplexValue, MultiplicationQuery, PochhammerQuery,
};

fn main() {
    let half = ComplexValue::new(0.5, 0.0);
    println!("Gamma(1/2)        = {}", gamma(half).unwrap());
    println!("ln Gamma(3 + 4i)  = {}", log_gamma(ComplexValue::new(3.0, 4.0)).unwrap());
    println!("Gamma(-2) pole    : {:?}", gamma(ComplexValue::new(-2.0, 0.0)).unwrap_err());

    for (l, n) in [(0.5, 3.0), (-3.0, 2.0), (-3.0, 5.0), (2.5, -2.0), (1.5, 0.25)] {
        let q = PochhammerQuery::new(ComplexValue::new(l, 0.0), ComplexValue::new(n, 0.0));
        println!("({l})_{n:<5} = {}", pochhammer(q).unwrap());
    }

    for (b, m, n) in [(0.3, 2, 4), (1.7, 5, 8), (-0.4, 3, 6)] {
        let r = gauss_multiplication_residual(MultiplicationQuery { b: ComplexValue::new(b, 0.0), m, n }).unwrap();
        println!("multiplication b={b} m={m} n={n}: residual {r:.2e}");
    }
}
