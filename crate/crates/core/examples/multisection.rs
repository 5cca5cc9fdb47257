//! Both multisection theorems on phi(r) = 1/(r+1), side by side.

use quintsect::series::{
    theorem21_lhs, theorem21_rhs, theorem22_lhs, theorem22_rhs, FnSequence, MultisectionArgs, ToleranceConfig,
};
use quintsect::numerics::ComplexValue;

fn main() {
    let phi = FnSequence::new(1.0, |r| Some(ComplexValue::new(1.0 / (r as f64 + 1.0), 0.0)));
    let tol = ToleranceConfig::default();
    for x in [0.3, 0.6, 0.9] {
        let args = MultisectionArgs::new(ComplexValue::new(1.5, 0.0), ComplexValue::new(x, 0.0));
        let (l1, r1) = (theorem21_lhs(&phi, args, &tol), theorem21_rhs(&phi, args, &tol));
        let (l2, r2) = (theorem22_lhs(&phi, args, &tol), theorem22_rhs(&phi, args, &tol));
        println!("x = {x}");
        println!("  plain    lhs {:.15}  rhs {:.15}  ({} / {} terms)", l1.value, r1.value, l1.terms_used, r1.terms_used);
        println!("  weighted lhs {:.15}  rhs {:.15}", l2.value, r2.value);
    }
}
