//! pFq evaluation with its convergence classification.

use quintsect::hypergeom::{classify_pfq, eval_pfq, PfqSpec};
use quintsect::numerics::ComplexValue;
use quintsect::series::ToleranceConfig;

fn main() {
    let tol = ToleranceConfig::default();
    let cases: [(&[f64], &[f64], f64); 5] = [
        (&[1.0, 0.5], &[1.5], -0.25), // arctan(1/2) / (1/2)
        (&[], &[0.5], -0.25),         // cos 1
        (&[-3.0, 2.0], &[1.0], 0.7),  // terminating
        (&[1.0, 1.0], &[3.0], 1.0),   // boundary, Re omega = 1
        (&[1.0, 1.0, 1.0], &[2.0], 0.1),
    ];
    for (a, b, z) in cases {
        let spec = PfqSpec::real(a, b).unwrap();
        let z = ComplexValue::new(z, 0.0);
        let d = classify_pfq(&spec, z);
        match eval_pfq(&spec, z, &tol) {
            Ok(ev) => println!(
                "{spec} at {z}: {:.16} [{}; {} terms; {}{}]",
                ev.value,
                d.classification,
                ev.terms_used,
                ev.status,
                if ev.low_confidence { ", low confidence" } else { "" }
            ),
            Err(e) => println!("{spec} at {z}: {e}"),
        }
    }
}
