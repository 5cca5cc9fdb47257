//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI, TAU};
use std::process::{Command, ExitCode};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use quintsect::catalog::{eval_by_representation, eval_oracle, find_case, verify_case, SpecialFunctionId};
use quintsect::hypergeom::{
    classify_pfq, eval_fox_wright, eval_fox_wright_normalized, eval_pfq, fox_wright_normalizer, Classification,
    FoxWrightSpec, PfqSpec, WeightedParam,
};
use quintsect::identity::Verdict;
use quintsect::numerics::{gauss_multiplication_residual, relative_residual, ComplexValue, MultiplicationQuery};
use quintsect::series::{
    theorem21_lhs, theorem21_rhs, theorem22_lhs, theorem22_rhs, FnSequence, MultisectionArgs, ToleranceConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn re(v: f64) -> ComplexValue {
    ComplexValue::new(v, 0.0)
}

fn in_disk(rng: &mut ChaCha8Rng, r: f64) -> ComplexValue {
    ComplexValue::from_polar(r * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
}

fn multisection_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let tol = ToleranceConfig::default();
    let mut worst = 0.0f64;
    for s in 0..50 {
        let waves: Vec<(ComplexValue, f64, f64)> =
            (0..3).map(|_| (in_disk(&mut rng, 1.0), rng.gen_range(0.0..PI), rng.gen_range(0.0..TAU))).collect();
        let bound = waves.iter().map(|w| w.0.norm()).sum();
        let phi = FnSequence::new(bound, move |r| {
            Some(waves.iter().map(|&(a, f, p)| a * (f * r as f64 + p).cos()).sum::<ComplexValue>())
        });
        let args = MultisectionArgs::new(in_disk(&mut rng, 1.5), in_disk(&mut rng, 0.9));
        for (l, r) in [
            (theorem21_lhs(&phi, args, &tol), theorem21_rhs(&phi, args, &tol)),
            (theorem22_lhs(&phi, args, &tol), theorem22_rhs(&phi, args, &tol)),
        ] {
            if !(l.status.is_converged() && r.status.is_converged()) {
                return Err(format!("sequence {s}: not converged ({}, {})", l.status, r.status));
            }
            let res = relative_residual(l.value, r.value);
            worst = worst.max(res);
            if res > 1e-10 {
                return Err(format!("sequence {s}: residual {res:.2e} at c={} x={}", args.c, args.x));
            }
        }
    }
    Ok(format!("50 sequences x 2 theorems, max residual {worst:.1e} <= 1e-10"))
}

fn arctan_fifth_power() -> Outcome {
    let case = find_case("eq4.6-arctan").map_err(|e| e.to_string())?;
    let tol = ToleranceConfig::default();
    let (mut worst_id, mut worst_rhs) = (0.0f64, 0.0f64);
    for i in 1..=9 {
        let x = f64::from(i) / 10.0;
        let r = verify_case(&case, re(x), &tol, 1e-10);
        if r.verdict != Verdict::Pass {
            return Err(format!("x = {x}: {} residual {:.2e}", r.verdict, r.residual));
        }
        let scalar = relative_residual(r.rhs, re(x.powi(5).atan()));
        if scalar > 1e-12 {
            return Err(format!("x = {x}: rhs vs arctan(x^5) {scalar:.2e}"));
        }
        worst_id = worst_id.max(r.residual);
        worst_rhs = worst_rhs.max(scalar);
    }
    Ok(format!("x = 0.1..0.9, identity residual {worst_id:.1e}, rhs vs arctan(x^5) {worst_rhs:.1e}"))
}

fn trigonometric_cases() -> Outcome {
    let tol = ToleranceConfig::default();
    let mut lines = Vec::new();
    let mut worst = 0.0f64;
    for id in ["eq4.1a-sin", "eq4.1b-cos", "eq4.2-sin", "eq4.2b-cos"] {
        let case = find_case(id).map_err(|e| e.to_string())?;
        for x in [0.5, 1.0, 2.0] {
            let r = verify_case(&case, re(x), &tol, 1e-9);
            match r.verdict {
                Verdict::Pass => worst = worst.max(r.residual),
                Verdict::Fail => match r.ratio {
                    Some(q) => lines.push(format!("{id} discrepant at x={x}, ratio {q}")),
                    None => return Err(format!("{id} x={x}: failed without a ratio")),
                },
                Verdict::NotEvaluable => return Err(format!("{id} x={x}: not evaluable ({:?})", r.note)),
            }
        }
    }
    let tail = if lines.is_empty() { String::new() } else { format!("; {}", lines.join("; ")) };
    Ok(format!("4 cases x {{0.5, 1, 2}}, max passing residual {worst:.1e}{tail}"))
}

fn gauss_multiplication() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let b = ComplexValue::new(rng.gen_range(-6.0..6.0), if rng.gen_bool(0.5) { rng.gen_range(-3.0..3.0) } else { 0.0 });
        let (m, n) = (rng.gen_range(1..=5), rng.gen_range(0..=8));
        let r = gauss_multiplication_residual(MultiplicationQuery { b, m, n }).map_err(|e| format!("b={b}: {e}"))?;
        if r >= 1e-11 {
            return Err(format!("b={b} m={m} n={n}: residual {r:.2e}"));
        }
        worst = worst.max(r);
    }
    Ok(format!("200 random (b, m <= 5, n <= 8), max residual {worst:.1e} < 1e-11"))
}

fn fox_wright_coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tol = ToleranceConfig::default();
    let (mut worst_rel, mut worst_pfq, mut worst_lg) = (0.0f64, 0.0f64, 0.0f64);
    for s in 0..20 {
        let p = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=2);
        let param = |rng: &mut ChaCha8Rng| WeightedParam::real(rng.gen_range(0.2..3.0), rng.gen_range(0.3..1.2));
        let num: Vec<_> = (0..p).map(|_| param(&mut rng)).collect();
        let mut den: Vec<_> = (0..q).map(|_| param(&mut rng)).collect();
        let deficit = num.iter().map(|w| w.weight).sum::<f64>() - den.iter().map(|w| w.weight).sum::<f64>();
        if deficit > 0.0 {
            den[0].weight += deficit;
        }
        let spec = FoxWrightSpec::new(num, den).map_err(|e| e.to_string())?;
        let z = in_disk(&mut rng, 2.0);
        let psi = eval_fox_wright(&spec, z, &tol).map_err(|e| format!("spec {s}: {e}"))?;
        let star = eval_fox_wright_normalized(&spec, z, &tol).map_err(|e| format!("spec {s}: {e}"))?;
        let norm = fox_wright_normalizer(&spec).map_err(|e| e.to_string())?;
        let res = relative_residual(psi.value, norm * star.value);
        if res > 1e-11 {
            return Err(format!("spec {s} {spec} at {z}: psi vs normalized psi* {res:.2e}"));
        }
        worst_rel = worst_rel.max(res);

        let a: Vec<f64> = (0..p).map(|_| rng.gen_range(-0.8..3.0)).collect();
        let b: Vec<f64> = (0..p).map(|_| rng.gen_range(0.2..3.0)).collect();
        let pfq = PfqSpec::real(&a, &b).map_err(|e| e.to_string())?;
        let w = in_disk(&mut rng, 0.9);
        let unit = FoxWrightSpec::unit_weights(&pfq);
        let lhs = eval_fox_wright_normalized(&unit, w, &tol).map_err(|e| e.to_string())?;
        let rhs = eval_pfq(&pfq, w, &tol).map_err(|e| e.to_string())?;
        let res = relative_residual(lhs.value, rhs.value);
        if res > 1e-12 {
            return Err(format!("{pfq} at {w}: unit-weight psi* vs pFq {res:.2e}"));
        }
        worst_pfq = worst_pfq.max(res);

        // same comparison through the log-gamma terms of psi
        let via_psi = eval_fox_wright(&unit, w, &tol).map_err(|e| e.to_string())?.value
            / fox_wright_normalizer(&unit).map_err(|e| e.to_string())?;
        let res = relative_residual(via_psi, rhs.value);
        if res > 1e-12 {
            return Err(format!("{pfq} at {w}: psi / normalizer vs pFq {res:.2e}"));
        }
        worst_lg = worst_lg.max(res);
    }
    Ok(format!(
        "20 specs, psi vs normalized psi* {worst_rel:.1e}, unit-weight psi* vs pFq {worst_pfq:.1e} (log-gamma route {worst_lg:.1e})"
    ))
}

fn representation_vs_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let tol = ToleranceConfig::default();
    let mut worst = 0.0f64;
    let check = |f: SpecialFunctionId, x: ComplexValue| -> Result<f64, String> {
        let rep = eval_by_representation(f, x, &tol).map_err(|e| format!("{f} at {x}: {e}"))?;
        let orc = eval_oracle(f, x).map_err(|e| format!("{f} at {x}: {e}"))?;
        let err = (rep - orc).norm() / (1.0 + orc.norm());
        if err > 1e-10 {
            return Err(format!("{f} at {x}: rep {rep} oracle {orc} err {err:.2e}"));
        }
        Ok(err)
    };
    for f in SpecialFunctionId::ALL {
        let radius = if f.disk_limited() { 0.7 } else { 3.0 };
        for _ in 0..50 {
            worst = worst.max(check(f, in_disk(&mut rng, radius))?);
        }
    }
    let anchor = |f: SpecialFunctionId, x: f64, want: f64| -> Result<(), String> {
        let got = eval_by_representation(f, re(x), &tol).map_err(|e| e.to_string())?;
        let orc = eval_oracle(f, re(x)).map_err(|e| e.to_string())?;
        for (name, v) in [("representation", got), ("oracle", orc)] {
            if relative_residual(v, re(want)) > 1e-13 {
                return Err(format!("{f} at {x}: {name} {v}, expected {want}"));
            }
        }
        Ok(())
    };
    anchor(SpecialFunctionId::Arcsin, 0.5, FRAC_PI_6)?;
    anchor(SpecialFunctionId::K, 0.0, FRAC_PI_2)?;
    anchor(SpecialFunctionId::E, 0.0, FRAC_PI_2)?;
    // K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt pi)
    anchor(SpecialFunctionId::K, 0.5f64.sqrt(), 1.854_074_677_301_371_9)?;
    for t in [0.25f64, 1.0, 4.0] {
        anchor(SpecialFunctionId::LowerIncompleteGamma { a: 1.0 }, t.sqrt(), 1.0 - (-t).exp())?;
    }
    Ok(format!("11 functions x 50 points, max scaled error {worst:.1e}; anchors hold"))
}

fn classification() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 256, failure_persistence: None, ..Config::default() });
    let param = || (0.05f64..4.0).prop_filter("non-integer", |v| (v - v.round()).abs() > 1e-3);
    let list = move |n: std::ops::RangeInclusive<usize>| n.prop_flat_map(move |k| prop::collection::vec(param(), k));
    let angle = 0.05f64..(TAU - 0.05);
    let check = |cond: bool, msg: String| if cond { Ok(()) } else { Err(TestCaseError::fail(msg)) };
    let spec = |a: &[f64], b: &[f64]| PfqSpec::real(a, b).expect("positive non-integer parameters");
    let mut count = 0;
    let mut run = |name: &str, r: Result<(), String>| {
        count += 1;
        r.map_err(|e| format!("{name}: {e}"))
    };

    run(
        "p <= q is entire",
        runner.run(&(list(0..=3), list(0..=3), 0.0f64..50.0, angle.clone()), |(a, b, r, t)| {
            prop_assume!(a.len() <= b.len());
            let d = classify_pfq(&spec(&a, &b), ComplexValue::from_polar(r, t));
            check(d.classification == Classification::Entire, format!("{a:?};{b:?} -> {}", d.classification))
        })
        .map_err(|e| e.to_string()),
    )?;
    run(
        "p > q + 1 diverges",
        runner.run(&(list(2..=5), list(0..=3), 1e-3f64..0.5, angle.clone()), |(a, b, r, t)| {
            prop_assume!(a.len() > b.len() + 1);
            let d = classify_pfq(&spec(&a, &b), ComplexValue::from_polar(r, t));
            check(d.classification == Classification::Divergent, format!("{a:?};{b:?} -> {}", d.classification))
        })
        .map_err(|e| e.to_string()),
    )?;
    run(
        "p = q + 1 inside and outside the unit disk",
        runner.run(&(list(1..=3), 0.0f64..0.999, 1.001f64..5.0, angle.clone()), |(b, r_in, r_out, t)| {
            let a: Vec<f64> = b.iter().map(|v| v + 0.3).chain([1.5]).collect();
            let s = spec(&a, &b);
            let inside = classify_pfq(&s, ComplexValue::from_polar(r_in, t)).classification;
            let outside = classify_pfq(&s, ComplexValue::from_polar(r_out, t)).classification;
            check(inside == Classification::UnitDisk && outside == Classification::Divergent, format!("{inside}, {outside}"))
        })
        .map_err(|e| e.to_string()),
    )?;
    run(
        "unit circle decided by Re(omega)",
        runner.run(&(list(1..=3), list(0..=2), -2.5f64..2.5, angle), |(a_head, b_head, omega, t)| {
            // last denominator chosen so that sum b - sum a = omega
            let mut a = a_head.clone();
            a.push(5.5);
            let last = omega + a.iter().sum::<f64>() - b_head.iter().sum::<f64>();
            prop_assume!(last > 0.05 && (last - last.round()).abs() > 1e-3);
            prop_assume!(a.len() == b_head.len() + 2);
            let b: Vec<f64> = b_head.iter().copied().chain([last]).collect();
            let s = spec(&a, &b);
            let d = classify_pfq(&s, ComplexValue::from_polar(1.0, t));
            check(d.omega.is_some_and(|w| (w.re - omega).abs() < 1e-12), format!("omega {:?} vs {omega}", d.omega))?;
            let want = if omega > 0.0 {
                Classification::BoundaryAbs
            } else if omega > -1.0 {
                Classification::BoundaryCond
            } else {
                Classification::Divergent
            };
            check(d.classification == want, format!("omega {omega}, z angle {t}: {} expected {want}", d.classification))?;
            let at_one = classify_pfq(&s, re(1.0)).classification;
            let want_one = if omega > 0.0 { Classification::BoundaryAbs } else { Classification::Divergent };
            check(at_one == want_one, format!("omega {omega} at z = 1: {at_one}"))
        })
        .map_err(|e| e.to_string()),
    )?;
    let terminating = classify_pfq(&spec(&[-3.0, 1.5, 2.5], &[0.5]), re(40.0)).classification;
    if terminating != Classification::Entire {
        return Err(format!("terminating 3F1 at z = 40 classified {terminating}"));
    }
    Ok(format!("{count} property families x 256 cases plus a terminating series"))
}

fn full_catalog() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_quintsect"))
        .args(["verify-all", "--format", "structured-records"])
        .env_remove("QUINTSECT_MAX_TERMS")
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut verified = 0;
    let mut discrepant = Vec::new();
    for line in text.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let id = rec["case_id"].as_str().unwrap_or("?");
        match rec["status"].as_str() {
            Some("verified") => verified += 1,
            Some("discrepant") => {
                let ratios: Vec<f64> = rec["ratio_re"].as_array().into_iter().flatten().filter_map(|v| v.as_f64()).collect();
                if ratios.len() != rec["sample_points"].as_array().map_or(0, Vec::len) {
                    return Err(format!("{id}: discrepant without a ratio at every point"));
                }
                let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.6}")).collect();
                discrepant.push(format!("{id} [{}]", shown.join(", ")));
            }
            other => return Err(format!("{id}: status {other:?}")),
        }
    }
    if verified + discrepant.len() != 20 || out.status.code() != Some(0) {
        return Err(format!("{} rows, exit {:?}", verified + discrepant.len(), out.status.code()));
    }
    Ok(format!("20 cases, {verified} verified, 0 unverified, discrepant ratios: {}", discrepant.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("multisection oracle equivalence", multisection_equivalence),
        ("arctan(x^5) closed form", arctan_fifth_power),
        ("trigonometric multisections", trigonometric_cases),
        ("Gauss multiplication", gauss_multiplication),
        ("psi / psi* / pFq coherence", fox_wright_coherence),
        ("representation vs oracle", representation_vs_oracle),
        ("convergence classification", classification),
        ("full catalog run", full_catalog),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} [PRIMARY] {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [PRIMARY] {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
