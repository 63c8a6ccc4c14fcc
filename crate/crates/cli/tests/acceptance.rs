//! Acceptance gate. Every criterion prints one PASS/FAIL line; run with
//! `cargo test -p regdim-cli --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use regdim::dims::{
    compute_record, dim_d, dim_i_hyp, dim_i_sum, dim_k_closed, dim_k_prop1, dim_k_recursion,
    theorem2_product_form, theorem2_values, DimEngine, DimQuery,
};
use regdim::exactnum::{binom, hockey_stick_check};
use regdim::resonance::{classify, Condition, ExponentConfig, Violation};
use regdim::verify::{run_suite, Suite};
use regdim::{Integer, Rational};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn grid() -> impl Iterator<Item = (u32, u32, u32)> {
    (1..=8u32).flat_map(|m| (2..=10u32).flat_map(move |n| (0..=n).map(move |r| (m, n, r))))
}

fn kernel_routes() -> Outcome {
    let start = Instant::now();
    for (m, n, r) in grid() {
        let a = dim_k_recursion(m, n, r).map_err(|e| e.to_string())?;
        let b = dim_k_prop1(m, n, r).map_err(|e| e.to_string())?;
        let c = dim_k_closed(m, n, r).map_err(|e| e.to_string())?;
        ensure(a == b && b == c, || format!("({m},{n},{r}): {a} / {b} / {c}"))?;
    }
    within(start, Duration::from_secs(5))
}

fn image_routes() -> Outcome {
    let start = Instant::now();
    for (m, n, r) in grid() {
        let sum = dim_i_sum(m, n, r).map_err(|e| e.to_string())?;
        let subtract = dim_d(m.into(), n) - dim_k_closed(m, n, r).map_err(|e| e.to_string())?;
        let hyp = dim_i_hyp(m, n, r).map_err(|e| e.to_string())?;
        ensure(sum == subtract, || format!("({m},{n},{r}): sum {sum} vs D-K {subtract}"))?;
        ensure(hyp.is_integer() && *hyp.numer() == sum, || format!("({m},{n},{r}): series {hyp} vs {sum}"))?;
    }
    within(start, Duration::from_secs(10))
}

fn total_is_kernel_plus_image() -> Outcome {
    let engine = DimEngine::new();
    for (m, n, r) in grid() {
        let rec = engine.record(DimQuery { m, n, r });
        let hyp = rec.i_hyp.clone().map_err(|e| e.to_string())?;
        for k in [&rec.k_recursion, &rec.k_prop1, &rec.k_closed] {
            for i in [&rec.i_sum, &rec.i_subtract] {
                ensure(rec.d == k + i, || format!("({m},{n},{r}): {} != {k} + {i}", rec.d))?;
            }
            ensure(Rational::from_integer(rec.d.clone()) == Rational::from_integer(k.clone()) + &hyp, || {
                format!("({m},{n},{r}): series route breaks D = K + I")
            })?;
        }
    }
    Ok(())
}

fn full_resonance_closed_forms() -> Outcome {
    let start = Instant::now();
    for m in 2..=8u32 {
        for n in m..=12u32 {
            let (mu, nu) = (u64::from(m), u64::from(n));
            let at_n = dim_i_sum(m, n, n).map_err(|e| e.to_string())?;
            let at_n1 = dim_i_sum(m, n, n - 1).map_err(|e| e.to_string())?;
            ensure(at_n == binom(nu, mu) - binom(nu, mu - 1), || format!("I({m},{n},{n}) = {at_n}"))?;
            ensure(at_n1 == binom(nu - 1, mu), || format!("I({m},{n},{}) = {at_n1}", n - 1))?;
            let values = theorem2_values(mu, nu).map_err(|e| e.to_string())?;
            let product = theorem2_product_form(mu, n.into()).map_err(|e| e.to_string())?;
            ensure(product == Rational::from_integer(values.0.clone()), || {
                format!("({m},{n}): product form {product} vs {}", values.0)
            })?;
        }
    }
    within(start, Duration::from_secs(2))
}

fn anchored_values() -> Outcome {
    for n in 2..=12u32 {
        for r in 0..=n {
            let k2 = dim_k_closed(2, n, r).map_err(|e| e.to_string())?;
            let k3 = dim_k_closed(3, n, r).map_err(|e| e.to_string())?;
            ensure(k2 == int(r.into()), || format!("K(2,{n},{r}) = {k2}"))?;
            ensure(k3 == int(i64::from(r) * i64::from(n - 1)), || format!("K(3,{n},{r}) = {k3}"))?;
            for route in [dim_k_recursion(2, n, r), dim_k_prop1(2, n, r)] {
                ensure(route.as_ref() == Ok(&k2), || format!("K(2,{n},{r}) route mismatch"))?;
            }
        }
    }
    // hand summation: D(4,5) = 35, D(2,5) = 10, D(0,5) = 1; 35 - 3*10 + 3*1
    let by_hand = int(35 - 3 * 10 + 3);
    ensure(dim_i_sum(4, 5, 3) == Ok(by_hand.clone()), || "I_sum(4,5,3)".into())?;
    ensure(dim_i_hyp(4, 5, 3) == Ok(Rational::from_integer(by_hand.clone())), || "I_hyp(4,5,3)".into())?;
    let via_kernel = dim_d(4, 5) - dim_k_recursion(4, 5, 3).map_err(|e| e.to_string())?;
    ensure(via_kernel == by_hand, || format!("D - K(4,5,3) = {via_kernel}"))
}

fn saalschutz_random() -> Outcome {
    let start = Instant::now();
    let report = run_suite(Suite::Pfaff, 7, 500);
    ensure(report.passed == 500 && report.failed == 0, || format!("{report:?}"))?;
    println!("       pfaff: {} checked, {} skipped", report.passed, report.skipped);
    within(start, Duration::from_secs(5))
}

fn contiguity_and_pochhammer() -> Outcome {
    let start = Instant::now();
    for suite in [Suite::Contiguity, Suite::Pochhammer] {
        let report = run_suite(suite, 7, 200);
        ensure(report.passed == 200 && report.failed == 0, || format!("{report:?}"))?;
    }
    within(start, Duration::from_secs(2))
}

fn hockey_stick() -> Outcome {
    let start = Instant::now();
    for r in 1..=40u64 {
        for s in 0..r {
            ensure(hockey_stick_check(r, s), || format!("r={r} s={s}"))?;
        }
    }
    within(start, Duration::from_secs(1))
}

fn resonance_examples() -> Outcome {
    let valid = classify(&ExponentConfig::new(2, q(1, 2), vec![q(1, 4), q(1, 3)]));
    ensure(valid.r == 1 && valid.resonant_indices == vec![1], || format!("{valid:?}"))?;
    ensure(valid.lambda_infinity == q(-13, 12) && valid.violations.is_empty() && valid.assumption_valid, || {
        format!("{valid:?}")
    })?;

    let violated = classify(&ExponentConfig::new(2, q(2, 1), vec![q(1, 4), q(1, 3)]));
    let expected = vec![Violation { condition: Condition::Diagonal, j: None, k: 2, value: q(2, 1) }];
    ensure(violated.violations == expected && !violated.assumption_valid && violated.r == 0, || {
        format!("{violated:?}")
    })?;
    ensure(violated.lambda_infinity == q(-31, 12), || format!("{violated:?}"))?;

    let single = classify(&ExponentConfig::new(1, q(0, 1), vec![q(1, 2)]));
    ensure(single.r == 1 && single.assumption_valid && single.lambda_infinity == q(-1, 2), || {
        format!("{single:?}")
    })?;

    for (file, code) in
        [("config_valid.json", 0), ("config_violated.json", 3), ("config_single.json", 0), ("config_bad.json", 1)]
    {
        let run = common::regdim(&["classify", file]);
        ensure(run.code == code, || format!("classify {file}: exit {} (expected {code})", run.code))?;
    }
    Ok(())
}

fn golden_files() -> Outcome {
    for (name, args, code) in common::GOLDEN {
        common::check_golden(name, args, *code)?;
    }
    // repeated invocation is byte-identical
    let args = ["table", "--m-range", "1..5", "--n-range", "2..7", "--format", "json"];
    let (a, b) = (common::regdim(&args), common::regdim(&args));
    ensure(a.code == 0 && a.stdout == b.stdout, || "table output not deterministic".into())?;

    // emitted config re-parses to the same value
    let run = common::regdim(&["classify", "config_valid.json", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&run.stdout).map_err(|e| e.to_string())?;
    let emitted = ExponentConfig::from_json_str(&doc["config"].to_string()).map_err(|e| e.to_string())?;
    let original = ExponentConfig::from_json_str(&std::fs::read_to_string(common::fixtures().join("config_valid.json")).unwrap())
        .map_err(|e| e.to_string())?;
    ensure(emitted == original, || "classify config round-trip".into())?;
    for m in 1..=4u32 {
        for (gn, gd) in [(1, 2), (-7, 3), (0, 1), (5, 4)] {
            let cfg = ExponentConfig::new(m, q(gn, gd), (1..=m as i64 + 1).map(|i| q(i * gn - 3, i + 1)).collect());
            let back = ExponentConfig::from_json_str(&cfg.to_json_string()).map_err(|e| e.to_string())?;
            ensure(back == cfg, || format!("round-trip {cfg:?}"))?;
        }
    }
    Ok(())
}

fn validity_range() -> Outcome {
    for m in 2..=6u32 {
        for n in 2 * m..=14 {
            for r in 0..=n {
                let rec = compute_record(DimQuery { m, n, r });
                ensure(rec.in_validity_range, || format!("({m},{n},{r}) flagged out of range"))?;
            }
        }
    }
    let rec = compute_record(DimQuery::new(2, 2, 2).map_err(|e| e.to_string())?);
    ensure(rec.i_sum == int(-1) && !rec.in_validity_range && rec.routes_agree, || format!("{rec:?}"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("kernel routes agree on 1<=m<=8, 2<=n<=10", kernel_routes),
        ("image routes agree; series value is an integer", image_routes),
        ("D = K + I on the full grid", total_is_kernel_plus_image),
        ("closed forms at r = n and r = n - 1, product form", full_resonance_closed_forms),
        ("anchors K(2,n,r) = r, K(3,n,r) = r(n-1), I(4,5,3) = 8", anchored_values),
        ("Pfaff-Saalschutz on 500 seeded cases", saalschutz_random),
        ("contiguity and Pochhammer residuals vanish (200 each)", contiguity_and_pochhammer),
        ("hockey stick for 0<=s<r<=40", hockey_stick),
        ("resonance classifier example reports and exit codes", resonance_examples),
        ("CLI golden files, determinism, config round-trip", golden_files),
        ("validity range for n >= 2m; (2,2,2) flagged", validity_range),
    ];

    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("[PASS] {:>2}. {name}", i + 1),
            Err(why) => {
                println!("[FAIL] {:>2}. {name}: {why}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
