//! Seeded verification suites for the identities and dimension routes.
//!
//! Randomized suites draw from `ChaCha8Rng::seed_from_u64(seed)` using
//! `rand` 0.8 uniform range sampling, in this order per case: `a`, `b`
//! (and `c`) as numerator-then-denominator pairs, followed by the integer
//! parameter. Numerators are uniform on `-8..=8`, denominators on `1..=4`.
//! Draws whose series or closed form is undefined are skipped and counted;
//! drawing continues until `cases` defined cases have been checked or
//! `100 * cases` draws have been made.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dims::{dim_d, theorem2_product_form, theorem2_values, DimEngine, DimQuery};
use crate::exactnum::{binom, format_rational, hockey_stick_check};
use crate::hyper::{contiguity_residual, pfaff_saalschutz_check, pochhammer_identity_residual};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Pfaff,
    Contiguity,
    Pochhammer,
    Hockey,
    Routes,
    Theorem2,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Pfaff, Suite::Contiguity, Suite::Pochhammer, Suite::Hockey, Suite::Routes, Suite::Theorem2];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pfaff => "pfaff",
            Suite::Contiguity => "contiguity",
            Suite::Pochhammer => "pochhammer",
            Suite::Hockey => "hockey",
            Suite::Routes => "routes",
            Suite::Theorem2 => "theorem2",
        }
    }

    /// Case count used when the caller does not give one. Exhaustive suites
    /// ignore the count.
    pub fn default_cases(self) -> usize {
        match self {
            Suite::Pfaff => 500,
            Suite::Contiguity | Suite::Pochhammer => 200,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self { suite, passed: 0, failed: 0, skipped: 0, first_counterexample: None }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> SuiteReport {
    match suite {
        Suite::Pfaff => pfaff(seed, cases),
        Suite::Contiguity => contiguity(seed, cases),
        Suite::Pochhammer => pochhammer_identity(seed, cases),
        Suite::Hockey => hockey(),
        Suite::Routes => routes(),
        Suite::Theorem2 => theorem2(),
    }
}

fn draw_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer: i64 = rng.gen_range(-8..=8);
    let denom: i64 = rng.gen_range(1..=4);
    Rational::new(numer.into(), denom.into())
}

fn show(values: &[&Rational]) -> String {
    values.iter().map(|v| format_rational(v)).collect::<Vec<_>>().join(", ")
}

/// Draws until `cases` defined checks have been made. `check` returns
/// `None` for an undefined draw.
fn sample(
    suite: Suite,
    seed: u64,
    cases: usize,
    mut check: impl FnMut(&mut ChaCha8Rng) -> Option<(bool, String)>,
) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new(suite);
    let budget = cases.saturating_mul(100);
    let mut draws = 0;
    while report.passed + report.failed < cases && draws < budget {
        draws += 1;
        match check(&mut rng) {
            Some((ok, case)) => report.record(ok, || case),
            None => report.skipped += 1,
        }
    }
    report
}

fn pfaff(seed: u64, cases: usize) -> SuiteReport {
    sample(Suite::Pfaff, seed, cases, |rng| {
        let (a, b, c) = (draw_rational(rng), draw_rational(rng), draw_rational(rng));
        let j: u64 = rng.gen_range(1..=8);
        let ok = pfaff_saalschutz_check(&a, &b, &c, j).ok()?;
        Some((ok, format!("a, b, c = {}; j = {j}", show(&[&a, &b, &c]))))
    })
}

fn contiguity(seed: u64, cases: usize) -> SuiteReport {
    sample(Suite::Contiguity, seed, cases, |rng| {
        let (a, b, c) = (draw_rational(rng), draw_rational(rng), draw_rational(rng));
        let j: u64 = rng.gen_range(0..=10);
        let residual = contiguity_residual(&a, &b, &c, j).ok()?;
        let case = format!("a, b, c = {}; j = {j}; residual = {}", show(&[&a, &b, &c]), format_rational(&residual));
        Some((residual == Rational::from_integer(0.into()), case))
    })
}

fn pochhammer_identity(seed: u64, cases: usize) -> SuiteReport {
    sample(Suite::Pochhammer, seed, cases, |rng| {
        let (a, b) = (draw_rational(rng), draw_rational(rng));
        let k: u64 = rng.gen_range(0..=10);
        let residual = pochhammer_identity_residual(&a, &b, k);
        let case = format!("a, b = {}; k = {k}; residual = {}", show(&[&a, &b]), format_rational(&residual));
        Some((residual == Rational::from_integer(0.into()), case))
    })
}

fn hockey() -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Hockey);
    for r in 1..=40u64 {
        for s in 0..r {
            report.record(hockey_stick_check(r, s), || format!("r = {r}; s = {s}"));
        }
    }
    report
}

/// Grid `1 <= m <= 8`, `2 <= n <= 10`, `0 <= r <= n`: all routes agree,
/// the hypergeometric value is an integer and `D = K + I`.
fn routes() -> SuiteReport {
    let engine = DimEngine::new();
    let mut report = SuiteReport::new(Suite::Routes);
    for m in 1..=8u32 {
        for n in 2..=10u32 {
            for r in 0..=n {
                let rec = engine.record(DimQuery { m, n, r });
                let sums = rec.d == &rec.k_closed + &rec.i_sum
                    && rec.d == &rec.k_recursion + &rec.i_subtract
                    && rec.d == &rec.k_prop1 + &rec.i_subtract;
                report.record(rec.routes_agree && sums, || format!("m = {m}; n = {n}; r = {r}"));
            }
        }
    }
    report
}

/// `2 <= m <= 8`, `m <= n <= 12`: closed forms at `r = n` and `r = n - 1`
/// against the alternating sum, and the product form against the binomials.
fn theorem2() -> SuiteReport {
    let engine = DimEngine::new();
    let mut report = SuiteReport::new(Suite::Theorem2);
    for m in 2..=8u32 {
        for n in m..=12u32 {
            let (at_n, at_n1) = theorem2_values(m.into(), n.into()).expect("m, n >= 1");
            let full = engine.record(DimQuery { m, n, r: n });
            let minus = engine.record(DimQuery { m, n, r: n - 1 });
            let product = theorem2_product_form(m.into(), n.into()).expect("m >= 2");
            let ok = full.i_sum == at_n
                && minus.i_sum == at_n1
                && at_n == binom(n.into(), m.into()) - binom(n.into(), (m - 1).into())
                && at_n1 == binom((n - 1).into(), m.into())
                && product == Rational::from_integer(at_n.clone())
                && full.d == dim_d(m.into(), n);
            report.record(ok, || format!("m = {m}; n = {n}"));
        }
    }
    report
}
