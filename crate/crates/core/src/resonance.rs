//! Resonance classification of exponent configurations.
//!
//! A configuration fixes `m`, the exponent `g` of `(x_i - x_j)` and the
//! exponents `lambda_1..lambda_n` of `(x_i - z_k)`. An index `j` is resonant
//! when `2 lambda_j + g` is an integer. Every other divisor exponent of the
//! blown-up configuration must be non-integral:
//!
//! * point divisors: `k lambda_j + C(k,2) g` for `k = 1` and `3 <= k <= m`,
//! * divisors at infinity: `k lambda_inf + C(k,2) g` for `1 <= k <= m`,
//! * diagonals: `C(k,2) g` for `2 <= k <= m`,
//!
//! where `lambda_inf = -sum(lambda) - (m-1) g`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dims::{compute_record, DimQuery, DimensionRecord};
use crate::exactnum::{format_rational, parse_rational, ParseRationalError};
use crate::{ExactScalar, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentConfig<T = Rational> {
    pub m: u32,
    pub g: T,
    pub lambdas: Vec<T>,
}

/// Which family of divisor exponents a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `k lambda_j + C(k,2) g`
    Point,
    /// `k lambda_inf + C(k,2) g`
    Infinity,
    /// `C(k,2) g`
    Diagonal,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Point => "point",
            Condition::Infinity => "infinity",
            Condition::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exponent that was required to be non-integral but is an integer.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T = Rational> {
    pub condition: Condition,
    /// 1-based index of the point, for [`Condition::Point`] only.
    pub j: Option<usize>,
    pub k: u32,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceReport<T = Rational> {
    /// 1-based, ascending.
    pub resonant_indices: Vec<usize>,
    pub r: usize,
    pub lambda_infinity: T,
    pub violations: Vec<Violation<T>>,
    pub assumption_valid: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResonanceError<T: fmt::Debug = Rational> {
    #[error("non-resonance assumptions violated ({} violation(s))", .0.len())]
    AssumptionViolated(Vec<Violation<T>>),
}

fn choose2<T: ExactScalar>(k: u32) -> T {
    let k = i64::from(k);
    T::from_int(k * (k - 1) / 2)
}

pub fn lambda_infinity<T: ExactScalar>(cfg: &ExponentConfig<T>) -> T {
    let sum = cfg.lambdas.iter().cloned().fold(T::zero(), |acc, l| acc + l);
    -sum - T::from_int(i64::from(cfg.m) - 1) * cfg.g.clone()
}

/// Classifies a configuration, collecting every violated non-resonance
/// condition rather than stopping at the first one.
pub fn classify<T: ExactScalar>(cfg: &ExponentConfig<T>) -> ResonanceReport<T> {
    let two = T::from_int(2);
    let resonant_indices: Vec<usize> = cfg
        .lambdas
        .iter()
        .enumerate()
        .filter(|(_, l)| (two.clone() * (*l).clone() + cfg.g.clone()).is_integral())
        .map(|(i, _)| i + 1)
        .collect();

    let lambda_inf = lambda_infinity(cfg);
    let mut violations = Vec::new();

    let point_ks = std::iter::once(1).chain(3..=cfg.m);
    for k in point_ks {
        let kk = T::from_int(k.into());
        for (i, l) in cfg.lambdas.iter().enumerate() {
            let value = kk.clone() * l.clone() + choose2::<T>(k) * cfg.g.clone();
            if value.is_integral() {
                violations.push(Violation { condition: Condition::Point, j: Some(i + 1), k, value });
            }
        }
    }
    for k in 1..=cfg.m {
        let value = T::from_int(k.into()) * lambda_inf.clone() + choose2::<T>(k) * cfg.g.clone();
        if value.is_integral() {
            violations.push(Violation { condition: Condition::Infinity, j: None, k, value });
        }
    }
    for k in 2..=cfg.m {
        let value = choose2::<T>(k) * cfg.g.clone();
        if value.is_integral() {
            violations.push(Violation { condition: Condition::Diagonal, j: None, k, value });
        }
    }

    ResonanceReport {
        r: resonant_indices.len(),
        resonant_indices,
        lambda_infinity: lambda_inf,
        assumption_valid: violations.is_empty(),
        violations,
    }
}

/// Classifies `cfg` and, when every assumption holds, evaluates the
/// dimension record at `(m, n, r)`.
pub fn dims_for_config(
    cfg: &ExponentConfig,
) -> Result<(ResonanceReport, DimensionRecord), ResonanceError> {
    let report = classify(cfg);
    if !report.assumption_valid {
        return Err(ResonanceError::AssumptionViolated(report.violations));
    }
    let query = DimQuery::new(cfg.m.into(), cfg.lambdas.len() as i64, report.r as i64)
        .expect("classified configuration is a valid query");
    let record = compute_record(query);
    Ok((report, record))
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {source}")]
    Rational {
        field: String,
        #[source]
        source: ParseRationalError,
    },
    #[error("`m` must be at least 1, got {0}")]
    BadM(i64),
    #[error("`lambdas` must contain at least one entry")]
    NoLambdas,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigJson {
    m: i64,
    g: String,
    lambdas: Vec<String>,
}

impl ExponentConfig {
    pub fn new(m: u32, g: Rational, lambdas: Vec<Rational>) -> Self {
        Self { m, g, lambdas }
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    /// Parses `{"m": int, "g": "p/q", "lambdas": ["p/q", ...]}`.
    pub fn from_json_str(text: &str) -> Result<Self, ConfigError> {
        let raw: ConfigJson = serde_json::from_str(text)?;
        if raw.m < 1 || raw.m > i64::from(u32::MAX) {
            return Err(ConfigError::BadM(raw.m));
        }
        if raw.lambdas.is_empty() {
            return Err(ConfigError::NoLambdas);
        }
        let field = |name: String, s: &str| {
            parse_rational(s).map_err(|source| ConfigError::Rational { field: name, source })
        };
        let g = field("g".into(), &raw.g)?;
        let lambdas = raw
            .lambdas
            .iter()
            .enumerate()
            .map(|(i, s)| field(format!("lambdas[{i}]"), s))
            .collect::<Result<_, _>>()?;
        Ok(Self { m: raw.m as u32, g, lambdas })
    }

    pub fn to_json_string(&self) -> String {
        let raw = ConfigJson {
            m: self.m.into(),
            g: format_rational(&self.g),
            lambdas: self.lambdas.iter().map(format_rational).collect(),
        };
        serde_json::to_string(&raw).expect("config serializes")
    }
}
