//! Dimension engine.
//!
//! `D(m, n)` is the rank of the invariant twisted homology, `K(m, n, r)` the
//! dimension of the kernel of the regularization map and `I(m, n, r)` the
//! dimension of its image, so that `D = K + I`. `K` and `I` are computed by
//! independent routes:
//!
//! | quantity | route |
//! |----------|-------|
//! | `K` | recurrence `K(m,r) = D(m-2) + K(m,r-1) - K(m-2,r-1)` |
//! | `K` | telescoped form `r D(m-2) - sum_{t<r} K(m-2,t)` |
//! | `K` | alternating sum `sum_{s>=1} (-1)^(s-1) C(r,s) D(m-2s)` |
//! | `I` | alternating sum `sum_{s=0}^{m/2} (-1)^s C(r,s) D(m-2s)` |
//! | `I` | `C(n+m-2, m) 3F2(-r, -m/2, (1-m)/2; (2-n-m)/2, (3-n-m)/2; 1)` |
//! | `I` | `D - K` |
//!
//! Both recursive routes start from `K(m,0) = 0`, `K(1,r) = 0` and
//! `K(2,r) = r`. The closed sums use `D(0, n) = 1` and `D(m, n) = 0` for
//! `m < 0`.

use std::collections::HashMap;
use std::ops::RangeInclusive;
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactnum::binom;
use crate::hyper::{eval_terminating_3f2, HyperError, HypParams3F2};
use crate::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimError {
    #[error("invalid query (m={m}, n={n}, r={r}): need m >= 1, n >= 1 and 0 <= r <= n")]
    InvalidQuery { m: i64, n: i64, r: i64 },
    #[error("empty or malformed range {0}")]
    BadRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A point `(m, n, r)`: `m` integration variables, `n` points and `r`
/// resonant exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimQuery {
    pub m: u32,
    pub n: u32,
    pub r: u32,
}

impl DimQuery {
    pub fn new(m: i64, n: i64, r: i64) -> Result<Self, DimError> {
        let bad = || DimError::InvalidQuery { m, n, r };
        if m < 1 || n < 1 || r < 0 || r > n {
            return Err(bad());
        }
        Ok(Self {
            m: u32::try_from(m).map_err(|_| bad())?,
            n: u32::try_from(n).map_err(|_| bad())?,
            r: u32::try_from(r).map_err(|_| bad())?,
        })
    }
}

/// Every route evaluated at one query.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionRecord {
    pub query: DimQuery,
    pub d: Integer,
    pub k_recursion: Integer,
    pub k_prop1: Integer,
    pub k_closed: Integer,
    pub i_sum: Integer,
    /// Kept as a rational so a non-integral value would stay visible.
    pub i_hyp: Result<Rational, HyperError>,
    pub i_subtract: Integer,
    pub routes_agree: bool,
    pub in_validity_range: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RPolicy {
    All,
    OnlyN,
    OnlyNMinus1,
}

/// `D(m, n) = C(n+m-2, m)` for `m >= 1`, `1` for `m = 0`, `0` for `m < 0`.
pub fn dim_d(m: i64, n: u32) -> Integer {
    match m {
        m if m < 0 => Integer::zero(),
        0 => Integer::one(),
        m => {
            let top = i64::from(n) + m - 2;
            if top < 0 {
                Integer::zero()
            } else {
                binom(top as u64, m as u64)
            }
        }
    }
}

pub fn dim_k_closed(m: u32, n: u32, r: u32) -> Result<Integer, DimError> {
    let q = DimQuery::new(m.into(), n.into(), r.into())?;
    Ok(alternating_sum(q, 1))
}

pub fn dim_i_sum(m: u32, n: u32, r: u32) -> Result<Integer, DimError> {
    let q = DimQuery::new(m.into(), n.into(), r.into())?;
    Ok(-alternating_sum(q, 0))
}

/// `sum_{s >= first} (-1)^(s-1) C(r,s) D(m-2s, n)`, truncated where either
/// factor vanishes.
fn alternating_sum(q: DimQuery, first: u32) -> Integer {
    let mut acc = Integer::zero();
    let top = q.r.min(q.m / 2);
    for s in first..=top {
        let term = binom(q.r.into(), s.into()) * dim_d(i64::from(q.m) - 2 * i64::from(s), q.n);
        if s % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The hypergeometric parameters whose value times `C(n+m-2, m)` is `I`.
pub fn dimension_series(q: DimQuery) -> HypParams3F2 {
    let half = |v: i64| Rational::new(v.into(), 2.into());
    let (m, n, r) = (i64::from(q.m), i64::from(q.n), i64::from(q.r));
    HypParams3F2::at_one(
        [Rational::from_integer((-r).into()), half(-m), half(1 - m)],
        [half(2 - n - m), half(3 - n - m)],
    )
}

pub fn dim_i_hyp(m: u32, n: u32, r: u32) -> Result<Rational, DimError> {
    let q = DimQuery::new(m.into(), n.into(), r.into())?;
    i_hyp(q).map_err(|e| DimError::InvalidArgument(e.to_string()))
}

fn i_hyp(q: DimQuery) -> Result<Rational, HyperError> {
    let prefactor = dim_d(q.m.into(), q.n);
    let series = eval_terminating_3f2(&dimension_series(q))?;
    Ok(Rational::from_integer(prefactor) * series)
}

/// `(C(n,m) - C(n,m-1), C(n-1,m))`, the image dimensions at `r = n` and
/// `r = n - 1`. The first entry may be negative when `n < 2m`.
pub fn theorem2_values(m: u64, n: u64) -> Result<(Integer, Integer), DimError> {
    if m < 1 || n < 1 {
        return Err(DimError::InvalidArgument(format!("need m >= 1 and n >= 1, got m={m}, n={n}")));
    }
    Ok((binom(n, m) - binom(n, m - 1), binom(n - 1, m)))
}

/// Product form of `I(m, n, n)` split on the parity of `m`:
///
/// * `m = 2j`: `n (n-1) ... (n-2j+2) / (2j)! * (n+1-4j)`
/// * `m = 2j+1`: `n (n-1) ... (n-2j+1) / (2j+1)! * (n-4j-1)`
pub fn theorem2_product_form(m: u64, n: i64) -> Result<Rational, DimError> {
    if m < 2 {
        return Err(DimError::InvalidArgument(format!("need m >= 2, got {m}")));
    }
    let j = (m / 2) as i64;
    let (factors, last) = if m.is_multiple_of(2) { (2 * j - 1, n + 1 - 4 * j) } else { (2 * j, n - 4 * j - 1) };
    let falling: Integer = (0..factors).map(|i| Integer::from(n - i)).product();
    let factorial: Integer = (1..=m).map(Integer::from).product();
    Ok(Rational::new(falling * Integer::from(last), factorial))
}

type Memo = RwLock<HashMap<(u32, u32, u32), Integer>>;

/// Memoizing evaluator for the two recursive `K` routes.
///
/// The caches are shared across threads; every entry is a pure function of
/// its key so concurrent inserts are idempotent.
#[derive(Debug, Default)]
pub struct DimEngine {
    recursion: Memo,
    prop1: Memo,
}

#[derive(Clone, Copy)]
enum Route {
    Recursion,
    Prop1,
}

impl DimEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide engine used by the free functions.
    pub fn shared() -> &'static DimEngine {
        static ENGINE: LazyLock<DimEngine> = LazyLock::new(DimEngine::new);
        &ENGINE
    }

    pub fn k_recursion(&self, m: u32, n: u32, r: u32) -> Result<Integer, DimError> {
        let q = DimQuery::new(m.into(), n.into(), r.into())?;
        Ok(self.k_route(q, Route::Recursion))
    }

    pub fn k_prop1(&self, m: u32, n: u32, r: u32) -> Result<Integer, DimError> {
        let q = DimQuery::new(m.into(), n.into(), r.into())?;
        Ok(self.k_route(q, Route::Prop1))
    }

    fn k_route(&self, q: DimQuery, route: Route) -> Integer {
        let memo = match route {
            Route::Recursion => &self.recursion,
            Route::Prop1 => &self.prop1,
        };
        let key = (q.m, q.n, q.r);
        if let Some(v) = memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }

        // rows for m0, m0 + 2, ..., m, each indexed by t = 0..=r
        let base = if q.m % 2 == 1 { 1 } else { 2 };
        let mut row: Vec<Integer> = (0..=q.r)
            .map(|t| if base == 1 { Integer::zero() } else { Integer::from(t) })
            .collect();
        let mut fresh = vec![(base, row.clone())];
        let mut level = base;
        while level < q.m {
            level += 2;
            let d_prev = dim_d(i64::from(level) - 2, q.n);
            let mut next = vec![Integer::zero(); row.len()];
            match route {
                Route::Recursion => {
                    for t in 1..next.len() {
                        next[t] = &d_prev + &next[t - 1] - &row[t - 1];
                    }
                }
                Route::Prop1 => {
                    let mut partial = Integer::zero();
                    for t in 1..next.len() {
                        next[t] = Integer::from(t) * &d_prev - &partial;
                        partial += &row[t];
                    }
                }
            }
            row = next;
            fresh.push((level, row.clone()));
        }

        let mut guard = memo.write().expect("memo lock");
        for (lvl, values) in fresh {
            for (t, v) in values.into_iter().enumerate() {
                guard.entry((lvl, q.n, t as u32)).or_insert(v);
            }
        }
        row.pop().expect("row has r + 1 entries")
    }

    pub fn record(&self, q: DimQuery) -> DimensionRecord {
        let d = dim_d(q.m.into(), q.n);
        let k_recursion = self.k_route(q, Route::Recursion);
        let k_prop1 = self.k_route(q, Route::Prop1);
        let k_closed = alternating_sum(q, 1);
        let i_sum = -alternating_sum(q, 0);
        let i_hyp = i_hyp(q);
        let i_subtract = &d - &k_closed;

        let k_agree = k_recursion == k_prop1 && k_prop1 == k_closed;
        let i_agree = i_sum == i_subtract
            && matches!(&i_hyp, Ok(v) if v.is_integer() && *v.numer() == i_sum);
        let in_validity_range =
            !d.is_negative() && !k_closed.is_negative() && !i_sum.is_negative() && k_closed <= d;

        DimensionRecord {
            query: q,
            d,
            k_recursion,
            k_prop1,
            k_closed,
            i_sum,
            i_hyp,
            i_subtract,
            routes_agree: k_agree && i_agree,
            in_validity_range,
        }
    }

    /// Records for every `(m, n, r)` selected by the ranges and policy, in
    /// lexicographic order. Rows are computed in parallel.
    pub fn table(
        &self,
        m_range: RangeInclusive<u32>,
        n_range: RangeInclusive<u32>,
        policy: RPolicy,
    ) -> Result<Vec<DimensionRecord>, DimError> {
        for (name, range) in [("m", &m_range), ("n", &n_range)] {
            if range.is_empty() || *range.start() < 1 {
                return Err(DimError::BadRange(format!("{name} in {}..={}", range.start(), range.end())));
            }
        }
        let mut queries = Vec::new();
        for m in m_range {
            for n in n_range.clone() {
                let rs = match policy {
                    RPolicy::All => 0..=n,
                    RPolicy::OnlyN => n..=n,
                    RPolicy::OnlyNMinus1 => n - 1..=n - 1,
                };
                queries.extend(rs.map(|r| DimQuery { m, n, r }));
            }
        }
        Ok(queries.into_par_iter().map(|q| self.record(q)).collect())
    }
}

pub fn dim_k_recursion(m: u32, n: u32, r: u32) -> Result<Integer, DimError> {
    DimEngine::shared().k_recursion(m, n, r)
}

pub fn dim_k_prop1(m: u32, n: u32, r: u32) -> Result<Integer, DimError> {
    DimEngine::shared().k_prop1(m, n, r)
}

pub fn compute_record(q: DimQuery) -> DimensionRecord {
    DimEngine::shared().record(q)
}

pub fn table(
    m_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
    policy: RPolicy,
) -> Result<Vec<DimensionRecord>, DimError> {
    DimEngine::shared().table(m_range, n_range, policy)
}
