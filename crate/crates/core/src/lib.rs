//! Exact dimension counts for the space of regularizable cycles of a
//! Selberg-type twisted homology group under a resonance condition.
//!
//! Everything is computed over exact rationals. The dimension of the image
//! (`I`) and kernel (`K`) of the natural map from compactly supported to
//! locally finite homology are obtained through several independent routes
//! that are expected to agree:
//!
//! * a two-step recursion on `(m, r)`,
//! * a telescoped form of that recursion,
//! * an alternating binomial sum,
//! * a terminating `3F2` hypergeometric value at `x = 1`.
//!
//! The core arithmetic ([`exactnum`], [`hyper`]) is generic over an
//! [`ExactScalar`]; the aliases below fix the default arbitrary-precision
//! choice used by the dimension engine and the CLI.

pub mod dims;
pub mod exactnum;
pub mod hyper;
pub mod resonance;
pub mod scalar;
pub mod verify;

pub use scalar::ExactScalar;

/// Arbitrary-precision reduced fraction; the default scalar everywhere.
pub type Rational = num_rational::BigRational;

/// Fixed-width rational. Overflow panics, so only use it for small inputs.
pub type Rational64 = num_rational::Ratio<i64>;

/// Arbitrary-precision signed integer used for all dimension values.
pub type Integer = num_bigint::BigInt;

pub use dims::{DimEngine, DimQuery, DimensionRecord, RPolicy};
pub use exactnum::{binom, format_rational, hockey_stick_check, is_integer, parse_rational, pochhammer};
pub use hyper::{eval_terminating_3f2, HyperError, HypParams3F2};
pub use resonance::{classify, dims_for_config, ExponentConfig, ResonanceReport};
