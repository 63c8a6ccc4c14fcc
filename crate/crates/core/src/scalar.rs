//! Scalar abstraction for the exact series code.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// A field element with exact arithmetic and a decidable integrality test.
///
/// Implemented for every `Ratio<T>` over a signed integer type, so both
/// [`crate::Rational`] and [`crate::Rational64`] qualify.
pub trait ExactScalar:
    Clone + Debug + PartialEq + PartialOrd + Num + Signed + FromPrimitive + Send + Sync
{
    /// True iff the value is an integer.
    fn is_integral(&self) -> bool;

    /// `Some(n)` when the value equals `-n` for some integer `n >= 0`.
    fn nonpositive_integer(&self) -> Option<u64> {
        if self.is_integral() && !self.is_positive() {
            self.neg_to_u64()
        } else {
            None
        }
    }

    #[doc(hidden)]
    fn neg_to_u64(&self) -> Option<u64>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits every exact scalar")
    }
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Debug + Integer + Signed + ToPrimitive + Send + Sync,
    Ratio<T>: FromPrimitive,
{
    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn neg_to_u64(&self) -> Option<u64> {
        (-self.to_integer()).to_u64()
    }
}
