//! Terminating `3F2` series and the classical summation identities used to
//! close the dimension formulas.

use thiserror::Error;

use crate::exactnum::pochhammer;
use crate::{ExactScalar, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("no upper parameter is a non-positive integer; the series does not terminate")]
    NonTerminating,
    #[error("lower parameters vanish at term {k} before the series terminates")]
    PoleBeforeTermination { k: u64 },
    #[error("closed form has a vanishing denominator")]
    ZeroDenominator,
}

/// Parameters of `3F2(a1, a2, a3; b1, b2; x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypParams3F2<T = Rational> {
    pub upper: [T; 3],
    pub lower: [T; 2],
    pub argument: T,
}

impl<T: ExactScalar> HypParams3F2<T> {
    pub fn new(upper: [T; 3], lower: [T; 2], argument: T) -> Self {
        Self { upper, lower, argument }
    }

    /// Series at `x = 1`.
    pub fn at_one(upper: [T; 3], lower: [T; 2]) -> Self {
        Self::new(upper, lower, T::one())
    }

    /// Index of the last term that can be nonzero: the smallest `n` among
    /// the upper parameters equal to `-n`.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper.iter().filter_map(ExactScalar::nonpositive_integer).min()
    }
}

/// Sums the series term by term until the upper Pochhammer product vanishes.
///
/// At every index the numerator is tested before the denominator, so an
/// index where both vanish ends the sum rather than raising a pole.
pub fn eval_terminating_3f2<T: ExactScalar>(p: &HypParams3F2<T>) -> Result<T, HyperError> {
    sum_terms(p).map(|(sum, _)| sum)
}

/// Series value together with the number of terms that were added.
fn sum_terms<T: ExactScalar>(p: &HypParams3F2<T>) -> Result<(T, u64), HyperError> {
    p.termination_index().ok_or(HyperError::NonTerminating)?;

    let mut sum = T::zero();
    // running ratio of Pochhammer products and x^k / k!
    let mut numer = T::one();
    let mut denom = T::one();
    let mut k: u64 = 0;
    loop {
        if numer.is_zero() {
            break;
        }
        if denom.is_zero() {
            return Err(HyperError::PoleBeforeTermination { k });
        }
        sum = sum + numer.clone() / denom.clone();

        let kk = T::from_u64(k).expect("term index fits scalar");
        for a in &p.upper {
            numer = numer * (a.clone() + kk.clone());
        }
        numer = numer * p.argument.clone();
        for b in &p.lower {
            denom = denom * (b.clone() + kk.clone());
        }
        denom = denom * (kk + T::one());
        k += 1;
    }
    Ok((sum, k))
}

/// `(c-a)_j (c-b)_j / ((c)_j (c-a-b)_j)`.
pub fn pfaff_saalschutz_rhs<T: ExactScalar>(a: &T, b: &T, c: &T, j: u64) -> Result<T, HyperError> {
    let den = pochhammer(c, j) * pochhammer(&(c.clone() - a.clone() - b.clone()), j);
    if den.is_zero() {
        return Err(HyperError::ZeroDenominator);
    }
    let num = pochhammer(&(c.clone() - a.clone()), j) * pochhammer(&(c.clone() - b.clone()), j);
    Ok(num / den)
}

/// The balanced series `3F2(a, b, -j; c, 1+a+b-c-j; 1)`.
pub fn saalschutz_series<T: ExactScalar>(a: &T, b: &T, c: &T, j: u64) -> HypParams3F2<T> {
    let minus_j = -T::from_u64(j).expect("j fits scalar");
    let balanced = T::one() + a.clone() + b.clone() - c.clone() + minus_j.clone();
    HypParams3F2::at_one([a.clone(), b.clone(), minus_j], [c.clone(), balanced])
}

/// Evaluates both sides of the Pfaff-Saalschutz summation independently and
/// compares them exactly.
pub fn pfaff_saalschutz_check<T: ExactScalar>(a: &T, b: &T, c: &T, j: u64) -> Result<bool, HyperError> {
    let rhs = pfaff_saalschutz_rhs(a, b, c, j)?;
    let lhs = eval_terminating_3f2(&saalschutz_series(a, b, c, j))?;
    Ok(lhs == rhs)
}

/// `(b-a) F(a,b) + a F(a+1,b) - b F(a,b+1)` where
/// `F(a,b) = 3F2(a, b, -j; c, a+b-c+2-j; 1)` and the lower row is shared by
/// all three series. Zero whenever every series is defined.
pub fn contiguity_residual<T: ExactScalar>(a: &T, b: &T, c: &T, j: u64) -> Result<T, HyperError> {
    let minus_j = -T::from_u64(j).expect("j fits scalar");
    let two = T::from_int(2);
    let lower = [c.clone(), a.clone() + b.clone() - c.clone() + two + minus_j.clone()];
    let series = |x: T, y: T| {
        eval_terminating_3f2(&HypParams3F2::at_one([x, y, minus_j.clone()], lower.clone()))
    };
    let one = T::one();
    let base = series(a.clone(), b.clone())?;
    let shift_a = series(a.clone() + one.clone(), b.clone())?;
    let shift_b = series(a.clone(), b.clone() + one)?;
    Ok((b.clone() - a.clone()) * base + a.clone() * shift_a - b.clone() * shift_b)
}

/// `a (a+1)_k (b)_k - b (a)_k (b+1)_k - (a-b) (a)_k (b)_k`; always zero.
pub fn pochhammer_identity_residual<T: ExactScalar>(a: &T, b: &T, k: u64) -> T {
    let one = T::one();
    let a_k = pochhammer(a, k);
    let b_k = pochhammer(b, k);
    let left = a.clone() * pochhammer(&(a.clone() + one.clone()), k) * b_k.clone()
        - b.clone() * a_k.clone() * pochhammer(&(b.clone() + one), k);
    left - (a.clone() - b.clone()) * a_k * b_k
}
