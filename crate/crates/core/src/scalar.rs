//! Scalar abstraction shared by every evaluation path.
//!
//! All geometry in this crate is written once against [`Scalar`] and runs
//! unchanged on `f32`, `f64` and (with the `rational` feature) exact
//! arbitrary-precision rationals.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Field-like number type the kernel computes in.
pub trait Scalar:
    Num + Signed + Clone + Debug + PartialOrd + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Absolute slack allowed when testing whether a parameter lies in a
    /// domain of the given magnitude. Zero for exact types.
    fn domain_slack(magnitude: &Self) -> Self;

    /// `false` for NaN and infinities.
    fn is_finite_value(&self) -> bool;

    /// Lossy conversion used for diagnostics.
    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("integer fits the scalar type")
    }

    fn ratio(num: usize, den: usize) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            fn domain_slack(magnitude: &Self) -> Self {
                4.0 * <$f>::EPSILON * magnitude.abs().max(1.0)
            }

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

#[cfg(feature = "rational")]
impl Scalar for num_rational::BigRational {
    fn domain_slack(_magnitude: &Self) -> Self {
        num_traits::Zero::zero()
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn from_count(n: usize) -> Self {
        num_rational::BigRational::from_integer(num_bigint::BigInt::from(n))
    }
}

/// Exact binomial coefficient for `n <= 64` (larger values overflow the
/// intermediate product).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // exact at every step: c * (n - i) is divisible by i + 1
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c
}

pub(crate) fn binomial_as<T: Scalar>(n: usize, k: usize) -> T {
    T::from_u128(binomial(n, k)).expect("binomial coefficient fits the scalar type")
}

/// Non-negative integer power by repeated squaring.
pub(crate) fn powi<T: Scalar>(base: &T, exp: usize) -> T {
    num_traits::pow::pow(base.clone(), exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(12, 6), 924);
    }

    #[test]
    fn binomial_pascal_up_to_64() {
        for n in 1..=64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn float_slack_scales() {
        assert!(f64::domain_slack(&1.0) < 1e-15);
        assert!(f64::domain_slack(&100.0) > f64::domain_slack(&1.0));
    }
}
