//! Numeric scalars used for probabilities, thresholds and statistics.
//!
//! Combinatorial objects (matrices, types, graphs) are integer-indexed and do
//! not depend on a scalar. Everything that measures them does: exact
//! probabilities want a rational field, Monte Carlo summaries want a float.
//! Both are served by [`Scalar`], with [`Rational`](crate::Rational) and `f64`
//! as the concrete instantiations used throughout the crate.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Float, Num};

/// A numeric field that can be built from a ratio of counts.
pub trait Scalar: Num + Clone + PartialOrd + Debug {
    /// `num / den` in this scalar. `den` must be nonzero.
    fn from_counts(num: u64, den: u64) -> Self;

    /// Lossy view used for reporting.
    fn to_f64(&self) -> f64;
}

macro_rules! impl_scalar_float {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_counts(num: u64, den: u64) -> Self {
                debug_assert!(den != 0);
                (num as f64 / den as f64) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

impl_scalar_float!(f32);
impl_scalar_float!(f64);

macro_rules! impl_scalar_ratio {
    ($t:ty) => {
        impl Scalar for Ratio<$t> {
            fn from_counts(num: u64, den: u64) -> Self {
                let num = <$t>::try_from(num).expect("count overflows ratio");
                let den = <$t>::try_from(den).expect("count overflows ratio");
                Ratio::new(num, den)
            }

            fn to_f64(&self) -> f64 {
                *self.numer() as f64 / *self.denom() as f64
            }
        }
    };
}

impl_scalar_ratio!(i64);
impl_scalar_ratio!(i128);

impl Scalar for Ratio<BigInt> {
    fn from_counts(num: u64, den: u64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Sample mean and standard deviation (with the `n - 1` denominator).
///
/// Returns zeros for an empty slice and a zero deviation for a single value.
pub fn mean_stddev<T: Float>(values: &[T]) -> (T, T) {
    if values.is_empty() {
        return (T::zero(), T::zero());
    }
    let count = T::from(values.len()).unwrap();
    let mean = values.iter().fold(T::zero(), |acc, &v| acc + v) / count;
    if values.len() < 2 {
        return (mean, T::zero());
    }
    let ss = values.iter().fold(T::zero(), |acc, &v| acc + (v - mean) * (v - mean));
    (mean, (ss / (count - T::one())).sqrt())
}
