//! Scalar abstractions shared by the rational (Herbrand, discriminant) and
//! real-valued (root discriminant, degree bound) computations.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed, ToPrimitive};

/// An ordered field of exact numbers. Implemented for every `Ratio<I>` over
/// a signed machine or big integer.
pub trait ExactScalar: Num + Clone + Ord + Debug + Display + Send + Sync {
    fn from_int(n: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_frac(num: i64, den: i64) -> Self;

    fn floor_int(&self) -> i64;

    fn ceil_int(&self) -> i64;

    fn is_integral(&self) -> bool;

    fn to_f64(&self) -> f64;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl<I> ExactScalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(I::from_i64(n).expect("integer fits scalar"))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Ratio::new(
            I::from_i64(num).expect("integer fits scalar"),
            I::from_i64(den).expect("integer fits scalar"),
        )
    }

    fn floor_int(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("floor fits i64")
    }

    fn ceil_int(&self) -> i64 {
        self.ceil().to_integer().to_i64().expect("ceil fits i64")
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_f64(&self) -> f64 {
        self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
    }
}

/// Floating point scalar for the bound computations (`f32` or `f64`).
pub trait RealScalar: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync {
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }
}

impl<T: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync> RealScalar for T {}
