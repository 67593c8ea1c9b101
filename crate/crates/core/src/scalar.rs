//! Scalar traits the polynomial layer is generic over.
//!
//! [`Scalar`] is anything with ring operations, division and an order
//! (`f32`, `f64`, `Ratio<i64>`, `BigRational`, ...). [`ExactScalar`] marks the
//! types whose arithmetic is exact; root isolation and every certified
//! decision in this crate require it.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug {}

impl<T: Num + Signed + Clone + PartialOrd + Debug> Scalar for T {}

/// Marker for scalars with exact field arithmetic.
pub trait ExactScalar: Scalar {
    /// Exact midpoint of two values.
    fn midpoint(a: &Self, b: &Self) -> Self {
        (a.clone() + b.clone()) / (Self::one() + Self::one())
    }
}

impl<T> ExactScalar for Ratio<T> where T: Integer + Signed + Clone + Debug {}
