//! Exact arithmetic for alternate-base expansions `(beta_0, ..., beta_{p-1})`.
//!
//! Everything lives in a real number field `Q(beta)` where `beta` is the
//! product of the bases: greedy expansions with exact periodicity
//! certificates, digit sets, Pisot/Salem classification of `beta`, algebraic
//! certification of `beta` from periodic expansions of `1/q`, conjugate
//! embeddings, and spectra over finite digit sets.
//!
//! The polynomial layer is generic over the scalar type ([`Poly<T>`] with
//! `T: Scalar`); exact algorithms require [`ExactScalar`]. Number fields fix
//! the scalar to [`Rational`].

pub mod base;
pub mod certify;
pub mod cli;
pub mod error;
pub mod expand;
pub mod field;
pub mod interval;
pub mod json;
pub mod polyq;
pub mod scalar;
pub mod spectrum;

pub use error::{Error, Result};
pub use polyq::{BaseClass, Poly, RootBox};
pub use scalar::{ExactScalar, Scalar};

pub type Integer = num_bigint::BigInt;
/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
pub type RationalPoly = Poly<Rational>;
pub type RationalRootBox = RootBox<Rational>;
/// Floating-point polynomial for quick approximations.
pub type FloatPoly = Poly<f64>;
