//! Stem-field discriminant exponents, theta characteristics over small
//! fields of characteristic 2, Herbrand functions of ramification
//! filtrations, and root-discriminant degree bounds.
//!
//! Exact computations are generic over [`scalar::ExactScalar`] and real
//! ones over [`scalar::RealScalar`]; the aliases below fix the usual
//! concrete choices.

pub mod action;
pub mod bounds;
pub mod discriminant;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod group;
pub mod linalg;
pub mod ramification;
pub mod scalar;
pub mod symplectic;

pub use error::{Error, Result};

/// Exact rational with machine-size numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Exact rational with arbitrary-precision numerator and denominator.
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;

/// Herbrand function over [`Rational`].
pub type Herbrand = ramification::HerbrandFn<Rational>;

/// Odlyzko row over `f64`.
pub type OdlyzkoRow = bounds::OdlyzkoRow<f64>;

/// Root-discriminant cap over `f64`.
pub type RootDiscCap = bounds::RootDiscCap<f64>;

/// Prime-by-prime oracle result over [`Rational`].
pub type OracleResult = discriminant::OracleResult<Rational>;
