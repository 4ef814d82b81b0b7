//! Exact symbolic cohomology for normal-crossings divisors.
//!
//! Classes live in truncated, evenly graded commutative rings over ℚ and are
//! kept in a canonical normal form, so every identity is checked by exact
//! equality. On top of the ring engine sit characteristic-class conversions
//! (Chern character, Todd, Segre), divisor strata and log-tangent Chern
//! classes, and a generators-and-relations model of blowups along the deepest
//! stratum of a simple-crossings divisor.

pub mod blowup;
pub mod calibration;
pub mod catalog;
pub mod charclass;
pub mod divisor;
mod error;
pub mod ring;
pub mod space;
pub mod verdict;

pub use error::Error;
pub use ring::{build_ring, Cls, Generator, GradedRing, Monomial, Poly, RingMap, RingPresentation};
pub use space::{IntegrationFunctional, Space};
pub use verdict::{Evidence, Verdict};

/// Exact rationals with arbitrary-precision numerator and denominator.
pub type Q = num_rational::BigRational;

pub type Result<T> = std::result::Result<T, Error>;

/// Convenience constructor for small rationals.
pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer.into(), denom.into())
}
