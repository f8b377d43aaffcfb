//! Exact number-theoretic kernel.

pub mod coeff;
pub mod finite_field;
pub mod half;
pub mod hilbert;
pub mod place;
pub mod primes;
pub mod quad;
pub mod rational;
pub mod reduction;

pub use coeff::{CoeffElem, CoeffJson};
pub use half::HalfInt;
pub use finite_field::{FfElem, GaloisField, MODULUS_TABLE_VERSION};
pub use hilbert::{hilbert_reciprocity_support, hilbert_symbol, is_local_square, same_square_class};
pub use place::Place;
pub use primes::legendre_symbol;
pub use quad::Quad;
pub use rational::Rational;
pub use reduction::ReductionContext;

/// Exponent of `ell` in a nonzero rational.
pub fn ell_adic_valuation(x: &Rational, ell: u64) -> crate::error::Result<i64> {
    primes::require_prime(ell)?;
    x.valuation(&ell.into())
}
