use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use crate::error::{Error, Result};

/// `a + b*sqrt(q)` in the ring `Q[s]/(s^2 - q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad {
    q: u64,
    a: Rational,
    b: Rational,
}

impl Quad {
    pub fn new(q: u64, a: Rational, b: Rational) -> Self {
        Quad { q, a, b }
    }

    pub fn zero(q: u64) -> Self {
        Quad::new(q, Rational::zero(), Rational::zero())
    }

    pub fn one(q: u64) -> Self {
        Quad::from_rational(q, Rational::one())
    }

    pub fn from_rational(q: u64, a: Rational) -> Self {
        Quad::new(q, a, Rational::zero())
    }

    pub fn sqrt_q(q: u64) -> Self {
        Quad::new(q, Rational::zero(), Rational::one())
    }

    pub fn base_q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn norm(&self) -> Rational {
        let q = Rational::from_int(self.q as i64);
        &(&self.a * &self.a) - &(&q * &(&self.b * &self.b))
    }

    pub fn conj(&self) -> Quad {
        Quad::new(self.q, self.a.clone(), -&self.b)
    }

    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn inverse(&self) -> Result<Quad> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::UnsupportedSpectrum(format!(
                "{self} is not invertible when q = {} is a square",
                self.q
            )));
        }
        let inv = n.recip()?;
        Ok(Quad::new(self.q, &self.a * &inv, -&(&self.b * &inv)))
    }

    pub fn scale(&self, c: &Rational) -> Quad {
        Quad::new(self.q, &self.a * c, &self.b * c)
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.q)
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&Quad> for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Quad) -> Quad {
        Quad::new(self.q, &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&Quad> for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Quad) -> Quad {
        Quad::new(self.q, &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&Quad> for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Quad) -> Quad {
        let q = Rational::from_int(self.q as i64);
        let a = &(&self.a * &rhs.a) + &(&q * &(&self.b * &rhs.b));
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Quad::new(self.q, a, b)
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(self.q, -&self.a, -&self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let x = Quad::new(5, 2.into(), 1.into());
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
        let s = Quad::sqrt_q(5);
        assert_eq!(&s * &s, Quad::from_rational(5, 5.into()));
    }

    #[test]
    fn zero_divisor_for_square_q() {
        let x = Quad::new(4, 2.into(), (-1).into());
        assert!(x.inverse().is_err());
    }
}
