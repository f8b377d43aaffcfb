//! Laurent polynomials in a formal symbol `s` standing for `q^{1/2}`.
//!
//! Values live in `Q[s]/(s^2 - q)`. A value has many term presentations;
//! [`CoeffElem::normalized`] moves whole powers of `q` out of each
//! coefficient, which makes monomials canonical, so an eigenvalue written
//! as `5` is stored as `q` when `q = 5`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::primes::prime_power;
use super::quad::Quad;
use super::rational::Rational;
use crate::error::{invalid, Result};

/// JSON shape of a coefficient: half-exponent (as a decimal string) to coefficient.
pub type CoeffJson = BTreeMap<String, Rational>;

/// Equality and hashing are by value in `Q[s]/(s^2 - q)`; the term map is
/// only a presentation.
#[derive(Clone)]
pub struct CoeffElem {
    base_q: u64,
    terms: BTreeMap<i64, Rational>,
}

impl CoeffElem {
    pub fn new(base_q: u64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = CoeffElem::zero(base_q);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn zero(base_q: u64) -> Self {
        CoeffElem { base_q, terms: BTreeMap::new() }
    }

    pub fn one(base_q: u64) -> Self {
        CoeffElem::monomial(base_q, Rational::one(), 0)
    }

    pub fn from_rational(base_q: u64, c: Rational) -> Self {
        CoeffElem::monomial(base_q, c, 0)
    }

    /// `c * q^{k/2}`.
    pub fn monomial(base_q: u64, c: Rational, k: i64) -> Self {
        CoeffElem::new(base_q, [(k, c)])
    }

    /// `q^{k/2}`.
    pub fn q_pow_half(base_q: u64, k: i64) -> Self {
        CoeffElem::monomial(base_q, Rational::one(), k)
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn base_q(&self) -> u64 {
        self.base_q
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `(coefficient, half-exponent)` of a monomial.
    pub fn monomial_parts(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    pub fn inverse_monomial(&self) -> Result<CoeffElem> {
        let (c, k) = self
            .monomial_parts()
            .ok_or_else(|| invalid("only monomials are invertible"))?;
        Ok(CoeffElem::monomial(self.base_q, c.recip()?, -k))
    }

    /// Integer power of a monomial.
    pub fn pow_monomial(&self, e: i64) -> Result<CoeffElem> {
        let (c, k) = self
            .monomial_parts()
            .ok_or_else(|| invalid("only monomials have integer powers"))?;
        Ok(CoeffElem::monomial(self.base_q, c.pow(e), k * e))
    }

    pub fn pow(&self, e: u32) -> CoeffElem {
        let mut acc = CoeffElem::one(self.base_q);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> CoeffElem {
        CoeffElem::new(self.base_q, self.terms.iter().map(|(k, x)| (*k, x * c)))
    }

    /// Moves whole powers of `q` from each coefficient into the exponent so
    /// that every coefficient has p-adic valuation in `[0, f)` for `q = p^f`.
    pub fn normalized(&self) -> Result<CoeffElem> {
        let (p, f) = prime_power(self.base_q)?;
        let pb = BigUint::from(p);
        let q = Rational::from_int(self.base_q as i64);
        let mut out = CoeffElem::zero(self.base_q);
        for (k, c) in &self.terms {
            let v = c.valuation(&pb)?;
            let j = v.div_euclid(f as i64);
            out.add_term(k + 2 * j, c * &q.pow(-j));
        }
        Ok(out)
    }

    /// Smallest ell-adic valuation among the coefficients (`None` for zero).
    pub fn min_valuation(&self, ell: u64) -> Option<i64> {
        let lb = BigUint::from(ell);
        self.terms
            .values()
            .map(|c| c.valuation(&lb).expect("nonzero coefficient"))
            .min()
    }

    /// Image in `Q(sqrt q)` under `s -> sqrt q`.
    pub fn to_quad(&self) -> Quad {
        let q = Rational::from_int(self.base_q as i64);
        let mut a = Rational::zero();
        let mut b = Rational::zero();
        for (k, c) in &self.terms {
            let half = k.div_euclid(2);
            let t = c * &q.pow(half);
            if k.rem_euclid(2) == 0 {
                a = &a + &t;
            } else {
                b = &b + &t;
            }
        }
        Quad::new(self.base_q, a, b)
    }

    /// Canonical preimage of `a + b sqrt q`, with each part normalized.
    pub fn from_quad(x: &Quad) -> CoeffElem {
        CoeffElem::new(x.base_q(), [(0, x.a().clone()), (1, x.b().clone())])
            .normalized()
            .expect("base_q is a prime power")
    }

    pub fn to_json(&self) -> CoeffJson {
        self.terms
            .iter()
            .map(|(k, c)| (k.to_string(), c.clone()))
            .collect()
    }

    pub fn from_json(base_q: u64, map: &CoeffJson) -> Result<CoeffElem> {
        let mut terms = Vec::with_capacity(map.len());
        for (k, c) in map {
            let k: i64 = k
                .trim()
                .parse()
                .map_err(|_| invalid(format!("half-exponent {k:?} is not an integer")))?;
            terms.push((k, c.clone()));
        }
        Ok(CoeffElem::new(base_q, terms))
    }

    /// Key for the canonical order of monomials: half-exponent, then coefficient.
    pub fn sort_key(&self) -> (i64, Rational) {
        match self.monomial_parts() {
            Some((c, k)) => (k, c.clone()),
            None => (i64::MIN, Rational::zero()),
        }
    }
}

impl PartialEq for CoeffElem {
    fn eq(&self, other: &Self) -> bool {
        self.base_q == other.base_q && self.to_quad() == other.to_quad()
    }
}

impl Eq for CoeffElem {}

impl std::hash::Hash for CoeffElem {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.to_quad().hash(h);
    }
}

impl fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => c.to_string(),
                _ => format!("{c}*q^({k}/2)"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&CoeffElem> for &CoeffElem {
    type Output = CoeffElem;
    fn add(self, rhs: &CoeffElem) -> CoeffElem {
        debug_assert_eq!(self.base_q, rhs.base_q);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub<&CoeffElem> for &CoeffElem {
    type Output = CoeffElem;
    fn sub(self, rhs: &CoeffElem) -> CoeffElem {
        self + &(-rhs)
    }
}

impl Mul<&CoeffElem> for &CoeffElem {
    type Output = CoeffElem;
    fn mul(self, rhs: &CoeffElem) -> CoeffElem {
        debug_assert_eq!(self.base_q, rhs.base_q);
        let mut out = CoeffElem::zero(self.base_q);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        CoeffElem::new(self.base_q, self.terms.iter().map(|(k, c)| (*k, -c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(q: u64, c: &str, k: i64) -> CoeffElem {
        CoeffElem::monomial(q, c.parse().unwrap(), k)
    }

    #[test]
    fn ring_basics() {
        let s = CoeffElem::q_pow_half(5, 1);
        let x = &s + &CoeffElem::one(5);
        let y = &x * &x;
        assert_eq!(y, CoeffElem::new(5, [(0, 1.into()), (1, 2.into()), (2, 1.into())]));
        assert!((&x - &x).is_zero());
        assert_eq!(&s * &s.inverse_monomial().unwrap(), CoeffElem::one(5));
    }

    #[test]
    fn normalization_moves_q_powers() {
        assert_eq!(m(5, "5", 0).normalized().unwrap(), m(5, "1", 2));
        assert_eq!(m(5, "1/5", 1).normalized().unwrap(), m(5, "1", -1));
        assert_eq!(m(5, "-3/25", 3).normalized().unwrap(), m(5, "-3", -1));
        // q = 4: a single factor of 2 stays in the coefficient
        assert_eq!(m(4, "2", 0).normalized().unwrap(), m(4, "2", 0));
        assert_eq!(m(4, "8", 0).normalized().unwrap(), m(4, "2", 2));
    }

    #[test]
    fn quad_bridge() {
        let x = CoeffElem::new(5, [(3, 1.into()), (-2, 10.into()), (0, 1.into())]);
        let z = x.to_quad();
        assert_eq!(z.a(), &Rational::from_int(3));
        assert_eq!(z.b(), &Rational::from_int(5));
        assert_eq!(CoeffElem::from_quad(&z).to_quad(), z);
    }

    #[test]
    fn json_round_trip() {
        let x = CoeffElem::new(7, [(-1, "1/2".parse().unwrap()), (4, 3.into())]);
        let j = serde_json::to_string(&x.to_json()).unwrap();
        assert_eq!(j, r#"{"-1":"1/2","4":"3"}"#);
        let back: CoeffJson = serde_json::from_str(&j).unwrap();
        assert_eq!(CoeffElem::from_json(7, &back).unwrap(), x);
    }
}
