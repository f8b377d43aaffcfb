//! Prime-power finite fields `F_p[x]/(m(x))`.
//!
//! The defining polynomial for `(p, k)` is the smallest monic irreducible of
//! degree `k`, ordering candidates by the integer `sum c_i p^i` of their lower
//! coefficients. That rule is frozen as [`MODULUS_TABLE_VERSION`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use super::primes::{factorize, is_prime_u64};
use super::rational::Rational;
use crate::error::{invalid, Error, Result};

pub const MODULUS_TABLE_VERSION: u32 = 1;

/// Dense polynomial over `F_p`, lowest coefficient first, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(v)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    e.x.mod_floor(&BigInt::from(p)).to_u64().expect("small")
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Rabin's irreducibility test for a monic polynomial of degree `k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let pk = (p as u128).pow(k as u32);
    if poly_sub(&poly_powmod(&x, pk, f, p), &x, p) != Poly::new() {
        return false;
    }
    for (r, _) in factorize(&(k as u64).into()) {
        let r = r.to_u64().expect("small") as u32;
        let e = (p as u128).pow(k as u32 / r);
        let h = poly_sub(&poly_powmod(&x, e, f, p), &x, p);
        let g = poly_gcd(f, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// The finite field with `p^degree` elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u64,
    degree: u32,
    modulus: Vec<u64>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p, self.degree, self.modulus)
    }
}

impl GaloisField {
    pub fn new(p: u64, degree: u32) -> Result<Arc<Self>> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if degree == 0 {
            return Err(invalid("field degree must be positive"));
        }
        let size = (p as u128).checked_pow(degree).filter(|s| *s < (1u128 << 62));
        if size.is_none() {
            return Err(invalid("field too large"));
        }
        let k = degree as usize;
        let count = (p as u128).pow(degree) as u64;
        for code in 0..count {
            let mut f = Vec::with_capacity(k + 1);
            let mut c = code;
            for _ in 0..k {
                f.push(c % p);
                c /= p;
            }
            f.push(1);
            if is_irreducible(&f, p) {
                return Ok(Arc::new(GaloisField { p, degree, modulus: f }));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree)
    }

    /// Monic defining polynomial, lowest coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

/// Element of a [`GaloisField`], stored as a reduced coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FfElem {
    field: Arc<GaloisField>,
    coeffs: Vec<u64>,
}

impl FfElem {
    fn from_poly(field: &Arc<GaloisField>, poly: &[u64]) -> Self {
        let r = poly_rem(poly, &field.modulus, field.p);
        let mut coeffs = vec![0; field.degree as usize];
        coeffs[..r.len()].copy_from_slice(&r);
        FfElem { field: field.clone(), coeffs }
    }

    pub fn from_coeffs(field: &Arc<GaloisField>, coeffs: &[u64]) -> Result<Self> {
        if coeffs.len() > field.degree as usize || coeffs.iter().any(|c| *c >= field.p) {
            return Err(invalid("coefficient vector does not fit the field"));
        }
        Ok(FfElem::from_poly(field, &trim(coeffs.to_vec())))
    }

    pub fn from_int(field: &Arc<GaloisField>, n: i64) -> Self {
        let r = n.rem_euclid(field.p as i64) as u64;
        FfElem::from_poly(field, &trim(vec![r]))
    }

    /// Image of an integer code `sum c_i p^i`.
    pub fn from_code(field: &Arc<GaloisField>, mut code: u64) -> Self {
        let mut v = Vec::with_capacity(field.degree as usize);
        for _ in 0..field.degree {
            v.push(code % field.p);
            code /= field.p;
        }
        FfElem::from_poly(field, &trim(v))
    }

    pub fn code(&self) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * self.field.p + c)
    }

    /// Image of a rational whose denominator is prime to the characteristic.
    pub fn from_rational(field: &Arc<GaloisField>, x: &Rational) -> Result<Self> {
        let p = BigInt::from(field.p);
        let d = x.denom().mod_floor(&p);
        if d == BigInt::from(0) {
            return Err(Error::NotIntegral(format!("{x} at {}", field.p)));
        }
        let n = x.numer().mod_floor(&p).to_u64().expect("small");
        let d = inv_mod_p(d.to_u64().expect("small"), field.p);
        Ok(FfElem::from_int(field, (n * d % field.p) as i64))
    }

    pub fn zero(field: &Arc<GaloisField>) -> Self {
        FfElem::from_int(field, 0)
    }

    pub fn one(field: &Arc<GaloisField>) -> Self {
        FfElem::from_int(field, 1)
    }

    /// The class of `x` in `F_p[x]/(m)`.
    pub fn generator_x(field: &Arc<GaloisField>) -> Self {
        FfElem::from_poly(field, &[0, 1])
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|c| *c == 0)
    }

    fn poly(&self) -> Poly {
        trim(self.coeffs.clone())
    }

    pub fn add(&self, o: &FfElem) -> FfElem {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| (a + b) % p).collect();
        FfElem { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, o: &FfElem) -> FfElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FfElem {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().map(|a| (p - a) % p).collect();
        FfElem { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, o: &FfElem) -> FfElem {
        FfElem::from_poly(&self.field, &poly_mul(&self.poly(), &o.poly(), self.field.p))
    }

    pub fn pow(&self, e: u128) -> FfElem {
        FfElem::from_poly(
            &self.field,
            &poly_powmod(&self.poly(), e, &self.field.modulus, self.field.p),
        )
    }

    /// Integer power, negative exponents allowed for units.
    pub fn pow_i(&self, e: i64) -> Result<FfElem> {
        if e >= 0 {
            Ok(self.pow(e as u128))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs() as u128))
        }
    }

    pub fn inv(&self) -> Result<FfElem> {
        if self.is_zero() {
            return Err(invalid("zero is not invertible"));
        }
        Ok(self.pow(self.field.size() as u128 - 2))
    }

    pub fn frobenius(&self) -> FfElem {
        self.pow(self.field.p as u128)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(invalid("zero has no multiplicative order"));
        }
        let n = self.field.size() - 1;
        let mut ord = n;
        for (r, _) in factorize(&n.into()) {
            let r = r.to_u64().expect("small");
            while ord.is_multiple_of(r) && self.pow((ord / r) as u128).is_one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Square root via Tonelli-Shanks, if one exists. For odd characteristic
    /// the smaller of the two roots is returned.
    pub fn sqrt(&self) -> Option<FfElem> {
        let f = &self.field;
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = f.size() - 1;
        if f.p == 2 {
            return Some(self.pow((n as u128 + 2) / 2));
        }
        if !self.pow((n / 2) as u128).is_one() {
            return None;
        }
        let e = n.trailing_zeros();
        let m = n >> e;
        let z = (2..f.size())
            .map(|c| FfElem::from_code(f, c))
            .find(|z| !z.pow((n / 2) as u128).is_one())
            .expect("a nonsquare exists in odd characteristic");
        let mut c = z.pow(m as u128);
        let mut t = self.pow(m as u128);
        let mut r = self.pow((m as u128).div_ceil(2));
        let mut big_m = e;
        while !t.is_one() {
            let mut i = 0;
            let mut tt = t.clone();
            while !tt.is_one() {
                tt = tt.mul(&tt);
                i += 1;
            }
            let b = c.pow(1u128 << (big_m - i - 1));
            r = r.mul(&b);
            c = b.mul(&b);
            t = t.mul(&c);
            big_m = i;
        }
        let other = r.neg();
        Some(if other < r { other } else { r })
    }
}

impl PartialOrd for FfElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on coefficient vectors read from the top degree down,
/// which is the order of the integer codes `sum c_i p^i`.
impl Ord for FfElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
    }
}

impl fmt::Display for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Debug for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl Serialize for FfElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}
