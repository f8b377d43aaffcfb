use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};

use super::place::Place;
use super::primes::{factorize, legendre_symbol, prime_divisors};
use super::rational::Rational;
use crate::error::{invalid, Result};

fn unit_mod8(u: &Rational) -> u64 {
    u.residue_mod(&BigUint::from(8u32))
        .expect("odd denominator")
        .to_u64()
        .expect("small")
}

fn eps(u: u64) -> u64 {
    ((u - 1) / 2) % 2
}

fn omega(u: u64) -> u64 {
    ((u * u - 1) / 8) % 2
}

/// The Hilbert symbol `(a, b)_v` over the completion of the rationals at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(invalid("Hilbert symbol of zero"));
    }
    let p = match v {
        Place::Infinity => {
            return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 });
        }
        Place::Finite(p) => p,
    };
    let pb = BigUint::from(p);
    let (alpha, u) = a.split_at(&pb)?;
    let (beta, w) = b.split_at(&pb)?;
    let (alpha, beta) = (alpha.rem_euclid(2) as u64, beta.rem_euclid(2) as u64);
    if p == 2 {
        let (u, w) = (unit_mod8(&u), unit_mod8(&w));
        let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return Ok(if e.is_multiple_of(2) { 1 } else { -1 });
    }
    let mut s: i8 = if (alpha * beta * ((p - 1) / 2)) % 2 == 0 { 1 } else { -1 };
    let unit_legendre = |x: &Rational| -> Result<i8> {
        let n = x.numer() * x.denom();
        legendre_symbol(&n, p)
    };
    if beta == 1 {
        s *= unit_legendre(&u)?;
    }
    if alpha == 1 {
        s *= unit_legendre(&w)?;
    }
    Ok(s)
}

/// Places outside of which `(a, b)_v = 1`: the real place, 2, and every
/// prime dividing a numerator or denominator.
pub fn hilbert_reciprocity_support(a: &Rational, b: &Rational) -> Result<Vec<Place>> {
    if a.is_zero() || b.is_zero() {
        return Err(invalid("Hilbert symbol of zero"));
    }
    let mut set: BTreeSet<Place> = BTreeSet::new();
    set.insert(Place::Infinity);
    set.insert(Place::Finite(2));
    for x in [a.numer(), a.denom(), b.numer(), b.denom()] {
        for p in prime_divisors(x) {
            let p = p.to_u64().ok_or_else(|| invalid("prime factor exceeds 64 bits"))?;
            set.insert(Place::Finite(p));
        }
    }
    Ok(set.into_iter().collect())
}

/// Finite primes dividing any numerator or denominator of the inputs.
pub fn bad_primes<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Result<BTreeSet<u64>> {
    let mut set = BTreeSet::new();
    for x in xs {
        for n in [x.numer(), x.denom()] {
            for p in prime_divisors(n) {
                set.insert(p.to_u64().ok_or_else(|| invalid("prime factor exceeds 64 bits"))?);
            }
        }
    }
    Ok(set)
}

/// Whether `a` is a square in the completion at `v`.
pub fn is_local_square(a: &Rational, v: Place) -> Result<bool> {
    if a.is_zero() {
        return Err(invalid("zero has no square class"));
    }
    match v {
        Place::Infinity => Ok(!a.is_negative()),
        Place::Finite(p) => {
            let (e, u) = a.split_at(&BigUint::from(p))?;
            if e.rem_euclid(2) != 0 {
                return Ok(false);
            }
            if p == 2 {
                Ok(unit_mod8(&u) == 1)
            } else {
                Ok(legendre_symbol(&(u.numer() * u.denom()), p)? == 1)
            }
        }
    }
}

/// Whether `a` and `b` lie in the same class of `Q_v^x / Q_v^x2`.
pub fn same_square_class(a: &Rational, b: &Rational, v: Place) -> Result<bool> {
    let ratio = a * &b.recip()?;
    is_local_square(&ratio, v)
}

/// Signed squarefree integer in the global square class of `a`.
pub fn squarefree_kernel(a: &Rational) -> Result<BigInt> {
    if a.is_zero() {
        return Err(invalid("zero has no square class"));
    }
    let n = a.numer() * a.denom();
    let mut k = BigInt::one();
    for (p, e) in factorize(n.magnitude()) {
        if e % 2 == 1 {
            k *= BigInt::from(p);
        }
    }
    if n.is_negative() {
        k = -k;
    }
    Ok(k)
}
