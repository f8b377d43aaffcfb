//! Cuspidal representations of `GL_2(F_q)` through regular characters of
//! `F_{q^2}^x`, written as exponents relative to a fixed generator.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclo;
use crate::arith::primes::{prime_power, require_prime};
use crate::error::{invalid, Error, Result};

/// `k mod M`: the character `g^j -> zeta_M^{kj}` or the element `g^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclicExponent {
    pub modulus: u64,
    pub k: u64,
}

impl CyclicExponent {
    pub fn new(modulus: u64, k: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(invalid("modulus must be positive"));
        }
        Ok(CyclicExponent { modulus, k: k.rem_euclid(modulus as i64) as u64 })
    }

    /// Multiplicative order of the element `k` in `Z/M`.
    pub fn order(&self) -> u64 {
        self.modulus / self.k.gcd(&self.modulus)
    }
}

fn green_modulus(q: u64) -> Result<u64> {
    prime_power(q)?;
    q.checked_mul(q).map(|x| x - 1).ok_or_else(|| invalid("q too large"))
}

fn check_modulus(xi: &CyclicExponent, q: u64) -> Result<u64> {
    let m = green_modulus(q)?;
    if xi.modulus != m {
        return Err(Error::ModulusMismatch(format!("expected modulus q^2 - 1 = {m}, got {}", xi.modulus)));
    }
    Ok(m)
}

pub fn is_regular_green(xi: &CyclicExponent, q: u64) -> Result<bool> {
    let m = check_modulus(xi, q)?;
    Ok((q as u128 * xi.k as u128) % m as u128 != xi.k as u128)
}

fn require_regular(xi: &CyclicExponent, q: u64) -> Result<u64> {
    let m = check_modulus(xi, q)?;
    if !is_regular_green(xi, q)? {
        return Err(Error::NotRegular(xi.k));
    }
    Ok(m)
}

/// Conjugacy classes of `GL_2(F_q)`, with eigenvalues given as exponents of
/// the fixed generator `g` of `F_{q^2}^x` (so `F_q^x` is generated by `g^{q+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreenClass {
    /// Scalar `z`.
    Central(i64),
    /// `z` times a nontrivial unipotent.
    Unipotent(i64),
    /// `diag(x, y)` with `x != y` in `F_q^x`.
    Split(i64, i64),
    /// Eigenvalues `x, x^q` with `x` outside `F_q`.
    Elliptic(i64),
}

impl FromStr for GreenClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(format!("unknown class {s:?}; use identity, central:j, unipotent:j, split:i,j or elliptic:j"));
        if s == "identity" {
            return Ok(GreenClass::Central(0));
        }
        let (tag, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<i64> = args.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
        match (tag, nums.as_slice()) {
            ("central", [j]) => Ok(GreenClass::Central(*j)),
            ("unipotent", [j]) => Ok(GreenClass::Unipotent(*j)),
            ("split", [i, j]) => Ok(GreenClass::Split(*i, *j)),
            ("elliptic", [j]) => Ok(GreenClass::Elliptic(*j)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GreenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreenClass::Central(j) => write!(f, "central:{j}"),
            GreenClass::Unipotent(j) => write!(f, "unipotent:{j}"),
            GreenClass::Split(i, j) => write!(f, "split:{i},{j}"),
            GreenClass::Elliptic(j) => write!(f, "elliptic:{j}"),
        }
    }
}

/// Value of the cuspidal character attached to the regular `xi` on a class.
pub fn green_character_value(xi: &CyclicExponent, q: u64, class: GreenClass) -> Result<Cyclo> {
    let m = require_regular(xi, q)?;
    let mi = m as i64;
    let in_fq = |j: i64| j.rem_euclid(q as i64 + 1) == 0;
    let chi = |j: i64| Cyclo::root_of_unity(m, (xi.k as i64 * j.rem_euclid(mi)) % mi);
    match class {
        GreenClass::Central(z) | GreenClass::Unipotent(z) if !in_fq(z) => {
            Err(invalid(format!("g^{z} does not lie in F_{q}")))
        }
        GreenClass::Central(z) => Ok(chi(z).mul(&Cyclo::integer(m, q as i64 - 1))),
        GreenClass::Unipotent(z) => Ok(chi(z).neg()),
        GreenClass::Split(x, y) => {
            if !in_fq(x) || !in_fq(y) || (x - y).rem_euclid(mi) == 0 {
                return Err(invalid("split class needs two distinct elements of F_q"));
            }
            Ok(Cyclo::zero(m))
        }
        GreenClass::Elliptic(x) => {
            if in_fq(x) {
                return Err(invalid(format!("g^{x} lies in F_{q}; not elliptic")));
            }
            Ok(chi(x).add(&chi(x * q as i64)).neg())
        }
    }
}

/// The ratio of the two characters has order a power of `ell`.
pub fn congruent_green(xi1: &CyclicExponent, xi2: &CyclicExponent, ell: u64) -> Result<bool> {
    require_prime(ell)?;
    if xi1.modulus != xi2.modulus {
        return Err(Error::ModulusMismatch(format!("{} vs {}", xi1.modulus, xi2.modulus)));
    }
    let diff = CyclicExponent::new(xi1.modulus, xi1.k as i64 - xi2.k as i64)?;
    let mut o = diff.order();
    while o % ell == 0 {
        o /= ell;
    }
    Ok(o == 1)
}

/// Number of cuspidal factors in the base change to a ramified quadratic
/// extension: 2 when `xi^{q-1}` has order 2, else 1.
pub fn base_change_length(xi: &CyclicExponent, q: u64) -> Result<u32> {
    let m = require_regular(xi, q)?;
    let t = CyclicExponent::new(m, ((q as u128 - 1) * xi.k as u128 % m as u128) as i64)?;
    Ok(if t.order() == 2 { 2 } else { 1 })
}
