//! Elements `s` of `F_{q^{2r}}^x` of degree `2r` over `F_q` with
//! `s^{-1} = s^{q^r}`: parameters of self-dual cuspidal representations.

use serde::Serialize;

use super::green::CyclicExponent;
use super::small_field::SmallField;
use crate::arith::primes::prime_power;
use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualParam {
    pub exponent: CyclicExponent,
    /// Characteristic polynomial over `F_q`, constant term first, as element codes.
    pub charpoly: Vec<u64>,
}

/// Smallest `d >= 1` with `k q^d = k (mod M)`.
fn degree_of(k: u64, q: u64, m: u64) -> u32 {
    let mut x = k as u128;
    for d in 1.. {
        x = x * q as u128 % m as u128;
        if x == k as u128 {
            return d;
        }
    }
    unreachable!()
}

/// `prod (X - g^{k q^i})` over `i < d`, with coefficients in the big field.
fn conjugate_poly(f: &SmallField, k: u64, q: u64, d: u32) -> Vec<u64> {
    let m = f.units() as u128;
    let mut c = vec![1u64];
    let mut e = k as u128;
    for _ in 0..d {
        let root = f.gen_pow(e as i64);
        let minus = negate(f, root);
        let mut next = vec![0u64; c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], *a);
            next[i] = f.add(next[i], f.mul(*a, minus));
        }
        c = next;
        e = e * q as u128 % m;
    }
    c
}

fn negate(f: &SmallField, x: u64) -> u64 {
    // -1 is g^{(Q-1)/2} in odd characteristic
    let minus_one = f.gen_pow(if f.characteristic() == 2 { 0 } else { (f.units() / 2) as i64 });
    f.mul(minus_one, x)
}

pub fn selfdual_cuspidal_params(q: u64, r: u32) -> Result<Vec<SelfDualParam>> {
    prime_power(q)?;
    if r == 0 {
        return Err(invalid("r must be positive"));
    }
    let big = q.checked_pow(2 * r).ok_or_else(|| invalid("field too large"))?;
    let f = SmallField::new(big)?;
    let m = f.units();
    let qr1 = q.pow(r) as u128 + 1;
    let mut out = Vec::new();
    for k in 1..m {
        if !(k as u128 * qr1).is_multiple_of(m as u128) || degree_of(k, q, m) != 2 * r {
            continue;
        }
        let cp = conjugate_poly(&f, k, q, 2 * r);
        let in_base = cp.iter().all(|c| *c == 0 || f.pow(*c, q as i64) == Some(*c));
        let palindromic = (0..cp.len()).all(|i| cp[i] == cp[cp.len() - 1 - i]);
        if !in_base || !palindromic {
            return Err(invalid(format!("internal: charpoly of g^{k} failed verification")));
        }
        out.push(SelfDualParam { exponent: CyclicExponent::new(m, k as i64)?, charpoly: cp });
    }
    Ok(out)
}
