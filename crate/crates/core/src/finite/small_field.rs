//! Finite fields small enough for exponent/logarithm tables.

use crate::arith::primes::prime_power;
use crate::arith::{FfElem, GaloisField};
use crate::error::{invalid, Result};

/// Largest field handled with tables.
pub const MAX_TABLE_SIZE: u64 = 1 << 22;

/// `F_q` with elements addressed by their code in the polynomial basis of
/// the standard modulus, and a fixed generator: the primitive element of
/// smallest code.
#[derive(Clone, Debug)]
pub struct SmallField {
    p: u64,
    degree: u32,
    q: u64,
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl SmallField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, degree) = prime_power(q)?;
        if q > MAX_TABLE_SIZE {
            return Err(invalid(format!("field of size {q} is too large for tables")));
        }
        let field = GaloisField::new(p, degree)?;
        let gen = (1..q)
            .map(|c| FfElem::from_code(&field, c))
            .find(|x| x.order().ok() == Some(q - 1))
            .expect("the multiplicative group is cyclic");
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![u64::MAX; q as usize];
        let mut x = FfElem::one(&field);
        for i in 0..q - 1 {
            exp.push(x.code());
            log[x.code() as usize] = i;
            x = x.mul(&gen);
        }
        Ok(SmallField { p, degree, q, exp, log })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    /// Order of the multiplicative group.
    pub fn units(&self) -> u64 {
        self.q - 1
    }

    pub fn check(&self, x: u64) -> Result<u64> {
        if x >= self.q {
            return Err(invalid(format!("{x} is not an element code of F_{}", self.q)));
        }
        Ok(x)
    }

    /// `g^k` for the fixed generator `g`.
    pub fn gen_pow(&self, k: i64) -> u64 {
        self.exp[k.rem_euclid(self.units() as i64) as usize]
    }

    pub fn generator(&self) -> u64 {
        self.gen_pow(1)
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, x: u64) -> Option<u64> {
        self.log.get(x as usize).copied().filter(|l| *l != u64::MAX)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match (self.log(a), self.log(b)) {
            (Some(x), Some(y)) => self.exp[((x + y) % self.units()) as usize],
            _ => 0,
        }
    }

    /// `x^e` for nonzero `x`, any integer `e`.
    pub fn pow(&self, x: u64, e: i64) -> Option<u64> {
        let l = self.log(x)? as i128;
        let m = self.units() as i128;
        Some(self.exp[((l * e as i128).rem_euclid(m)) as usize])
    }

    pub fn inv(&self, x: u64) -> Option<u64> {
        self.pow(x, -1)
    }

    pub fn frobenius(&self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.pow(x, self.p as i64).expect("nonzero")
        }
    }

    /// Absolute trace to the prime field, as an integer mod p.
    pub fn trace(&self, x: u64) -> u64 {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.degree {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        acc
    }
}
