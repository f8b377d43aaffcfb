use std::sync::Arc;

use serde::Serialize;

use super::coeff::CoeffElem;
use super::finite_field::{FfElem, GaloisField};
use super::primes::{prime_power, require_prime};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Data needed to reduce coefficients modulo a prime above `ell`: the
/// residue field and a fixed image of `q^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionContext {
    ell: u64,
    q: u64,
    field: Arc<GaloisField>,
    sqrt_q: FfElem,
}

#[derive(Serialize)]
struct ContextJson<'a> {
    ell: u64,
    q: u64,
    degree: u32,
    modulus: &'a [u64],
    sqrt_q_image: &'a FfElem,
}

impl ReductionContext {
    pub fn new(ell: u64, q: u64) -> Result<Self> {
        require_prime(ell)?;
        prime_power(q)?;
        if q.is_multiple_of(ell) {
            return Err(Error::InvalidInput(format!("ell = {ell} divides q = {q}")));
        }
        let f1 = GaloisField::new(ell, 1)?;
        let q1 = FfElem::from_int(&f1, (q % ell) as i64);
        let (field, sqrt_q) = match q1.sqrt() {
            Some(s) => (f1, s),
            None => {
                let f2 = GaloisField::new(ell, 2)?;
                let s = FfElem::from_int(&f2, (q % ell) as i64)
                    .sqrt()
                    .expect("every element of F_ell is a square in F_ell^2");
                (f2, s)
            }
        };
        Ok(ReductionContext { ell, q, field, sqrt_q })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn sqrt_q_image(&self) -> &FfElem {
        &self.sqrt_q
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ContextJson {
            ell: self.ell,
            q: self.q,
            degree: self.field.degree(),
            modulus: self.field.modulus(),
            sqrt_q_image: &self.sqrt_q,
        })
        .expect("serializable")
    }

    pub fn reduce_rational(&self, x: &Rational) -> Result<FfElem> {
        FfElem::from_rational(&self.field, x)
            .map_err(|_| Error::NotIntegral(format!("{x} at ell = {}", self.ell)))
    }

    /// Ring homomorphism to the residue field sending `q^{1/2}` to the fixed root.
    pub fn reduce_coeff(&self, x: &CoeffElem) -> Result<FfElem> {
        if x.base_q() != self.q {
            return Err(Error::ContextMismatch(format!(
                "coefficient over q = {} but context has q = {}",
                x.base_q(),
                self.q
            )));
        }
        let mut acc = FfElem::zero(&self.field);
        for (k, c) in x.terms() {
            let term = self.reduce_rational(c)?.mul(&self.sqrt_q.pow_i(*k)?);
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}
