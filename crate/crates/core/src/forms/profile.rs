use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::hilbert::{bad_primes, hilbert_symbol, same_square_class, squarefree_kernel};
use crate::arith::{Place, Rational};
use crate::error::{invalid, Result};

/// Diagonal quadratic form `sum c_i x_i^2` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagQuadForm {
    coeffs: Vec<Rational>,
}

impl DiagQuadForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("a form needs at least one coefficient"));
        }
        if coeffs.iter().any(Rational::is_zero) {
            return Err(invalid("form coefficients must be nonzero"));
        }
        Ok(DiagQuadForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        DiagQuadForm::new(coeffs.iter().map(|c| Rational::from_int(*c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn dim(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn disc(&self) -> Rational {
        self.coeffs.iter().fold(Rational::one(), |acc, c| &acc * c)
    }

    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        DiagQuadForm::new(self.coeffs.iter().map(|c| c * lambda).collect())
    }

    pub fn hasse(&self, v: Place) -> Result<i8> {
        let mut s = 1;
        for i in 0..self.coeffs.len() {
            for j in i + 1..self.coeffs.len() {
                s *= hilbert_symbol(&self.coeffs[i], &self.coeffs[j], v)?;
            }
        }
        Ok(s)
    }

    /// Primes outside which every coefficient is a unit at an odd prime.
    pub fn symbol_support(&self) -> Result<BTreeSet<u64>> {
        let mut s = bad_primes(&self.coeffs)?;
        s.insert(2);
        Ok(s)
    }
}

/// Local invariants of a form at one place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    pub place: Place,
    pub dim: u32,
    /// Signed squarefree representative of the discriminant class.
    pub disc: Rational,
    pub hasse: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<(u32, u32)>,
}

impl LocalProfile {
    /// A profile prescribed at a finite place, with the discriminant reduced
    /// to its global squarefree representative.
    pub fn finite(place: Place, dim: u32, disc: &Rational, hasse: i8) -> Result<Self> {
        if !place.is_finite() {
            return Err(invalid("expected a finite place"));
        }
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        if hasse != 1 && hasse != -1 {
            return Err(invalid("Hasse invariant must be +1 or -1"));
        }
        Ok(LocalProfile {
            place,
            dim,
            disc: Rational::from_int(squarefree_kernel(disc)?),
            hasse,
            signature: None,
        })
    }

    /// Same invariants, comparing discriminants up to local squares.
    pub fn matches(&self, other: &LocalProfile) -> Result<bool> {
        if self.place != other.place || self.dim != other.dim {
            return Ok(false);
        }
        if self.place == Place::Infinity {
            return Ok(self.signature == other.signature);
        }
        Ok(self.hasse == other.hasse && same_square_class(&self.disc, &other.disc, self.place)?)
    }
}

pub fn local_profile(f: &DiagQuadForm, v: Place) -> Result<LocalProfile> {
    let disc = Rational::from_int(squarefree_kernel(&f.disc())?);
    let signature = match v {
        Place::Infinity => {
            let neg = f.coeffs.iter().filter(|c| c.is_negative()).count() as u32;
            Some((f.dim() - neg, neg))
        }
        Place::Finite(_) => None,
    };
    Ok(LocalProfile { place: v, dim: f.dim(), disc, hasse: f.hasse(v)?, signature })
}

pub fn locally_equivalent(f: &DiagQuadForm, g: &DiagQuadForm, v: Place) -> Result<bool> {
    local_profile(f, v)?.matches(&local_profile(g, v)?)
}

pub fn globally_equivalent(f: &DiagQuadForm, g: &DiagQuadForm) -> Result<bool> {
    if f.dim() != g.dim() {
        return Ok(false);
    }
    let mut places: Vec<Place> = vec![Place::Infinity];
    let primes: BTreeSet<u64> = f.symbol_support()?.union(&g.symbol_support()?).copied().collect();
    places.extend(primes.into_iter().map(Place::Finite));
    for v in places {
        if !locally_equivalent(f, g, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Hasse invariant of the split special orthogonal form: dimension `2n+1`
/// for `Odd`, dimension `2n` with square normalized discriminant for `Even`.
pub fn split_so_hasse(parity: Parity, n: u32, delta: &Rational, v: Place) -> Result<i8> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if delta.is_zero() {
        return Err(invalid("discriminant must be nonzero"));
    }
    let m1 = Rational::from_int(-1);
    let h = hilbert_symbol(&m1, &m1, v)?;
    let n = n as u64;
    Ok(match parity {
        Parity::Odd => {
            let d = hilbert_symbol(&m1, delta, v)?;
            pow_sign(h, n * (n + 1) / 2) * pow_sign(d, n)
        }
        Parity::Even => pow_sign(h, n * (n - 1) / 2),
    })
}

/// Hasse invariant of the trace form of a Hermitian form of dimension `n`
/// with algebra parameter `alpha` and discriminant `delta`.
pub fn hermitian_trace_hasse(n: u32, alpha: &Rational, delta: &Rational, v: Place) -> Result<i8> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let n = n as u64;
    let a = hilbert_symbol(alpha, delta, v)?;
    let b = hilbert_symbol(&-alpha, &Rational::from_int(-1), v)?;
    Ok(a * pow_sign(b, n * (n - 1) / 2))
}

pub(crate) fn pow_sign(s: i8, e: u64) -> i8 {
    if s == -1 && e % 2 == 1 {
        -1
    } else {
        1
    }
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[i64]) -> DiagQuadForm {
        DiagQuadForm::from_ints(c).unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = local_profile(&f(&[1, 1, 1]), Place::Finite(3)).unwrap();
        assert_eq!((p.dim, p.disc.clone(), p.hasse), (3, int(1), 1));
        assert_eq!(local_profile(&f(&[-1, -1]), Place::Finite(2)).unwrap().hasse, -1);
        let p = local_profile(&f(&[1, -1]), Place::Infinity).unwrap();
        assert_eq!((p.signature, p.hasse, p.disc), (Some((1, 1)), 1, int(-1)));
    }

    #[test]
    fn equivalence_examples() {
        let a = f(&[1, 1]);
        assert!(locally_equivalent(&a, &a, Place::Finite(7)).unwrap());
        assert!(!locally_equivalent(&a, &f(&[-1, -1]), Place::Infinity).unwrap());
        assert!(locally_equivalent(&a, &f(&[2, 2]), Place::Finite(5)).unwrap());
        assert!(globally_equivalent(&f(&[1, 1, 1, 1]), &f(&[1, 1, 2, 2])).unwrap());
        assert!(!globally_equivalent(&f(&[1, 7]), &f(&[-1, -7])).unwrap());
        assert!(!globally_equivalent(&f(&[1, 1, 1]), &f(&[1, 1, 2])).unwrap());
    }

    #[test]
    fn split_hasse_examples() {
        let one = int(1);
        assert_eq!(split_so_hasse(Parity::Odd, 2, &one, Place::Finite(3)).unwrap(), 1);
        assert_eq!(split_so_hasse(Parity::Odd, 2, &one, Place::Finite(2)).unwrap(), -1);
        for p in [2, 3, 5, 7] {
            assert_eq!(split_so_hasse(Parity::Even, 1, &int(-1), Place::Finite(p)).unwrap(), 1);
        }
        assert!(split_so_hasse(Parity::Odd, 0, &one, Place::Finite(3)).is_err());
    }

    #[test]
    fn hermitian_hasse_examples() {
        assert_eq!(hermitian_trace_hasse(1, &int(-7), &int(1), Place::Finite(7)).unwrap(), 1);
        assert_eq!(hermitian_trace_hasse(2, &int(-1), &int(-1), Place::Finite(2)).unwrap(), -1);
        assert_eq!(hermitian_trace_hasse(3, &int(2), &int(1), Place::Finite(5)).unwrap(), 1);
    }

    #[test]
    fn hyperbolic_forms_have_split_hasse() {
        // x1x2 + ... + x_{2n-1}x_{2n} is diag(1,-1,...,1,-1)
        for n in 1..=4u32 {
            let c: Vec<i64> = (0..2 * n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
            for p in [2, 3, 5] {
                let h = f(&c).hasse(Place::Finite(p)).unwrap();
                let disc = f(&c).disc();
                assert_eq!(h, split_so_hasse(Parity::Even, n, &disc, Place::Finite(p)).unwrap());
            }
        }
        // ... + (-1)^n delta x_{2n+1}^2 in odd dimension
        for n in 1..=3u32 {
            for delta in [1i64, 2, 3, -5, 6] {
                let mut c: Vec<i64> = (0..2 * n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
                c.push(if n % 2 == 0 { delta } else { -delta });
                for p in [2, 3, 5] {
                    let h = f(&c).hasse(Place::Finite(p)).unwrap();
                    let want = split_so_hasse(Parity::Odd, n, &int(delta), Place::Finite(p)).unwrap();
                    assert_eq!(h, want, "n={n} delta={delta} p={p}");
                }
            }
        }
    }
}
