//! Exact elements of `Z[zeta_M]`.

use std::collections::BTreeMap;

use serde::Serialize;

/// Coefficients of `Phi_M`, constant term first.
pub fn cyclotomic_poly(m: u64) -> Vec<i64> {
    // x^m - 1 divided by Phi_d for the proper divisors d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic_poly(d));
    }
    num
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = *b.last().expect("nonzero divisor");
    let mut out = vec![0i64; a.len() - db];
    for i in (0..out.len()).rev() {
        let c = r[i + db] / lead;
        out[i] = c;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|x| *x == 0));
    out
}

/// Canonical representative of an element of `Z[zeta_M]`: a polynomial of
/// degree below `phi(M)` in `zeta_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclo {
    m: u64,
    coeffs: Vec<i64>,
}

impl Cyclo {
    pub fn zero(m: u64) -> Self {
        Cyclo { m, coeffs: Vec::new() }
    }

    /// `sum c * zeta_M^e` over the given terms.
    pub fn from_terms(m: u64, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut raw = vec![0i64; m as usize];
        for (e, c) in terms {
            raw[e.rem_euclid(m as i64) as usize] += c;
        }
        Cyclo::reduce(m, raw)
    }

    pub fn root_of_unity(m: u64, e: i64) -> Self {
        Cyclo::from_terms(m, [(e, 1)])
    }

    pub fn integer(m: u64, n: i64) -> Self {
        Cyclo::from_terms(m, [(0, n)])
    }

    fn reduce(m: u64, mut raw: Vec<i64>) -> Self {
        let phi = cyclotomic_poly(m);
        let d = phi.len() - 1;
        for i in (d..raw.len()).rev() {
            let c = raw[i];
            if c != 0 {
                for (j, pj) in phi.iter().enumerate() {
                    raw[i - d + j] -= c * pj;
                }
            }
        }
        raw.truncate(d);
        while raw.last() == Some(&0) {
            raw.pop();
        }
        Cyclo { m, coeffs: raw }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        let n = self.coeffs.len().max(o.coeffs.len());
        let raw = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&0) + o.coeffs.get(i).unwrap_or(&0))
            .collect();
        Cyclo::reduce(self.m, raw)
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        let mut raw = vec![0i64; (self.coeffs.len() + o.coeffs.len()).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Cyclo::reduce(self.m, raw)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Cyclo {
        Cyclo::from_terms(self.m, self.coeffs.iter().enumerate().map(|(e, c)| (-(e as i64), *c)))
    }

    /// The same element inside `Z[zeta_{M k}]`.
    pub fn lift(&self, k: u64) -> Cyclo {
        Cyclo::from_terms(self.m * k, self.coeffs.iter().enumerate().map(|(e, c)| (e as i64 * k as i64, *c)))
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.coeffs.as_slice() {
            [] => Some(0),
            [c] => Some(*c),
            _ => None,
        }
    }

    pub fn terms(&self) -> BTreeMap<u64, i64> {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(e, c)| (e as u64, *c)).collect()
    }
}

#[derive(Serialize)]
struct CycloJson {
    modulus: u64,
    terms: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    integer: Option<i64>,
}

impl Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloJson {
            modulus: self.m,
            terms: self.terms().into_iter().map(|(e, c)| (e.to_string(), c)).collect(),
            integer: self.as_integer(),
        }
        .serialize(s)
    }
}
