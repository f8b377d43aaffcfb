//! Simple characters of the pro-unipotent Iwahori of `Sp_{2n}` in residue
//! characteristic 2, their normal forms and the associated Kloosterman sums.
//! Residue field elements are integer codes in [`SmallField`].

use serde::Serialize;

use super::small_field::SmallField;
use crate::arith::primes::prime_power;
use crate::error::{invalid, Error, Result};

/// Upper limit on the number of terms in a Kloosterman sum.
pub const MAX_KLOOSTERMAN_TERMS: u64 = 50_000_000;
/// Upper limit on the number of tuples enumerated for an orbit count.
pub const MAX_ORBIT_STATES: u64 = 5_000_000;

fn require_nonzero(xs: &[u64], what: &str) -> Result<()> {
    if xs.contains(&0) {
        return Err(Error::NonGeneric(format!("{what} has a zero entry")));
    }
    Ok(())
}

/// `(a_1 ... a_{n-1})^2 a_n a_{n+1}` for a tuple of length `n + 1`.
pub fn simple_cuspidal_normal_form(f: &SmallField, a: &[u64]) -> Result<u64> {
    if f.characteristic() != 2 {
        return Err(invalid("normal forms are defined in characteristic 2"));
    }
    if a.len() < 2 {
        return Err(invalid("need n + 1 >= 2 entries"));
    }
    for x in a {
        f.check(*x)?;
    }
    require_nonzero(a, "tuple")?;
    let n = a.len() - 1;
    let head = a[..n - 1].iter().fold(1, |acc, x| f.mul(acc, *x));
    Ok(f.mul(f.mul(f.mul(head, head), a[n - 1]), a[n]))
}

/// Conjugation by the torus element `(chi_1, ..., chi_n)`.
pub fn iwahori_conjugation_action(f: &SmallField, chi: &[u64], u: &[u64]) -> Result<Vec<u64>> {
    let n = chi.len();
    if n == 0 || u.len() != n + 1 {
        return Err(invalid("need n >= 1 torus entries and n + 1 tuple entries"));
    }
    for x in chi.iter().chain(u) {
        f.check(*x)?;
    }
    require_nonzero(chi, "torus element")?;
    require_nonzero(u, "tuple")?;
    let inv = |x: u64| f.inv(x).expect("nonzero");
    let mut out: Vec<u64> = (0..n - 1).map(|i| f.mul(f.mul(u[i], chi[i]), inv(chi[i + 1]))).collect();
    out.push(f.mul(u[n - 1], f.mul(chi[n - 1], chi[n - 1])));
    let c1 = inv(chi[0]);
    out.push(f.mul(u[n], f.mul(c1, c1)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleCount {
    pub p: u64,
    pub q: u64,
    pub n: u32,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<u64>,
}

/// Number of simple cuspidal representations of `Sp_{2n}(F)`: `q - 1` in
/// residue characteristic 2 and `4(q - 1)` otherwise. In characteristic 2
/// the orbits of the torus on generic tuples are also enumerated when small.
pub fn count_simple_cuspidals(p: u64, q: u64, n: u32) -> Result<SimpleCount> {
    let (pp, _) = prime_power(q)?;
    if pp != p {
        return Err(invalid(format!("q = {q} is not a power of p = {p}")));
    }
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let count = if p == 2 { q - 1 } else { 4 * (q - 1) };
    let states = (q - 1).checked_pow(n + 1);
    let enumerated = if p == 2 && states.is_some_and(|s| s <= MAX_ORBIT_STATES) {
        Some(count_orbits(&SmallField::new(q)?, n as usize)?)
    } else {
        None
    };
    Ok(SimpleCount { p, q, n, count, enumerated })
}

/// Orbits of `(F^x)^n` on `(F^x)^{n+1}`, by flood fill over exponent vectors.
pub fn count_orbits(f: &SmallField, n: usize) -> Result<u64> {
    let m = f.units() as usize;
    let total = m.pow(n as u32 + 1);
    let encode = |v: &[usize]| v.iter().rev().fold(0usize, |acc, x| acc * m + x);
    let decode = |mut c: usize| -> Vec<usize> {
        (0..=n).map(|_| {
            let d = c % m;
            c /= m;
            d
        }).collect()
    };
    // generators: chi = g in coordinate i, 1 elsewhere
    let step = |v: &[usize], i: usize| -> Vec<usize> {
        let g = f.generator();
        let mut chi = vec![1u64; n];
        chi[i] = g;
        let u: Vec<u64> = v.iter().map(|e| f.gen_pow(*e as i64)).collect();
        iwahori_conjugation_action(f, &chi, &u)
            .expect("valid input")
            .iter()
            .map(|x| f.log(*x).expect("nonzero") as usize)
            .collect()
    };
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(c) = stack.pop() {
            let v = decode(c);
            for i in 0..n {
                let w = encode(&step(&v, i));
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    Ok(orbits)
}

/// `sum over chi in (F^x)^n` of `psi(u_1 chi_1/chi_2 + ... + u_n chi_n^2 + a u_{n+1} chi_1^{-2})`
/// with `psi = (-1)^Tr`.
pub fn kloosterman_value(f: &SmallField, u: &[u64], a: u64) -> Result<i64> {
    if f.characteristic() != 2 {
        return Err(invalid("Kloosterman sums are taken in characteristic 2"));
    }
    let n = u.len().checked_sub(1).filter(|n| *n >= 1).ok_or_else(|| invalid("need n + 1 >= 2 entries"))?;
    f.check(a)?;
    for x in u {
        f.check(*x)?;
    }
    require_nonzero(u, "tuple")?;
    if a == 0 {
        return Err(Error::NonGeneric("a must be nonzero".into()));
    }
    let m = f.units();
    let terms = m.checked_pow(n as u32).filter(|t| *t <= MAX_KLOOSTERMAN_TERMS);
    if terms.is_none() {
        return Err(invalid(format!("more than {MAX_KLOOSTERMAN_TERMS} terms")));
    }
    let mut ua = u.to_vec();
    ua[n] = f.mul(a, u[n]);
    let mut idx = vec![0i64; n];
    let mut total = 0i64;
    loop {
        let chi: Vec<u64> = idx.iter().map(|e| f.gen_pow(*e)).collect();
        let v = iwahori_conjugation_action(f, &chi, &ua)?;
        let s = v.iter().fold(0, |acc, x| f.add(acc, *x));
        total += if f.trace(s) == 0 { 1 } else { -1 };
        let mut i = 0;
        loop {
            if i == n {
                return Ok(total);
            }
            idx[i] += 1;
            if idx[i] < m as i64 {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        let f2 = SmallField::new(2).unwrap();
        assert_eq!(simple_cuspidal_normal_form(&f2, &[1, 1, 1]).unwrap(), 1);
        let f4 = SmallField::new(4).unwrap();
        let g = f4.generator();
        assert_eq!(simple_cuspidal_normal_form(&f4, &[g, g, g]).unwrap(), g);
        assert_eq!(simple_cuspidal_normal_form(&f4, &[g, 3]).unwrap(), f4.mul(g, 3));
        assert!(matches!(simple_cuspidal_normal_form(&f4, &[g, 0]), Err(Error::NonGeneric(_))));
        assert!(simple_cuspidal_normal_form(&SmallField::new(3).unwrap(), &[1, 1]).is_err());
    }

    #[test]
    fn action() {
        let f4 = SmallField::new(4).unwrap();
        let g = f4.generator();
        assert_eq!(iwahori_conjugation_action(&f4, &[1, 1], &[g, 3, 1]).unwrap(), vec![g, 3, 1]);
        let (u1, u2) = (3, g);
        let out = iwahori_conjugation_action(&f4, &[g], &[u1, u2]).unwrap();
        assert_eq!(out, vec![f4.mul(u1, f4.mul(g, g)), f4.mul(u2, g)]);
    }

    #[test]
    fn counts() {
        for n in 1..=3 {
            let c = count_simple_cuspidals(2, 2, n).unwrap();
            assert_eq!((c.count, c.enumerated), (1, Some(1)));
        }
        let c = count_simple_cuspidals(2, 4, 2).unwrap();
        assert_eq!((c.count, c.enumerated), (3, Some(3)));
        let c = count_simple_cuspidals(3, 3, 1).unwrap();
        assert_eq!((c.count, c.enumerated), (8, None));
        assert!(count_simple_cuspidals(2, 9, 1).is_err());
    }

    #[test]
    fn kloosterman_examples() {
        let f2 = SmallField::new(2).unwrap();
        assert_eq!(kloosterman_value(&f2, &[1, 1], 1).unwrap(), 1);
        assert_eq!(kloosterman_value(&f2, &[1, 1, 1], 1).unwrap(), -1);
        let f4 = SmallField::new(4).unwrap();
        assert_eq!(kloosterman_value(&f4, &[1, 1], 1).unwrap(), 3);
        assert!(matches!(kloosterman_value(&f4, &[1, 0], 1), Err(Error::NonGeneric(_))));
    }
}
