//! Dense matrices and polynomials over `Q[s]/(s^2 - q)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::primes::factorize;
use crate::arith::{CoeffElem, CoeffJson, Quad, Rational};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    q: u64,
    n: usize,
    data: Vec<Quad>,
}

impl QMat {
    pub fn zero(q: u64, n: usize) -> Self {
        QMat { q, n, data: vec![Quad::zero(q); n * n] }
    }

    pub fn identity(q: u64, n: usize) -> Self {
        QMat::diag(q, &vec![Quad::one(q); n])
    }

    pub fn diag(q: u64, d: &[Quad]) -> Self {
        let mut m = QMat::zero(q, d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_rows(q: u64, rows: Vec<Vec<Quad>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(invalid("matrix must be square"));
        }
        Ok(QMat { q, n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_json(q: u64, rows: &[Vec<CoeffJson>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| Ok(CoeffElem::from_json(q, c)?.to_quad())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        QMat::from_rows(q, rows)
    }

    pub fn to_json(&self) -> Vec<Vec<CoeffJson>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| CoeffElem::from_quad(self.get(i, j)).to_json()).collect())
            .collect()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Quad {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Quad) {
        self.data[i * self.n + j] = x;
    }

    pub fn entries(&self) -> &[Quad] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Quad::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == QMat::identity(self.q, self.n)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn add(&self, o: &QMat) -> QMat {
        QMat { q: self.q, n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &QMat) -> QMat {
        QMat { q: self.q, n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Quad) -> QMat {
        QMat { q: self.q, n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &QMat) -> QMat {
        let n = self.n;
        let mut out = QMat::zero(self.q, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a * o.get(k, j);
                    let cur = &out.data[i * n + j] + &t;
                    out.data[i * n + j] = cur;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> QMat {
        let mut base = self.clone();
        let mut acc = QMat::identity(self.q, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Quad {
        (0..self.n).fold(Quad::zero(self.q), |acc, i| &acc + self.get(i, i))
    }

    /// Gauss-Jordan inverse; fails when a pivot is a zero divisor or the matrix is singular.
    pub fn inverse(&self) -> Result<QMat> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = QMat::identity(self.q, n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a.get(r, col).is_unit())
                .ok_or_else(|| Error::UnsupportedSpectrum("matrix is not invertible".into()))?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a.get(col, col).inverse()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.sub_row_multiple(r, col, &f);
                    inv.sub_row_multiple(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.n {
                self.data.swap(i * self.n + c, j * self.n + c);
            }
        }
    }

    fn scale_row(&mut self, i: usize, f: &Quad) {
        for c in 0..self.n {
            let v = self.get(i, c) * f;
            self.set(i, c, v);
        }
    }

    fn sub_row_multiple(&mut self, r: usize, src: usize, f: &Quad) {
        for c in 0..self.n {
            let v = self.get(r, c) - &(f * self.get(src, c));
            self.set(r, c, v);
        }
    }

    /// Coefficients of `det(X - A)`, constant term first (Faddeev-LeVerrier).
    pub fn charpoly(&self) -> Vec<Quad> {
        let n = self.n;
        let mut c = vec![Quad::zero(self.q); n + 1];
        c[n] = Quad::one(self.q);
        let mut m = QMat::zero(self.q, n);
        for k in 1..=n {
            m = self.mul(&m).add(&QMat::identity(self.q, n).scale(&c[n - k + 1]));
            let t = self.mul(&m).trace();
            c[n - k] = (-&t).scale(&Rational::new(1, k as i64).expect("k > 0"));
        }
        c
    }

    /// `p(A)` for a polynomial with constant term first.
    pub fn eval_poly(&self, p: &[Quad]) -> QMat {
        let mut acc = QMat::zero(self.q, self.n);
        for c in p.iter().rev() {
            acc = acc.mul(self).add(&QMat::identity(self.q, self.n).scale(c));
        }
        acc
    }
}

pub fn poly_eval(p: &[Quad], x: &Quad) -> Quad {
    p.iter().rev().fold(Quad::zero(x.base_q()), |acc, c| &(&acc * x) + c)
}

pub fn poly_derivative(p: &[Quad]) -> Vec<Quad> {
    p.iter().enumerate().skip(1).map(|(i, c)| c.scale(&Rational::from_int(i as i64))).collect()
}

/// Divides by `X - r`, returning the quotient when the remainder vanishes.
pub fn divide_linear(p: &[Quad], r: &Quad) -> Option<Vec<Quad>> {
    let n = p.len() - 1;
    let mut out = vec![Quad::zero(r.base_q()); n];
    let mut carry = Quad::zero(r.base_q());
    for i in (0..=n).rev() {
        let v = &p[i] + &(&carry * r);
        if i == 0 {
            return v.is_zero().then_some(out);
        }
        out[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// `prod (X - r)` over the given roots.
pub fn poly_from_roots(q: u64, roots: &[Quad]) -> Vec<Quad> {
    let mut c = vec![Quad::one(q)];
    for r in roots {
        let mut next = vec![Quad::zero(q); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = &next[i + 1] + a;
            next[i] = &next[i] - &(a * r);
        }
        c = next;
    }
    c
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for d in &out {
            let mut x = d.clone();
            for _ in 0..=e {
                next.push(x.clone());
                x = &x * &p;
            }
        }
        out = next;
    }
    out
}

/// Distinct rational roots of a nonzero polynomial, constant term first.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut p: Vec<Rational> = p.to_vec();
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    let mut roots = BTreeSet::new();
    if p.len() <= 1 {
        return Vec::new();
    }
    let lead_zero = p.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        roots.insert(Rational::zero());
        p.drain(..lead_zero);
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c.numer() * &lcm) / c.denom()).collect();
    let a0 = ints[0].abs().to_biguint().expect("abs");
    let an = ints.last().expect("nonempty").abs().to_biguint().expect("abs");
    if !a0.is_zero() {
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for sign in [1i64, -1] {
                    let r = Rational::new(BigInt::from(num.clone()) * sign, BigInt::from(den.clone()))
                        .expect("nonzero denominator");
                    let v = ints.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * &r) + &Rational::from_int(c.clone()));
                    if v.is_zero() {
                        roots.insert(r);
                    }
                }
            }
        }
    }
    roots.into_iter().collect()
}

/// All roots of `p` of the form `c` or `c*s` with `c` rational, with
/// multiplicity. Errors when the roots found do not account for the degree.
pub fn monomial_roots(p: &[Quad]) -> Result<Vec<Quad>> {
    let q = p[0].base_q();
    let deg = p.len() - 1;
    let mut candidates: Vec<Quad> = Vec::new();
    // rational roots: both components vanish
    let (ra, rb) = split(p, false);
    candidates.extend(common_roots(&ra, &rb).into_iter().map(|r| Quad::from_rational(q, r)));
    // roots c*s: substitute X = sY
    let (sa, sb) = split(p, true);
    candidates.extend(common_roots(&sa, &sb).into_iter().map(|r| Quad::new(q, Rational::zero(), r)));
    let mut rest = p.to_vec();
    let mut roots = Vec::new();
    for c in candidates {
        while rest.len() > 1 {
            match divide_linear(&rest, &c) {
                Some(quot) => {
                    rest = quot;
                    roots.push(c.clone());
                }
                None => break,
            }
        }
    }
    if roots.len() != deg {
        return Err(Error::UnsupportedSpectrum(format!(
            "only {} of {deg} eigenvalues are monomials in q^(1/2)",
            roots.len()
        )));
    }
    Ok(roots)
}

/// Rational and `s` components of `p(X)` or of `p(sY)`.
fn split(p: &[Quad], substitute: bool) -> (Vec<Rational>, Vec<Rational>) {
    let q = Rational::from_int(p[0].base_q() as i64);
    let mut a = Vec::with_capacity(p.len());
    let mut b = Vec::with_capacity(p.len());
    for (i, c) in p.iter().enumerate() {
        if !substitute {
            a.push(c.a().clone());
            b.push(c.b().clone());
            continue;
        }
        // c * s^i with s^2 = q
        let qi = q.pow((i / 2) as i64);
        if i % 2 == 0 {
            a.push(c.a() * &qi);
            b.push(c.b() * &qi);
        } else {
            a.push(&(c.b() * &qi) * &q);
            b.push(c.a() * &qi);
        }
    }
    (a, b)
}

fn common_roots(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let eval = |p: &[Rational], x: &Rational| p.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c);
    let a_zero = a.iter().all(Rational::is_zero);
    let (main, other) = if a_zero { (b, a) } else { (a, b) };
    rational_roots(main).into_iter().filter(|r| eval(other, r).is_zero()).collect()
}
