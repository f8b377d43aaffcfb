use num_bigint::BigUint;
use serde::Serialize;

use super::matrix::QMat;
use super::rep::{frobenius_eigenvalues, WDRep};
use crate::arith::primes::require_prime;
use crate::arith::{CoeffElem, FfElem, Quad, Rational, ReductionContext};
use crate::error::{invalid, Error, Result};

/// Smallest ell-adic valuation of the two rational parts (`None` for zero).
pub fn quad_valuation(x: &Quad, ell: u64) -> Option<i64> {
    let l = BigUint::from(ell);
    [x.a(), x.b()].into_iter().filter(|c| !c.is_zero()).map(|c| c.valuation(&l).expect("nonzero")).min()
}

fn block_integral(f: &QMat, rows: std::ops::Range<usize>, ell: u64) -> Result<()> {
    for i in rows.clone() {
        for j in rows.clone() {
            if quad_valuation(f.get(i, j), ell).is_some_and(|v| v < 0) {
                return Err(Error::NotIntegral(format!("diagonal block entry ({i}, {j}) is not {ell}-integral")));
            }
        }
    }
    let size = rows.len();
    let mut b = QMat::zero(f.q(), size);
    for (a, i) in rows.clone().enumerate() {
        for (c, j) in rows.clone().enumerate() {
            b.set(a, c, f.get(i, j).clone());
        }
    }
    let det = &b.charpoly()[0];
    let l = BigUint::from(ell);
    let norm = det.norm();
    if norm.is_zero() || norm.valuation(&l)? != 0 {
        return Err(Error::NotIntegral(format!("diagonal block determinant is not an {ell}-unit")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralModel {
    pub rep: WDRep,
    pub v: u32,
    pub witness: Vec<Vec<crate::arith::CoeffJson>>,
}

/// Conjugates a two-block upper triangular Frobenius by
/// `diag(ell^v id_k, id)` with the least `v` making it integral. With no
/// `k` the first block boundary below which the matrix vanishes is used.
pub fn integral_model(w: &WDRep, ell: u64, k: Option<usize>) -> Result<IntegralModel> {
    require_prime(ell)?;
    if w.q().is_multiple_of(ell) {
        return Err(invalid(format!("ell = {ell} divides q = {}", w.q())));
    }
    if !w.nilpotent().is_zero() {
        return Err(invalid("integral model needs a zero monodromy operator"));
    }
    let f = w.frobenius();
    let n = f.size();
    let lower_zero = |k: usize| (k..n).all(|i| (0..k).all(|j| f.get(i, j).is_zero()));
    let k = match k {
        Some(k) if k == 0 || k >= n => return Err(invalid(format!("block size must lie in 1..{n}"))),
        Some(k) if !lower_zero(k) => return Err(invalid(format!("frobenius is not block upper triangular at k = {k}"))),
        Some(k) => k,
        None if n == 1 => 1,
        None => (1..n).find(|&k| lower_zero(k)).ok_or_else(|| invalid("frobenius has no block upper triangular form"))?,
    };
    block_integral(f, 0..k, ell)?;
    if k < n {
        block_integral(f, k..n, ell)?;
    }
    let min_b = (0..k)
        .flat_map(|i| (k..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| quad_valuation(f.get(i, j), ell))
        .min()
        .unwrap_or(0);
    let v = (-min_b).max(0) as u32;
    let lv = Quad::from_rational(f.q(), Rational::from_int(ell as i64).pow(v as i64));
    let mut d = QMat::identity(f.q(), n);
    for i in 0..k {
        d.set(i, i, lv.clone());
    }
    let conj = d.mul(f).mul(&d.inverse()?);
    Ok(IntegralModel { rep: w.with_frobenius(conj), v, witness: d.to_json() })
}

/// Reduced Frobenius eigenvalues, sorted in the field order.
pub fn reduce_wd(w: &WDRep, ctx: &ReductionContext) -> Result<Vec<FfElem>> {
    if ctx.q() != w.q() {
        return Err(Error::ContextMismatch(format!("representation over q = {}, context over q = {}", w.q(), ctx.q())));
    }
    if !w.nilpotent().is_zero() {
        return Err(Error::NotUnramified("monodromy operator is nonzero".into()));
    }
    let mut out = Vec::new();
    for x in frobenius_eigenvalues(w)? {
        let c = CoeffElem::from_quad(&x);
        if c.min_valuation(ctx.ell()) != Some(0) {
            return Err(Error::NotIntegral(format!("eigenvalue {c} is not an {}-unit", ctx.ell())));
        }
        out.push(ctx.reduce_coeff(&c)?);
    }
    out.sort();
    Ok(out)
}

pub fn congruent_wd(w1: &WDRep, w2: &WDRep, ctx: &ReductionContext) -> Result<bool> {
    Ok(reduce_wd(w1, ctx)? == reduce_wd(w2, ctx)?)
}
