use super::group::{GroupKind, GroupType};
use super::param::{unramified_value, GLParam, SatakeParam};
use crate::arith::primes::require_prime;
use crate::arith::{CoeffElem, FfElem, HalfInt, Rational, ReductionContext};
use crate::error::{invalid, Error, Result};

/// The unramified parameter of the unique unramified constituent of the
/// induced representation attached to `p`.
pub fn transfer(p: &SatakeParam) -> Result<GLParam> {
    let g = p.group();
    let q = g.q();
    let one = CoeffElem::one(q);
    let mut eig = Vec::with_capacity(g.transfer_dim());
    let paired = g.kind() == GroupKind::UnitarySplit;
    for w in p.chars() {
        eig.push(w.clone());
        if !paired {
            eig.push(w.inverse_monomial()?);
        }
    }
    let ones = match g.kind() {
        GroupKind::Sp => 1,
        GroupKind::SoEvenNonsplit => 2,
        GroupKind::UnitaryInert => g.n() as usize % 2,
        _ => 0,
    };
    eig.extend(std::iter::repeat_n(one, ones));
    debug_assert_eq!(eig.len(), g.transfer_dim());
    Ok(GLParam::new(q, g.q_target(), eig)?.with_paired_dual(paired))
}

/// Coefficients `c_0, ..., c_N` of `prod (X - lambda)`, constant term first.
pub fn charpoly(g: &GLParam) -> Result<Vec<CoeffElem>> {
    let q = g.q();
    let mut c = vec![CoeffElem::one(q)];
    for lam in g.eigenvalues() {
        let mut next = vec![CoeffElem::zero(q); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = &next[i + 1] + a;
            next[i] = &next[i] - &(a * lam);
        }
        c = next;
    }
    c.iter().map(CoeffElem::normalized).collect()
}

/// Closed under inversion; the paired parameters of split unitary groups
/// are self-dual by construction.
pub fn is_selfdual(t: &GLParam) -> Result<bool> {
    if t.paired_dual() {
        return Ok(true);
    }
    let mut inv = t
        .eigenvalues()
        .iter()
        .map(|x| x.inverse_monomial()?.normalized())
        .collect::<Result<Vec<_>>>()?;
    inv.sort_by_key(CoeffElem::sort_key);
    Ok(inv == t.eigenvalues())
}

fn check_ell(ell: u64, q: u64) -> Result<()> {
    require_prime(ell)?;
    if q.is_multiple_of(ell) {
        return Err(invalid(format!("ell = {ell} divides q = {q}")));
    }
    Ok(())
}

fn all_units(xs: &[CoeffElem], ell: u64) -> bool {
    xs.iter().all(|x| x.min_valuation(ell) == Some(0))
}

pub fn is_integral_gl(g: &GLParam, ell: u64) -> Result<bool> {
    check_ell(ell, g.q())?;
    Ok(all_units(g.eigenvalues(), ell))
}

pub fn is_integral_satake(p: &SatakeParam, ell: u64) -> Result<bool> {
    check_ell(ell, p.group().q())?;
    Ok(all_units(p.chars(), ell))
}

fn check_ctx(q: u64, ctx: &ReductionContext) -> Result<()> {
    if ctx.q() != q {
        return Err(Error::ContextMismatch(format!("parameter over q = {q}, context over q = {}", ctx.q())));
    }
    Ok(())
}

pub fn congruent_mod_ell(g1: &GLParam, g2: &GLParam, ctx: &ReductionContext) -> Result<bool> {
    if g1.N() != g2.N() || g1.q() != g2.q() || g1.q_target() != g2.q_target() {
        return Err(Error::ShapeMismatch(format!(
            "(N, q, q_target) = ({}, {}, {}) vs ({}, {}, {})",
            g1.N(),
            g1.q(),
            g1.q_target(),
            g2.N(),
            g2.q(),
            g2.q_target()
        )));
    }
    if g1.paired_dual() != g2.paired_dual() {
        return Err(Error::ShapeMismatch("only one parameter is a paired dual".into()));
    }
    check_ctx(g1.q(), ctx)?;
    for g in [g1, g2] {
        if !is_integral_gl(g, ctx.ell())? {
            return Err(Error::NotIntegral(format!("some eigenvalue is not an {}-unit", ctx.ell())));
        }
    }
    let (c1, c2) = (charpoly(g1)?, charpoly(g2)?);
    for (a, b) in c1.iter().zip(&c2) {
        if ctx.reduce_coeff(a)? != ctx.reduce_coeff(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn reduced_orbit_key(p: &SatakeParam, ctx: &ReductionContext) -> Result<Vec<FfElem>> {
    let mut out = Vec::new();
    for w in p.chars() {
        let r = ctx.reduce_coeff(w)?;
        if p.group().kind() != GroupKind::UnitarySplit {
            out.push(r.inv()?);
        }
        out.push(r);
    }
    out.sort();
    Ok(out)
}

/// Reductions of the two characters are conjugate under the Weyl group.
pub fn same_support_mod_ell(p1: &SatakeParam, p2: &SatakeParam, ctx: &ReductionContext) -> Result<bool> {
    if p1.group() != p2.group() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", p1.group(), p2.group())));
    }
    check_ctx(p1.group().q(), ctx)?;
    for p in [p1, p2] {
        if !is_integral_satake(p, ctx.ell())? {
            return Err(Error::NotIntegral(format!("some character value is not an {}-unit", ctx.ell())));
        }
    }
    Ok(reduced_orbit_key(p1, ctx)? == reduced_orbit_key(p2, ctx)?)
}

/// The transfer computed with the other square root of `q`.
pub fn sqrt_flip(g: &GroupType, t: &GLParam) -> Result<GLParam> {
    if t.N() != g.transfer_dim() || t.q() != g.q() || t.q_target() != g.q_target() {
        return Err(Error::ShapeMismatch(format!("parameter does not come from {g}")));
    }
    if g.flip_exponent() % 2 == 0 {
        return Ok(t.clone());
    }
    let m1 = Rational::from_int(-1);
    t.remap(t.q_target(), |x| Ok(x.scale(&m1)))
}

/// Restriction of an unramified parameter to an extension with residue
/// degree `f` and degree `d`.
pub fn unramified_base_change(t: &GLParam, f: u32, d: u32) -> Result<GLParam> {
    if f == 0 || d < f || !d.is_multiple_of(f) {
        return Err(invalid(format!("need f >= 1 dividing d, got f = {f}, d = {d}")));
    }
    let q_target = t
        .q_target()
        .checked_pow(f)
        .ok_or_else(|| invalid("residue field of the extension is too large"))?;
    t.remap(q_target, |x| x.pow_monomial(f as i64))
}

/// Multiplies every eigenvalue by `q_target^k`.
pub fn det_twist(t: &GLParam, k: HalfInt) -> Result<GLParam> {
    let s = CoeffElem::q_pow_half(t.q(), k.twice() * t.target_degree() as i64);
    t.remap(t.q_target(), |x| Ok(x * &s))
}

/// Transfer from the split `SO_2 = GL_1` to `GL_2`, recording the
/// one-dimensional constituent when the induced representation is reducible.
pub fn so2_split_transfer(c: &CoeffElem, q: u64) -> Result<GLParam> {
    let c = unramified_value(q, c)?;
    let inv = c.inverse_monomial()?;
    let sq = (&c * &c).normalized()?;
    let degenerate = if sq == CoeffElem::q_pow_half(q, 2) {
        Some(&c * &CoeffElem::q_pow_half(q, -1))
    } else if sq == CoeffElem::q_pow_half(q, -2) {
        Some(&c * &CoeffElem::q_pow_half(q, 1))
    } else {
        None
    };
    GLParam::new(q, q, vec![c, inv])?.with_degenerate(degenerate)
}
