use std::collections::{BTreeMap, BTreeSet};

use super::certificate::{certificate_check, Anchor, CertKind, GlobalCertificate};
use super::classify::normalized_disc;
use super::exists::{exists_definite_quasisplit, FormKind};
use super::profile::{split_so_hasse, LocalProfile, Parity};
use crate::arith::hilbert::{bad_primes, hilbert_symbol, is_local_square, same_square_class, squarefree_kernel};
use crate::arith::primes::primes;
use crate::arith::{Place, Rational};
use crate::error::{invalid, Error, Result};

pub const DEFAULT_SEARCH_BOUND: u64 = 10_000;

fn relevant(x: &Rational, w: Option<Place>) -> Result<BTreeSet<u64>> {
    let mut s = bad_primes([x])?;
    s.insert(2);
    if let Some(w) = w {
        s.extend(w.prime());
    }
    Ok(s)
}

fn smallest_prime_where(
    bound: u64,
    skip: Place,
    mut pred: impl FnMut(Place) -> Result<bool>,
) -> Result<Place> {
    for p in primes().take_while(|p| *p <= bound) {
        let v = Place::Finite(p);
        if v != skip && pred(v)? {
            return Ok(v);
        }
    }
    Err(Error::NoAuxiliaryPlace { bound })
}

fn obstruction(kind: FormKind, n: u32, delta_is_minus_one_pow_n: bool) -> Result<()> {
    let d = exists_definite_quasisplit(kind, 1, n, delta_is_minus_one_pow_n)?;
    if d.exists {
        Ok(())
    } else {
        Err(Error::Obstruction { reason: d.reason, min_r: d.min_r.unwrap_or(2) })
    }
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    kind: CertKind,
    dim: u32,
    disc: Option<Rational>,
    alpha: Option<Rational>,
    signs: BTreeMap<Place, i8>,
    keep: BTreeSet<Place>,
    real: u32,
    anchored: Option<Anchor>,
) -> Result<GlobalCertificate> {
    let support: BTreeSet<Place> = signs
        .iter()
        .filter(|(_, s)| **s == -1)
        .map(|(v, _)| *v)
        .chain(keep)
        .collect();
    let signs = support.iter().map(|v| (*v, signs.get(v).copied().unwrap_or(1))).collect();
    let c = GlobalCertificate {
        kind,
        dim,
        disc,
        alpha,
        support: support.into_iter().collect(),
        signs,
        real,
        anchored,
    };
    let report = certificate_check(&c)?;
    if !report.ok || !report.quasi_split {
        return Err(invalid(format!(
            "internal: generated certificate fails its check: {:?} {:?}",
            report.failures, report.quasi_split_failures
        )));
    }
    Ok(c)
}

/// A global form over the rationals that is compact at the real place,
/// quasi-split at every prime, and has the prescribed invariants at `w`.
pub fn globalize_quadratic(
    target: &LocalProfile,
    global_disc: &Rational,
    bound: u64,
) -> Result<GlobalCertificate> {
    let w = target.place;
    if !w.is_finite() {
        return Err(invalid("the anchored place must be a prime"));
    }
    let d = target.dim;
    if d < 2 {
        return Err(invalid("dimension must be at least 2"));
    }
    if global_disc.is_zero() || global_disc.is_negative() {
        return Err(invalid(
            "the global discriminant must be positive at the real place",
        ));
    }
    if !same_square_class(&target.disc, global_disc, w)? {
        return Err(Error::DiscMismatch(format!(
            "{global_disc} is not in the class of {} at {w}",
            target.disc
        )));
    }
    let delta = Rational::from_int(squarefree_kernel(global_disc)?);
    let n = d / 2;
    let places = relevant(&delta, Some(w))?;
    let anchored = Some(Anchor { place: w, profile: Some(target.clone()), disc_sign: None });
    let keep: BTreeSet<Place> = [w].into();

    if d % 2 == 1 {
        if target.hasse != split_so_hasse(Parity::Odd, n, &delta, w)? {
            return Err(invalid(format!("the target form is not quasi-split at {w}")));
        }
        obstruction(FormKind::Odd, n, false)?;
        let mut signs = BTreeMap::new();
        for p in places {
            let v = Place::Finite(p);
            signs.insert(v, split_so_hasse(Parity::Odd, n, &delta, v)?);
        }
        return assemble(CertKind::QuadraticOdd, d, Some(delta), None, signs, keep, 0, anchored);
    }

    let alpha = normalized_disc(n, &delta);
    let alpha_global_square = squarefree_kernel(&alpha)? == 1.into();
    if is_local_square(&alpha, w)? && target.hasse != split_so_hasse(Parity::Even, n, &delta, w)? {
        return Err(invalid(format!("the target form is not quasi-split at {w}")));
    }
    obstruction(FormKind::Even, n, alpha_global_square)?;
    let mut signs = BTreeMap::new();
    for p in places {
        let v = Place::Finite(p);
        signs.insert(v, split_so_hasse(Parity::Even, n, &delta, v)?);
    }
    signs.insert(w, target.hasse);
    let mut keep = keep;
    let mut real = 0;
    if signs.values().product::<i8>() == -1 {
        if n % 2 == 1 {
            real = n;
        } else {
            let u = smallest_prime_where(bound, w, |v| Ok(!is_local_square(&alpha, v)?))?;
            let s = signs.entry(u).or_insert(1);
            *s = -*s;
            keep.insert(u);
        }
    }
    assemble(CertKind::QuadraticEven, d, Some(delta), None, signs, keep, real, anchored)
}

/// A Hermitian form for `Q(sqrt alpha)/Q` compact at the real place and
/// quasi-split at every prime, optionally with `(alpha, delta_w)_w = sign`.
pub fn globalize_hermitian(
    n: u32,
    alpha: &Rational,
    target: Option<(Place, i8)>,
    bound: u64,
) -> Result<GlobalCertificate> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if alpha.is_zero() || !alpha.is_negative() {
        return Err(invalid("alpha must be negative"));
    }
    if let Some((w, s)) = target {
        if !w.is_finite() {
            return Err(invalid("the anchored place must be a prime"));
        }
        if s != 1 && s != -1 {
            return Err(invalid("the prescribed sign must be +1 or -1"));
        }
    }
    let alpha = Rational::from_int(squarefree_kernel(alpha)?);
    let anchored = target.map(|(w, s)| Anchor { place: w, profile: None, disc_sign: Some(s) });
    let mut keep: BTreeSet<Place> = target.map(|(w, _)| w).into_iter().collect();
    let mut signs = BTreeMap::new();

    if n.is_multiple_of(2) {
        obstruction(FormKind::Hermitian, n, false)?;
        let m = n / 2;
        let delta = Rational::from_int(if m.is_multiple_of(2) { 1 } else { -1 });
        for p in relevant(&alpha, target.map(|t| t.0))? {
            let v = Place::Finite(p);
            signs.insert(v, hilbert_symbol(&alpha, &delta, v)?);
        }
        if let Some((w, s)) = target {
            if signs[&w] != s {
                return Err(invalid(format!("the prescribed sign is not quasi-split at {w}")));
            }
        }
    } else if let Some((w, s)) = target {
        if s == -1 {
            if is_local_square(&alpha, w)? {
                return Err(invalid(format!("alpha is a square at {w}; only the trivial class exists")));
            }
            let y = smallest_prime_where(bound, w, |v| Ok(!is_local_square(&alpha, v)?))?;
            signs.insert(y, -1);
            keep.insert(y);
        }
        signs.insert(w, s);
    }
    assemble(CertKind::Hermitian, n, None, Some(alpha), signs, keep, 0, anchored)
}

/// Smallest positive squarefree integer in the square class of `disc` at `w`.
/// With `avoid_square` the integer 1 is skipped.
pub fn positive_disc_representative(disc: &Rational, w: Place, avoid_square: bool) -> Result<Rational> {
    if !w.is_finite() {
        return Err(invalid("expected a finite place"));
    }
    for m in 1..=DEFAULT_SEARCH_BOUND as i64 {
        if avoid_square && m == 1 {
            continue;
        }
        let r = Rational::from_int(m);
        if squarefree_kernel(&r)? == m.into() && same_square_class(&r, disc, w)? {
            return Ok(r);
        }
    }
    Err(Error::SearchExhausted { bound: DEFAULT_SEARCH_BOUND })
}

/// The discriminant used when none is supplied: a positive representative
/// of the target class that avoids the even-dimension obstruction if possible.
pub fn default_global_disc(target: &LocalProfile) -> Result<Rational> {
    let n = target.dim / 2;
    let avoid = target.dim.is_multiple_of(2) && n.is_multiple_of(2);
    positive_disc_representative(&target.disc, target.place, avoid)
}
