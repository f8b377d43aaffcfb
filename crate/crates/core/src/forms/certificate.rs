use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::classify::normalized_disc;
use super::profile::{split_so_hasse, LocalProfile, Parity};
use crate::arith::hilbert::{bad_primes, hilbert_symbol, is_local_square, same_square_class};
use crate::arith::primes::primes;
use crate::arith::{Place, Rational};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    QuadraticOdd,
    QuadraticEven,
    Hermitian,
}

/// The local condition a certificate was built to satisfy at one place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    pub place: Place,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<LocalProfile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc_sign: Option<i8>,
}

/// A family of local invariants over the places of the rationals.
///
/// For quadratic kinds `signs` holds Hasse invariants and `real` the
/// integer `c` of the signature `(d - 2c, 2c)`. For the Hermitian kind
/// `signs` holds `(alpha, delta_v)_v` and `real` the integer `b` of the
/// signature `(n - b, b)`. Places missing from `signs` carry `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalCertificate {
    pub kind: CertKind,
    pub dim: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    pub support: Vec<Place>,
    pub signs: BTreeMap<Place, i8>,
    pub real: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchored: Option<Anchor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub failures: Vec<String>,
    /// Compact at the real place and quasi-split at every finite place.
    pub quasi_split: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub quasi_split_failures: Vec<String>,
}

impl GlobalCertificate {
    pub fn sign_at(&self, v: Place) -> i8 {
        self.signs.get(&v).copied().unwrap_or(1)
    }

    fn parameter(&self) -> Option<&Rational> {
        match self.kind {
            CertKind::Hermitian => self.alpha.as_ref(),
            _ => self.disc.as_ref(),
        }
    }

    /// Finite places where the invariants can differ from the generic ones.
    pub fn relevant_primes(&self) -> Result<BTreeSet<u64>> {
        let mut s: BTreeSet<u64> = match self.parameter() {
            Some(x) => bad_primes([x])?,
            None => BTreeSet::new(),
        };
        s.insert(2);
        s.extend(self.support.iter().filter_map(Place::prime));
        if let Some(a) = &self.anchored {
            s.extend(a.place.prime());
        }
        Ok(s)
    }

    fn half_n(&self) -> u32 {
        self.dim / 2
    }
}

pub fn certificate_check(c: &GlobalCertificate) -> Result<CheckReport> {
    let mut failures = Vec::new();
    structural_failures(c, &mut failures);
    if failures.is_empty() {
        match c.kind {
            CertKind::QuadraticOdd | CertKind::QuadraticEven => quadratic_failures(c, &mut failures)?,
            CertKind::Hermitian => hermitian_failures(c, &mut failures)?,
        }
        anchor_failures(c, &mut failures)?;
    }
    let quasi_split_failures = if failures.is_empty() {
        quasi_split_failures(c)?
    } else {
        vec!["certificate is not valid".into()]
    };
    Ok(CheckReport {
        ok: failures.is_empty(),
        failures,
        quasi_split: quasi_split_failures.is_empty(),
        quasi_split_failures,
    })
}

fn structural_failures(c: &GlobalCertificate, out: &mut Vec<String>) {
    if c.dim == 0 {
        out.push("dimension must be positive".into());
    }
    if c.support.iter().any(|v| !v.is_finite()) {
        out.push("support must consist of finite places".into());
    }
    if c.support.windows(2).any(|w| w[0] >= w[1]) {
        out.push("support must be strictly increasing".into());
    }
    let support: BTreeSet<Place> = c.support.iter().copied().collect();
    for (v, s) in &c.signs {
        if !support.contains(v) {
            out.push(format!("sign recorded at {v} outside the support"));
        }
        if *s != 1 && *s != -1 {
            out.push(format!("sign at {v} is not +1 or -1"));
        }
    }
    for v in &support {
        if !c.signs.contains_key(v) {
            out.push(format!("no sign recorded at support place {v}"));
        }
    }
    match c.kind {
        CertKind::QuadraticOdd if c.dim.is_multiple_of(2) => out.push("odd kind with even dimension".into()),
        CertKind::QuadraticEven if c.dim % 2 == 1 => out.push("even kind with odd dimension".into()),
        CertKind::Hermitian if c.alpha.is_none() => out.push("Hermitian certificate without alpha".into()),
        CertKind::QuadraticOdd | CertKind::QuadraticEven if c.disc.is_none() => {
            out.push("quadratic certificate without discriminant".into())
        }
        _ => {}
    }
}

fn quadratic_failures(c: &GlobalCertificate, out: &mut Vec<String>) -> Result<()> {
    let delta = c.disc.as_ref().expect("checked");
    if delta.is_negative() {
        out.push("discriminant must be positive at the real place".into());
        return Ok(());
    }
    if c.real > c.dim / 2 {
        out.push(format!("real invariant c = {} exceeds floor(d/2)", c.real));
    }
    let minus_delta = -delta;
    for v in &c.support {
        let s = c.sign_at(*v);
        if s == -1 && (c.dim == 1 || (c.dim == 2 && is_local_square(&minus_delta, *v)?)) {
            out.push(format!("no local form of dimension {} has Hasse -1 at {v}", c.dim));
        }
    }
    let prod = c.signs.values().product::<i8>() * if c.real % 2 == 1 { -1 } else { 1 };
    if prod != 1 {
        out.push(format!(
            "product condition fails: product of finite signs times (-1)^c is {prod}"
        ));
    }
    Ok(())
}

fn hermitian_failures(c: &GlobalCertificate, out: &mut Vec<String>) -> Result<()> {
    let alpha = c.alpha.as_ref().expect("checked");
    if !alpha.is_negative() {
        out.push("alpha must be negative (imaginary quadratic algebra)".into());
        return Ok(());
    }
    if c.real > c.dim {
        out.push(format!("real invariant b = {} exceeds n", c.real));
    }
    for v in &c.support {
        if c.sign_at(*v) == -1 && is_local_square(alpha, *v)? {
            out.push(format!("alpha is a square at {v} so the sign there must be +1"));
        }
    }
    let delta_inf = Rational::from_int(if c.real.is_multiple_of(2) { 1 } else { -1 });
    let at_inf = hilbert_symbol(alpha, &delta_inf, Place::Infinity)?;
    let prod = c.signs.values().product::<i8>() * at_inf;
    if prod != 1 {
        out.push(format!(
            "product condition fails: product of (alpha, delta_v)_v over all places is {prod}"
        ));
    }
    Ok(())
}

fn anchor_failures(c: &GlobalCertificate, out: &mut Vec<String>) -> Result<()> {
    let Some(a) = &c.anchored else { return Ok(()) };
    if !a.place.is_finite() {
        out.push("anchored place must be finite".into());
        return Ok(());
    }
    let s = c.sign_at(a.place);
    match c.kind {
        CertKind::Hermitian => match a.disc_sign {
            Some(d) if d == s => {}
            Some(d) => out.push(format!("anchored sign {d} at {} but certificate has {s}", a.place)),
            None => out.push("Hermitian anchor without a sign".into()),
        },
        _ => {
            let Some(p) = &a.profile else {
                out.push("quadratic anchor without a profile".into());
                return Ok(());
            };
            let delta = c.disc.as_ref().expect("checked");
            if p.place != a.place || p.dim != c.dim {
                out.push("anchored profile has the wrong place or dimension".into());
            } else if !same_square_class(&p.disc, delta, a.place)? {
                out.push(format!("anchored discriminant differs at {}", a.place));
            } else if p.hasse != s {
                out.push(format!("anchored Hasse {} at {} but certificate has {s}", p.hasse, a.place));
            }
        }
    }
    Ok(())
}

fn quasi_split_failures(c: &GlobalCertificate) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let places: Vec<Place> = c.relevant_primes()?.into_iter().map(Place::Finite).collect();
    let n = c.half_n();
    match c.kind {
        CertKind::QuadraticOdd => {
            if c.real != 0 {
                out.push("not compact at the real place (c must be 0)".into());
            }
            let delta = c.disc.as_ref().expect("valid");
            for v in places {
                if c.sign_at(v) != split_so_hasse(Parity::Odd, n, delta, v)? {
                    out.push(format!("not quasi-split at {v}"));
                }
            }
        }
        CertKind::QuadraticEven => {
            if c.real != 0 && c.real != n {
                out.push("not compact at the real place (c must be 0 or n)".into());
            }
            let delta = c.disc.as_ref().expect("valid");
            let alpha = normalized_disc(n, delta);
            for v in places {
                if is_local_square(&alpha, v)?
                    && c.sign_at(v) != split_so_hasse(Parity::Even, n, delta, v)?
                {
                    out.push(format!("not quasi-split at {v}"));
                }
            }
        }
        CertKind::Hermitian => {
            if c.real != 0 && c.real != c.dim {
                out.push("not compact at the real place (b must be 0 or n)".into());
            }
            if c.dim.is_multiple_of(2) {
                let alpha = c.alpha.as_ref().expect("valid");
                let m = c.dim / 2;
                let target = Rational::from_int(if m.is_multiple_of(2) { 1 } else { -1 });
                for v in places {
                    if c.sign_at(v) != hilbert_symbol(alpha, &target, v)? {
                        out.push(format!("not quasi-split at {v}"));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Smallest prime outside the anchor and the support where the group is split.
pub fn find_auxiliary_split_place(c: &GlobalCertificate, bound: u64) -> Result<Place> {
    let report = certificate_check(c)?;
    if !report.ok {
        return Err(invalid(format!("invalid certificate: {}", report.failures.join("; "))));
    }
    let mut excluded: BTreeSet<Place> = c.support.iter().copied().collect();
    if let Some(a) = &c.anchored {
        excluded.insert(a.place);
    }
    let split_param = match c.kind {
        CertKind::QuadraticOdd => None,
        CertKind::QuadraticEven => Some(normalized_disc(c.half_n(), c.disc.as_ref().expect("valid"))),
        CertKind::Hermitian => c.alpha.clone(),
    };
    for p in primes().take_while(|p| *p <= bound) {
        let v = Place::Finite(p);
        if excluded.contains(&v) {
            continue;
        }
        match &split_param {
            None => return Ok(v),
            Some(a) if is_local_square(a, v)? => return Ok(v),
            Some(_) => {}
        }
    }
    Err(Error::SearchExhausted { bound })
}
