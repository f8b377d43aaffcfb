use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{monomial_roots, poly_derivative, poly_from_roots, QMat};
use crate::arith::primes::prime_power;
use crate::arith::{CoeffElem, CoeffJson, Quad, Rational};
use crate::error::{invalid, Error, Result};
use crate::satake::GLParam;

/// Largest order tried when checking that the inertia matrix has finite order.
const MAX_INERTIA_ORDER: u32 = 1000;
const MAX_NEWTON_STEPS: usize = 64;

/// A Weil-Deligne representation with finite image on inertia: Frobenius
/// matrix, monodromy operator and an optional inertia matrix.
///
/// `q` is the base of the coefficient ring; `q_target` is the residue
/// cardinality of the local field the representation lives over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDRep {
    q: u64,
    q_target: u64,
    frobenius: QMat,
    nilpotent: QMat,
    inertia: Option<QMat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub frobenius_invertible: bool,
    pub nilpotent: bool,
    pub commutation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inertia_finite_order: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inertia_commutes: Option<bool>,
    pub defects: Vec<String>,
}

impl WDRep {
    pub fn new(q: u64, frobenius: QMat, nilpotent: QMat, inertia: Option<QMat>) -> Result<Self> {
        WDRep::with_target(q, q, frobenius, nilpotent, inertia)
    }

    pub fn with_target(q: u64, q_target: u64, frobenius: QMat, nilpotent: QMat, inertia: Option<QMat>) -> Result<Self> {
        prime_power(q)?;
        prime_power(q_target)?;
        let n = frobenius.size();
        if n == 0 {
            return Err(invalid("empty representation"));
        }
        let same = |m: &QMat| m.size() == n && m.q() == q;
        if !same(&frobenius) || !same(&nilpotent) || inertia.as_ref().is_some_and(|m| !same(m)) {
            return Err(Error::ShapeMismatch("matrices must be square of one size over one q".into()));
        }
        Ok(WDRep { q, q_target, frobenius, nilpotent, inertia })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_target(&self) -> u64 {
        self.q_target
    }

    pub fn dim(&self) -> usize {
        self.frobenius.size()
    }

    pub fn frobenius(&self) -> &QMat {
        &self.frobenius
    }

    pub fn nilpotent(&self) -> &QMat {
        &self.nilpotent
    }

    pub fn inertia(&self) -> Option<&QMat> {
        self.inertia.as_ref()
    }

    pub(crate) fn with_frobenius(&self, f: QMat) -> WDRep {
        WDRep { frobenius: f, ..self.clone() }
    }

    fn unramified(&self) -> bool {
        self.nilpotent.is_zero() && self.inertia.as_ref().is_none_or(QMat::is_identity)
    }
}

pub fn validate(w: &WDRep) -> ValidationReport {
    let mut defects = Vec::new();
    let (f, n) = (&w.frobenius, &w.nilpotent);
    let det = f.charpoly()[0].clone();
    let frobenius_invertible = det.is_unit();
    if !frobenius_invertible {
        defects.push("frobenius is not invertible".into());
    }
    let nilpotent = n.pow(w.dim() as u32).is_zero();
    if !nilpotent {
        defects.push("monodromy operator is not nilpotent".into());
    }
    // F N F^{-1} = q^{-1} N, checked as q F N = N F
    let qt = Quad::from_rational(w.q, Rational::from_int(w.q_target as i64));
    let commutation = f.mul(n).scale(&qt) == n.mul(f);
    if !commutation {
        defects.push("F N F^-1 differs from q^-1 N".into());
    }
    let (mut finite, mut commutes) = (None, None);
    if let Some(i) = &w.inertia {
        let ord = (1..=MAX_INERTIA_ORDER).scan(QMat::identity(w.q, w.dim()), |acc, _| {
            *acc = acc.mul(i);
            Some(acc.is_identity())
        });
        let fin = ord.into_iter().any(|x| x);
        if !fin {
            defects.push(format!("inertia matrix has no order up to {MAX_INERTIA_ORDER}"));
        }
        let com = i.mul(n) == n.mul(i);
        if !com {
            defects.push("inertia does not commute with the monodromy operator".into());
        }
        finite = Some(fin);
        commutes = Some(com);
    }
    ValidationReport {
        valid: defects.is_empty(),
        frobenius_invertible,
        nilpotent,
        commutation,
        inertia_finite_order: finite,
        inertia_commutes: commutes,
        defects,
    }
}

/// Frobenius eigenvalues with multiplicity; only monomial spectra are supported.
pub fn frobenius_eigenvalues(w: &WDRep) -> Result<Vec<Quad>> {
    monomial_roots(&w.frobenius.charpoly())
}

fn distinct(roots: &[Quad]) -> Vec<Quad> {
    let mut out: Vec<Quad> = Vec::new();
    for r in roots {
        if !out.contains(r) {
            out.push(r.clone());
        }
    }
    out
}

/// Replaces the Frobenius matrix by its semisimple Jordan part.
pub fn frobenius_ss(w: &WDRep) -> Result<WDRep> {
    let roots = frobenius_eigenvalues(w)?;
    let p = poly_from_roots(w.q, &distinct(&roots));
    let dp = poly_derivative(&p);
    let mut s = w.frobenius.clone();
    for _ in 0..MAX_NEWTON_STEPS {
        let ps = s.eval_poly(&p);
        if ps.is_zero() {
            return Ok(w.with_frobenius(s));
        }
        let step = ps.mul(&s.eval_poly(&dp).inverse()?);
        s = s.sub(&step);
    }
    Err(Error::UnsupportedSpectrum("semisimplification did not converge".into()))
}

pub fn is_semisimple(w: &WDRep) -> Result<bool> {
    let roots = frobenius_eigenvalues(w)?;
    Ok(w.frobenius.eval_poly(&poly_from_roots(w.q, &distinct(&roots))).is_zero())
}

pub fn wd_of_glparam(t: &GLParam) -> Result<WDRep> {
    let d: Vec<Quad> = t.eigenvalues().iter().map(CoeffElem::to_quad).collect();
    let n = d.len();
    WDRep::with_target(t.q(), t.q_target(), QMat::diag(t.q(), &d), QMat::zero(t.q(), n), None)
}

pub fn glparam_of_wd(w: &WDRep) -> Result<GLParam> {
    if !w.unramified() {
        return Err(Error::NotUnramified("monodromy or inertia is nontrivial".into()));
    }
    if !is_semisimple(w)? {
        return Err(Error::UnsupportedSpectrum("frobenius is not semisimple".into()));
    }
    let eig = frobenius_eigenvalues(w)?.iter().map(CoeffElem::from_quad).collect();
    GLParam::new(w.q, w.q_target, eig)
}

#[derive(Serialize, Deserialize)]
struct WDJson {
    q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q_target: Option<u64>,
    frobenius: Vec<Vec<CoeffJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nilpotent: Option<Vec<Vec<CoeffJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inertia: Option<Vec<Vec<CoeffJson>>>,
}

impl Serialize for WDRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WDJson {
            q: self.q,
            q_target: (self.q_target != self.q).then_some(self.q_target),
            frobenius: self.frobenius.to_json(),
            nilpotent: Some(self.nilpotent.to_json()),
            inertia: self.inertia.as_ref().map(QMat::to_json),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WDRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = WDJson::deserialize(d)?;
        let build = || -> Result<WDRep> {
            let f = QMat::from_json(j.q, &j.frobenius)?;
            let n = match &j.nilpotent {
                Some(m) => QMat::from_json(j.q, m)?,
                None => QMat::zero(j.q, f.size()),
            };
            let i = j.inertia.as_ref().map(|m| QMat::from_json(j.q, m)).transpose()?;
            WDRep::with_target(j.q, j.q_target.unwrap_or(j.q), f, n, i)
        };
        build().map_err(serde::de::Error::custom)
    }
}
