use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::group::{GroupKind, GroupType};
use crate::arith::primes::prime_power;
use crate::arith::{CoeffElem, CoeffJson};
use crate::error::{invalid, Error, Result};

/// Checks that `x` is an invertible monomial over `q` and puts it in normal form.
pub fn unramified_value(q: u64, x: &CoeffElem) -> Result<CoeffElem> {
    if x.base_q() != q {
        return Err(Error::ContextMismatch(format!(
            "value over q = {} used where q = {q}",
            x.base_q()
        )));
    }
    if !x.is_monomial() {
        return Err(invalid(format!("{x} is not a nonzero monomial")));
    }
    x.normalized()
}

/// Values on a uniformizer of unramified characters of a maximal split torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeParam {
    group: GroupType,
    chars: Vec<CoeffElem>,
}

impl SatakeParam {
    pub fn new(group: GroupType, chars: Vec<CoeffElem>) -> Result<Self> {
        if chars.len() != group.rank() {
            return Err(Error::RankMismatch { expected: group.rank(), got: chars.len() });
        }
        let chars = chars
            .iter()
            .map(|c| unramified_value(group.q(), c))
            .collect::<Result<_>>()?;
        Ok(SatakeParam { group, chars })
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn chars(&self) -> &[CoeffElem] {
        &self.chars
    }
}

#[derive(Serialize, Deserialize)]
struct SatakeJson {
    kind: GroupKind,
    n: u32,
    q: u64,
    chars: Vec<CoeffJson>,
}

impl Serialize for SatakeParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SatakeJson {
            kind: self.group.kind(),
            n: self.group.n(),
            q: self.group.q(),
            chars: self.chars.iter().map(CoeffElem::to_json).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SatakeParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SatakeJson::deserialize(d)?;
        let build = || -> Result<SatakeParam> {
            let g = GroupType::new(j.kind, j.n, j.q)?;
            let chars = j.chars.iter().map(|c| CoeffElem::from_json(j.q, c)).collect::<Result<_>>()?;
            SatakeParam::new(g, chars)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// An unramified parameter for `GL_N` over a field with residue field of
/// size `q_target`, given by its Frobenius eigenvalues.
///
/// Eigenvalues are monomials in `q^{1/2}` for the base `q`, even when
/// `q_target` is a power of `q`. `paired_dual` marks a parameter standing
/// for the pair `(pi, pi^vee)` of a split unitary group, whose second
/// member is left implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLParam {
    q: u64,
    q_target: u64,
    eigenvalues: Vec<CoeffElem>,
    degenerate: Option<CoeffElem>,
    paired_dual: bool,
}

impl GLParam {
    pub fn new(q: u64, q_target: u64, eigenvalues: Vec<CoeffElem>) -> Result<Self> {
        prime_power(q)?;
        target_degree(q, q_target)?;
        if eigenvalues.is_empty() {
            return Err(invalid("a parameter needs at least one eigenvalue"));
        }
        let mut eigenvalues: Vec<CoeffElem> =
            eigenvalues.iter().map(|x| unramified_value(q, x)).collect::<Result<_>>()?;
        eigenvalues.sort_by_key(CoeffElem::sort_key);
        Ok(GLParam { q, q_target, eigenvalues, degenerate: None, paired_dual: false })
    }

    pub fn with_degenerate(mut self, c: Option<CoeffElem>) -> Result<Self> {
        self.degenerate = c.map(|c| unramified_value(self.q, &c)).transpose()?;
        Ok(self)
    }

    pub fn with_paired_dual(mut self, paired: bool) -> Self {
        self.paired_dual = paired;
        self
    }

    /// Same metadata, new eigenvalues and degeneracy.
    pub(crate) fn remap(
        &self,
        q_target: u64,
        mut f: impl FnMut(&CoeffElem) -> Result<CoeffElem>,
    ) -> Result<GLParam> {
        let eig = self.eigenvalues.iter().map(&mut f).collect::<Result<_>>()?;
        let deg = self.degenerate.as_ref().map(&mut f).transpose()?;
        Ok(GLParam::new(self.q, q_target, eig)?
            .with_degenerate(deg)?
            .with_paired_dual(self.paired_dual))
    }

    #[allow(non_snake_case)]
    pub fn N(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_target(&self) -> u64 {
        self.q_target
    }

    /// `f` with `q_target = q^f`.
    pub fn target_degree(&self) -> u32 {
        target_degree(self.q, self.q_target).expect("checked on construction")
    }

    pub fn eigenvalues(&self) -> &[CoeffElem] {
        &self.eigenvalues
    }

    pub fn degenerate_character(&self) -> Option<&CoeffElem> {
        self.degenerate.as_ref()
    }

    pub fn paired_dual(&self) -> bool {
        self.paired_dual
    }
}

fn target_degree(q: u64, q_target: u64) -> Result<u32> {
    let mut x = q;
    let mut f = 1;
    while x < q_target {
        x = x.checked_mul(q).ok_or_else(|| invalid("q_target too large"))?;
        f += 1;
    }
    if x == q_target {
        Ok(f)
    } else {
        Err(invalid(format!("q_target = {q_target} is not a power of q = {q}")))
    }
}

#[derive(Serialize, Deserialize)]
struct GLJson {
    #[serde(rename = "N")]
    n: Option<usize>,
    q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q_target: Option<u64>,
    eigenvalues: Vec<CoeffJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degenerate_character: Option<CoeffJson>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    paired_dual: bool,
}

impl Serialize for GLParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GLJson {
            n: Some(self.N()),
            q: self.q,
            q_target: Some(self.q_target),
            eigenvalues: self.eigenvalues.iter().map(CoeffElem::to_json).collect(),
            degenerate_character: self.degenerate.as_ref().map(CoeffElem::to_json),
            paired_dual: self.paired_dual,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GLParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GLJson::deserialize(d)?;
        let build = || -> Result<GLParam> {
            let eig = j.eigenvalues.iter().map(|c| CoeffElem::from_json(j.q, c)).collect::<Result<Vec<_>>>()?;
            if let Some(n) = j.n {
                if n != eig.len() {
                    return Err(Error::ShapeMismatch(format!("N = {n} but {} eigenvalues", eig.len())));
                }
            }
            let deg = j.degenerate_character.as_ref().map(|c| CoeffElem::from_json(j.q, c)).transpose()?;
            Ok(GLParam::new(j.q, j.q_target.unwrap_or(j.q), eig)?
                .with_degenerate(deg)?
                .with_paired_dual(j.paired_dual))
        };
        build().map_err(serde::de::Error::custom)
    }
}
