use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::primes::prime_power;
use crate::arith::HalfInt;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "Sp")]
    Sp,
    #[serde(rename = "SO-odd")]
    SoOdd,
    #[serde(rename = "SO-even-split")]
    SoEvenSplit,
    #[serde(rename = "SO-even-nonsplit")]
    SoEvenNonsplit,
    #[serde(rename = "U-inert")]
    UnitaryInert,
    #[serde(rename = "U-split")]
    UnitarySplit,
}

/// A quasi-split classical group over a p-adic field with residue field of
/// size `q`. `n` is the index in `Sp(2n)`, `SO(2n+1)`, `SO(2n)` or `U(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupType {
    kind: GroupKind,
    n: u32,
    q: u64,
}

impl GroupType {
    pub fn new(kind: GroupKind, n: u32, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        prime_power(q)?;
        Ok(GroupType { kind, n, q })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Dimension of the general linear group receiving the transfer.
    pub fn transfer_dim(&self) -> usize {
        let n = self.n as usize;
        match self.kind {
            GroupKind::Sp => 2 * n + 1,
            GroupKind::SoOdd | GroupKind::SoEvenSplit | GroupKind::SoEvenNonsplit => 2 * n,
            GroupKind::UnitaryInert | GroupKind::UnitarySplit => n,
        }
    }

    /// Number of torus characters recorded by a Satake parameter.
    pub fn rank(&self) -> usize {
        let n = self.n as usize;
        match self.kind {
            GroupKind::SoEvenNonsplit => n - 1,
            GroupKind::UnitaryInert => n / 2,
            _ => n,
        }
    }

    /// Residue degree of the field over which the transfer lives.
    pub fn residue_degree(&self) -> u32 {
        if self.kind == GroupKind::UnitaryInert {
            2
        } else {
            1
        }
    }

    pub fn q_target(&self) -> u64 {
        self.q.pow(self.residue_degree())
    }

    pub fn is_even_orthogonal(&self) -> bool {
        matches!(self.kind, GroupKind::SoEvenSplit | GroupKind::SoEvenNonsplit)
    }

    /// `(d, e)` with `d` the dimension of the standard module and `e` the
    /// sign appearing in the modulus character of the Siegel-type parabolic.
    pub fn modulus_data(&self) -> (i64, i64) {
        let n = self.n as i64;
        match self.kind {
            GroupKind::Sp => (2 * n, -1),
            GroupKind::SoOdd => (2 * n + 1, 1),
            GroupKind::SoEvenSplit | GroupKind::SoEvenNonsplit => (2 * n, 1),
            GroupKind::UnitaryInert | GroupKind::UnitarySplit => (n, 0),
        }
    }

    /// Exponent `(d - e - N) f` governing the dependence on the choice of `q^{1/2}`.
    pub fn flip_exponent(&self) -> i64 {
        let (d, e) = self.modulus_data();
        (d - e - self.transfer_dim() as i64) * self.residue_degree() as i64
    }
}

/// Exponents of `|.|` in `delta^{1/2}` restricted to the first `m` coordinates.
pub fn modulus_exponents(g: &GroupType, m: usize) -> Result<Vec<HalfInt>> {
    if m != g.rank() {
        return Err(Error::RankMismatch { expected: g.rank(), got: m });
    }
    let (d, e) = g.modulus_data();
    let top = d - e - 1;
    Ok((0..m as i64).map(|i| HalfInt::from_twice(top - 2 * i)).collect())
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.kind {
            GroupKind::Sp => write!(f, "Sp{}", 2 * n),
            GroupKind::SoOdd => write!(f, "SO{}", 2 * n + 1),
            GroupKind::SoEvenSplit => write!(f, "SO{}", 2 * n),
            GroupKind::SoEvenNonsplit => write!(f, "SO{}-ns", 2 * n),
            GroupKind::UnitaryInert => write!(f, "U{n}"),
            GroupKind::UnitarySplit => write!(f, "U{n}-split"),
        }
    }
}

/// Short group names such as `Sp4`, `SO5`, `SO4`, `SO4-ns`, `U3`, `U3-split`.
/// The residue cardinality is supplied separately.
pub fn parse_group_name(name: &str, q: u64) -> Result<GroupType> {
    let bad = || invalid(format!("unknown group name {name:?}"));
    let (body, suffix) = match name.split_once('-') {
        Some((b, s)) => (b, Some(s)),
        None => (name, None),
    };
    let digits = |prefix: &str| -> Result<u32> {
        body.strip_prefix(prefix).and_then(|d| u32::from_str(d).ok()).ok_or_else(bad)
    };
    let (kind, n) = if body.starts_with("Sp") {
        let d = digits("Sp")?;
        if d % 2 == 1 || suffix.is_some() {
            return Err(bad());
        }
        (GroupKind::Sp, d / 2)
    } else if body.starts_with("SO") {
        let d = digits("SO")?;
        match (d % 2, suffix) {
            (1, None) => (GroupKind::SoOdd, d / 2),
            (0, None) | (0, Some("split")) => (GroupKind::SoEvenSplit, d / 2),
            (0, Some("ns")) | (0, Some("nonsplit")) => (GroupKind::SoEvenNonsplit, d / 2),
            _ => return Err(bad()),
        }
    } else if body.starts_with('U') {
        let d = digits("U")?;
        match suffix {
            None | Some("inert") => (GroupKind::UnitaryInert, d),
            Some("split") => (GroupKind::UnitarySplit, d),
            _ => return Err(bad()),
        }
    } else {
        return Err(bad());
    };
    GroupType::new(kind, n, q)
}
