use serde::Serialize;

use super::profile::{split_so_hasse, DiagQuadForm, Parity};
use crate::arith::hilbert::{is_local_square, squarefree_kernel};
use crate::arith::{Place, Rational};
use crate::error::{invalid, Result};

/// Isomorphism type of `SO(f)` over a p-adic completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum SoClass {
    Split,
    NonQuasiSplit,
    /// Quasi-split but not split; `alpha` is the normalized discriminant.
    QuasiSplitNonsplit { alpha: Rational },
    /// Dimension 2 with square normalized discriminant: `SO_2 = GL_1`.
    SplitTorus,
}

/// `(-1)^n * delta` for a form of dimension `2n`.
pub fn normalized_disc(n: u32, delta: &Rational) -> Rational {
    if n.is_multiple_of(2) {
        delta.clone()
    } else {
        -delta
    }
}

pub fn classify_so_local(f: &DiagQuadForm, v: Place) -> Result<SoClass> {
    if !v.is_finite() {
        return Err(invalid("classification is over finite places"));
    }
    let d = f.dim();
    if d < 2 {
        return Err(invalid("dimension must be at least 2"));
    }
    let delta = f.disc();
    let hasse = f.hasse(v)?;
    let n = d / 2;
    if d % 2 == 1 {
        let split = split_so_hasse(Parity::Odd, n, &delta, v)?;
        return Ok(if hasse == split { SoClass::Split } else { SoClass::NonQuasiSplit });
    }
    let alpha = normalized_disc(n, &delta);
    if !is_local_square(&alpha, v)? {
        return Ok(SoClass::QuasiSplitNonsplit {
            alpha: Rational::from_int(squarefree_kernel(&alpha)?),
        });
    }
    if n == 1 {
        return Ok(SoClass::SplitTorus);
    }
    let split = split_so_hasse(Parity::Even, n, &delta, v)?;
    Ok(if hasse == split { SoClass::Split } else { SoClass::NonQuasiSplit })
}
