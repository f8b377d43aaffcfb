use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Odd,
    Even,
    Hermitian,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceDecision {
    pub exists: bool,
    /// The condition that decided the answer.
    pub reason: String,
    /// Smallest field degree clearing a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_r: Option<u32>,
}

fn decide(kind: FormKind, r: u64, n: u64, delta_is_minus_one_pow_n: bool) -> (bool, String) {
    match kind {
        FormKind::Odd => {
            let e = r * n * (n + 1) / 2;
            (e.is_multiple_of(2), format!("r*n(n+1)/2 = {e} is {}", parity_word(e)))
        }
        FormKind::Even => {
            if n % 2 == 1 {
                (true, "n is odd".into())
            } else if !delta_is_minus_one_pow_n {
                (true, "delta differs from (-1)^n".into())
            } else {
                let e = r * n * (n - 1) / 2;
                (
                    e.is_multiple_of(2),
                    format!("n is even, delta = (-1)^n and r*n(n-1)/2 = {e} is {}", parity_word(e)),
                )
            }
        }
        FormKind::Hermitian => {
            if n % 2 == 1 {
                (true, "n is odd".into())
            } else {
                let e = r * n / 2;
                (e.is_multiple_of(2), format!("n is even and r*n/2 = {e} is {}", parity_word(e)))
            }
        }
    }
}

fn parity_word(e: u64) -> &'static str {
    if e.is_multiple_of(2) {
        "even"
    } else {
        "odd"
    }
}

/// Whether a totally real field of degree `r` carries a form of the given
/// kind whose group is compact at every real place and quasi-split at
/// every finite place. `delta_is_minus_one_pow_n` only matters for `Even`.
pub fn exists_definite_quasisplit(
    kind: FormKind,
    r: u32,
    n: u32,
    delta_is_minus_one_pow_n: bool,
) -> Result<ExistenceDecision> {
    if r == 0 || n == 0 {
        return Err(invalid("r and n must be positive"));
    }
    let (exists, reason) = decide(kind, r as u64, n as u64, delta_is_minus_one_pow_n);
    let min_r = if exists {
        None
    } else {
        (1..=2u32).find(|rr| decide(kind, *rr as u64, n as u64, delta_is_minus_one_pow_n).0)
    };
    Ok(ExistenceDecision { exists, reason, min_r })
}
