//! Scripted scenarios that recompute a known example end to end.

use serde_json::{json, Value};

use super::args::Scenario;
use super::{int, Failure};
use crate::arith::{CoeffElem, ReductionContext};
use crate::error::invalid;
use crate::finite::{kloosterman_value, SmallField};
use crate::satake::{congruent_mod_ell, parse_group_name, so2_split_transfer, transfer, SatakeParam};

pub(super) fn run(s: Scenario, q: Option<u64>, ell: Option<u64>) -> Result<Value, Failure> {
    match s {
        Scenario::So5Congruence => congruent_so5_pair(q.unwrap_or(5), ell.unwrap_or(3)),
        Scenario::So2 => {
            let (Some(q), Some(ell)) = (q, ell) else {
                return Err(Failure::Usage("repro so2 needs --q and --ell".into()));
            };
            so2(q, ell)
        }
        Scenario::KloostermanOdd => kloosterman_odd(),
    }
}

/// Two Satake parameters of SO(5) whose transfers differ but are congruent.
fn congruent_so5_pair(q: u64, ell: u64) -> Result<Value, Failure> {
    let ctx = ReductionContext::new(ell, q)?;
    let g = parse_group_name("SO5", q)?;
    let p1 = SatakeParam::new(g, vec![CoeffElem::q_pow_half(q, -1), CoeffElem::q_pow_half(q, 1)])?;
    let p2 = SatakeParam::new(g, vec![CoeffElem::q_pow_half(q, 3), CoeffElem::q_pow_half(q, 1)])?;
    let (t1, t2) = (transfer(&p1)?, transfer(&p2)?);
    let congruent = congruent_mod_ell(&t1, &t2, &ctx)?;
    let equal = t1 == t2;
    Ok(json!({ "congruent_transfers": congruent, "params_equal": equal, "pass": congruent && !equal }))
}

/// `q^{1/2}` and `-q^{-1/2}` reduce to the same value when `ell | q + 1`,
/// while the one-dimensional constituents of their transfers do not.
fn so2(q: u64, ell: u64) -> Result<Value, Failure> {
    if ell == 2 || !(q + 1).is_multiple_of(ell) {
        return Err(invalid(format!("the scenario needs an odd ell dividing q + 1 = {}", q + 1)).into());
    }
    let ctx = ReductionContext::new(ell, q)?;
    let c1 = CoeffElem::q_pow_half(q, 1);
    let c2 = CoeffElem::monomial(q, int(-1), -1);
    let inputs_equal = ctx.reduce_coeff(&c1)? == ctx.reduce_coeff(&c2)?;
    let (t1, t2) = (so2_split_transfer(&c1, q)?, so2_split_transfer(&c2, q)?);
    let (d1, d2) = match (t1.degenerate_character(), t2.degenerate_character()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => return Ok(json!({ "both_degenerate": false, "pass": false })),
    };
    let (r1, r2) = (ctx.reduce_coeff(&d1)?, ctx.reduce_coeff(&d2)?);
    let (o1, o2) = (r1.order()?, r2.order()?);
    Ok(json!({
        "both_degenerate": true,
        "degenerate_characters": [d1.to_json(), d2.to_json()],
        "degenerate_orders": [o1, o2],
        "inputs_reduce_equal": inputs_equal,
        "pass": inputs_equal && r1 != r2,
    }))
}

/// Every generic value for q = 2 (n <= 6) and q = 4 (n <= 2) is odd and bounded.
fn kloosterman_odd() -> Result<Value, Failure> {
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for (q, max_n) in [(2u64, 6usize), (4, 2)] {
        let f = SmallField::new(q)?;
        for n in 1..=max_n {
            let total = (q - 1).pow(n as u32 + 1);
            for idx in 0..total {
                let mut c = idx;
                let u: Vec<u64> = (0..=n)
                    .map(|_| {
                        let d = c % (q - 1);
                        c /= q - 1;
                        d + 1
                    })
                    .collect();
                for a in 1..q {
                    let v = kloosterman_value(&f, &u, a)?;
                    checked += 1;
                    if v.rem_euclid(2) != 1 || v.unsigned_abs() > (q - 1).pow(n as u32) {
                        bad.push(json!({ "q": q, "u": u, "a": a, "value": v }));
                    }
                }
            }
        }
    }
    Ok(json!({ "checked": checked, "failures": bad, "pass": bad.is_empty() }))
}
