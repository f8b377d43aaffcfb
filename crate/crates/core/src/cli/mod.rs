//! Command-line front end: every operation with JSON output.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported as
//! `{"error": code, "message": ...}` on stdout), 2 on a usage error.

mod args;
mod repro;

use std::io::Read;
use std::str::FromStr;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

pub use args::{Cli, Cmd};
use args::*;

use crate::arith::hilbert::{hilbert_reciprocity_support, hilbert_symbol};
use crate::arith::{ell_adic_valuation, legendre_symbol, CoeffElem, Rational, ReductionContext};
use crate::error::{Error, Result};
use crate::finite::*;
use crate::forms::*;
use crate::satake::*;
use crate::wd::*;

/// Environment variable overriding the auxiliary-place search bound.
pub const AUX_BOUND_VAR: &str = "LCTRANSFER_AUX_BOUND";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}


fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("outputs are serializable")
}

/// Runs one invocation; `args` excludes the program name.
pub fn run(args: Vec<String>, stdin: &mut dyn Read) -> Outcome {
    let args = match expand_stdin(args, stdin) {
        Ok(a) => a,
        Err(msg) => return usage_outcome(&msg),
    };
    let cli = match Cli::try_parse_from(std::iter::once("lctransfer".to_string()).chain(args)) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.cmd) {
        Ok((v, code)) => Outcome { code, stdout: format!("{v}\n"), stderr: String::new() },
        Err(Failure::Usage(msg)) => usage_outcome(&msg),
        Err(Failure::Domain(e)) => {
            Outcome { code: 1, stdout: format!("{}\n", error_json(&e)), stderr: String::new() }
        }
    }
}

fn usage_outcome(msg: &str) -> Outcome {
    Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({ "error": e.code(), "message": e.to_string() });
    match e {
        Error::Obstruction { reason, min_r } => {
            v["reason"] = json!(reason);
            v["min_r"] = json!(min_r);
        }
        Error::SearchExhausted { bound } | Error::NoAuxiliaryPlace { bound } => v["bound"] = json!(bound),
        _ => {}
    }
    v
}

/// Replaces `--stdin` by the flags of a JSON object read from `stdin`.
fn expand_stdin(args: Vec<String>, stdin: &mut dyn Read) -> std::result::Result<Vec<String>, String> {
    if !args.iter().any(|a| a == "--stdin") {
        return Ok(args);
    }
    let mut text = String::new();
    stdin.read_to_string(&mut text).map_err(|e| format!("cannot read stdin: {e}"))?;
    let obj: serde_json::Map<String, Value> =
        serde_json::from_str(&text).map_err(|e| format!("stdin is not a JSON object: {e}"))?;
    let mut out: Vec<String> = args.into_iter().filter(|a| a != "--stdin").collect();
    for (k, v) in obj {
        let flag = format!("--{}", k.replace('_', "-"));
        match v {
            Value::Bool(true) => out.push(flag),
            Value::Bool(false) | Value::Null => {}
            Value::String(s) => out.extend([flag, s]),
            other => out.extend([flag, other.to_string()]),
        }
    }
    Ok(out)
}

fn aux_bound() -> std::result::Result<u64, Failure> {
    match std::env::var(AUX_BOUND_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("{AUX_BOUND_VAR} must be a positive integer"))),
        Err(_) => Ok(DEFAULT_SEARCH_BOUND),
    }
}

fn elems(q: u64, c: &Coeffs) -> Result<Vec<CoeffElem>> {
    c.0.iter().map(|x| CoeffElem::from_json(q, x)).collect()
}

fn gl(a: &GlArgs) -> Result<GLParam> {
    GLParam::new(a.q, a.q_target.unwrap_or(a.q), elems(a.q, &a.eig)?)
}

fn satake(group: &str, q: u64, chars: &Coeffs) -> Result<SatakeParam> {
    SatakeParam::new(parse_group_name(group, q)?, elems(q, chars)?)
}

fn small_field(q: u64) -> Result<SmallField> {
    SmallField::new(q)
}

fn ok(v: Value) -> std::result::Result<(Value, i32), Failure> {
    Ok((v, 0))
}

fn execute(cmd: Cmd) -> std::result::Result<(Value, i32), Failure> {
    let v: Value = match cmd {
        Cmd::Hilbert { a, b, p, positional } => {
            let (a, b, p) = match (a, b, p, positional.as_slice()) {
                (Some(a), Some(b), Some(p), []) => (a, b, p),
                (None, None, None, [a, b, p]) => (
                    nonzero(a).map_err(|e| usage(format!("a: {e}")))?,
                    nonzero(b).map_err(|e| usage(format!("b: {e}")))?,
                    crate::arith::Place::from_str(p).map_err(|e| usage(format!("p: {e}")))?,
                ),
                _ => return Err(usage("give either -a, -b and -p or three positional values A B P")),
            };
            json!({ "symbol": hilbert_symbol(&a, &b, p)? })
        }
        Cmd::Legendre { a, p } => json!({ "symbol": legendre_symbol(&a.into(), p)? }),
        Cmd::ReciprocitySupport { a, b } => {
            let places = hilbert_reciprocity_support(&a, &b)?;
            let mut product = 1i8;
            for v in &places {
                product *= hilbert_symbol(&a, &b, *v)?;
            }
            json!({ "places": places, "product": product })
        }
        Cmd::Valuation { x, ell } => json!({ "valuation": ell_adic_valuation(&x, ell)? }),
        Cmd::Reduce { ell, q, x } => {
            let ctx = ReductionContext::new(ell, q)?;
            let mut v = json!({ "context": ctx.to_json() });
            if let Some(x) = x {
                v["value"] = to_value(ctx.reduce_coeff(&CoeffElem::from_json(q, &x)?)?);
            }
            v
        }
        Cmd::Profile { form, place } => to_value(local_profile(&form, place)?),
        Cmd::Equivalent { f, g, place } => {
            let eq = match place {
                Some(v) => locally_equivalent(&f, &g, v)?,
                None => globally_equivalent(&f, &g)?,
            };
            json!({ "equivalent": eq })
        }
        Cmd::Classify { form, place } => to_value(classify_so_local(&form, place)?),
        Cmd::SplitHasse { parity, n, delta, place } => {
            let parity = match parity {
                ParityArg::Odd => Parity::Odd,
                ParityArg::Even => Parity::Even,
            };
            json!({ "hasse": split_so_hasse(parity, n, &delta, place)? })
        }
        Cmd::TraceHasse { n, alpha, delta, place } => {
            json!({ "hasse": hermitian_trace_hasse(n, &alpha, &delta, place)? })
        }
        Cmd::Exists { kind, r, n, delta_is_minus_one_pow_n, delta } => {
            let kind = match kind {
                KindArg::Odd => FormKind::Odd,
                KindArg::Even => FormKind::Even,
                KindArg::Hermitian => FormKind::Hermitian,
            };
            let flag = match delta {
                Some(d) => {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    crate::arith::hilbert::squarefree_kernel(&d)? == sign.into()
                }
                None => delta_is_minus_one_pow_n,
            };
            to_value(exists_definite_quasisplit(kind, r, n, flag)?)
        }
        Cmd::Globalize { kind, place, dim, disc, hasse, global_disc, n, alpha, sign } => {
            let bound = aux_bound()?;
            match kind {
                GlobalizeKind::Quadratic => {
                    let (Some(w), Some(d), Some(disc), Some(h)) = (place, dim, disc, hasse) else {
                        return Err(usage("quadratic globalization needs --place, --dim, --disc and --hasse"));
                    };
                    let target = LocalProfile::finite(w, d, &disc, h)?;
                    let gd = match global_disc {
                        Some(x) => x,
                        None => default_global_disc(&target)?,
                    };
                    to_value(globalize_quadratic(&target, &gd, bound)?)
                }
                GlobalizeKind::Hermitian => {
                    let (Some(n), Some(alpha)) = (n, alpha) else {
                        return Err(usage("Hermitian globalization needs --n and --alpha"));
                    };
                    let target = match (place, sign) {
                        (Some(w), Some(s)) => Some((w, s)),
                        (None, None) => None,
                        _ => return Err(usage("--place and --sign go together")),
                    };
                    to_value(globalize_hermitian(n, &alpha, target, bound)?)
                }
            }
        }
        Cmd::CheckCert { cert } => to_value(certificate_check(&cert)?),
        Cmd::AuxPlace { cert } => json!({ "place": find_auxiliary_split_place(&cert, aux_bound()?)? }),
        Cmd::Realize { cert } => json!({ "form": realize_form(&cert)? }),
        Cmd::Transfer(a) => to_value(transfer(&satake(&a.group, a.q, &a.chars)?)?),
        Cmd::Charpoly(a) => {
            let c: Vec<_> = charpoly(&gl(&a)?)?.iter().map(CoeffElem::to_json).collect();
            json!({ "coefficients": c })
        }
        Cmd::IsSelfdual(a) => json!({ "selfdual": is_selfdual(&gl(&a)?)? }),
        Cmd::Integral { ell, q, q_target, group, chars, eig } => {
            let integral = match (group, chars, eig) {
                (Some(g), Some(c), None) => is_integral_satake(&satake(&g, q, &c)?, ell)?,
                (None, None, Some(e)) => is_integral_gl(&gl(&GlArgs { q, q_target, eig: e })?, ell)?,
                _ => return Err(usage("give either --group with --chars or --eig")),
            };
            json!({ "integral": integral })
        }
        Cmd::Congruent { q, q_target, ell, eig1, eig2 } => {
            let ctx = ReductionContext::new(ell, q)?;
            let g1 = gl(&GlArgs { q, q_target, eig: eig1 })?;
            let g2 = gl(&GlArgs { q, q_target, eig: eig2 })?;
            json!({ "congruent": congruent_mod_ell(&g1, &g2, &ctx)? })
        }
        Cmd::Support { group, q, ell, chars1, chars2 } => {
            let ctx = ReductionContext::new(ell, q)?;
            let (p1, p2) = (satake(&group, q, &chars1)?, satake(&group, q, &chars2)?);
            json!({ "same_support": same_support_mod_ell(&p1, &p2, &ctx)? })
        }
        Cmd::Flip { group, gl: a } => to_value(sqrt_flip(&parse_group_name(&group, a.q)?, &gl(&a)?)?),
        Cmd::BaseChange { gl: a, f, d } => to_value(unramified_base_change(&gl(&a)?, f, d)?),
        Cmd::So2 { q, c } => to_value(so2_split_transfer(&CoeffElem::from_json(q, &c)?, q)?),
        Cmd::DetTwist { gl: a, k } => to_value(det_twist(&gl(&a)?, k)?),
        Cmd::ModulusExponents { group, q, m } => {
            json!({ "exponents": modulus_exponents(&parse_group_name(&group, q)?, m)? })
        }
        Cmd::WdValidate { rep } => to_value(validate(&rep)),
        Cmd::WdSs { rep } => to_value(frobenius_ss(&rep)?),
        Cmd::WdIntegral { rep, ell, k } => to_value(integral_model(&rep, ell, k)?),
        Cmd::WdReduce { rep, ell } => {
            let ctx = ReductionContext::new(ell, rep.q())?;
            json!({ "context": ctx.to_json(), "eigenvalues": reduce_wd(&rep, &ctx)? })
        }
        Cmd::WdCongruent { rep1, rep2, ell } => {
            let ctx = ReductionContext::new(ell, rep1.q())?;
            json!({ "congruent": congruent_wd(&rep1, &rep2, &ctx)? })
        }
        Cmd::WdFromParam(a) => to_value(wd_of_glparam(&gl(&a)?)?),
        Cmd::WdToParam { rep } => to_value(glparam_of_wd(&rep)?),
        Cmd::Green { q, k, class } => {
            let xi = CyclicExponent::new(q.checked_mul(q).map_or(0, |m| m - 1), k)?;
            match class {
                Some(c) => json!({ "value": green_character_value(&xi, q, c)? }),
                None => json!({ "regular": is_regular_green(&xi, q)? }),
            }
        }
        Cmd::GreenCongruent { q, k1, k2, ell } => {
            let m = q.checked_mul(q).map_or(0, |m| m - 1);
            let (a, b) = (CyclicExponent::new(m, k1)?, CyclicExponent::new(m, k2)?);
            json!({ "congruent": congruent_green(&a, &b, ell)? })
        }
        Cmd::BcLength { q, k } => {
            let xi = CyclicExponent::new(q.checked_mul(q).map_or(0, |m| m - 1), k)?;
            json!({ "e": base_change_length(&xi, q)? })
        }
        Cmd::NormalForm { q, a } => json!({ "a": simple_cuspidal_normal_form(&small_field(q)?, &a.0)? }),
        Cmd::IwahoriAction { q, chi, u } => {
            json!({ "u": iwahori_conjugation_action(&small_field(q)?, &chi.0, &u.0)? })
        }
        Cmd::Kloosterman { q, u, a } => json!({ "value": kloosterman_value(&small_field(q)?, &u.0, a)? }),
        Cmd::SimpleOrbits { p, q, n } => to_value(count_simple_cuspidals(p, q, n)?),
        Cmd::SelfdualParams { q, r } => json!({ "params": selfdual_cuspidal_params(q, r)? }),
        Cmd::Repro { scenario, q, ell } => {
            let v = repro::run(scenario, q, ell)?;
            let pass = v["pass"] == Value::Bool(true);
            return Ok((v, if pass { 0 } else { 1 }));
        }
    };
    ok(v)
}

/// `Rational` from an integer, for scenario code.
pub(crate) fn int(n: i64) -> Rational {
    Rational::from_int(n)
}
