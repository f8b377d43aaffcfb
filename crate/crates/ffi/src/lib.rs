//! C ABI for `lctransfer`.
//!
//! Every function returns an [`LctStatus`]. On failure a message is stored
//! per thread and can be read with [`lct_last_error_message`]. Parameters and
//! reduction contexts are opaque handles owned by the caller and released
//! with the matching `_free` function. Strings returned through `char **`
//! out-pointers are released with [`lct_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lctransfer::arith::{hilbert_symbol, CoeffElem, CoeffJson, Place, Rational, ReductionContext};
use lctransfer::finite::{kloosterman_value, SmallField};
use lctransfer::forms::{certificate_check, GlobalCertificate};
use lctransfer::satake::{congruent_mod_ell, parse_group_name, same_support_mod_ell, transfer, GLParam, SatakeParam};
use lctransfer::Error;

/// Result of every call. Values from `InvalidInput` on mirror the library
/// error codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LctStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    Panic = 4,
    InvalidInput = 10,
    NotPrime = 11,
    NotIntegral = 12,
    ContextMismatch = 13,
    ShapeMismatch = 14,
    Obstruction = 15,
    DiscMismatch = 16,
    SearchExhausted = 17,
    NoAuxiliaryPlace = 18,
    UnsupportedSpectrum = 19,
    NotUnramified = 20,
    NotRegular = 21,
    ModulusMismatch = 22,
    NonGeneric = 23,
    RankMismatch = 24,
}

impl From<&Error> for LctStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidInput(_) => LctStatus::InvalidInput,
            Error::NotPrime(_) => LctStatus::NotPrime,
            Error::NotIntegral(_) => LctStatus::NotIntegral,
            Error::ContextMismatch(_) => LctStatus::ContextMismatch,
            Error::ShapeMismatch(_) => LctStatus::ShapeMismatch,
            Error::Obstruction { .. } => LctStatus::Obstruction,
            Error::DiscMismatch(_) => LctStatus::DiscMismatch,
            Error::SearchExhausted { .. } => LctStatus::SearchExhausted,
            Error::NoAuxiliaryPlace { .. } => LctStatus::NoAuxiliaryPlace,
            Error::UnsupportedSpectrum(_) => LctStatus::UnsupportedSpectrum,
            Error::NotUnramified(_) => LctStatus::NotUnramified,
            Error::NotRegular(_) => LctStatus::NotRegular,
            Error::ModulusMismatch(_) => LctStatus::ModulusMismatch,
            Error::NonGeneric(_) => LctStatus::NonGeneric,
            Error::RankMismatch { .. } => LctStatus::RankMismatch,
        }
    }
}

/// Opaque Satake parameter of a quasi-split classical group.
pub struct LctSatakeParam(SatakeParam);
/// Opaque unramified parameter of a general linear group.
pub struct LctGlParam(GLParam);
/// Opaque residue field data for a pair (ell, q).
pub struct LctReductionContext(ReductionContext);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(LctStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail((&e).into(), e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LctStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LctStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LctStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(LctStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(LctStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(LctStatus::NullPointer, "null handle".into()))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(LctStatus::NullPointer, "null output pointer".into()))
}

fn parse<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Fail>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| Fail(LctStatus::ParseError, format!("{what}: {e}")))
}

fn from_json<T: serde::de::DeserializeOwned>(s: &str, what: &str) -> Result<T, Fail> {
    serde_json::from_str(s).map_err(|e| Fail(LctStatus::ParseError, format!("{what}: {e}")))
}

fn to_c_string(v: impl serde::Serialize) -> *mut c_char {
    let s = serde_json::to_value(v).expect("serializable").to_string();
    CString::new(s).expect("JSON has no NUL").into_raw()
}

/// Message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lct_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Hilbert symbol `(a, b)_v` of two nonzero rationals given as `"n"` or
/// `"n/d"`; `place` is a prime or `"inf"`.
///
/// # Safety
/// String arguments must be NUL-terminated; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_hilbert_symbol(
    a: *const c_char,
    b: *const c_char,
    place: *const c_char,
    result: *mut i8,
) -> LctStatus {
    guard(|| {
        let a: Rational = parse(text(a)?, "a")?;
        let b: Rational = parse(text(b)?, "b")?;
        let v: Place = parse(text(place)?, "place")?;
        *out(result)? = hilbert_symbol(&a, &b, v)?;
        Ok(())
    })
}

/// Builds a Satake parameter from a group name (`"Sp4"`, `"SO5"`,
/// `"SO4-ns"`, `"U3"`, ...), the residue cardinality `q` and a JSON list
/// of `{half_exponent: coefficient}` maps.
///
/// # Safety
/// String arguments must be NUL-terminated; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_satake_param_new(
    group: *const c_char,
    q: u64,
    chars_json: *const c_char,
    result: *mut *mut LctSatakeParam,
) -> LctStatus {
    guard(|| {
        let g = parse_group_name(text(group)?, q)?;
        let chars: Vec<CoeffJson> = from_json(text(chars_json)?, "chars")?;
        let chars = chars.iter().map(|c| CoeffElem::from_json(q, c)).collect::<Result<Vec<_>, _>>()?;
        let p = SatakeParam::new(g, chars)?;
        *out(result)? = Box::into_raw(Box::new(LctSatakeParam(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lct_satake_param_free(p: *mut LctSatakeParam) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses a GL parameter from its JSON form (`q`, `q_target`, `eigenvalues`).
///
/// # Safety
/// `json` must be NUL-terminated; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_gl_param_from_json(json: *const c_char, result: *mut *mut LctGlParam) -> LctStatus {
    guard(|| {
        let g: GLParam = from_json(text(json)?, "GL parameter")?;
        *out(result)? = Box::into_raw(Box::new(LctGlParam(g)));
        Ok(())
    })
}

/// Canonical JSON of a GL parameter, to be released with [`lct_string_free`].
///
/// # Safety
/// `p` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_gl_param_to_json(p: *const LctGlParam, result: *mut *mut c_char) -> LctStatus {
    guard(|| {
        let g = &handle(p)?.0;
        *out(result)? = to_c_string(g);
        Ok(())
    })
}

/// Dimension `N` of a GL parameter.
///
/// # Safety
/// `p` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_gl_param_dim(p: *const LctGlParam, result: *mut usize) -> LctStatus {
    guard(|| {
        *out(result)? = handle(p)?.0.N();
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lct_gl_param_free(p: *mut LctGlParam) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Transfer of a Satake parameter to the general linear group.
///
/// # Safety
/// `p` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_transfer(p: *const LctSatakeParam, result: *mut *mut LctGlParam) -> LctStatus {
    guard(|| {
        let g = transfer(&handle(p)?.0)?;
        *out(result)? = Box::into_raw(Box::new(LctGlParam(g)));
        Ok(())
    })
}

/// Residue field data for a prime `ell` not dividing the prime power `q`.
///
/// # Safety
/// `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_reduction_context_new(
    ell: u64,
    q: u64,
    result: *mut *mut LctReductionContext,
) -> LctStatus {
    guard(|| {
        let ctx = ReductionContext::new(ell, q)?;
        *out(result)? = Box::into_raw(Box::new(LctReductionContext(ctx)));
        Ok(())
    })
}

/// # Safety
/// `ctx` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lct_reduction_context_free(ctx: *mut LctReductionContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Whether two GL parameters have equal reduced eigenvalue multisets.
///
/// # Safety
/// Handles must be live; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_congruent(
    a: *const LctGlParam,
    b: *const LctGlParam,
    ctx: *const LctReductionContext,
    result: *mut bool,
) -> LctStatus {
    guard(|| {
        *out(result)? = congruent_mod_ell(&handle(a)?.0, &handle(b)?.0, &handle(ctx)?.0)?;
        Ok(())
    })
}

/// Whether two Satake parameters of the same group have the same reduced
/// Weyl orbit.
///
/// # Safety
/// Handles must be live; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_same_support(
    a: *const LctSatakeParam,
    b: *const LctSatakeParam,
    ctx: *const LctReductionContext,
    result: *mut bool,
) -> LctStatus {
    guard(|| {
        *out(result)? = same_support_mod_ell(&handle(a)?.0, &handle(b)?.0, &handle(ctx)?.0)?;
        Ok(())
    })
}

/// Checks a global certificate given as JSON. `ok` receives the verdict;
/// if `report` is not NULL it receives the full report as JSON.
///
/// # Safety
/// `cert_json` must be NUL-terminated; `ok` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_certificate_check(
    cert_json: *const c_char,
    ok: *mut bool,
    report: *mut *mut c_char,
) -> LctStatus {
    guard(|| {
        let cert: GlobalCertificate = from_json(text(cert_json)?, "certificate")?;
        let r = certificate_check(&cert)?;
        *out(ok)? = r.ok;
        if let Some(slot) = report.as_mut() {
            *slot = to_c_string(&r);
        }
        Ok(())
    })
}

/// Kloosterman sum over `F_q` (`q` a power of 2) of the generic tuple
/// `u[0..len]` of nonzero element codes, twisted by `a`.
///
/// # Safety
/// `u` must point to `len` readable values; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_kloosterman_value(
    q: u64,
    u: *const u64,
    len: usize,
    a: u64,
    result: *mut i64,
) -> LctStatus {
    guard(|| {
        if u.is_null() {
            return Err(Fail(LctStatus::NullPointer, "null tuple".into()));
        }
        let u = std::slice::from_raw_parts(u, len);
        let f = SmallField::new(q)?;
        *out(result)? = kloosterman_value(&f, u, a)?;
        Ok(())
    })
}
