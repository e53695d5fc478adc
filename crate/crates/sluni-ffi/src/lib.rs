//! C ABI for the sluni classification library.
//!
//! The surface is an opaque system handle plus string-based calls: weights
//! and root sums travel in the `l1,..,lm|u1,..,un` text form, results come
//! back as JSON strings allocated by Rust. Every returned string must be
//! released with [`sluni_string_free`]. All functions return a status
//! code; out-parameters are written only on `SLUNI_STATUS_OK`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sluni::algebra::{build_positive_system, PositiveSystem, PositiveSystemKind};
use sluni::report;
use sluni::shapovalov::{self, OmegaVariant};
use sluni::weights::parse_integer_tuple;
use sluni::{classify, Error, Signature, Weight};

/// Opaque classification context: a signature together with the positive
/// system the classification runs on.
pub struct SluniSystem {
    sig: Signature,
    ps: PositiveSystem,
}

/// Status codes returned by every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SluniStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A string argument did not parse (weight, tuple, kind, rational).
    ParseError = 3,
    /// The inputs were well-formed but outside the domain (bad signature,
    /// wrong case, psl constraint, dimension mismatch).
    DomainError = 4,
}

fn status_of(err: &Error) -> SluniStatus {
    match err {
        Error::Parse(_) => SluniStatus::ParseError,
        _ => SluniStatus::DomainError,
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SluniStatus> {
    if ptr.is_null() {
        return Err(SluniStatus::NullArgument);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| SluniStatus::InvalidUtf8)
}

/// Create a classification system for su(p,q|n) with m = p+q.
///
/// `kind` selects the positive system: `"standard"`, `"antistandard"`,
/// `"nonstandard"`, or null for the classification default (standard when
/// p·q = 0, non-standard otherwise).
///
/// # Safety
/// `out` must point to writable storage for one pointer; `kind` must be
/// null or a NUL-terminated string valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn sluni_system_new(
    p: u32,
    q: u32,
    n: u32,
    kind: *const c_char,
    out: *mut *mut SluniSystem,
) -> SluniStatus {
    if out.is_null() {
        return SluniStatus::NullArgument;
    }
    let sig = match Signature::new(p as usize, q as usize, n as usize) {
        Ok(sig) => sig,
        Err(err) => return status_of(&err),
    };
    let kind = if kind.is_null() {
        if sig.is_compact() {
            PositiveSystemKind::Standard
        } else {
            PositiveSystemKind::NonStandard
        }
    } else {
        match read_str(kind) {
            Ok("standard") => PositiveSystemKind::Standard,
            Ok("antistandard") => PositiveSystemKind::AntiStandard,
            Ok("nonstandard") => PositiveSystemKind::NonStandard,
            Ok(_) => return SluniStatus::ParseError,
            Err(status) => return status,
        }
    };
    match build_positive_system(&sig, kind) {
        Ok(ps) => {
            *out = Box::into_raw(Box::new(SluniSystem { sig, ps }));
            SluniStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Release a system handle. Null is ignored.
///
/// # Safety
/// `system` must be null or a pointer returned by [`sluni_system_new`]
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sluni_system_free(system: *mut SluniSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string pointer returned by one of the calls in
/// this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sluni_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The Weyl vector of the system in weight text form.
///
/// # Safety
/// `system` must be a live handle; `out` must point to writable storage
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sluni_system_rho(
    system: *const SluniSystem,
    out: *mut *mut c_char,
) -> SluniStatus {
    if system.is_null() || out.is_null() {
        return SluniStatus::NullArgument;
    }
    let system = &*system;
    *out = to_c_string(system.ps.rho().to_string());
    SluniStatus::Ok
}

fn parse_weight_for(system: &SluniSystem, s: &str) -> Result<Weight, Error> {
    let w = Weight::parse(s)?;
    if w.m() != system.sig.m || w.n() != system.sig.n {
        return Err(Error::LengthMismatch {
            expected: system.sig.dim(),
            got: w.coords().len(),
        });
    }
    Ok(w)
}

fn parse_eta_for(system: &SluniSystem, s: &str) -> Result<Vec<i64>, Error> {
    let (m, coords) = parse_integer_tuple(s)?;
    if m != system.sig.m || coords.len() != system.sig.dim() {
        return Err(Error::LengthMismatch {
            expected: system.sig.dim(),
            got: coords.len(),
        });
    }
    Ok(coords)
}

/// Classify one highest weight; the verdict is returned as a JSON string
/// with fields `unitarizable`, `case`, and `reasons`.
///
/// # Safety
/// `system` must be a live handle, `weight` a NUL-terminated string, and
/// `out` writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sluni_classify_json(
    system: *const SluniSystem,
    weight: *const c_char,
    psl: bool,
    out: *mut *mut c_char,
) -> SluniStatus {
    if system.is_null() || out.is_null() {
        return SluniStatus::NullArgument;
    }
    let system = &*system;
    let weight = match read_str(weight) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let lambda = match parse_weight_for(system, weight) {
        Ok(w) => w,
        Err(err) => return status_of(&err),
    };
    match classify(&lambda, &system.sig, psl) {
        Ok(verdict) => {
            *out = to_c_string(report::verdict_json(&lambda, &system.sig, &verdict).to_string());
            SluniStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// The Dirac margins (Λ+ρ, α) over the odd positive roots, as JSON.
///
/// # Safety
/// As for [`sluni_classify_json`].
#[no_mangle]
pub unsafe extern "C" fn sluni_margins_json(
    system: *const SluniSystem,
    weight: *const c_char,
    out: *mut *mut c_char,
) -> SluniStatus {
    if system.is_null() || out.is_null() {
        return SluniStatus::NullArgument;
    }
    let system = &*system;
    let weight = match read_str(weight) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match parse_weight_for(system, weight) {
        Ok(lambda) => {
            *out = to_c_string(report::margins_json(&lambda, &system.ps).to_string());
            SluniStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Factored determinant of the contravariant form on the weight space at
/// depth `eta`, as JSON with `factors` and `value`.
///
/// # Safety
/// As for [`sluni_classify_json`]; `eta` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sluni_ksdet_json(
    system: *const SluniSystem,
    weight: *const c_char,
    eta: *const c_char,
    out: *mut *mut c_char,
) -> SluniStatus {
    if system.is_null() || out.is_null() {
        return SluniStatus::NullArgument;
    }
    let system = &*system;
    let (weight, eta) = match (read_str(weight), read_str(eta)) {
        (Ok(w), Ok(e)) => (w, e),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let lambda = match parse_weight_for(system, weight) {
        Ok(w) => w,
        Err(err) => return status_of(&err),
    };
    let eta = match parse_eta_for(system, eta) {
        Ok(e) => e,
        Err(err) => return status_of(&err),
    };
    let ks = shapovalov::ks_determinant(&lambda, &eta, &system.ps);
    *out = to_c_string(report::ksdet_json(&ks, &eta, system.sig.m).to_string());
    SluniStatus::Ok
}

/// Exact positive-semidefiniteness of the Gram matrix on the weight space
/// at depth `eta`, with the anti-involution the classification fixes for
/// this signature.
///
/// # Safety
/// As for [`sluni_ksdet_json`]; `out` must point to writable storage for
/// one `bool`.
#[no_mangle]
pub unsafe extern "C" fn sluni_gram_is_psd(
    system: *const SluniSystem,
    weight: *const c_char,
    eta: *const c_char,
    out: *mut bool,
) -> SluniStatus {
    if system.is_null() || out.is_null() {
        return SluniStatus::NullArgument;
    }
    let system = &*system;
    let (weight, eta) = match (read_str(weight), read_str(eta)) {
        (Ok(w), Ok(e)) => (w, e),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let lambda = match parse_weight_for(system, weight) {
        Ok(w) => w,
        Err(err) => return status_of(&err),
    };
    let eta = match parse_eta_for(system, eta) {
        Ok(e) => e,
        Err(err) => return status_of(&err),
    };
    let variant = OmegaVariant::default_for(&system.sig);
    let gram = match shapovalov::gram(&lambda, &eta, &system.ps, variant) {
        Ok(g) => g,
        Err(err) => return status_of(&err),
    };
    match shapovalov::is_psd(&gram) {
        Ok(psd) => {
            *out = psd;
            SluniStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Sweep every weight space reachable by at most `depth` positive-root
/// steps; `out` receives true when all Gram matrices are positive
/// semidefinite.
///
/// # Safety
/// As for [`sluni_gram_is_psd`].
#[no_mangle]
pub unsafe extern "C" fn sluni_all_gram_psd(
    system: *const SluniSystem,
    weight: *const c_char,
    depth: u32,
    out: *mut bool,
) -> SluniStatus {
    if system.is_null() || out.is_null() {
        return SluniStatus::NullArgument;
    }
    if depth == 0 || depth > 4 {
        return SluniStatus::DomainError;
    }
    let system = &*system;
    let weight = match read_str(weight) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let lambda = match parse_weight_for(system, weight) {
        Ok(w) => w,
        Err(err) => return status_of(&err),
    };
    let variant = OmegaVariant::default_for(&system.sig);
    match shapovalov::first_non_psd(&lambda, &system.ps, variant, depth as usize) {
        Ok(witness) => {
            *out = witness.is_none();
            SluniStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn sluni_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
