//! C ABI for the pdivisor library.
//!
//! All functions return a [`PdivStatus`] code; results come back through out
//! parameters. Polynomials and vector fields are opaque handles that must be
//! released with the matching `_free` function, strings with
//! [`pdivisor_string_free`]. On any non-OK status a thread-local message is
//! available from [`pdivisor_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};


use pdivisor::families::{self, FamilySpec};
use pdivisor::foliation::PlaneVectorField;
use pdivisor::newton::{self, Backend};
use pdivisor::parse::parse_poly;
use pdivisor::ring::Ring;
use pdivisor::{certificate, Error, SparsePoly};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PdivStatus {
    Ok = 0,
    InvalidArgument = 1,
    ParseError = 2,
    RingMismatch = 3,
    MathDomain = 4,
    Internal = 5,
}

/// Opaque polynomial handle.
pub struct PdivPoly(SparsePoly);

/// Opaque vector field handle.
pub struct PdivVectorField(PlaneVectorField);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(cleaned).unwrap());
}

fn status_for(err: &Error) -> PdivStatus {
    match err {
        Error::Parse { .. } => PdivStatus::ParseError,
        Error::RingMismatch | Error::ArityMismatch | Error::CharacteristicMismatch { .. } => {
            PdivStatus::RingMismatch
        }
        Error::UnsupportedField(_) | Error::ConstraintViolation(_) => PdivStatus::InvalidArgument,
        _ => PdivStatus::MathDomain,
    }
}

fn guard<F: FnOnce() -> PdivStatus>(f: F) -> PdivStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            set_error(&msg);
            PdivStatus::Internal
        }
    }
}

unsafe fn cstr_arg<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, PdivStatus> {
    if ptr.is_null() {
        set_error(&format!("{name} is null"));
        return Err(PdivStatus::InvalidArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{name} is not valid UTF-8"));
        PdivStatus::InvalidArgument
    })
}

fn emit_string(s: String, out: *mut *mut c_char) -> PdivStatus {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained interior NUL");
            return PdivStatus::Internal;
        }
    };
    unsafe { *out = c.into_raw() };
    PdivStatus::Ok
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn pdivisor_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent error on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn pdivisor_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse a polynomial over a ring tag ("Z", "Q", "F2", "F4", ...).
///
/// # Safety
/// `text` and `ring` must be NUL-terminated strings; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_poly_parse(
    text: *const c_char,
    ring: *const c_char,
    out: *mut *mut PdivPoly,
) -> PdivStatus {
    guard(|| {
        if out.is_null() {
            set_error("out is null");
            return PdivStatus::InvalidArgument;
        }
        let text = match cstr_arg(text, "text") {
            Ok(s) => s,
            Err(code) => return code,
        };
        let ring = match cstr_arg(ring, "ring") {
            Ok(s) => s,
            Err(code) => return code,
        };
        let ring = match Ring::parse(ring) {
            Ok(r) => r,
            Err(e) => {
                set_error(&e.to_string());
                return status_for(&e);
            }
        };
        match parse_poly(text, &ring) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(PdivPoly(p)));
                PdivStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

/// Canonical string form (graded-lex descending).
///
/// # Safety
/// `poly` must be a live handle from this library; `out` receives a string
/// to release with [`pdivisor_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pdivisor_poly_to_string(
    poly: *const PdivPoly,
    out: *mut *mut c_char,
) -> PdivStatus {
    guard(|| {
        if poly.is_null() || out.is_null() {
            set_error("null argument");
            return PdivStatus::InvalidArgument;
        }
        emit_string((*poly).0.to_string(), out)
    })
}

/// # Safety
/// `poly` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_poly_free(poly: *mut PdivPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build v = A dx + B dy from two polynomials over the same ring.
///
/// # Safety
/// `a` and `b` must be live polynomial handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_vf_new(
    a: *const PdivPoly,
    b: *const PdivPoly,
    out: *mut *mut PdivVectorField,
) -> PdivStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            set_error("null argument");
            return PdivStatus::InvalidArgument;
        }
        match PlaneVectorField::new((*a).0.clone(), (*b).0.clone()) {
            Ok(v) => {
                *out = Box::into_raw(Box::new(PdivVectorField(v)));
                PdivStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

/// # Safety
/// `vf` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_vf_free(vf: *mut PdivVectorField) {
    if !vf.is_null() {
        drop(Box::from_raw(vf));
    }
}

/// v^p by the iterated-derivation recurrence; the components come back as
/// two new polynomial handles.
///
/// # Safety
/// `vf` must be a live handle; `out_x` and `out_y` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_vf_p_power(
    vf: *const PdivVectorField,
    p: u64,
    out_x: *mut *mut PdivPoly,
    out_y: *mut *mut PdivPoly,
) -> PdivStatus {
    guard(|| {
        if vf.is_null() || out_x.is_null() || out_y.is_null() {
            set_error("null argument");
            return PdivStatus::InvalidArgument;
        }
        match (*vf).0.p_power(p) {
            Ok(vp) => {
                *out_x = Box::into_raw(Box::new(PdivPoly(vp.a().clone())));
                *out_y = Box::into_raw(Box::new(PdivPoly(vp.b().clone())));
                PdivStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

/// Full p-divisor report as a JSON string.
///
/// # Safety
/// `vf` must be a live handle; `out_json` receives a string to release with
/// [`pdivisor_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pdivisor_vf_p_divisor_json(
    vf: *const PdivVectorField,
    p: u64,
    out_json: *mut *mut c_char,
) -> PdivStatus {
    guard(|| {
        if vf.is_null() || out_json.is_null() {
            set_error("null argument");
            return PdivStatus::InvalidArgument;
        }
        match (*vf).0.p_divisor(p) {
            Ok(res) => emit_string(res.to_json().to_string(), out_json),
            Err(e) => {
                set_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

/// Whether {curve = 0} is invariant under the field.
///
/// # Safety
/// `vf` and `curve` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pdivisor_vf_invariant(
    vf: *const PdivVectorField,
    curve: *const PdivPoly,
    out: *mut bool,
) -> PdivStatus {
    guard(|| {
        if vf.is_null() || curve.is_null() || out.is_null() {
            set_error("null argument");
            return PdivStatus::InvalidArgument;
        }
        match (*vf).0.is_invariant_curve(&(*curve).0) {
            Ok(b) => {
                *out = b;
                PdivStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}

/// Newton polytope (and optional irreducibility verdict) as JSON.
///
/// # Safety
/// `poly` must be a live handle; `out_json` receives a string to release
/// with [`pdivisor_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pdivisor_newton_polytope_json(
    poly: *const PdivPoly,
    certify: bool,
    bound: u32,
    out_json: *mut *mut c_char,
) -> PdivStatus {
    guard(|| {
        if poly.is_null() || out_json.is_null() {
            set_error("null argument");
            return PdivStatus::InvalidArgument;
        }
        let f = &(*poly).0;
        let hull = match newton::newton_polytope(f) {
            Ok(h) => h,
            Err(e) => {
                set_error(&e.to_string());
                return status_for(&e);
            }
        };
        let indecomposable = if hull.is_point() {
            None
        } else {
            match hull.is_indecomposable() {
                Ok(b) => Some(b),
                Err(e) => {
                    set_error(&e.to_string());
                    return status_for(&e);
                }
            }
        };
        let verdict = if certify {
            match newton::certify_irreducible(f, Backend::Both { bound }) {
                Ok(v) => Some(v.to_json()),
                Err(e) => {
                    set_error(&e.to_string());
                    return status_for(&e);
                }
            }
        } else {
            None
        };
        let j = serde_json::json!({
            "schema": 1,
            "vertices": hull.to_json(),
            "indecomposable": indecomposable,
            "verdict": verdict,
        });
        emit_string(j.to_string(), out_json)
    })
}

/// Run the non-algebraicity certificate for a family spec such as
/// "jouanolou:3" or "family-g:5,1,1,1,1"; the report comes back as JSON.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out_json` receives a string to
/// release with [`pdivisor_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pdivisor_certify_family_json(
    spec: *const c_char,
    assert_nondicritical: bool,
    out_json: *mut *mut c_char,
) -> PdivStatus {
    guard(|| {
        if out_json.is_null() {
            set_error("out_json is null");
            return PdivStatus::InvalidArgument;
        }
        let spec = match cstr_arg(spec, "spec") {
            Ok(s) => s,
            Err(code) => return code,
        };
        let spec = match FamilySpec::parse(spec) {
            Ok(s) => s,
            Err(e) => {
                set_error(&e.to_string());
                return status_for(&e);
            }
        };
        let v = match families::make_field(&spec, &Ring::Int) {
            Ok(v) => v,
            Err(e) => {
                set_error(&e.to_string());
                return status_for(&e);
            }
        };
        match certificate::theorem_main_certificate(&v, assert_nondicritical) {
            Ok(report) => emit_string(report.to_json().to_string(), out_json),
            Err(e) => {
                set_error(&e.to_string());
                status_for(&e)
            }
        }
    })
}
