//! Exercise the C ABI through the exported extern "C" functions: handle
//! lifecycle, error codes, and JSON payloads.

use std::ffi::{CStr, CString};
use std::ptr;

use pdivisor_capi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    pdivisor_string_free(p);
    s
}

unsafe fn parse(text: &str, ring: &str) -> *mut PdivPoly {
    let mut out: *mut PdivPoly = ptr::null_mut();
    let status = pdivisor_poly_parse(cstr(text).as_ptr(), cstr(ring).as_ptr(), &mut out);
    assert_eq!(status, PdivStatus::Ok, "parse {text:?} over {ring}");
    out
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(pdivisor_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn poly_round_trip() {
    unsafe {
        let p = parse("x*y^3 - 1", "Z");
        let mut s: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(pdivisor_poly_to_string(p, &mut s), PdivStatus::Ok);
        assert_eq!(take_string(s), "x*y^3 - 1");
        pdivisor_poly_free(p);
    }
}

#[test]
fn parse_errors_set_message() {
    unsafe {
        let mut out: *mut PdivPoly = ptr::null_mut();
        let status = pdivisor_poly_parse(
            cstr("x +").as_ptr(),
            cstr("F2").as_ptr(),
            &mut out,
        );
        assert_eq!(status, PdivStatus::ParseError);
        let msg = CStr::from_ptr(pdivisor_last_error()).to_str().unwrap();
        assert!(msg.contains("parse error"), "{msg}");

        let status = pdivisor_poly_parse(cstr("x").as_ptr(), cstr("F6").as_ptr(), &mut out);
        assert_eq!(status, PdivStatus::InvalidArgument);

        let status = pdivisor_poly_parse(ptr::null(), cstr("F2").as_ptr(), &mut out);
        assert_eq!(status, PdivStatus::InvalidArgument);
    }
}

#[test]
fn p_power_and_divisor_through_ffi() {
    unsafe {
        let a = parse("x*y^3 + 1", "F2");
        let b = parse("x^3 + y^4", "F2");
        let mut vf: *mut PdivVectorField = ptr::null_mut();
        assert_eq!(pdivisor_vf_new(a, b, &mut vf), PdivStatus::Ok);

        let mut vx: *mut PdivPoly = ptr::null_mut();
        let mut vy: *mut PdivPoly = ptr::null_mut();
        assert_eq!(pdivisor_vf_p_power(vf, 2, &mut vx, &mut vy), PdivStatus::Ok);
        let mut s: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(pdivisor_poly_to_string(vx, &mut s), PdivStatus::Ok);
        assert_eq!(take_string(s), "x^4*y^2 + y^3");
        assert_eq!(pdivisor_poly_to_string(vy, &mut s), PdivStatus::Ok);
        assert_eq!(take_string(s), "x^3*y^3 + x^2");

        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            pdivisor_vf_p_divisor_json(vf, 2, &mut json),
            PdivStatus::Ok
        );
        let j: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(j["divisor"], "x^7*y^2 + y^7 + x^3*y^3 + x^2");
        assert_eq!(j["p_closed"], false);

        // characteristic mismatch surfaces as a ring error
        assert_eq!(
            pdivisor_vf_p_power(vf, 3, &mut vx, &mut vy),
            PdivStatus::RingMismatch
        );

        pdivisor_poly_free(vx);
        pdivisor_poly_free(vy);
        pdivisor_vf_free(vf);
        pdivisor_poly_free(a);
        pdivisor_poly_free(b);
    }
}

#[test]
fn invariance_through_ffi() {
    unsafe {
        let a = parse("x", "F2");
        let b = parse("y", "F2");
        let mut vf: *mut PdivVectorField = ptr::null_mut();
        assert_eq!(pdivisor_vf_new(a, b, &mut vf), PdivStatus::Ok);
        let curve = parse("x*y", "F2");
        let mut inv = false;
        assert_eq!(pdivisor_vf_invariant(vf, curve, &mut inv), PdivStatus::Ok);
        assert!(inv);

        let constant = parse("1", "F2");
        assert_eq!(
            pdivisor_vf_invariant(vf, constant, &mut inv),
            PdivStatus::MathDomain
        );

        pdivisor_poly_free(constant);
        pdivisor_poly_free(curve);
        pdivisor_vf_free(vf);
        pdivisor_poly_free(a);
        pdivisor_poly_free(b);
    }
}

#[test]
fn newton_and_certificate_json() {
    unsafe {
        let p = parse("x^7*y^2 + x^3*y^3 + y^7 + x^2", "F2");
        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            pdivisor_newton_polytope_json(p, true, 4, &mut json),
            PdivStatus::Ok
        );
        let j: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(j["vertices"], serde_json::json!([[0, 7], [2, 0], [7, 2]]));
        assert_eq!(j["verdict"]["status"], "irreducible_by_polytope");
        pdivisor_poly_free(p);

        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            pdivisor_certify_family_json(cstr("jouanolou:3").as_ptr(), true, &mut json),
            PdivStatus::Ok
        );
        let j: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(j["conclusion"], "no_algebraic_solutions");

        assert_eq!(
            pdivisor_certify_family_json(cstr("claudia:4,1,1,1").as_ptr(), true, &mut json),
            PdivStatus::InvalidArgument
        );
    }
}

#[test]
fn header_exists_and_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/pdivisor.h"
    ))
    .expect("generated header");
    for symbol in [
        "pdivisor_poly_parse",
        "pdivisor_poly_free",
        "pdivisor_vf_p_divisor_json",
        "pdivisor_certify_family_json",
        "pdivisor_last_error",
        "typedef struct PdivPoly PdivPoly",
        "PDIV_STATUS_OK",
    ] {
        assert!(header.contains(symbol), "header missing {symbol}");
    }
}
