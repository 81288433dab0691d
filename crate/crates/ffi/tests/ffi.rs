use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use qschubert_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(s: &str) -> *mut QskPolynomial {
    let mut p = ptr::null_mut();
    let st = unsafe { qsk_polynomial_parse(c(s).as_ptr(), &mut p) };
    assert_eq!(st, QskStatus::Ok, "{s}");
    p
}

fn render(p: *const QskPolynomial) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { qsk_polynomial_to_string(p, &mut s) }, QskStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { qsk_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qsk_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn parse_render_round_trip() {
    let p = parse("x1^2*x2 - 3*q1 + y2");
    let text = render(p);
    let q = parse(&text);
    assert_eq!(render(q), text);
    unsafe {
        qsk_polynomial_free(p);
        qsk_polynomial_free(q);
    }
}

#[test]
fn arithmetic_and_equality() {
    let a = parse("x1 + x2");
    let b = parse("x1 - x2");
    let mut prod = ptr::null_mut();
    let mut sum = ptr::null_mut();
    unsafe {
        assert_eq!(qsk_polynomial_mul(a, b, &mut prod), QskStatus::Ok);
        assert_eq!(qsk_polynomial_add(a, b, &mut sum), QskStatus::Ok);
    }
    let want_prod = parse("x1^2 - x2^2");
    let want_sum = parse("2*x1");
    let mut eq = false;
    unsafe {
        assert_eq!(qsk_polynomial_equal(prod, want_prod, &mut eq), QskStatus::Ok);
        assert!(eq);
        assert_eq!(qsk_polynomial_equal(sum, want_sum, &mut eq), QskStatus::Ok);
        assert!(eq);
        assert_eq!(qsk_polynomial_equal(sum, prod, &mut eq), QskStatus::Ok);
        assert!(!eq);
        for p in [a, b, prod, sum, want_prod, want_sum] {
            qsk_polynomial_free(p);
        }
    }
}

#[test]
fn schubert_polynomials() {
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(qsk_schubert(c("132").as_ptr(), &mut p), QskStatus::Ok);
    }
    let want = parse("x1 + x2");
    let mut eq = false;
    unsafe {
        qsk_polynomial_equal(p, want, &mut eq);
        qsk_polynomial_free(p);
        qsk_polynomial_free(want);
    }
    assert!(eq);

    let mut q = ptr::null_mut();
    unsafe {
        assert_eq!(
            qsk_quantum_schubert(c("13524").as_ptr(), 5, &mut q),
            QskStatus::Ok
        );
    }
    let text = render(q);
    assert!(text.contains('q'), "{text}");
    unsafe { qsk_polynomial_free(q) };

    let mut d = ptr::null_mut();
    unsafe {
        assert_eq!(
            qsk_quantum_double_schubert(c("213").as_ptr(), 3, &mut d),
            QskStatus::Ok
        );
    }
    let want = parse("x1 + y1");
    unsafe {
        qsk_polynomial_equal(d, want, &mut eq);
        qsk_polynomial_free(d);
        qsk_polynomial_free(want);
    }
    assert!(eq);
}

#[test]
fn quantize_square() {
    let f = parse("x1^2");
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(qsk_quantize(f, 3, &mut g), QskStatus::Ok);
    }
    let want = parse("x1^2 - q1");
    let mut eq = false;
    unsafe {
        qsk_polynomial_equal(g, want, &mut eq);
        for p in [f, g, want] {
            qsk_polynomial_free(p);
        }
    }
    assert!(eq);
}

#[test]
fn error_codes() {
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            qsk_polynomial_parse(ptr::null(), &mut p),
            QskStatus::NullPointer
        );
        assert_eq!(
            qsk_polynomial_parse(c("x1 +* 2").as_ptr(), &mut p),
            QskStatus::ParseError
        );
    }
    assert!(p.is_null());
    assert!(!last_error().is_empty());

    unsafe {
        assert_eq!(
            qsk_schubert(c("1243").as_ptr(), ptr::null_mut()),
            QskStatus::NullPointer
        );
        assert_eq!(
            qsk_quantum_schubert(c("1324").as_ptr(), 9, &mut p),
            QskStatus::RankTooLarge
        );
        assert_eq!(
            qsk_schubert(c("1134").as_ptr(), &mut p),
            QskStatus::ParseError
        );
    }
    assert!(p.is_null());

    let bad = [0xffu8, 0];
    let mut n = 0usize;
    unsafe {
        assert_eq!(
            qsk_enumerate_count(bad.as_ptr() as *const c_char, 3, &mut n),
            QskStatus::InvalidUtf8
        );
    }

    let ok = parse("1");
    assert!(last_error().is_empty());
    unsafe { qsk_polynomial_free(ok) };

    unsafe {
        qsk_polynomial_free(ptr::null_mut());
        qsk_string_free(ptr::null_mut());
    }
}

#[test]
fn enumerate_counts() {
    let mut n = 0usize;
    unsafe {
        assert_eq!(qsk_enumerate_count(c("rv").as_ptr(), 4, &mut n), QskStatus::Ok);
    }
    assert_eq!(n, 21);
    unsafe {
        assert_eq!(
            qsk_enumerate_count(c("vexillary").as_ptr(), 4, &mut n),
            QskStatus::Ok
        );
    }
    assert_eq!(n, 23);
    unsafe {
        assert_eq!(
            qsk_enumerate_count(c("nosuch").as_ptr(), 4, &mut n),
            QskStatus::InvalidArgument
        );
    }
}

#[test]
fn verify_reports_json() {
    let mut json: *mut c_char = ptr::null_mut();
    let mut passed = false;
    unsafe {
        assert_eq!(
            qsk_verify(c("cauchy").as_ptr(), 3, &mut json, &mut passed),
            QskStatus::Ok
        );
    }
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { qsk_string_free(json) };
    assert!(passed);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports[0]["suite"], "cauchy");
    assert_eq!(reports[0]["passed"], true);

    unsafe {
        assert_eq!(
            qsk_verify(c("nosuch").as_ptr(), 3, &mut json, &mut passed),
            QskStatus::InvalidArgument
        );
    }
}
