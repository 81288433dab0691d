//! C interface to `qschubert`.
//!
//! # Conventions
//!
//! Every fallible function returns a [`QskStatus`] and writes its result
//! through an out-pointer, which is left untouched on failure. The message of
//! the most recent failure on the calling thread is available from
//! [`qsk_last_error`].
//!
//! Polynomials are opaque [`QskPolynomial`] handles owned by the caller and
//! released with [`qsk_polynomial_free`]. Strings returned by the library are
//! released with [`qsk_string_free`]. Ranks above [`QSK_MAX_RANK`] are
//! rejected with [`QskStatus::RankTooLarge`].
//!
//! # Safety
//!
//! Pointer arguments must be null or valid for the access the function
//! documents; string arguments must be NUL-terminated. Handles are not
//! synchronized: do not share one handle between threads while mutating it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qschubert::classical::schubert;
use qschubert::perm::enumerate_class;
use qschubert::quantum::{q_double_schubert, q_schubert, quantize};
use qschubert::verify::{self, Config};
use qschubert::{Error, PermClass, Permutation, Polynomial};

/// Largest ambient rank accepted through the C interface.
pub const QSK_MAX_RANK: usize = 6;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QskStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A polynomial, permutation or other text argument did not parse.
    ParseError = 3,
    /// The arguments parsed but are outside the operation's domain.
    InvalidArgument = 4,
    /// The requested rank exceeds `QSK_MAX_RANK`.
    RankTooLarge = 5,
    /// An internal error; the library state is still usable.
    Internal = 6,
}

/// An exact polynomial in the x, y, z and q variables.
pub struct QskPolynomial {
    inner: Polynomial,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(QskStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::Parse { .. } | Error::InvalidPermutation(_) | Error::InvalidShape(_) => {
                QskStatus::ParseError
            }
            Error::RankTooLarge { .. } => QskStatus::RankTooLarge,
            _ => QskStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, recording its error message and converting panics.
fn guard<F>(f: F) -> QskStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QskStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            QskStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(QskStatus::NullPointer, format!("{what} is null"))
}

unsafe fn utf8<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(QskStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn poly<'a>(p: *const QskPolynomial, what: &str) -> Result<&'a Polynomial, Failure> {
    p.as_ref().map(|p| &p.inner).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_poly(out: *mut *mut QskPolynomial, p: Polynomial) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(QskPolynomial { inner: p })));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(QskStatus::Internal, "NUL in output".into()))?;
    out.write(c.into_raw());
    Ok(())
}

fn rank(n: usize) -> Result<usize, Failure> {
    if n > QSK_MAX_RANK {
        return Err(Error::RankTooLarge {
            n,
            cap: QSK_MAX_RANK,
        }
        .into());
    }
    Ok(n)
}

/// Message of the last failure on this thread, or an empty string. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn qsk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses `text` (e.g. `"x1^2*x2 - 3*q1 + y2"`) into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_polynomial_parse(
    text: *const c_char,
    out: *mut *mut QskPolynomial,
) -> QskStatus {
    guard(|| {
        let p: Polynomial = utf8(text, "text")?.parse()?;
        put_poly(out, p)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qsk_polynomial_free(p: *mut QskPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text of `p`, to be released with [`qsk_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_polynomial_to_string(
    p: *const QskPolynomial,
    out: *mut *mut c_char,
) -> QskStatus {
    guard(|| put_string(out, poly(p, "p")?.to_string()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `a + b` as a new handle.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_polynomial_add(
    a: *const QskPolynomial,
    b: *const QskPolynomial,
    out: *mut *mut QskPolynomial,
) -> QskStatus {
    guard(|| put_poly(out, poly(a, "a")? + poly(b, "b")?))
}

/// `a * b` as a new handle.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_polynomial_mul(
    a: *const QskPolynomial,
    b: *const QskPolynomial,
    out: *mut *mut QskPolynomial,
) -> QskStatus {
    guard(|| put_poly(out, poly(a, "a")? * poly(b, "b")?))
}

/// Writes whether `a` and `b` are equal.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_polynomial_equal(
    a: *const QskPolynomial,
    b: *const QskPolynomial,
    out: *mut bool,
) -> QskStatus {
    guard(|| put(out, poly(a, "a")? == poly(b, "b")?))
}

unsafe fn permutation(w: *const c_char) -> Result<Permutation, Failure> {
    let w: Permutation = utf8(w, "w")?.parse()?;
    rank(w.support_rank())?;
    Ok(w)
}

/// The Schubert polynomial of `w` (one-line notation, e.g. `"13524"`).
///
/// # Safety
/// `w` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_schubert(w: *const c_char, out: *mut *mut QskPolynomial) -> QskStatus {
    guard(|| {
        let w = permutation(w)?;
        put_poly(out, (*schubert(&w)).clone())
    })
}

/// The quantum Schubert polynomial of `w` at ambient rank `n`.
///
/// # Safety
/// `w` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_quantum_schubert(
    w: *const c_char,
    n: usize,
    out: *mut *mut QskPolynomial,
) -> QskStatus {
    guard(|| {
        let w = permutation(w)?;
        put_poly(out, (*q_schubert(&w, rank(n)?)?).clone())
    })
}

/// The quantum double Schubert polynomial of `w` at ambient rank `n`.
///
/// # Safety
/// `w` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_quantum_double_schubert(
    w: *const c_char,
    n: usize,
    out: *mut *mut QskPolynomial,
) -> QskStatus {
    guard(|| {
        let w = permutation(w)?;
        put_poly(out, (*q_double_schubert(&w, rank(n)?)?).clone())
    })
}

/// The quantization of `f`, a polynomial in `x_1..x_n`, at rank `n`.
///
/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_quantize(
    f: *const QskPolynomial,
    n: usize,
    out: *mut *mut QskPolynomial,
) -> QskStatus {
    guard(|| {
        let f = poly(f, "f")?;
        put_poly(out, quantize(f, rank(n)?)?)
    })
}

/// Number of permutations of rank `n` in the class named `class`
/// (`dominant`, `grassmannian`, `vexillary`, `rv`, `avoiding321`, `smooth`).
///
/// # Safety
/// `class` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_enumerate_count(
    class: *const c_char,
    n: usize,
    out: *mut usize,
) -> QskStatus {
    guard(|| {
        let class: PermClass = utf8(class, "class")?.parse()?;
        let list = enumerate_class(n, class, qschubert::perm::DEFAULT_CLASS_CAP)?;
        put(out, list.len())
    })
}

/// Runs the suite group `suite` (or `all`) up to rank `n`, writing the JSON
/// reports to `json_out` and whether every asserted suite passed to
/// `passed`.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `json_out` and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn qsk_verify(
    suite: *const c_char,
    n: usize,
    json_out: *mut *mut c_char,
    passed: *mut bool,
) -> QskStatus {
    guard(|| {
        let suite = utf8(suite, "suite")?;
        if json_out.is_null() || passed.is_null() {
            return Err(null("out"));
        }
        let config = Config {
            n: rank(n)?,
            ..Config::default()
        };
        let reports = verify::run_suite(suite, &config)?;
        let json = serde_json::to_string(&reports)
            .map_err(|e| Failure(QskStatus::Internal, e.to_string()))?;
        put_string(json_out, json)?;
        put(passed, verify::all_passed(&reports))
    })
}
