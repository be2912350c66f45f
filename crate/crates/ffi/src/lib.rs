//! C ABI over `quantum-galois`.
//!
//! Algebras and elements are opaque handles created by `qg_*_parse` and
//! released with the matching `qg_*_free`. Every fallible call returns a
//! `QgStatus`; on failure `qg_last_error` describes the problem on the
//! calling thread. Strings handed out by the library are released with
//! `qg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quantum_galois::algebra::{Algebra, AnyElement};
use quantum_galois::claims::Manifest;
use quantum_galois::groups::Limits;
use quantum_galois::hnf::generates_group;
use quantum_galois::{Element, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Mismatch = 4,
    DivisionByZero = 5,
    LimitExceeded = 6,
    UnknownName = 7,
    Invalid = 8,
    Panic = 9,
}

/// A parsed algebra.
pub struct QgAlgebra(Algebra);

/// An element of some algebra.
pub struct QgElement(AnyElement);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(QgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::Manifest(_) => QgStatus::Parse,
            Error::KindMismatch(_) | Error::ActionMismatch | Error::DataMismatch => QgStatus::Mismatch,
            Error::DivisionByZero | Error::ForbiddenSpecialization(_) | Error::NotAMonomial => {
                QgStatus::DivisionByZero
            }
            Error::GroupTooLarge { .. } | Error::LimitExceeded(_) => QgStatus::LimitExceeded,
            Error::UnknownInstance(_) | Error::UnknownClaim(_) | Error::MissingImage(_) => QgStatus::UnknownName,
            Error::InvalidAction(_)
            | Error::InvalidData(_)
            | Error::InvalidGroup(_)
            | Error::UndefinedAction(_)
            | Error::CertificateFailed(_)
            | Error::Io(_) => QgStatus::Invalid,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal error".into());
            set_error(msg);
            QgStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(QgStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(QgStatus::InvalidUtf8, "string argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(QgStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(QgStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(QgStatus::Invalid, "output contains a nul byte".into()))?;
    put(out, c.into_raw())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an algebra spec such as `weyl:2`, `skew-torus:1` or `gwa:usl2`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qg_algebra_parse(spec: *const c_char, out: *mut *mut QgAlgebra) -> QgStatus {
    guard(|| {
        let alg = Algebra::parse(str_arg(spec)?)?;
        put(out, Box::into_raw(Box::new(QgAlgebra(alg))))
    })
}

/// # Safety
/// `alg` must come from `qg_algebra_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qg_algebra_free(alg: *mut QgAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Parses an expression in the given algebra and returns its normal form.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_element_parse(
    alg: *const QgAlgebra,
    text: *const c_char,
    out: *mut *mut QgElement,
) -> QgStatus {
    guard(|| {
        let u = handle(alg)?.0.parse_element(str_arg(text)?)?;
        put(out, Box::into_raw(Box::new(QgElement(u))))
    })
}

/// # Safety
/// `u` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qg_element_free(u: *mut QgElement) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

unsafe fn binary(
    a: *const QgElement,
    b: *const QgElement,
    out: *mut *mut QgElement,
    op: fn(&AnyElement, &AnyElement) -> quantum_galois::Result<AnyElement>,
) -> QgStatus {
    guard(|| {
        let c = op(&handle(a)?.0, &handle(b)?.0)?;
        put(out, Box::into_raw(Box::new(QgElement(c))))
    })
}

/// `out = a * b`. Both factors must live in the same algebra.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_element_mul(a: *const QgElement, b: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    binary(a, b, out, AnyElement::try_mul)
}

/// `out = a + b`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_element_add(a: *const QgElement, b: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    binary(a, b, out, AnyElement::try_add)
}

/// Writes whether `a` and `b` are the same element.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_element_equal(a: *const QgElement, b: *const QgElement, out: *mut bool) -> QgStatus {
    guard(|| put(out, handle(a)?.0 == handle(b)?.0))
}

/// Normal form as text; release with `qg_string_free`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_element_to_string(u: *const QgElement, out: *mut *mut c_char) -> QgStatus {
    guard(|| put_string(out, handle(u)?.0.to_string()))
}

/// Structured JSON form; release with `qg_string_free`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_element_to_json(u: *const QgElement, out: *mut *mut c_char) -> QgStatus {
    guard(|| {
        let json = serde_json::to_string(&handle(u)?.0.to_json()).map_err(|e| Failure(QgStatus::Invalid, e.to_string()))?;
        put_string(out, json)
    })
}

/// Parses `expr` in the algebra `spec` and writes its normal form.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_compute(spec: *const c_char, expr: *const c_char, out: *mut *mut c_char) -> QgStatus {
    guard(|| {
        let u = Algebra::parse(str_arg(spec)?)?.parse_element(str_arg(expr)?)?;
        put_string(out, u.to_string())
    })
}

/// Replays a built-in claim, or every claim when `id` is `all`, with default
/// limits. Writes the JSON report and whether every verdict matched its
/// expectation.
///
/// # Safety
/// Pointers must be valid; `report` and `as_expected` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_verify_claim(
    id: *const c_char,
    report: *mut *mut c_char,
    as_expected: *mut bool,
) -> QgStatus {
    guard(|| {
        let id = str_arg(id)?;
        let manifest = Manifest::builtin();
        let limits = Limits::default();
        let (json, ok) = if id == "all" {
            let r = manifest.verify_all(&limits);
            (serde_json::to_string(&r), r.all_ok)
        } else {
            let r = manifest.verify(id, &limits)?;
            (serde_json::to_string(&r), r.ok)
        };
        let json = json.map_err(|e| Failure(QgStatus::Invalid, e.to_string()))?;
        put(as_expected, ok)?;
        put_string(report, json)
    })
}

/// Whether `count` integer vectors of length `n`, stored row after row in
/// `vectors`, generate `Z^n` as a group.
///
/// # Safety
/// `vectors` must point to `count * n` readable values; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qg_generates_group(
    vectors: *const i64,
    count: usize,
    n: usize,
    out: *mut bool,
) -> QgStatus {
    guard(|| {
        let flat: &[i64] = match count.checked_mul(n) {
            Some(0) => &[],
            Some(len) if !vectors.is_null() => std::slice::from_raw_parts(vectors, len),
            Some(_) => return Err(Failure(QgStatus::NullPointer, "null vector array".into())),
            None => return Err(Failure(QgStatus::LimitExceeded, "vector array too large".into())),
        };
        let rows: Vec<Vec<i64>> = flat.chunks(n.max(1)).map(<[i64]>::to_vec).collect();
        let (generates, _) = generates_group(&rows, n)?;
        put(out, generates)
    })
}
