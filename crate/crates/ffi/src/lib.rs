//! C ABI over `longeq-core`.
//!
//! Objects are opaque handles released with their `_free` function. Every
//! fallible call returns a [`LongeqStatus`]; the message for the last
//! failure on the calling thread is available from
//! [`longeq_last_error_message`]. Strings returned through `char **` are
//! owned by the caller and released with [`longeq_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, c_int, size_t};
use longeq_core::error::Error;
use longeq_core::frt::{build_lr, presentation_text, LongPresentation, Naming, PresentationDoc};
use longeq_core::io::{operator_json, parse_naming, parse_operator};
use longeq_core::tensor::{check_laws, long_componentwise_witness, make_phi, Law, TensorOp2};

/// Result codes; `LONGEQ_STATUS_OK` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LongeqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    NotALongSolution = 5,
    NotIdempotent = 6,
    Singular = 7,
    BufferTooSmall = 8,
    Internal = 70,
}

/// Equations understood by [`longeq_operator_check`], which takes them as
/// plain integers.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LongeqLaw {
    Long = 0,
    DEquation = 1,
    Qybe = 2,
    Hopf = 3,
    KzBracket = 4,
    Symmetric = 5,
}

/// An operator on `M ⊗ M` with exact rational coefficients.
pub struct LongeqOperator {
    inner: TensorOp2,
}

/// The Long bialgebra `L(R)` of an operator, as a finite presentation.
pub struct LongeqPresentation {
    inner: LongPresentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> LongeqStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => LongeqStatus::Parse,
        Error::NotALongSolution { .. } => LongeqStatus::NotALongSolution,
        Error::NotIdempotent { .. } => LongeqStatus::NotIdempotent,
        Error::SingularMatrix | Error::SingularOperator => LongeqStatus::Singular,
        Error::Internal(_) => LongeqStatus::Internal,
        _ => LongeqStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> LongeqStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> LongeqStatus) -> LongeqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("panic inside longeq");
            LongeqStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LongeqStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(LongeqStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        LongeqStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> LongeqStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            LongeqStatus::Ok
        }
        Err(_) => {
            set_error("output contains a NUL byte");
            LongeqStatus::Internal
        }
    }
}

fn boxed_op(r: TensorOp2) -> *mut LongeqOperator {
    Box::into_raw(Box::new(LongeqOperator { inner: r }))
}

macro_rules! check_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return LongeqStatus::NullPointer;
        }
    };
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn longeq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code; unknown codes get `"unknown status"`.
#[no_mangle]
pub extern "C" fn longeq_status_name(status: c_int) -> *const c_char {
    const OK: c_int = LongeqStatus::Ok as c_int;
    const NULL_POINTER: c_int = LongeqStatus::NullPointer as c_int;
    const INVALID_UTF8: c_int = LongeqStatus::InvalidUtf8 as c_int;
    const PARSE: c_int = LongeqStatus::Parse as c_int;
    const INVALID_ARGUMENT: c_int = LongeqStatus::InvalidArgument as c_int;
    const NOT_LONG: c_int = LongeqStatus::NotALongSolution as c_int;
    const NOT_IDEMPOTENT: c_int = LongeqStatus::NotIdempotent as c_int;
    const SINGULAR: c_int = LongeqStatus::Singular as c_int;
    const BUFFER_TOO_SMALL: c_int = LongeqStatus::BufferTooSmall as c_int;
    const INTERNAL: c_int = LongeqStatus::Internal as c_int;
    let s: &'static [u8] = match status {
        OK => b"ok\0",
        NULL_POINTER => b"null pointer\0",
        INVALID_UTF8 => b"invalid utf-8\0",
        PARSE => b"parse error\0",
        INVALID_ARGUMENT => b"invalid argument\0",
        NOT_LONG => b"not a Long solution\0",
        NOT_IDEMPOTENT => b"map is not idempotent\0",
        SINGULAR => b"singular\0",
        BUFFER_TOO_SMALL => b"buffer too small\0",
        INTERNAL => b"internal error\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn longeq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses operator JSON (`{"dim": n, "entries": [...]}`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_from_json(json: *const c_char, out: *mut *mut LongeqOperator) -> LongeqStatus {
    guard(|| {
        check_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_operator(text) {
            Ok(r) => {
                *out = boxed_op(r);
                LongeqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// The identity on `k^n ⊗ k^n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_identity(n: size_t, out: *mut *mut LongeqOperator) -> LongeqStatus {
    guard(|| {
        check_null!(out);
        if n == 0 {
            set_error("dimension must be positive");
            return LongeqStatus::InvalidArgument;
        }
        *out = boxed_op(TensorOp2::identity(n));
        LongeqStatus::Ok
    })
}

/// `R^φ` for an idempotent `φ` given as `n` 1-based values.
///
/// # Safety
/// `map` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_phi(map: *const size_t, n: size_t, out: *mut *mut LongeqOperator) -> LongeqStatus {
    guard(|| {
        check_null!(map, out);
        let values = std::slice::from_raw_parts(map, n);
        if n == 0 || values.iter().any(|&k| k == 0 || k > n) {
            set_error(format!("map needs {n} values in 1..={n}"));
            return LongeqStatus::InvalidArgument;
        }
        let phi: Vec<usize> = values.iter().map(|k| k - 1).collect();
        match make_phi(&phi) {
            Ok(r) => {
                *out = boxed_op(r);
                LongeqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `op` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_dim(op: *const LongeqOperator, out: *mut size_t) -> LongeqStatus {
    guard(|| {
        check_null!(op, out);
        *out = (*op).inner.dim();
        LongeqStatus::Ok
    })
}

/// Sets `x_{uv}^{ji} = num/den` (1-based), the coefficient of `m_i ⊗ m_j` in `R(m_v ⊗ m_u)`.
///
/// # Safety
/// `op` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_set(
    op: *mut LongeqOperator,
    v: size_t,
    u: size_t,
    i: size_t,
    j: size_t,
    num: i64,
    den: i64,
) -> LongeqStatus {
    guard(|| {
        check_null!(op);
        let r = &mut (*op).inner;
        let n = r.dim();
        if [v, u, i, j].iter().any(|&k| k == 0 || k > n) || den == 0 {
            set_error("index outside 1..=n or zero denominator");
            return LongeqStatus::InvalidArgument;
        }
        r.set(u - 1, v - 1, j - 1, i - 1, longeq_core::scalar::frac(num, den));
        LongeqStatus::Ok
    })
}

/// Writes `x_{uv}^{ji}` as a fraction string into a caller-supplied buffer.
///
/// # Safety
/// `op` must be a live handle; `buf` must have room for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_get(
    op: *const LongeqOperator,
    v: size_t,
    u: size_t,
    i: size_t,
    j: size_t,
    buf: *mut c_char,
    len: size_t,
) -> LongeqStatus {
    guard(|| {
        check_null!(op, buf);
        let r = &(*op).inner;
        let n = r.dim();
        if [v, u, i, j].iter().any(|&k| k == 0 || k > n) {
            set_error("index outside 1..=n");
            return LongeqStatus::InvalidArgument;
        }
        let text = longeq_core::scalar::format(r.x(u - 1, v - 1, j - 1, i - 1));
        let bytes = text.as_bytes();
        if bytes.len() + 1 > len {
            set_error(format!("need {} bytes", bytes.len() + 1));
            return LongeqStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, bytes.len());
        *buf.add(bytes.len()) = 0;
        LongeqStatus::Ok
    })
}

/// # Safety
/// `op` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_to_json(op: *const LongeqOperator, out: *mut *mut c_char) -> LongeqStatus {
    guard(|| {
        check_null!(op, out);
        write_string(out, operator_json(&(*op).inner))
    })
}

/// Exact check of one equation.
///
/// # Safety
/// `op` must be a live handle; `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_check(op: *const LongeqOperator, law: c_int, holds: *mut bool) -> LongeqStatus {
    guard(|| {
        check_null!(op, holds);
        let Some(law) = usize::try_from(law).ok().and_then(|k| Law::ALL.get(k).copied()) else {
            set_error(format!("unknown law {law}"));
            return LongeqStatus::InvalidArgument;
        };
        *holds = check_laws(&(*op).inner, &[law]).get(law) == Some(true);
        LongeqStatus::Ok
    })
}

/// First violated coefficient identity of the Long equation. On a failure
/// `*found` is true, `*equation` is 1 or 2 and `tuple` receives the 1-based
/// `(i, j, k, l, p, q)`.
///
/// # Safety
/// `op` must be a live handle; `tuple` must have room for 6 values.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_long_witness(
    op: *const LongeqOperator,
    found: *mut bool,
    equation: *mut u8,
    tuple: *mut size_t,
) -> LongeqStatus {
    guard(|| {
        check_null!(op, found, equation, tuple);
        match long_componentwise_witness(&(*op).inner) {
            None => *found = false,
            Some(w) => {
                *found = true;
                *equation = w.equation;
                ptr::copy_nonoverlapping(w.tuple.as_ptr(), tuple, 6);
            }
        }
        LongeqStatus::Ok
    })
}

/// # Safety
/// `op` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn longeq_operator_free(op: *mut LongeqOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Builds `L(R)`. `naming_json` may be NULL for canonical `c_i_j` names,
/// or a JSON object mapping comatrix labels to generator names.
///
/// # Safety
/// `op` must be a live handle; `naming_json` NULL or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_presentation_build(
    op: *const LongeqOperator,
    naming_json: *const c_char,
    out: *mut *mut LongeqPresentation,
) -> LongeqStatus {
    guard(|| {
        check_null!(op, out);
        let r = &(*op).inner;
        let naming: Option<Naming> = if naming_json.is_null() {
            None
        } else {
            let text = match read_str(naming_json) {
                Ok(t) => t,
                Err(s) => return s,
            };
            match parse_naming(r.dim(), text) {
                Ok(n) => Some(n),
                Err(e) => return fail(e),
            }
        };
        match build_lr(r, naming.as_ref()) {
            Ok(lr) => {
                *out = Box::into_raw(Box::new(LongeqPresentation { inner: lr }));
                LongeqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_presentation_num_generators(p: *const LongeqPresentation, out: *mut size_t) -> LongeqStatus {
    guard(|| {
        check_null!(p, out);
        *out = (*p).inner.num_generators();
        LongeqStatus::Ok
    })
}

/// Text form, one declaration per line.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_presentation_text(p: *const LongeqPresentation, out: *mut *mut c_char) -> LongeqStatus {
    guard(|| {
        check_null!(p, out);
        write_string(out, presentation_text(&(*p).inner))
    })
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_presentation_to_json(p: *const LongeqPresentation, out: *mut *mut c_char) -> LongeqStatus {
    guard(|| {
        check_null!(p, out);
        let doc = PresentationDoc::from_presentation(&(*p).inner);
        match serde_json::to_string_pretty(&doc) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(e.into()),
        }
    })
}

/// The operator `R_σ` reconstructed from the presentation.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn longeq_presentation_round_trip(
    p: *const LongeqPresentation,
    out: *mut *mut LongeqOperator,
) -> LongeqStatus {
    guard(|| {
        check_null!(p, out);
        *out = boxed_op((*p).inner.round_trip());
        LongeqStatus::Ok
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn longeq_presentation_free(p: *mut LongeqPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}
