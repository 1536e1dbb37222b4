//! C interface to `spectre-core`.
//!
//! Numbers cross the boundary as NUL-terminated decimal strings. Objects are
//! opaque handles released with their `_free` function; strings returned to
//! the caller are released with [`spectre_string_free`]. Every fallible call
//! returns a [`SpectreStatus`] and leaves a message for
//! [`spectre_last_error`] on failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;
use std::str::FromStr;

use spectre_core::recognize::{RecognizeConfig, Recognizer};
use spectre_core::spectra::minimal_spectrum;
use spectre_core::{Error, PosInt, RecognitionOutcome};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectreStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    TooMany = 3,
    Data = 4,
    Internal = 5,
}

/// Loaded tables and generators.
pub struct SpectreRecognizer {
    inner: Recognizer,
}

/// Result of one recognition run.
pub struct SpectreOutcome {
    inner: RecognitionOutcome,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: SpectreStatus, msg: impl Into<String>) -> SpectreStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> SpectreStatus {
    match e {
        Error::Input { .. } | Error::Precondition(_) => SpectreStatus::InvalidInput,
        Error::TooMany { .. } => SpectreStatus::TooMany,
        Error::Data { .. } | Error::Io(_) | Error::Json(_) => SpectreStatus::Data,
        _ => SpectreStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> SpectreStatus) -> SpectreStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SpectreStatus::Internal, "panic inside spectre"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Reads `len` decimal strings.
///
/// # Safety
/// `values` must point to `len` valid NUL-terminated strings.
unsafe fn read_values(values: *const *const c_char, len: usize) -> Result<Vec<PosInt>, SpectreStatus> {
    if values.is_null() {
        return Err(fail(SpectreStatus::NullPointer, "values is null"));
    }
    if len == 0 {
        return Err(fail(SpectreStatus::InvalidInput, "no values given"));
    }
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let p = *values.add(i);
        if p.is_null() {
            return Err(fail(SpectreStatus::NullPointer, format!("value {i} is null")));
        }
        let s = CStr::from_ptr(p).to_string_lossy();
        match PosInt::from_str(s.trim()) {
            Ok(v) if v != PosInt::from(0u32) => out.push(v),
            _ => {
                return Err(fail(
                    SpectreStatus::InvalidInput,
                    format!("value {i} ({s:?}) is not a positive integer"),
                ))
            }
        }
    }
    Ok(out)
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn spectre_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Creates a recognizer. `data_dir` may be null for the built-in tables.
///
/// # Safety
/// `data_dir` is null or a valid NUL-terminated string; `out` is a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn spectre_recognizer_new(
    data_dir: *const c_char,
    out: *mut *mut SpectreRecognizer,
) -> SpectreStatus {
    guard(|| {
        if out.is_null() {
            return fail(SpectreStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let mut config = RecognizeConfig::default();
        if !data_dir.is_null() {
            config.data_dir = Some(PathBuf::from(CStr::from_ptr(data_dir).to_string_lossy().into_owned()));
        }
        match Recognizer::from_config(config) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(SpectreRecognizer { inner: r }));
                SpectreStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `rec` is null or was returned by [`spectre_recognizer_new`] and not freed.
#[no_mangle]
pub unsafe extern "C" fn spectre_recognizer_free(rec: *mut SpectreRecognizer) {
    if !rec.is_null() {
        drop(Box::from_raw(rec));
    }
}

/// Runs recognition on `len` decimal strings.
///
/// # Safety
/// `rec` is a live recognizer, `values` points to `len` valid strings and
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spectre_recognize(
    rec: *const SpectreRecognizer,
    values: *const *const c_char,
    len: usize,
    out: *mut *mut SpectreOutcome,
) -> SpectreStatus {
    guard(|| {
        if rec.is_null() || out.is_null() {
            return fail(SpectreStatus::NullPointer, "recognizer or out is null");
        }
        *out = ptr::null_mut();
        let m = match read_values(values, len) {
            Ok(m) => m,
            Err(s) => return s,
        };
        match (*rec).inner.recognize(&m) {
            Ok(o) => {
                *out = Box::into_raw(Box::new(SpectreOutcome { inner: o }));
                SpectreStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `outcome` is null or was returned by [`spectre_recognize`] and not freed.
#[no_mangle]
pub unsafe extern "C" fn spectre_outcome_free(outcome: *mut SpectreOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// True when no group was recognized (or `outcome` is null).
///
/// # Safety
/// `outcome` is null or a live outcome.
#[no_mangle]
pub unsafe extern "C" fn spectre_outcome_is_empty(outcome: *const SpectreOutcome) -> bool {
    outcome.is_null() || (*outcome).inner.result.is_none()
}

/// Name of the recognized group, such as `S24(3)`, or null for an empty
/// verdict. Free with [`spectre_string_free`].
///
/// # Safety
/// `outcome` is null or a live outcome.
#[no_mangle]
pub unsafe extern "C" fn spectre_outcome_name(outcome: *const SpectreOutcome) -> *mut c_char {
    if outcome.is_null() {
        return ptr::null_mut();
    }
    (*outcome)
        .inner
        .result
        .as_ref()
        .map_or(ptr::null_mut(), |g| to_c_string(g.to_string()))
}

/// Name of the isospectral twin, or null.
///
/// # Safety
/// `outcome` is null or a live outcome.
#[no_mangle]
pub unsafe extern "C" fn spectre_outcome_twin(outcome: *const SpectreOutcome) -> *mut c_char {
    if outcome.is_null() {
        return ptr::null_mut();
    }
    (*outcome)
        .inner
        .twin
        .as_ref()
        .map_or(ptr::null_mut(), |g| to_c_string(g.to_string()))
}

/// The whole outcome, trail included, as JSON. Free with
/// [`spectre_string_free`].
///
/// # Safety
/// `outcome` is null or a live outcome.
#[no_mangle]
pub unsafe extern "C" fn spectre_outcome_json(outcome: *const SpectreOutcome) -> *mut c_char {
    if outcome.is_null() {
        return ptr::null_mut();
    }
    serde_json::to_string(&(*outcome).inner).map_or(ptr::null_mut(), to_c_string)
}

/// Divisibility-maximal elements of the input as a JSON array of decimal
/// strings.
///
/// # Safety
/// `values` points to `len` valid strings and `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spectre_minimal_spectrum(
    values: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> SpectreStatus {
    guard(|| {
        if out.is_null() {
            return fail(SpectreStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let m = match read_values(values, len) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let mu = minimal_spectrum(&m);
        match serde_json::to_string(&mu) {
            Ok(s) => {
                *out = to_c_string(s);
                SpectreStatus::Ok
            }
            Err(e) => fail(SpectreStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spectre_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
