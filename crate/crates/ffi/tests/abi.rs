use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use spectre_ffi::*;

fn cstrings(xs: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
    let owned: Vec<CString> = xs.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs = owned.iter().map(|s| s.as_ptr()).collect();
    (owned, ptrs)
}

unsafe fn take(s: *mut c_char) -> Option<String> {
    if s.is_null() {
        return None;
    }
    let v = CStr::from_ptr(s).to_string_lossy().into_owned();
    spectre_string_free(s);
    Some(v)
}

fn recognizer() -> *mut SpectreRecognizer {
    let mut rec = ptr::null_mut();
    let st = unsafe { spectre_recognizer_new(ptr::null(), &mut rec) };
    assert_eq!(st, SpectreStatus::Ok);
    assert!(!rec.is_null());
    rec
}

#[test]
fn recognizes_psl2_7() {
    let rec = recognizer();
    let (_keep, ptrs) = cstrings(&["3", "4", "7"]);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(spectre_recognize(rec, ptrs.as_ptr(), ptrs.len(), &mut out), SpectreStatus::Ok);
        assert!(!spectre_outcome_is_empty(out));
        assert_eq!(take(spectre_outcome_name(out)).as_deref(), Some("L2(7)"));
        assert_eq!(take(spectre_outcome_twin(out)), None);
        let json = take(spectre_outcome_json(out)).unwrap();
        assert!(json.contains("\"q\":\"7\""), "{json}");
        spectre_outcome_free(out);
        spectre_recognizer_free(rec);
    }
}

#[test]
fn empty_verdict_and_twin() {
    let rec = recognizer();
    unsafe {
        let (_k, ptrs) = cstrings(&["2"]);
        let mut out = ptr::null_mut();
        assert_eq!(spectre_recognize(rec, ptrs.as_ptr(), 1, &mut out), SpectreStatus::Ok);
        assert!(spectre_outcome_is_empty(out));
        assert_eq!(take(spectre_outcome_name(out)), None);
        spectre_outcome_free(out);

        let (_k, ptrs) = cstrings(&["7", "8", "9", "10", "12", "15"]);
        let mut out = ptr::null_mut();
        assert_eq!(spectre_recognize(rec, ptrs.as_ptr(), ptrs.len(), &mut out), SpectreStatus::Ok);
        assert_eq!(take(spectre_outcome_name(out)).as_deref(), Some("S6(2)"));
        assert_eq!(take(spectre_outcome_twin(out)).as_deref(), Some("O+8(2)"));
        spectre_outcome_free(out);
        spectre_recognizer_free(rec);
    }
}

#[test]
fn error_codes() {
    let rec = recognizer();
    unsafe {
        let (_k, ptrs) = cstrings(&["12", "x1"]);
        let mut out = ptr::null_mut();
        let st = spectre_recognize(rec, ptrs.as_ptr(), ptrs.len(), &mut out);
        assert_eq!(st, SpectreStatus::InvalidInput);
        assert!(out.is_null());
        let msg = CStr::from_ptr(spectre_last_error()).to_string_lossy();
        assert!(msg.contains("value 1"), "{msg}");

        assert_eq!(spectre_recognize(rec, ptr::null(), 3, &mut out), SpectreStatus::NullPointer);
        assert_eq!(spectre_recognize(ptr::null(), ptrs.as_ptr(), 1, &mut out), SpectreStatus::NullPointer);
        assert_eq!(spectre_recognize(rec, ptrs.as_ptr(), 0, &mut out), SpectreStatus::InvalidInput);

        let dir = CString::new("/nonexistent/dir/for/spectre").unwrap();
        let mut r2 = ptr::null_mut();
        // a missing directory leaves the built-in tables in place
        assert_eq!(spectre_recognizer_new(dir.as_ptr(), &mut r2), SpectreStatus::Ok);
        spectre_recognizer_free(r2);

        spectre_recognizer_free(rec);
        spectre_recognizer_free(ptr::null_mut());
        spectre_outcome_free(ptr::null_mut());
        spectre_string_free(ptr::null_mut());
    }
}

#[test]
fn bad_data_dir_is_a_data_error() {
    let dir = std::env::temp_dir().join(format!("spectre-ffi-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("m1_table.json"), "{ not json").unwrap();
    let c = CString::new(dir.to_str().unwrap()).unwrap();
    let mut rec = ptr::null_mut();
    let st = unsafe { spectre_recognizer_new(c.as_ptr(), &mut rec) };
    assert_eq!(st, SpectreStatus::Data);
    assert!(rec.is_null());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn minimal_spectrum_json() {
    let (_k, ptrs) = cstrings(&["4", "2", "6"]);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(spectre_minimal_spectrum(ptrs.as_ptr(), 3, &mut out), SpectreStatus::Ok);
        assert_eq!(take(out).as_deref(), Some(r#"["4","6"]"#));
    }
}
