//! Exercises the C entry points from Rust: handle lifecycle, out-parameter
//! conventions, status codes, and NULL handling.

use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use chowlab_ffi::*;

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    chowlab_string_free(ptr);
    s
}

fn family(spec: &str) -> *mut ChowlabPoset {
    let spec = CString::new(spec).unwrap();
    let mut handle = ptr::null_mut();
    let code = unsafe { chowlab_poset_from_family(spec.as_ptr(), &mut handle) };
    assert_eq!(code, ChowlabStatus::Ok as c_int);
    assert!(!handle.is_null());
    handle
}

#[test]
fn chow_of_boolean_cube() {
    let handle = family("boolean(3)");
    unsafe {
        assert_eq!(chowlab_poset_len(handle), 8);
        assert_eq!(chowlab_poset_rank(handle), 3);
        assert_eq!(chowlab_poset_is_ranked(handle), 1);

        let mut out = ptr::null_mut();
        assert_eq!(chowlab_chow_csv(handle, &mut out), ChowlabStatus::Ok as c_int);
        assert_eq!(take_string(out), "1,4,1");

        let mut roots = 0u64;
        assert_eq!(
            chowlab_chow_real_roots(handle, &mut roots),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(roots, 2);

        let mut pure = -1;
        let mut degree = u64::MAX;
        assert_eq!(
            chowlab_sfy_is_pure(handle, &mut pure, &mut degree),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!((pure, degree), (1, 1));

        chowlab_poset_free(handle);
    }
}

#[test]
fn nonpure_family_detected() {
    let handle = family("nonpure(m=5)");
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(chowlab_sfy_h_csv(handle, &mut out), ChowlabStatus::Ok as c_int);
        assert_eq!(take_string(out), "1,8,2");

        let mut ideal = -1;
        assert_eq!(
            chowlab_sfy_is_order_ideal(handle, &mut ideal),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(ideal, 1);

        let mut pure = -1;
        let mut degree = 0u64;
        assert_eq!(
            chowlab_sfy_is_pure(handle, &mut pure, &mut degree),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(pure, 0);

        let mut monos = ptr::null_mut();
        assert_eq!(
            chowlab_sfy_monomials(handle, &mut monos),
            ChowlabStatus::Ok as c_int
        );
        let listing = take_string(monos);
        assert!(listing.contains("x[b2]^1 * x[b4]^1"));

        chowlab_poset_free(handle);
    }
}

#[test]
fn json_roundtrip_through_ffi() {
    let handle = family("chain(3)");
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            chowlab_poset_to_json(handle, &mut out),
            ChowlabStatus::Ok as c_int
        );
        let json = take_string(out);
        chowlab_poset_free(handle);

        let cjson = CString::new(json.clone()).unwrap();
        let mut reparsed = ptr::null_mut();
        assert_eq!(
            chowlab_poset_from_json(cjson.as_ptr(), &mut reparsed),
            ChowlabStatus::Ok as c_int
        );
        let mut again = ptr::null_mut();
        assert_eq!(
            chowlab_poset_to_json(reparsed, &mut again),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(take_string(again), json);

        let mut dot = ptr::null_mut();
        assert_eq!(
            chowlab_poset_to_dot(reparsed, &mut dot),
            ChowlabStatus::Ok as c_int
        );
        assert!(take_string(dot).contains("rankdir=BT"));
        chowlab_poset_free(reparsed);
    }
}

#[test]
fn sequence_predicates() {
    unsafe {
        let csv = CString::new("1,4,1").unwrap();
        let mut out = -1;
        assert_eq!(
            chowlab_seq_is_si(csv.as_ptr(), &mut out),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(out, 1);

        let csv = CString::new("1,1,2,1,1").unwrap();
        assert_eq!(
            chowlab_seq_is_log_concave(csv.as_ptr(), &mut out),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(out, 0);

        let csv = CString::new("1,2,4").unwrap();
        assert_eq!(
            chowlab_seq_is_o_sequence(csv.as_ptr(), &mut out),
            ChowlabStatus::Ok as c_int
        );
        assert_eq!(out, 0);

        let junk = CString::new("1,two,3").unwrap();
        assert_eq!(
            chowlab_seq_is_si(junk.as_ptr(), &mut out),
            ChowlabStatus::InvalidSequence as c_int
        );
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut handle = ptr::null_mut();
        assert_eq!(
            chowlab_poset_from_family(ptr::null(), &mut handle),
            ChowlabStatus::NullArgument as c_int
        );
        let bad = CString::new("nosuchfamily(1)").unwrap();
        assert_eq!(
            chowlab_poset_from_family(bad.as_ptr(), &mut handle),
            ChowlabStatus::ParseError as c_int
        );
        let cjson = CString::new("{ not json").unwrap();
        assert_eq!(
            chowlab_poset_from_json(cjson.as_ptr(), &mut handle),
            ChowlabStatus::ParseError as c_int
        );
        // cycle: rejected at parse level
        let cycle = CString::new(
            r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]],"rank":{"a":0,"b":1}}"#,
        )
        .unwrap();
        assert_eq!(
            chowlab_poset_from_json(cycle.as_ptr(), &mut handle),
            ChowlabStatus::ParseError as c_int
        );
        // bad rank: structurally fine, invalid weak rank
        let bad_rank = CString::new(
            r#"{"elements":["a","b"],"covers":[["a","b"]],"rank":{"a":0,"b":0}}"#,
        )
        .unwrap();
        assert_eq!(
            chowlab_poset_from_json(bad_rank.as_ptr(), &mut handle),
            ChowlabStatus::InvalidRank as c_int
        );

        assert_eq!(chowlab_poset_len(ptr::null()), 0);
        chowlab_poset_free(ptr::null_mut());
        chowlab_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_generated() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/chowlab.h");
    let text = std::fs::read_to_string(header).expect("header generated at build time");
    for symbol in [
        "chowlab_poset_from_json",
        "chowlab_poset_from_family",
        "chowlab_chow_csv",
        "chowlab_sfy_is_pure",
        "chowlab_string_free",
        "typedef struct ChowlabPoset ChowlabPoset",
    ] {
        assert!(text.contains(symbol), "header missing `{symbol}`");
    }
}
