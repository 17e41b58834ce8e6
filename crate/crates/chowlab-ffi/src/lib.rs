//! C ABI for the chowlab engine.
//!
//! Posets travel across the boundary as opaque handles created from a JSON
//! poset file or a family spec. Every function returns a status code;
//! results come back through out-parameters. Strings returned through
//! `char**` are owned by the caller and must be released with
//! [`chowlab_string_free`]. The matching header is generated into
//! `include/chowlab.h` at build time.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chowlab::chow::chow_chain_sum;
use chowlab::family::FamilySpec;
use chowlab::io::{parse_poset_json, to_canonical_json, to_dot};
use chowlab::monomial::{is_monomial_order_ideal, is_pure_ideal};
use chowlab::poset::{Poset, WeakRank};
use chowlab::roots::count_real_roots;
use chowlab::scd::sfy_generate;
use chowlab::seq::{is_log_concave, is_o_sequence, is_si_sequence};
use num::bigint::BigInt;

/// Status codes returned by every entry point.
#[repr(C)]
pub enum ChowlabStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidRank = 4,
    InvalidSequence = 5,
    Internal = 6,
}

/// Opaque poset handle: a validated poset with its weak rank.
pub struct ChowlabPoset {
    poset: Poset,
    rank: WeakRank,
}

fn make_handle(poset: Poset, rank: WeakRank, out: *mut *mut ChowlabPoset) -> c_int {
    if !rank.validate(&poset).is_valid() {
        return ChowlabStatus::InvalidRank as c_int;
    }
    let handle = Box::new(ChowlabPoset { poset, rank });
    unsafe { *out = Box::into_raw(handle) };
    ChowlabStatus::Ok as c_int
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, c_int> {
    if ptr.is_null() {
        return Err(ChowlabStatus::NullArgument as c_int);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| ChowlabStatus::InvalidUtf8 as c_int)
}

fn return_string(s: String, out: *mut *mut c_char) -> c_int {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ChowlabStatus::Ok as c_int
        }
        Err(_) => ChowlabStatus::Internal as c_int,
    }
}

fn guarded<F: FnOnce() -> c_int>(f: F) -> c_int {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(_) => ChowlabStatus::Internal as c_int,
    }
}

/// Parses a poset file (JSON with `elements`, `covers`, `rank`).
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_from_json(
    json: *const c_char,
    out: *mut *mut ChowlabPoset,
) -> c_int {
    if out.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(code) => return code,
    };
    guarded(|| match parse_poset_json(text) {
        Ok((poset, rank)) => make_handle(poset, rank, out),
        Err(_) => ChowlabStatus::ParseError as c_int,
    })
}

/// Builds a named family, e.g. `chain(3)`, `boolean(4)`, `product(2,2)`,
/// `nonpure(m=5)`, `nonlogconcave(7,9)`, `random(seed,max_rank,max_width)`.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_from_family(
    spec: *const c_char,
    out: *mut *mut ChowlabPoset,
) -> c_int {
    if out.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    let text = match read_str(spec) {
        Ok(t) => t,
        Err(code) => return code,
    };
    guarded(|| {
        let parsed: Result<FamilySpec, _> = text.parse();
        match parsed.and_then(|s| s.generate()) {
            Ok((poset, rank)) => make_handle(poset, rank, out),
            Err(_) => ChowlabStatus::ParseError as c_int,
        }
    })
}

/// Releases a handle. NULL is a no-op.
///
/// # Safety
/// `handle` must come from a `chowlab_poset_*` constructor and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_free(handle: *mut ChowlabPoset) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of elements.
///
/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_len(handle: *const ChowlabPoset) -> usize {
    handle.as_ref().map_or(0, |h| h.poset.len())
}

/// Weak rank of the poset (rank of the top element).
///
/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_rank(handle: *const ChowlabPoset) -> u64 {
    handle.as_ref().map_or(0, |h| h.rank.poset_rank(&h.poset))
}

/// 1 if every cover has rank gap exactly one, else 0.
///
/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_is_ranked(handle: *const ChowlabPoset) -> c_int {
    handle
        .as_ref()
        .map_or(0, |h| h.rank.is_ranked(&h.poset) as c_int)
}

unsafe fn string_getter(
    handle: *const ChowlabPoset,
    out: *mut *mut c_char,
    body: impl FnOnce(&ChowlabPoset) -> String,
) -> c_int {
    let Some(h) = handle.as_ref() else {
        return ChowlabStatus::NullArgument as c_int;
    };
    if out.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    guarded(|| return_string(body(h), out))
}

/// Chow polynomial coefficients as a CSV row `h_0,h_1,...`, caller-owned.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer; release the
/// result with `chowlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn chowlab_chow_csv(
    handle: *const ChowlabPoset,
    out: *mut *mut c_char,
) -> c_int {
    string_getter(handle, out, |h| chow_chain_sum(&h.poset, &h.rank).to_csv())
}

/// h-vector of the SFY monomial order ideal as a CSV row, caller-owned.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer; release the
/// result with `chowlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn chowlab_sfy_h_csv(
    handle: *const ChowlabPoset,
    out: *mut *mut c_char,
) -> c_int {
    string_getter(handle, out, |h| {
        sfy_generate(&h.poset, &h.rank)
            .h_vector()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    })
}

/// SFY monomials, one `x[p]^l * ...` line per monomial, caller-owned.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer; release the
/// result with `chowlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn chowlab_sfy_monomials(
    handle: *const ChowlabPoset,
    out: *mut *mut c_char,
) -> c_int {
    string_getter(handle, out, |h| sfy_generate(&h.poset, &h.rank).render(&h.poset))
}

/// DOT rendering of the Hasse diagram, caller-owned.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer; release the
/// result with `chowlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_to_dot(
    handle: *const ChowlabPoset,
    out: *mut *mut c_char,
) -> c_int {
    string_getter(handle, out, |h| to_dot(&h.poset, &h.rank))
}

/// Canonical poset file (JSON), caller-owned.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer; release the
/// result with `chowlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn chowlab_poset_to_json(
    handle: *const ChowlabPoset,
    out: *mut *mut c_char,
) -> c_int {
    string_getter(handle, out, |h| to_canonical_json(&h.poset, &h.rank))
}

/// Exact number of real roots (with multiplicity) of the Chow polynomial.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_chow_real_roots(
    handle: *const ChowlabPoset,
    out: *mut u64,
) -> c_int {
    let Some(h) = handle.as_ref() else {
        return ChowlabStatus::NullArgument as c_int;
    };
    if out.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    guarded(|| {
        let poly = chow_chain_sum(&h.poset, &h.rank);
        match count_real_roots(&poly) {
            Ok(k) => {
                unsafe { *out = k as u64 };
                ChowlabStatus::Ok as c_int
            }
            Err(_) => ChowlabStatus::Internal as c_int,
        }
    })
}

/// 1 through `out` iff SFY is a monomial order ideal (it always is; exposed
/// as a checkable claim).
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_sfy_is_order_ideal(
    handle: *const ChowlabPoset,
    out: *mut c_int,
) -> c_int {
    let Some(h) = handle.as_ref() else {
        return ChowlabStatus::NullArgument as c_int;
    };
    if out.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    guarded(|| {
        let sfy = sfy_generate(&h.poset, &h.rank);
        unsafe { *out = is_monomial_order_ideal(&sfy).is_ideal() as c_int };
        ChowlabStatus::Ok as c_int
    })
}

/// Pureness of SFY: `out_pure` gets 0/1; on 1, `out_degree` gets the common
/// maximal degree. For ranked posets the expected degree
/// `floor((n-1)/2)` is enforced.
///
/// # Safety
/// `handle` must be a live handle; `out_pure` and `out_degree` must be
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn chowlab_sfy_is_pure(
    handle: *const ChowlabPoset,
    out_pure: *mut c_int,
    out_degree: *mut u64,
) -> c_int {
    let Some(h) = handle.as_ref() else {
        return ChowlabStatus::NullArgument as c_int;
    };
    if out_pure.is_null() || out_degree.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    guarded(|| {
        let n = h.rank.poset_rank(&h.poset);
        let expected = h
            .rank
            .is_ranked(&h.poset)
            .then(|| if n == 0 { 0 } else { (n - 1) / 2 });
        let sfy = sfy_generate(&h.poset, &h.rank);
        match is_pure_ideal(&sfy, expected) {
            Ok(report) => {
                unsafe {
                    *out_pure = report.pure as c_int;
                    *out_degree = report.degree.unwrap_or(0);
                }
                ChowlabStatus::Ok as c_int
            }
            Err(_) => ChowlabStatus::Internal as c_int,
        }
    })
}

fn parse_csv_sequence(text: &str) -> Option<Vec<BigInt>> {
    text.split(',')
        .map(|part| part.trim().parse::<BigInt>().ok())
        .collect()
}

unsafe fn sequence_predicate(
    csv: *const c_char,
    out: *mut c_int,
    body: impl FnOnce(&[BigInt]) -> Option<bool>,
) -> c_int {
    let text = match read_str(csv) {
        Ok(t) => t,
        Err(code) => return code,
    };
    if out.is_null() {
        return ChowlabStatus::NullArgument as c_int;
    }
    let Some(seq) = parse_csv_sequence(text) else {
        return ChowlabStatus::InvalidSequence as c_int;
    };
    guarded(|| match body(&seq) {
        Some(v) => {
            unsafe { *out = v as c_int };
            ChowlabStatus::Ok as c_int
        }
        None => ChowlabStatus::InvalidSequence as c_int,
    })
}

/// Log-concavity of a CSV sequence of integers; the verdict lands in `out`.
///
/// # Safety
/// `csv` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_seq_is_log_concave(
    csv: *const c_char,
    out: *mut c_int,
) -> c_int {
    sequence_predicate(csv, out, |seq| Some(is_log_concave(seq).holds))
}

/// Macaulay O-sequence test for a CSV sequence starting with 1; the verdict
/// lands in `out`.
///
/// # Safety
/// `csv` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_seq_is_o_sequence(
    csv: *const c_char,
    out: *mut c_int,
) -> c_int {
    sequence_predicate(csv, out, |seq| is_o_sequence(seq).ok().map(|v| v.holds))
}

/// SI-sequence test for a CSV sequence; the verdict lands in `out`.
///
/// # Safety
/// `csv` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chowlab_seq_is_si(csv: *const c_char, out: *mut c_int) -> c_int {
    sequence_predicate(csv, out, |seq| is_si_sequence(seq).ok().map(|v| v.holds))
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from a chowlab function and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chowlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
