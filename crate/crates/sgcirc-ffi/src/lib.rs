//! C ABI over the signed-graph circular coloring library.
//!
//! Graphs are opaque handles created from the text format and freed by the
//! caller. Results are returned as JSON strings allocated by this library
//! and released with [`sg_string_free`]. Every function returns a status
//! code; no Rust panic crosses the boundary.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
#[cfg(test)]
use std::ptr;

use sgcirc::json::{CertificateJson, ChiCJson, ColoringJson};
use sgcirc::solver::{analyze_tightness, chi_c_jobs, ChiC};
use sgcirc::{format, verify_coloring, SignedGraph, Verdict};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgStatus {
    /// Operation succeeded.
    Ok = 0,
    /// The verifier rejected the coloring (sg_verify only).
    Invalid = 1,
    /// A pointer argument was null.
    NullArgument = -1,
    /// A string argument was not valid UTF-8.
    BadUtf8 = -2,
    /// The graph or coloring text failed to parse.
    ParseError = -3,
    /// The operation itself failed (domain mismatch, not 2-degenerate, ...).
    OperationError = -4,
    /// An internal invariant was violated.
    InternalError = -5,
}

/// Opaque signed graph handle.
pub struct SgGraph {
    inner: SignedGraph,
}

fn out_string(s: String, out: *mut *mut c_char) -> SgStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            SgStatus::Ok
        }
        Err(_) => SgStatus::InternalError,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SgStatus> {
    if p.is_null() {
        return Err(SgStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| SgStatus::BadUtf8)
}

fn guarded<F: FnOnce() -> SgStatus>(f: F) -> SgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => SgStatus::InternalError,
    }
}

/// Parses a graph from the text format (`p sg n m` header, `e u v +|-`
/// lines). On success stores a new handle in `out`; free it with
/// [`sg_graph_free`].
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_parse(
    text: *const c_char,
    out: *mut *mut SgGraph,
) -> SgStatus {
    guarded(|| {
        if out.is_null() {
            return SgStatus::NullArgument;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match format::load_str(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(SgGraph { inner: g }));
                SgStatus::Ok
            }
            Err(_) => SgStatus::ParseError,
        }
    })
}

/// Frees a graph handle. Null is ignored.
///
/// # Safety
/// `g` must come from [`sg_graph_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_free(g: *mut SgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or -1 on a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_order(g: *const SgGraph) -> c_int {
    if g.is_null() {
        return -1;
    }
    (*g).inner.n() as c_int
}

/// Computes the exact circular chromatic number and stores a JSON result
/// (value, grid representative, verified witness, tightness report) in
/// `out_json`. Free the string with [`sg_string_free`].
///
/// # Safety
/// `g` must be a live handle, `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sg_chi_c_json(
    g: *const SgGraph,
    jobs: c_int,
    out_json: *mut *mut c_char,
) -> SgStatus {
    guarded(|| {
        if g.is_null() || out_json.is_null() {
            return SgStatus::NullArgument;
        }
        let graph = &(*g).inner;
        let result = chi_c_jobs(graph, jobs.max(1) as usize);
        let tightness = match &result {
            ChiC::Finite { witness, .. } => analyze_tightness(graph, witness).ok(),
            ChiC::Infinite => None,
        };
        let json = match ChiCJson::from_result(&result, tightness.as_ref())
            .and_then(|j| Ok(serde_json::to_string(&j)?))
        {
            Ok(s) => s,
            Err(_) => return SgStatus::OperationError,
        };
        out_string(json, out_json)
    })
}

/// Verifies a coloring JSON (`{"r": "p/q", "f": [...]}`) against the
/// graph. Returns `Ok` when valid, `Invalid` when some edge constraint
/// fails, and a negative status on malformed input.
///
/// # Safety
/// `g` must be a live handle and `coloring_json` a valid string.
#[no_mangle]
pub unsafe extern "C" fn sg_verify(
    g: *const SgGraph,
    coloring_json: *const c_char,
) -> SgStatus {
    guarded(|| {
        if g.is_null() {
            return SgStatus::NullArgument;
        }
        let text = match read_str(coloring_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed: Result<ColoringJson, _> = serde_json::from_str(text);
        let coloring = match parsed.map_err(|_| ()).and_then(|j| j.to_coloring().map_err(|_| ()))
        {
            Ok(c) => c,
            Err(()) => return SgStatus::ParseError,
        };
        match verify_coloring(&(*g).inner, &coloring) {
            Ok(Verdict::Satisfied) => SgStatus::Ok,
            Ok(Verdict::Violation { .. }) => SgStatus::Invalid,
            Err(_) => SgStatus::OperationError,
        }
    })
}

/// Builds a certified coloring of radius below 4 for a 2-degenerate graph
/// and stores a certificate JSON (`switch_set` plus coloring) in
/// `out_json`. Free the string with [`sg_string_free`].
///
/// # Safety
/// `g` must be a live handle, `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sg_color_2degenerate_json(
    g: *const SgGraph,
    out_json: *mut *mut c_char,
) -> SgStatus {
    guarded(|| {
        if g.is_null() || out_json.is_null() {
            return SgStatus::NullArgument;
        }
        let cert = match sgcirc::colorer::color_2degenerate(&(*g).inner) {
            Ok(c) => c,
            Err(_) => return SgStatus::OperationError,
        };
        let json = match CertificateJson::from_certificate(&cert)
            .and_then(|j| Ok(serde_json::to_string(&j)?))
        {
            Ok(s) => s,
            Err(_) => return SgStatus::OperationError,
        };
        out_string(json, out_json)
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn parse(text: &str) -> *mut SgGraph {
        let c = CString::new(text).unwrap();
        let mut out: *mut SgGraph = ptr::null_mut();
        let status = unsafe { sg_graph_parse(c.as_ptr(), &mut out) };
        assert_eq!(status, SgStatus::Ok);
        out
    }

    fn take_string(p: *mut c_char) -> String {
        let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
        unsafe { sg_string_free(p) };
        s
    }

    const NEG_C4: &str = "p sg 4 4\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 0 3 -\n";

    #[test]
    fn parse_and_order() {
        let g = parse(NEG_C4);
        assert_eq!(unsafe { sg_graph_order(g) }, 4);
        unsafe { sg_graph_free(g) };
    }

    #[test]
    fn parse_rejects_garbage() {
        let c = CString::new("not a graph").unwrap();
        let mut out: *mut SgGraph = ptr::null_mut();
        assert_eq!(
            unsafe { sg_graph_parse(c.as_ptr(), &mut out) },
            SgStatus::ParseError
        );
        assert!(out.is_null());
    }

    #[test]
    fn chi_c_round_trip() {
        let g = parse(NEG_C4);
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { sg_chi_c_json(g, 1, &mut out) }, SgStatus::Ok);
        let json = take_string(out);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["chi_c"], "8/3");
        let witness = serde_json::to_string(&parsed["witness"]).unwrap();
        let c = CString::new(witness).unwrap();
        assert_eq!(unsafe { sg_verify(g, c.as_ptr()) }, SgStatus::Ok);
        unsafe { sg_graph_free(g) };
    }

    #[test]
    fn verify_flags_bad_coloring() {
        let g = parse(NEG_C4);
        let c = CString::new(r#"{"r":"3/1","f":["0/1","0/1","0/1","0/1"]}"#).unwrap();
        assert_eq!(unsafe { sg_verify(g, c.as_ptr()) }, SgStatus::Invalid);
        let c = CString::new("{").unwrap();
        assert_eq!(unsafe { sg_verify(g, c.as_ptr()) }, SgStatus::ParseError);
        unsafe { sg_graph_free(g) };
    }

    #[test]
    fn color_2degenerate_json_shape() {
        let g = parse(NEG_C4);
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { sg_color_2degenerate_json(g, &mut out) },
            SgStatus::Ok
        );
        let json = take_string(out);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(parsed["coloring"]["r"].is_string());
        unsafe { sg_graph_free(g) };
    }

    #[test]
    fn null_arguments() {
        unsafe {
            let mut out: *mut SgGraph = ptr::null_mut();
            assert_eq!(sg_graph_parse(ptr::null(), &mut out), SgStatus::NullArgument);
            assert_eq!(sg_graph_order(ptr::null()), -1);
            assert_eq!(sg_verify(ptr::null(), ptr::null()), SgStatus::NullArgument);
            sg_graph_free(ptr::null_mut());
            sg_string_free(ptr::null_mut());
        }
    }
}
