//! C ABI over `convdom`.
//!
//! Graphs and solver results are opaque handles created and released by this
//! library. Every fallible call returns one of the `CONVDOM_*` codes; after a
//! nonzero code, `convdom_last_error_message` describes the failure on the
//! calling thread. Strings returned by the library must be released with
//! `convdom_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use convdom::domination::{
    gamma_con_bruteforce, gamma_con_hull4, gamma_iso, gamma_iso_bruteforce, SolveOptions,
    SolverResult,
};
use convdom::graph::{parse_edge_list, to_edge_list};
use convdom::recognition::{find_dominating_pair, is_chordal, is_chordal_dp_graph};
use convdom::{Error, Graph};

pub const CONVDOM_OK: i32 = 0;
pub const CONVDOM_ERR_PARSE: i32 = 1;
pub const CONVDOM_ERR_WRONG_CLASS: i32 = 2;
pub const CONVDOM_ERR_RESOURCE: i32 = 3;
pub const CONVDOM_ERR_OTHER: i32 = 4;
/// A required pointer argument was null or a string was not UTF-8.
pub const CONVDOM_ERR_ARGUMENT: i32 = 5;
pub const CONVDOM_ERR_PANIC: i32 = 6;

/// Opaque graph handle.
pub struct ConvdomGraph {
    inner: Graph,
}

/// Opaque solver result handle.
pub struct ConvdomResult {
    inner: SolverResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(e: &Error) -> i32 {
    set_error(e.to_string());
    e.exit_code()
}

fn argument(msg: &str) -> i32 {
    set_error(msg);
    CONVDOM_ERR_ARGUMENT
}

/// Runs `f`, turning a panic into `CONVDOM_ERR_PANIC`.
fn guard(f: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => {
            if code == CONVDOM_OK {
                set_error("");
            }
            code
        }
        Err(_) => {
            set_error("internal panic");
            CONVDOM_ERR_PANIC
        }
    }
}

unsafe fn graph_ref<'a>(g: *const ConvdomGraph) -> Option<&'a Graph> {
    g.as_ref().map(|g| &g.inner)
}

fn options(jobs: usize, path_cap: u64, oracle_bound: usize) -> SolveOptions {
    let d = SolveOptions::default();
    SolveOptions {
        jobs: jobs.max(1),
        path_cap: if path_cap == 0 { d.path_cap } else { path_cap },
        oracle_bound: if oracle_bound == 0 {
            d.oracle_bound
        } else {
            oracle_bound
        },
    }
}

fn emit_result(r: convdom::Result<SolverResult>, out: *mut *mut ConvdomResult) -> i32 {
    match r {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(ConvdomResult { inner })) };
            CONVDOM_OK
        }
        Err(e) => fail(&e),
    }
}

/// Message for the last failing call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn convdom_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut ConvdomGraph,
) -> i32 {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return argument("null argument");
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        match Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ConvdomGraph { inner }));
                CONVDOM_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Parses the canonical edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_graph_parse(
    text: *const c_char,
    out: *mut *mut ConvdomGraph,
) -> i32 {
    guard(|| {
        if text.is_null() || out.is_null() {
            return argument("null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return argument("input is not valid UTF-8");
        };
        match parse_edge_list(s) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ConvdomGraph { inner }));
                CONVDOM_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn convdom_graph_free(g: *mut ConvdomGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle or null (then 0 is returned).
#[no_mangle]
pub unsafe extern "C" fn convdom_graph_vertex_count(g: *const ConvdomGraph) -> usize {
    graph_ref(g).map_or(0, Graph::n)
}

/// # Safety
/// `g` must be a live graph handle or null (then 0 is returned).
#[no_mangle]
pub unsafe extern "C" fn convdom_graph_edge_count(g: *const ConvdomGraph) -> usize {
    graph_ref(g).map_or(0, Graph::edge_count)
}

/// Canonical edge-list text; release with `convdom_string_free`. Null on a
/// null handle.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn convdom_graph_to_edge_list(g: *const ConvdomGraph) -> *mut c_char {
    match graph_ref(g) {
        Some(g) => CString::new(to_edge_list(g, &[])).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn convdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes whether the graph is chordal.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_is_chordal(g: *const ConvdomGraph, out: *mut bool) -> i32 {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return argument("null argument");
        };
        *out = is_chordal(g).is_chordal();
        CONVDOM_OK
    })
}

/// Writes whether the graph is a chordal dominating pair graph.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_is_chordal_dp_graph(
    g: *const ConvdomGraph,
    out: *mut bool,
) -> i32 {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return argument("null argument");
        };
        *out = is_chordal_dp_graph(g).is_member();
        CONVDOM_OK
    })
}

/// First dominating pair in lexicographic order. `found` is set to false
/// when the graph has none.
///
/// # Safety
/// `g` must be a live graph handle; `x`, `y` and `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_find_dominating_pair(
    g: *const ConvdomGraph,
    x: *mut usize,
    y: *mut usize,
    found: *mut bool,
) -> i32 {
    guard(|| {
        let Some(g) = graph_ref(g) else {
            return argument("null graph");
        };
        if x.is_null() || y.is_null() || found.is_null() {
            return argument("null argument");
        }
        match find_dominating_pair(g) {
            Ok(p) => {
                *found = p.is_some();
                if let Some(p) = p {
                    *x = p.x;
                    *y = p.y;
                }
                CONVDOM_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Convex domination number by hulls of at most four seeds. With `trust`
/// false the input must pass the chordal dominating pair test. `jobs` of 0
/// means 1.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_gamma_con(
    g: *const ConvdomGraph,
    trust: bool,
    jobs: usize,
    out: *mut *mut ConvdomResult,
) -> i32 {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return argument("null argument");
        };
        emit_result(gamma_con_hull4(g, trust, &options(jobs, 0, 0)), out)
    })
}

/// Isometric domination number by the staged pair algorithm. A `path_cap`
/// of 0 selects the default.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_gamma_iso(
    g: *const ConvdomGraph,
    jobs: usize,
    path_cap: u64,
    out: *mut *mut ConvdomResult,
) -> i32 {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return argument("null argument");
        };
        emit_result(gamma_iso(g, &options(jobs, path_cap, 0)), out)
    })
}

/// Exhaustive convex domination number; `bound` of 0 selects the default.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_gamma_con_bruteforce(
    g: *const ConvdomGraph,
    bound: usize,
    out: *mut *mut ConvdomResult,
) -> i32 {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return argument("null argument");
        };
        emit_result(gamma_con_bruteforce(g, &options(1, 0, bound)), out)
    })
}

/// Exhaustive isometric domination number; `bound` of 0 selects the default.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn convdom_gamma_iso_bruteforce(
    g: *const ConvdomGraph,
    bound: usize,
    out: *mut *mut ConvdomResult,
) -> i32 {
    guard(|| {
        let (Some(g), false) = (graph_ref(g), out.is_null()) else {
            return argument("null argument");
        };
        emit_result(gamma_iso_bruteforce(g, &options(1, 0, bound)), out)
    })
}

/// # Safety
/// `r` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn convdom_result_free(r: *mut ConvdomResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Optimum value, or 0 for a null handle.
///
/// # Safety
/// `r` must be a live result handle or null.
#[no_mangle]
pub unsafe extern "C" fn convdom_result_value(r: *const ConvdomResult) -> usize {
    r.as_ref().map_or(0, |r| r.inner.value)
}

/// Copies up to `cap` witness vertices (ascending) into `buf` and returns the
/// witness size, so a call with `cap` 0 reports the size needed.
///
/// # Safety
/// `r` must be a live result handle or null; `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn convdom_result_witness(
    r: *const ConvdomResult,
    buf: *mut usize,
    cap: usize,
) -> usize {
    let Some(r) = r.as_ref() else { return 0 };
    let w = r.inner.witness.to_vec();
    if !buf.is_null() {
        for (i, v) in w.iter().take(cap).enumerate() {
            *buf.add(i) = *v;
        }
    }
    w.len()
}

/// Full result as a JSON object; release with `convdom_string_free`.
///
/// # Safety
/// `r` must be a live result handle or null.
#[no_mangle]
pub unsafe extern "C" fn convdom_result_to_json(r: *const ConvdomResult) -> *mut c_char {
    match r.as_ref().map(|r| serde_json::to_string(&r.inner)) {
        Some(Ok(s)) => CString::new(s).map_or(ptr::null_mut(), CString::into_raw),
        _ => ptr::null_mut(),
    }
}
