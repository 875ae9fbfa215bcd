//! C interface to satlab.
//!
//! Graphs are opaque [`SatlabGraph`] handles owned by the caller and released
//! with [`satlab_graph_free`]. Every fallible call returns a [`SatlabStatus`];
//! the message for the most recent failure on the calling thread is available
//! from [`satlab_last_error`]. Strings returned through `char **` out
//! parameters are released with [`satlab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use satlab::construct::{make_split, SplitParams};
use satlab::graph6::{from_graph6, to_graph6_string};
use satlab::{
    are_isomorphic, canonical_certificate, check_saturation, extremal_count, Error, Graph, Mode, MotifKind, MotifSpec,
    SearchBudget,
};

/// Opaque graph handle.
pub struct SatlabGraph(Graph);

/// Status codes. Values 1 to 5 agree with the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatlabStatus {
    Ok = 0,
    InvalidArgument = 1,
    ParseError = 2,
    Overflow = 4,
    BudgetExceeded = 5,
    DomainError = 6,
    NullPointer = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatlabMotif {
    Matching = 0,
    Clique = 1,
    Indepset = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatlabMode {
    Min = 0,
    Max = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: Error) -> SatlabStatus {
    let code = match e {
        Error::Parameter(_) => SatlabStatus::InvalidArgument,
        Error::Parse { .. } => SatlabStatus::ParseError,
        Error::Overflow(_) => SatlabStatus::Overflow,
        Error::Budget(_) => SatlabStatus::BudgetExceeded,
        Error::Domain(_) => SatlabStatus::DomainError,
    };
    set_error(e.to_string());
    code
}

fn null() -> SatlabStatus {
    set_error("null pointer argument");
    SatlabStatus::NullPointer
}

/// Runs `f`, turning panics into [`SatlabStatus::Internal`].
fn guard(f: impl FnOnce() -> Result<(), SatlabStatus>) -> SatlabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SatlabStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SatlabStatus::Internal
        }
    }
}

unsafe fn graph<'a>(g: *const SatlabGraph) -> Result<&'a Graph, SatlabStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), SatlabStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut SatlabGraph, g: Graph) -> Result<(), SatlabStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(Box::into_raw(Box::new(SatlabGraph(g))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), SatlabStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(CString::new(s).expect("no interior nul").into_raw());
    Ok(())
}

fn motif(kind: SatlabMotif, size: usize) -> Result<MotifSpec, SatlabStatus> {
    let kind = match kind {
        SatlabMotif::Matching => MotifKind::Matching,
        SatlabMotif::Clique => MotifKind::Clique,
        SatlabMotif::Indepset => MotifKind::Indepset,
    };
    MotifSpec::new(kind, size).map_err(fail)
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn satlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses one graph6 line (a `>>graph6<<` header and surrounding whitespace
/// are accepted).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_from_graph6(text: *const c_char, out: *mut *mut SatlabGraph) -> SatlabStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let g = from_graph6(CStr::from_ptr(text).to_bytes()).map_err(fail)?;
        put_graph(out, g)
    })
}

/// The split graph: vertices `0..q` form a clique joined to `n - q`
/// independent vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_split(n: usize, q: usize, out: *mut *mut SatlabGraph) -> SatlabStatus {
    guard(|| {
        let g = SplitParams::new(n, q).and_then(make_split).map_err(fail)?;
        put_graph(out, g)
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_empty(n: usize, out: *mut *mut SatlabGraph) -> SatlabStatus {
    guard(|| put_graph(out, Graph::empty(n).map_err(fail)?))
}

/// Adds the edge `uv`. Adding an existing edge is a no-op.
///
/// # Safety
/// `g` must be a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_add_edge(g: *mut SatlabGraph, u: usize, v: usize) -> SatlabStatus {
    guard(|| {
        let g = &mut g.as_mut().ok_or_else(null)?.0;
        if u >= g.n() || v >= g.n() || u == v {
            return Err(fail(Error::Parameter(format!("bad edge {u}-{v} for n={}", g.n()))));
        }
        g.add_edge(u, v);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_free(g: *mut SatlabGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_vertex_count(g: *const SatlabGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_edge_count(g: *const SatlabGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result with
/// [`satlab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_to_graph6(g: *const SatlabGraph, out: *mut *mut c_char) -> SatlabStatus {
    guard(|| put_string(out, to_graph6_string(graph(g)?)))
}

/// Canonical certificate as a graph6 string: equal strings if and only if
/// the graphs are isomorphic.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result with
/// [`satlab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn satlab_graph_certificate(g: *const SatlabGraph, out: *mut *mut c_char) -> SatlabStatus {
    guard(|| put_string(out, canonical_certificate(graph(g)?).as_str().to_owned()))
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn satlab_is_isomorphic(a: *const SatlabGraph, b: *const SatlabGraph, out: *mut bool) -> SatlabStatus {
    guard(|| put(out, are_isomorphic(graph(a)?, graph(b)?)))
}

/// Exact number of copies of the motif, split into high and low 64-bit
/// halves of a 128-bit value.
///
/// # Safety
/// `g` must be a live handle; `hi` and `lo` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn satlab_count(
    g: *const SatlabGraph,
    kind: SatlabMotif,
    size: usize,
    hi: *mut u64,
    lo: *mut u64,
) -> SatlabStatus {
    guard(|| {
        let c = motif(kind, size)?.count(graph(g)?).map_err(fail)?.get();
        put(hi, (c >> 64) as u64)?;
        put(lo, c as u64)
    })
}

/// Exact number of copies of the motif as a decimal string.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result with
/// [`satlab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn satlab_count_decimal(
    g: *const SatlabGraph,
    kind: SatlabMotif,
    size: usize,
    out: *mut *mut c_char,
) -> SatlabStatus {
    guard(|| {
        let c = motif(kind, size)?.count(graph(g)?).map_err(fail)?;
        put_string(out, c.to_string())
    })
}

/// Whether the graph is `K_s`-saturated.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn satlab_is_saturated(g: *const SatlabGraph, s: usize, out: *mut bool) -> SatlabStatus {
    guard(|| {
        let rep = check_saturation(graph(g)?, s).map_err(fail)?;
        put(out, rep.is_saturated)
    })
}

/// Exhaustive extremal search for `n <= 8`, returned as JSON. `shards` of 0
/// uses the available parallelism.
///
/// # Safety
/// `out` must be a valid pointer. Free the result with
/// [`satlab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn satlab_extremal_search_json(
    n: usize,
    s: usize,
    kind: SatlabMotif,
    size: usize,
    mode: SatlabMode,
    shards: usize,
    out: *mut *mut c_char,
) -> SatlabStatus {
    guard(|| {
        let mut budget = SearchBudget::default();
        if shards > 0 {
            budget.parallel_shards = shards;
        }
        let mode = match mode {
            SatlabMode::Min => Mode::Min,
            SatlabMode::Max => Mode::Max,
        };
        let res = extremal_count(n, s, motif(kind, size)?, mode, &budget).map_err(fail)?;
        put_string(out, res.to_json())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn satlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
