//! C ABI over `binedge`.
//!
//! Graphs are opaque `BeiGraph` handles. Every call returns a `BeiStatus`;
//! on failure `bei_last_error()` describes the error for the calling thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with `bei_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use binedge::bei::{fedder_check, groebner_basis_bei, initial_ideal_mingens};
use binedge::field::{FieldChoice, Rationals};
use binedge::graph::Graph;
use binedge::harness::betti_table_over;
use binedge::sr::fpt_squarefree;
use binedge::Error;

/// Result codes shared by every exported function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    LimitExceeded = 4,
    HypothesisFailed = 5,
    NotAnEdge = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct BeiGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> BeiStatus {
    match err {
        Error::Parse(_) => BeiStatus::Parse,
        Error::LimitExceeded { .. } => BeiStatus::LimitExceeded,
        Error::HypothesisFailed(_) => BeiStatus::HypothesisFailed,
        Error::NotAnEdge(..) => BeiStatus::NotAnEdge,
        Error::Internal(_) | Error::WeightSearchFailed(_) => BeiStatus::Internal,
        _ => BeiStatus::InvalidInput,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BeiStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BeiStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            BeiStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside binedge".into());
            BeiStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const BeiGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or(Failure::Null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn str_arg<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::Lib(Error::Parse(format!("{what} is not UTF-8"))))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

fn field_arg(p: u64) -> Result<FieldChoice, Error> {
    if p == 0 {
        Ok(FieldChoice::Rationals)
    } else {
        format!("fp:{p}").parse()
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bei_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bei_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on vertices `1..=n` from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (or may be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut BeiGraph,
) -> BeiStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(Failure::Null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        write(out, Box::into_raw(Box::new(BeiGraph { inner: g })))
    })
}

/// Parses `{"n": 4, "edges": [[1, 2], ...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_from_json(json: *const c_char, out: *mut *mut BeiGraph) -> BeiStatus {
    guard(|| {
        let g = Graph::from_json(str_arg(json, "json")?)?;
        write(out, Box::into_raw(Box::new(BeiGraph { inner: g })))
    })
}

/// # Safety
/// `g` must come from `bei_graph_new` or `bei_graph_from_json` and must not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_free(g: *mut BeiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_vertex_count(g: *const BeiGraph, out: *mut usize) -> BeiStatus {
    guard(|| write(out, graph_ref(g)?.n()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_is_path(g: *const BeiGraph, out: *mut bool) -> BeiStatus {
    guard(|| write(out, graph_ref(g)?.is_path_graph()))
}

/// Searches for a labeling under which the graph is closed. On success
/// `found` is set, and when true `sigma[0..n]` holds the new label of each vertex.
///
/// # Safety
/// `g` must be a live handle; `sigma` must hold `n` values; `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_closed_labeling(
    g: *const BeiGraph,
    sigma: *mut usize,
    found: *mut bool,
) -> BeiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if sigma.is_null() {
            return Err(Failure::Null("sigma"));
        }
        match g.find_closed_labeling()? {
            Some(s) => {
                std::slice::from_raw_parts_mut(sigma, g.n()).copy_from_slice(&s);
                write(found, true)
            }
            None => write(found, false),
        }
    })
}

/// Reduced Gröbner basis of the binomial edge ideal, one element per line.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_groebner_basis(g: *const BeiGraph, out: *mut *mut c_char) -> BeiStatus {
    guard(|| {
        let gb = groebner_basis_bei(Rationals, graph_ref(g)?)?;
        let text: Vec<String> = gb.iter().map(|e| e.element.to_string()).collect();
        write(out, into_c_string(text.join("\n")))
    })
}

/// F-pure threshold of `S / In(J_G)`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_fpt(g: *const BeiGraph, out: *mut usize) -> BeiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = fpt_squarefree(&initial_ideal_mingens(g)?, 2 * g.n())?;
        write(out, r.fpt)
    })
}

/// Castelnuovo-Mumford regularity of `S / In(J_G)` over `F_p`, or over Q when `p` is 0.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_regularity(g: *const BeiGraph, p: u64, out: *mut usize) -> BeiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let t = betti_table_over(&initial_ideal_mingens(g)?, 2 * g.n(), field_arg(p)?)?;
        write(out, t.regularity())
    })
}

/// Fedder certificate for the current labeling as JSON. Unless `force` is set,
/// disconnected or non-closed labelings fail with `HypothesisFailed`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_fedder_json(
    g: *const BeiGraph,
    p: u64,
    force: bool,
    out: *mut *mut c_char,
) -> BeiStatus {
    guard(|| {
        let c = fedder_check(graph_ref(g)?, p, force)?;
        write(out, into_c_string(c.to_json().to_string()))
    })
}

/// Name of the field selected by `p` ("q" for 0), for diagnostics.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_field_name(p: u64, out: *mut *mut c_char) -> BeiStatus {
    guard(|| write(out, into_c_string(field_arg(p)?.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use binedge::field::Field;

    #[test]
    fn null_handles_are_reported() {
        let mut n = 0usize;
        assert_eq!(unsafe { bei_graph_vertex_count(ptr::null(), &mut n) }, BeiStatus::NullPointer);
        let msg = unsafe { CStr::from_ptr(bei_last_error()) }.to_str().unwrap();
        assert!(msg.contains("graph"));
    }

    #[test]
    fn field_names() {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { bei_field_name(0, &mut s) }, BeiStatus::Ok);
        assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), Rationals.name());
        unsafe { bei_string_free(s) };
        assert_eq!(unsafe { bei_field_name(4, &mut s) }, BeiStatus::InvalidInput);
    }
}
