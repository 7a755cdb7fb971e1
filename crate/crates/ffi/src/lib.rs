//! C ABI over `prelorentz`.
//!
//! Graphs and polynomials cross the boundary as opaque handles. Every
//! fallible call returns a [`PlStatus`]; on failure the message is available
//! from [`pl_last_error`] on the same thread. Strings handed out by this
//! library must be released with [`pl_string_free`], handles with their own
//! `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use prelorentz::graph::{glue, glue_partitioned, leafy_star, replace_w4, ColouredGraph, GlueSpec, GraphDoc, PartitionedGraph};
use prelorentz::independence::{coloured_indep_poly, indep_poly};
use prelorentz::lorentz::{is_lorentzian_with, is_pre_lorentzian, CertifyOptions};
use prelorentz::{Error, MultiPoly, PolyDoc};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    GuardExceeded = 5,
    Panic = 6,
}

/// Coloured graph, optionally with a bound colour.
pub struct PlGraph {
    coloured: ColouredGraph,
    bound: Option<String>,
}

pub struct PlPoly(MultiPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PlStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => PlStatus::Parse,
        Error::GuardExceeded { .. } => PlStatus::GuardExceeded,
        _ => PlStatus::InvalidArgument,
    }
}

struct Fail(PlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PlStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(PlStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(PlStatus::InvalidUtf8, e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(PlStatus::NullPointer, format!("null {what}")))
}

fn check_out<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(Fail(PlStatus::NullPointer, "null output pointer".into()))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail(PlStatus::Parse, e.to_string()))
}

impl PlGraph {
    fn from_partitioned(g: PartitionedGraph) -> Self {
        PlGraph {
            bound: Some(g.bound_colour().to_string()),
            coloured: g.coloured().clone(),
        }
    }

    fn partitioned(&self) -> Result<PartitionedGraph, Fail> {
        let bound = self.bound.clone().ok_or(Error::MissingBoundColour)?;
        Ok(PartitionedGraph::new(self.coloured.clone(), bound)?)
    }

    fn doc(&self) -> GraphDoc {
        self.coloured.to_doc(self.bound.as_deref())
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// owned by the library and valid until the next failing call.
#[no_mangle]
pub extern "C" fn pl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses graph JSON. Missing colours make every vertex its own colour.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_from_json(json: *const c_char, out: *mut *mut PlGraph) -> PlStatus {
    guard(|| {
        check_out(out)?;
        let doc: GraphDoc = serde_json::from_str(read_str(json)?).map_err(Error::from)?;
        let coloured = doc.to_coloured()?;
        if let Some(b) = &doc.bound_colour {
            PartitionedGraph::new(coloured.clone(), b.clone())?;
        }
        *out = Box::into_raw(Box::new(PlGraph {
            coloured,
            bound: doc.bound_colour,
        }));
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` a writable pointer. Free the result
/// with [`pl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pl_graph_to_json(g: *const PlGraph, out: *mut *mut c_char) -> PlStatus {
    guard(|| {
        check_out(out)?;
        *out = to_c_string(json(&deref(g, "graph")?.doc())?);
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_free(g: *mut PlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_num_vertices(g: *const PlGraph) -> usize {
    g.as_ref().map_or(0, |g| g.coloured.graph().num_vertices())
}

/// Edge count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pl_graph_num_edges(g: *const PlGraph) -> usize {
    g.as_ref().map_or(0, |g| g.coloured.graph().num_edges())
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pl_leafy_star(n: usize, out: *mut *mut PlGraph) -> PlStatus {
    guard(|| {
        check_out(out)?;
        *out = Box::into_raw(Box::new(PlGraph::from_partitioned(leafy_star(n)?)));
        Ok(())
    })
}

/// Edge replacement; colours are dropped.
///
/// # Safety
/// `g` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pl_replace_w4(g: *const PlGraph, out: *mut *mut PlGraph) -> PlStatus {
    guard(|| {
        check_out(out)?;
        let r = replace_w4(deref(g, "graph")?.coloured.graph());
        *out = Box::into_raw(Box::new(PlGraph {
            coloured: ColouredGraph::all_free(r),
            bound: None,
        }));
        Ok(())
    })
}

/// Glues `g1` and `g2` along colour `c1` of `g1` and `c2` of `g2`. With
/// `partitioned`, both must carry a bound colour and `c1`, `c2` must be free.
///
/// # Safety
/// Handles must be live, strings NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_glue(
    g1: *const PlGraph,
    g2: *const PlGraph,
    c1: *const c_char,
    c2: *const c_char,
    partitioned: bool,
    out: *mut *mut PlGraph,
) -> PlStatus {
    guard(|| {
        check_out(out)?;
        let (g1, g2) = (deref(g1, "graph")?, deref(g2, "graph")?);
        let spec = GlueSpec::new(read_str(c1)?, read_str(c2)?);
        let glued = if partitioned {
            PlGraph::from_partitioned(glue_partitioned(&g1.partitioned()?, &g2.partitioned()?, &spec)?)
        } else {
            PlGraph {
                coloured: glue(&g1.coloured, &g2.coloured, &spec)?,
                bound: None,
            }
        };
        *out = Box::into_raw(Box::new(glued));
        Ok(())
    })
}

/// Independence sequence as a JSON array.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_indep_sequence_json(g: *const PlGraph, out: *mut *mut c_char) -> PlStatus {
    guard(|| {
        check_out(out)?;
        let seq = indep_poly(deref(g, "graph")?.coloured.graph());
        *out = to_c_string(json(&seq)?);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_coloured_poly(g: *const PlGraph, out: *mut *mut PlPoly) -> PlStatus {
    guard(|| {
        check_out(out)?;
        let p = coloured_indep_poly(&deref(g, "graph")?.coloured);
        *out = Box::into_raw(Box::new(PlPoly(p)));
        Ok(())
    })
}

/// # Safety
/// `json` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_poly_from_json(json: *const c_char, out: *mut *mut PlPoly) -> PlStatus {
    guard(|| {
        check_out(out)?;
        let doc: PolyDoc = serde_json::from_str(read_str(json)?).map_err(Error::from)?;
        *out = Box::into_raw(Box::new(PlPoly(MultiPoly::from_doc(&doc)?)));
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_poly_to_json(p: *const PlPoly, out: *mut *mut c_char) -> PlStatus {
    guard(|| {
        check_out(out)?;
        *out = to_c_string(json(&deref(p, "polynomial")?.0.to_doc())?);
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pl_poly_free(p: *mut PlPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Lorentzian certificate as JSON. `*certified` is set when the verdict is
/// certified. `max_hessians` of 0 means the default cap.
///
/// # Safety
/// `p` must be a live handle; `out` and `certified` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_certify_lorentzian(
    p: *const PlPoly,
    max_hessians: u64,
    certified: *mut bool,
    out: *mut *mut c_char,
) -> PlStatus {
    guard(|| {
        check_out(out)?;
        check_out(certified)?;
        let cert = is_lorentzian_with(&deref(p, "polynomial")?.0, &options(max_hessians))?;
        *certified = cert.is_certified();
        *out = to_c_string(json(&cert)?);
        Ok(())
    })
}

/// Pre-Lorentzian search for `k = 0..=k_max`; the graph needs a bound colour.
///
/// # Safety
/// `g` must be a live handle; `out` and `certified` writable.
#[no_mangle]
pub unsafe extern "C" fn pl_certify_pre_lorentzian(
    g: *const PlGraph,
    k_max: u32,
    max_hessians: u64,
    certified: *mut bool,
    out: *mut *mut c_char,
) -> PlStatus {
    guard(|| {
        check_out(out)?;
        check_out(certified)?;
        let pg = deref(g, "graph")?.partitioned()?;
        let cert = is_pre_lorentzian(&pg, k_max, &options(max_hessians))?;
        *certified = cert.is_certified();
        *out = to_c_string(json(&cert)?);
        Ok(())
    })
}

fn options(max_hessians: u64) -> CertifyOptions {
    let mut o = CertifyOptions::default();
    if max_hessians > 0 {
        o.max_hessians = max_hessians;
    }
    o
}
