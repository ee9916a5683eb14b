//! C ABI over `pcolor`.
//!
//! Graphs live behind the opaque `PcGraph` handle. Every fallible call
//! returns a `PcStatus`; on failure a message is available from
//! `pc_last_error_message` on the same thread until the next call.
//! Strings returned through `char **` are owned by the caller and released
//! with `pc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pcolor::families::Universe;
use pcolor::{Error, FamilyId, Graph};

/// Opaque graph handle.
pub struct PcGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OrderTooLarge = 4,
    InvalidArgument = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcUniverse {
    VertexCritical = 0,
    Critical = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = msg.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> PcStatus {
    match e {
        Error::Graph6(_) | Error::EdgeList { .. } | Error::Family(_) | Error::Certificate(_) | Error::Coloring(_) => PcStatus::Parse,
        Error::OrderTooLarge { .. } => PcStatus::OrderTooLarge,
        _ => PcStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (PcStatus, String)>) -> PcStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PcStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (PcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (PcStatus, String) {
    (PcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (PcStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (PcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph<'a>(g: *const PcGraph) -> Result<&'a Graph, (PcStatus, String)> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn emit_graph(out: *mut *mut PcGraph, g: Graph) -> Result<(), (PcStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(PcGraph { inner: g }));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), (PcStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).map_err(|_| (PcStatus::Internal, "string contains nul".to_string()))?.into_raw();
    Ok(())
}

unsafe fn fill<T: Copy>(buf: *mut T, len: usize, values: &[T]) -> Result<(), (PcStatus, String)> {
    if buf.is_null() {
        return Ok(());
    }
    if len < values.len() {
        return Err((PcStatus::BufferTooSmall, format!("buffer holds {len} entries, {} needed", values.len())));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    Ok(())
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn pc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `g6` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_graph6(g6: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        let s = text(g6, "g6")?;
        emit_graph(out, pcolor::parse_graph6(s.trim()).map_err(lib_err)?)
    })
}

/// Edge-list text: optional `n <order>` line, then one `u v` pair per line.
///
/// # Safety
/// `edges` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_edge_list(edges: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        let s = text(edges, "edges")?;
        emit_graph(out, pcolor::parse_edge_list(s).map_err(lib_err)?)
    })
}

/// Generates a family member from its id, e.g. `"F1(l=5)"` or `"H7"`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_family(spec: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        let id: FamilyId = text(spec, "spec")?.parse().map_err(lib_err)?;
        emit_graph(out, pcolor::generate(&id).map_err(lib_err)?)
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn pc_graph_order(g: *const PcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.order())
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn pc_graph_size(g: *const PcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.size())
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_to_graph6(g: *const PcGraph, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let g = graph(g)?;
        emit_string(out, pcolor::to_graph6(g).map_err(lib_err)?)
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Packing chromatic number. When `colors` is non-null it receives a
/// witness colouring and must hold `pc_graph_order(g)` entries.
///
/// # Safety
/// `g` must be a live handle, `value` writable, `colors` null or `len` long.
#[no_mangle]
pub unsafe extern "C" fn pc_chi_rho(g: *const PcGraph, value: *mut u32, colors: *mut u32, len: usize) -> PcStatus {
    guard(|| {
        let g = graph(g)?;
        if value.is_null() {
            return Err(null("value"));
        }
        if !colors.is_null() && len < g.order() {
            return Err((PcStatus::BufferTooSmall, format!("buffer holds {len} entries, {} needed", g.order())));
        }
        let r = pcolor::chi_rho(g).map_err(lib_err)?;
        fill(colors, len, r.witness.colors())?;
        *value = r.value;
        Ok(())
    })
}

/// Searches for a `k`-packing colouring; `found` reports the outcome.
///
/// # Safety
/// `g` must be a live handle, `found` writable, `colors` null or `len` long.
#[no_mangle]
pub unsafe extern "C" fn pc_find_coloring(g: *const PcGraph, k: u32, found: *mut bool, colors: *mut u32, len: usize) -> PcStatus {
    guard(|| {
        let g = graph(g)?;
        if found.is_null() {
            return Err(null("found"));
        }
        if !colors.is_null() && len < g.order() {
            return Err((PcStatus::BufferTooSmall, format!("buffer holds {len} entries, {} needed", g.order())));
        }
        match pcolor::find_k_packing_coloring(g, k) {
            Some(c) => {
                fill(colors, len, c.colors())?;
                *found = true;
            }
            None => *found = false,
        }
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_is_k_vertex_critical(g: *const PcGraph, k: u32, out: *mut bool) -> PcStatus {
    guard(|| {
        let g = graph(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = pcolor::is_k_vertex_critical(g, k).map_err(lib_err)?;
        Ok(())
    })
}

/// Deletion sweeps; any of the out pointers may be null.
///
/// # Safety
/// `g` must be a live handle; non-null out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_analyze(g: *const PcGraph, chi: *mut u32, vertex_critical: *mut bool, subgraph_critical: *mut bool) -> PcStatus {
    guard(|| {
        let r = pcolor::analyze(graph(g)?).map_err(lib_err)?;
        if let Some(p) = chi.as_mut() {
            *p = r.chi;
        }
        if let Some(p) = vertex_critical.as_mut() {
            *p = r.vertex_critical;
        }
        if let Some(p) = subgraph_critical.as_mut() {
            *p = r.subgraph_critical;
        }
        Ok(())
    })
}

/// Structural recognition of packing chromatic number 3. On acceptance,
/// `parts` (if non-null) receives the part index 0..=7 of every vertex.
///
/// # Safety
/// `g` must be a live handle, `accepted` writable, `parts` null or `len` long.
#[no_mangle]
pub unsafe extern "C" fn pc_recognize_g3(g: *const PcGraph, accepted: *mut bool, parts: *mut u8, len: usize) -> PcStatus {
    guard(|| {
        let g = graph(g)?;
        if accepted.is_null() {
            return Err(null("accepted"));
        }
        match pcolor::recognize_g3(g).map_err(lib_err)? {
            Some(cert) => {
                let idx: Vec<u8> = cert.parts.iter().map(|&p| p as u8).collect();
                fill(parts, len, &idx)?;
                *accepted = true;
            }
            None => *accepted = false,
        }
        Ok(())
    })
}

/// Space-separated family ids matching `g`; empty when none match.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_classify(g: *const PcGraph, universe: PcUniverse, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let g = graph(g)?;
        let universe = match universe {
            PcUniverse::VertexCritical => Universe::VertexCritical,
            PcUniverse::Critical => Universe::Critical,
        };
        let ids = pcolor::classify(g, universe).map_err(lib_err)?.ids();
        emit_string(out, ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
    })
}
