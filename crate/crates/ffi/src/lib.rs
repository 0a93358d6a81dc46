//! C ABI over `chromideal`.
//!
//! Graphs cross the boundary as opaque `CiGraph` handles, released with
//! `ci_graph_free`. Every function returns a `CiStatus`; on failure a
//! description is available from `ci_last_error_message` on the same
//! thread. Results are written through out-pointers, which are left
//! untouched on failure. Strings returned by the library are released with
//! `ci_string_free`.

use chromideal::cli::{component_json, rational_str};
use chromideal::coloring::{b_fold_chromatic, chi, fractional_chromatic, is_critical};
use chromideal::correspondence::verify_correspondence;
use chromideal::graph::{Graph, VertexSet};
use chromideal::ideal::{cover_ideal, irreducible_decomposition, IrreducibleIdeal};
use chromideal::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    VertexOutOfRange = 3,
    TooManyVertices = 4,
    NoEdges = 5,
    IsolatedVertex = 6,
    NotCritical = 7,
    Overflow = 8,
    Internal = 9,
    Panic = 10,
}

/// Builtin graph families for `ci_graph_family`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CiFamily {
    Cycle = 0,
    Complete = 1,
    Antihole = 2,
    Path = 3,
    /// Ignores `n`.
    Petersen = 4,
    /// Mycielski graph of the cycle on `n` vertices.
    MycielskiCycle = 5,
}

/// Opaque graph handle.
pub struct CiGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<Vec<u8>>) {
    let mut bytes = message.into();
    bytes.retain(|&b| b != 0);
    let text = CString::new(bytes).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> CiStatus {
    match e {
        Error::VertexOutOfRange { .. } => CiStatus::VertexOutOfRange,
        Error::TooManyVertices(_) => CiStatus::TooManyVertices,
        Error::NoEdges => CiStatus::NoEdges,
        Error::IsolatedVertex(_) => CiStatus::IsolatedVertex,
        Error::NotCritical { .. } => CiStatus::NotCritical,
        Error::InvariantViolation(_) => CiStatus::Internal,
        _ => CiStatus::InvalidArgument,
    }
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (CiStatus, String)>) -> CiStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            CiStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside chromideal");
            CiStatus::Panic
        }
    }
}

fn lib(e: Error) -> (CiStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CiStatus, String) {
    (CiStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn graph_ref<'a>(g: *const CiGraph) -> Result<&'a Graph, (CiStatus, String)> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (CiStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_graph(out: *mut *mut CiGraph, g: Graph) -> Result<(), (CiStatus, String)> {
    write(out, Box::into_raw(Box::new(CiGraph(g))))
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], (CiStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

/// Message for the most recent failure on this thread (empty after a
/// success). Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn ci_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Graph on `n` vertices; `edges` holds `edge_count` pairs as `2 * edge_count`
/// 0-based endpoints.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut CiGraph,
) -> CiStatus {
    guard(|| {
        let len = edge_count
            .checked_mul(2)
            .ok_or((CiStatus::Overflow, "edge count overflows".to_string()))?;
        let flat = slice(edges, len, "edges")?;
        let g = Graph::new(n, flat.chunks(2).map(|p| (p[0], p[1]))).map_err(lib)?;
        write_graph(out, g)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_family(kind: CiFamily, n: usize, out: *mut *mut CiGraph) -> CiStatus {
    guard(|| {
        let g = match kind {
            CiFamily::Cycle => Graph::cycle(n),
            CiFamily::Complete => Graph::complete(n),
            CiFamily::Antihole => Graph::antihole(n),
            CiFamily::Path => Graph::path(n),
            CiFamily::Petersen => Ok(Graph::petersen()),
            CiFamily::MycielskiCycle => Graph::cycle(n).and_then(|c| c.mycielski()),
        }
        .map_err(lib)?;
        write_graph(out, g)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_free(g: *mut CiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_vertex_count(g: *const CiGraph, out: *mut usize) -> CiStatus {
    guard(|| write(out, graph_ref(g)?.n()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_edge_count(g: *const CiGraph, out: *mut usize) -> CiStatus {
    guard(|| write(out, graph_ref(g)?.edge_count()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_chromatic_number(g: *const CiGraph, out: *mut usize) -> CiStatus {
    guard(|| write(out, chi(graph_ref(g)?)))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_is_critical(g: *const CiGraph, out: *mut bool) -> CiStatus {
    guard(|| write(out, is_critical(graph_ref(g)?).map_err(lib)?.critical))
}

/// `χ_f` as the reduced fraction `num / den`.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ci_fractional_chromatic(g: *const CiGraph, num: *mut i64, den: *mut i64) -> CiStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(null("output pointer"));
        }
        let value = fractional_chromatic(graph_ref(g)?).map_err(lib)?.value;
        write(num, *value.numer())?;
        write(den, *value.denom())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_b_fold_chromatic(g: *const CiGraph, b: usize, out: *mut usize) -> CiStatus {
    guard(|| write(out, b_fold_chromatic(graph_ref(g)?, b).map_err(lib)?.value))
}

/// Expansion at the `w_len` vertices in `w`; the result is a new handle.
///
/// # Safety
/// `g` must be a live handle, `w` must point to `w_len` readable values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_expand(
    g: *const CiGraph,
    w: *const usize,
    w_len: usize,
    out: *mut *mut CiGraph,
) -> CiStatus {
    guard(|| {
        let set = VertexSet::new(slice(w, w_len, "w")?.iter().copied());
        write_graph(out, graph_ref(g)?.expand(&set).map_err(lib)?)
    })
}

/// `s`-th expansion; shadow `j` (1-based) of vertex `i` is vertex `i*s + j - 1`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_power_expansion(g: *const CiGraph, s: usize, out: *mut *mut CiGraph) -> CiStatus {
    guard(|| write_graph(out, graph_ref(g)?.power_expansion(s).map_err(lib)?))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_graph_mycielski(g: *const CiGraph, out: *mut *mut CiGraph) -> CiStatus {
    guard(|| write_graph(out, graph_ref(g)?.mycielski().map_err(lib)?))
}

/// Whether every component of `J(G)^s` corresponds to a critically
/// `(s+1)`-chromatic induced subgraph of the `s`-th expansion.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_verify_correspondence(
    g: *const CiGraph,
    s: usize,
    converse: bool,
    out: *mut bool,
) -> CiStatus {
    guard(|| {
        write(
            out,
            verify_correspondence(graph_ref(g)?, s, converse)
                .map_err(lib)?
                .all_verified(),
        )
    })
}

/// Decomposition of `J(G)^s` as a JSON object with keys `components`
/// (lists such as `["x1^2","x3^1"]`) and `associated_primes` (0-based
/// vertex lists). Release the string with `ci_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_decompose_json(g: *const CiGraph, s: usize, out: *mut *mut c_char) -> CiStatus {
    guard(|| {
        let j = cover_ideal(graph_ref(g)?).and_then(|j| j.power(s)).map_err(lib)?;
        let d = irreducible_decomposition(&j).map_err(lib)?;
        let mut primes: Vec<VertexSet> = d.components().iter().map(IrreducibleIdeal::support).collect();
        primes.sort();
        primes.dedup();
        let components: Vec<String> = d.components().iter().map(|c| component_json(c).to_string()).collect();
        let primes: Vec<String> = primes
            .iter()
            .map(|p| format!("[{}]", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let text = format!(
            "{{\"associated_primes\":[{}],\"components\":[{}]}}",
            primes.join(","),
            components.join(",")
        );
        write(out, CString::new(text).expect("JSON has no NULs").into_raw())
    })
}

/// `χ_f` formatted as `"p/q"`. Release with `ci_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_fractional_chromatic_string(g: *const CiGraph, out: *mut *mut c_char) -> CiStatus {
    guard(|| {
        let value = fractional_chromatic(graph_ref(g)?).map_err(lib)?.value;
        write(out, CString::new(rational_str(&value)).expect("digits only").into_raw())
    })
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ci_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ci_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}
