//! C ABI over the `bchromatic` library.
//!
//! Graphs and colorings are opaque heap handles released with
//! `bc_graph_free` / `bc_coloring_free`. Every fallible call returns a
//! [`BcStatus`]; on failure `bc_last_error_message` describes the error
//! until the next failing call on the same thread. Strings handed out by
//! the library must be released with `bc_string_free`. Colors are 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bchromatic::analysis::check_theorem_hypotheses;
use bchromatic::cli::generate;
use bchromatic::constructive::{
    construct, verify_bcoloring, Certificate, Coloring, ConstructionError, Strategy,
};
use bchromatic::graph::{self, Graph};
use bchromatic::oracle::{exact_b_chromatic, OracleConfig, OracleError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    /// Null pointer, bad UTF-8 or an out-of-range argument.
    InvalidArgument = 1,
    /// Malformed graph text or generator spec.
    Parse = 2,
    /// The graph does not meet the requested strategy's hypothesis.
    Hypothesis = 3,
    /// An internal invariant failed.
    Internal = 4,
    /// The graph exceeds the exact-search ceiling.
    OracleRefused = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcStrategy {
    Auto = 0,
    LowerBound = 1,
    Diameter = 2,
    Connectivity = 3,
}

/// Opaque graph handle.
pub struct BcGraph {
    inner: Graph,
}

/// Opaque coloring handle.
pub struct BcColoring {
    coloring: Coloring,
    strategy: Option<Strategy>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).unwrap_or_default());
}

struct Failure(BcStatus, String);

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let status = match e {
            ConstructionError::Hypothesis(_) => BcStatus::Hypothesis,
            ConstructionError::Input(_) => BcStatus::InvalidArgument,
            ConstructionError::NoMatching { .. } | ConstructionError::Invariant(_) => {
                BcStatus::Internal
            }
        };
        Failure(status, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let status = match e {
            OracleError::TooLarge { .. } => BcStatus::OracleRefused,
            OracleError::InvalidK { .. } => BcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(message: &str) -> Failure {
    Failure(BcStatus::InvalidArgument, message.to_string())
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside bchromatic");
            BcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(invalid("null string"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| invalid("string is not UTF-8"))
}

unsafe fn graph_ref<'a>(g: *const BcGraph) -> Result<&'a Graph, Failure> {
    g.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| invalid("null graph"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("null output pointer"));
    }
    *out = CString::new(text)
        .map_err(|_| Failure(BcStatus::Internal, "interior NUL in output".into()))?
        .into_raw();
    Ok(())
}

/// Message for the last failing call on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn bc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the `n m` header plus `m` lines of `u v` format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut BcGraph,
) -> BcStatus {
    guard(|| {
        let g = graph::parse_edge_list(read_str(text)?)
            .map_err(|e| Failure(BcStatus::Parse, e.to_string()))?;
        put(out, BcGraph { inner: g })
    })
}

/// Parses DIMACS `p edge` / `e u v` text (1-based vertices).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_from_dimacs(
    text: *const c_char,
    out: *mut *mut BcGraph,
) -> BcStatus {
    guard(|| {
        let g = graph::parse_dimacs(read_str(text)?)
            .map_err(|e| Failure(BcStatus::Parse, e.to_string()))?;
        put(out, BcGraph { inner: g })
    })
}

/// Builds a graph on `n` vertices from `m` pairs stored flat in `edges`
/// (`edges[2i]`, `edges[2i+1]`, 0-based).
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is
/// 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut BcGraph,
) -> BcStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(invalid("null edge array"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        let g = Graph::from_edges(n, pairs).map_err(|e| invalid(&e.to_string()))?;
        put(out, BcGraph { inner: g })
    })
}

/// Generator spec as accepted by the CLI: `petersen`, `heawood`,
/// `kdd:<d>`, `cycle:<n>` or `random:<d>,<n>`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_generate(
    spec: *const c_char,
    seed: u64,
    out: *mut *mut BcGraph,
) -> BcStatus {
    guard(|| {
        let g =
            generate(read_str(spec)?, seed).map_err(|e| Failure(BcStatus::Parse, e.to_string()))?;
        put(out, BcGraph { inner: g })
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_free(g: *mut BcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Returns 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_vertex_count(g: *const BcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.vertex_count())
}

/// Returns 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_edge_count(g: *const BcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// Structural report as JSON (same keys as `bchromatic analyze`).
///
/// # Safety
/// `g` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_analyze_json(
    g: *const BcGraph,
    out_json: *mut *mut c_char,
) -> BcStatus {
    guard(|| {
        let report = check_theorem_hypotheses(graph_ref(g)?);
        let text = serde_json::to_string(&report)
            .map_err(|e| Failure(BcStatus::Internal, e.to_string()))?;
        put_string(out_json, text)
    })
}

/// Exact b-chromatic number; refuses graphs above `max_vertices`.
/// `out_witness` may be null.
///
/// # Safety
/// `g` must be a live handle, `out_phi` valid, `out_witness` null or valid.
#[no_mangle]
pub unsafe extern "C" fn bc_exact_phi(
    g: *const BcGraph,
    max_vertices: usize,
    out_phi: *mut usize,
    out_witness: *mut *mut BcColoring,
) -> BcStatus {
    guard(|| {
        if out_phi.is_null() {
            return Err(invalid("null output pointer"));
        }
        let result = exact_b_chromatic(graph_ref(g)?, &OracleConfig { max_vertices })?;
        *out_phi = result.phi;
        if !out_witness.is_null() {
            put(
                out_witness,
                BcColoring {
                    coloring: result.witness,
                    strategy: None,
                },
            )?;
        }
        Ok(())
    })
}

/// Constructs and verifies a b-coloring with the given strategy.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_color(
    g: *const BcGraph,
    strategy: BcStrategy,
    out: *mut *mut BcColoring,
) -> BcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let requested = match strategy {
            BcStrategy::Auto => None,
            BcStrategy::LowerBound => Some(Strategy::LowerBound),
            BcStrategy::Diameter => Some(Strategy::Diameter),
            BcStrategy::Connectivity => Some(Strategy::Connectivity),
        };
        let built = construct(graph, requested)?;
        if !verify_bcoloring(graph, &built.coloring)?.is_b_coloring {
            return Err(Failure(
                BcStatus::Internal,
                "self-verification failed".into(),
            ));
        }
        put(
            out,
            BcColoring {
                coloring: built.coloring,
                strategy: Some(built.strategy),
            },
        )
    })
}

/// # Safety
/// `c` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_free(c: *mut BcColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of colors used; 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_palette(c: *const BcColoring) -> usize {
    c.as_ref().map_or(0, |h| h.coloring.palette())
}

/// Number of vertices colored; 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_len(c: *const BcColoring) -> usize {
    c.as_ref().map_or(0, |h| h.coloring.len())
}

/// Copies the colors into `buf`, which must hold `bc_coloring_len(c)`
/// values.
///
/// # Safety
/// `c` must be a live handle and `buf` writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_colors(
    c: *const BcColoring,
    buf: *mut usize,
    len: usize,
) -> BcStatus {
    guard(|| {
        let h = c.as_ref().ok_or_else(|| invalid("null coloring"))?;
        let colors = h.coloring.colors();
        if buf.is_null() || len < colors.len() {
            return Err(invalid("buffer too small"));
        }
        std::slice::from_raw_parts_mut(buf, colors.len()).copy_from_slice(colors);
        Ok(())
    })
}

/// Certificate JSON (`palette`, `assignment`, `dominating`, `strategy`).
///
/// # Safety
/// `g` and `c` must be live handles and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_certificate_json(
    g: *const BcGraph,
    c: *const BcColoring,
    out_json: *mut *mut c_char,
) -> BcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let h = c.as_ref().ok_or_else(|| invalid("null coloring"))?;
        if h.coloring.len() != graph.vertex_count() {
            return Err(invalid("coloring does not match the graph"));
        }
        let cert = Certificate::new(graph, &h.coloring, h.strategy);
        let text =
            serde_json::to_string(&cert).map_err(|e| Failure(BcStatus::Internal, e.to_string()))?;
        put_string(out_json, text)
    })
}

/// Checks whether `colors` (one 1-based color per vertex) is a b-coloring.
/// `out_color_count` may be null.
///
/// # Safety
/// `g` must be a live handle, `colors` readable for `len` values and
/// `out_is_b_coloring` valid.
#[no_mangle]
pub unsafe extern "C" fn bc_verify(
    g: *const BcGraph,
    colors: *const usize,
    len: usize,
    out_is_b_coloring: *mut bool,
    out_color_count: *mut usize,
) -> BcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out_is_b_coloring.is_null() || (colors.is_null() && len > 0) {
            return Err(invalid("null pointer"));
        }
        let values = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(colors, len).to_vec()
        };
        let coloring = Coloring::from_colors(values)?;
        let report = verify_bcoloring(graph, &coloring)?;
        *out_is_b_coloring = report.is_b_coloring;
        if !out_color_count.is_null() {
            *out_color_count = report.color_count();
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn error_message_is_thread_local() {
        let mut g = ptr::null_mut();
        let status = unsafe { bc_graph_generate(c"nope".as_ptr(), 0, &mut g) };
        assert_eq!(status, BcStatus::Parse);
        let msg = unsafe { CStr::from_ptr(bc_last_error_message()) };
        assert!(msg.to_str().unwrap().contains("nope"));
        std::thread::spawn(|| {
            let msg = unsafe { CStr::from_ptr(bc_last_error_message()) };
            assert!(msg.to_bytes().is_empty());
        })
        .join()
        .unwrap();
    }
}
