//! C interface to `bei-core`.
//!
//! Graphs are opaque `BeiGraph` handles. Every fallible call returns a
//! `BeiStatus`; on failure `bei_last_error` describes the problem for the
//! calling thread. Strings handed out by the library are released with
//! `bei_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use bei_core::gbg::random_gbg;
use bei_core::graph::parse_graph;
use bei_core::oracle::{oracle_summary, FieldChoice, OracleConfig, DEFAULT_MAX_VARS};
use bei_core::report::{analyze, decomposition_report};
use bei_core::verify::verify_graph;
use bei_core::{Error, Graph};

/// Result codes shared by all entry points.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    NotChordal = 5,
    NotGbg = 6,
    ResourceLimit = 7,
    /// The verification report was produced and contains a failed check.
    VerifyFailed = 8,
    Io = 9,
    Internal = 10,
}

/// Opaque graph handle.
pub struct BeiGraph {
    graph: Graph,
}

/// Oracle settings. Obtain defaults from `bei_oracle_options_default`.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct BeiOracleOptions {
    /// 0 for the rationals, otherwise a prime below 2^32.
    pub characteristic: u64,
    /// Largest admissible ring size `2n`.
    pub max_vars: usize,
    pub prune: bool,
    /// Wall-clock limit in seconds; 0 disables it.
    pub time_limit_secs: f64,
    /// Limit on examined subsets; 0 disables it.
    pub max_subsets: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BeiStatus {
    match e {
        Error::Parse { .. } => BeiStatus::ParseError,
        Error::NotChordal => BeiStatus::NotChordal,
        Error::NotGbg => BeiStatus::NotGbg,
        Error::ResourceLimit(_) => BeiStatus::ResourceLimit,
        Error::Io(_) => BeiStatus::Io,
        Error::VertexOutOfRange { .. }
        | Error::NotAnEdge(..)
        | Error::NotMinimalCutSet(_)
        | Error::NotCutPointSet(_)
        | Error::InvalidParameter(_) => BeiStatus::InvalidArgument,
    }
}

struct Failure(BeiStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BeiStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, records failures and converts panics into `Internal`.
fn guard(body: impl FnOnce() -> Result<BeiStatus, Failure>) -> BeiStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            BeiStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const BeiGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(BeiStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_graph(out: *mut *mut BeiGraph, graph: Graph) {
    *out = Box::into_raw(Box::new(BeiGraph { graph }));
}

fn oracle_config(options: *const BeiOracleOptions) -> Result<OracleConfig, Failure> {
    // SAFETY: the caller passes null or a valid pointer.
    let Some(o) = (unsafe { options.as_ref() }) else {
        return Ok(OracleConfig::default());
    };
    let time_limit = if o.time_limit_secs > 0.0 && o.time_limit_secs.is_finite() {
        Some(Duration::from_secs_f64(o.time_limit_secs))
    } else if o.time_limit_secs == 0.0 {
        None
    } else {
        return Err(Failure(
            BeiStatus::InvalidArgument,
            "time limit must be non-negative".into(),
        ));
    };
    Ok(OracleConfig {
        field: FieldChoice::from_characteristic(o.characteristic)?,
        max_vars: o.max_vars,
        prune: o.prune,
        time_limit,
        subset_limit: (o.max_subsets > 0).then_some(o.max_subsets),
    })
}

/// Default oracle settings: rationals, the built-in variable cap, pruning on
/// and no time or subset limit.
#[no_mangle]
pub extern "C" fn bei_oracle_options_default() -> BeiOracleOptions {
    BeiOracleOptions {
        characteristic: 0,
        max_vars: DEFAULT_MAX_VARS,
        prune: true,
        time_limit_secs: 0.0,
        max_subsets: 0,
    }
}

/// Parses the text graph format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_parse(text: *const c_char, out: *mut *mut BeiGraph) -> BeiStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(BeiStatus::InvalidUtf8, e.to_string()))?;
        write_graph(out, parse_graph(s)?);
        Ok(BeiStatus::Ok)
    })
}

/// Builds a graph on vertices `1..=n` from `edge_count` pairs stored
/// consecutively in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (it may be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut BeiGraph,
) -> BeiStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        write_graph(out, Graph::from_edges(n, pairs)?);
        Ok(BeiStatus::Ok)
    })
}

/// Random connected generalized block graph, deterministic in `seed`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bei_generate(
    seed: u64,
    facets: usize,
    max_clique: usize,
    out: *mut *mut BeiGraph,
) -> BeiStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write_graph(out, random_gbg(seed, facets, max_clique)?.graph);
        Ok(BeiStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_free(g: *mut BeiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_vertex_count(g: *const BeiGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.n())
}

/// Serializes the graph in the text format.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bei_graph_to_text(g: *const BeiGraph, out: *mut *mut c_char) -> BeiStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, graph.to_text())?;
        Ok(BeiStatus::Ok)
    })
}

/// Invariants, bounds and predictions as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bei_analyze_json(g: *const BeiGraph, out: *mut *mut c_char) -> BeiStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(
            out,
            serde_json::to_string(&analyze(graph)).expect("reports serialize"),
        )?;
        Ok(BeiStatus::Ok)
    })
}

/// Decomposition at glue vertices as JSON. Fails with `NOT_CHORDAL` on
/// graphs that are not chordal.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bei_decompose_json(g: *const BeiGraph, out: *mut *mut c_char) -> BeiStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(
            out,
            serde_json::to_string(&decomposition_report(graph)?).expect("reports serialize"),
        )?;
        Ok(BeiStatus::Ok)
    })
}

/// Betti table of `S/in(J_G)` as JSON. `options` may be null for defaults.
///
/// # Safety
/// `g` must be a live handle, `options` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bei_oracle_json(
    g: *const BeiGraph,
    options: *const BeiOracleOptions,
    out: *mut *mut c_char,
) -> BeiStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let summary = oracle_summary(graph, &oracle_config(options)?)?;
        write_string(out, summary.table.to_json().to_string())?;
        Ok(BeiStatus::Ok)
    })
}

/// Verification report as JSON. The report is written even when a check
/// fails, in which case the status is `VERIFY_FAILED`.
///
/// # Safety
/// `g` must be a live handle, `options` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bei_verify_json(
    g: *const BeiGraph,
    options: *const BeiOracleOptions,
    out: *mut *mut c_char,
) -> BeiStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let outcome = verify_graph(graph, &oracle_config(options)?)?;
        write_string(out, serde_json::to_string(&outcome).expect("reports serialize"))?;
        if outcome.all_passed() {
            Ok(BeiStatus::Ok)
        } else {
            set_last_error("a verification check failed");
            Ok(BeiStatus::VerifyFailed)
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bei_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bei_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
