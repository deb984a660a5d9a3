//! C ABI over `arindex`.
//!
//! Every function returns an [`ArxStatus`]. On failure a description is kept
//! per thread and can be read with [`arx_last_error`]. Graphs are opaque
//! handles owned by the caller and released with [`arx_graph_free`].
//! Labelings are arrays aligned to the canonical edge order reported by
//! [`arx_graph_edge`]. A budget of 0 milliseconds means no budget.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;
use std::time::Duration;

use arindex::check::{is_ar_labeling, Labeling};
use arindex::dss::is_dss;
use arindex::error::Error;
use arindex::es::{es, EsConfig};
use arindex::graph::{Family, Graph};
use arindex::solver::{ari, find_ar_labeling, Feasibility, SearchConfig};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArxStatus {
    Ok = 0,
    InvalidInput = 1,
    Range = 2,
    Parse = 3,
    Io = 4,
    UnsupportedSize = 5,
    Internal = 6,
    NullPointer = 7,
    /// The search ran out of budget; outputs hold the best bounds known.
    BudgetExhausted = 8,
    /// An output buffer is shorter than the graph's edge count.
    BufferTooSmall = 9,
    Panic = 10,
}

/// Outcome of a fixed-`k` search.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArxSearch {
    Found = 0,
    Refuted = 1,
    TimedOut = 2,
}

/// Opaque graph handle.
pub struct ArxGraph(Graph);

/// AR-index bounds; `lower == upper` when `exact`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ArxAri {
    pub exact: bool,
    pub lower: u64,
    pub upper: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> ArxStatus {
    match e {
        Error::InvalidInput(_) => ArxStatus::InvalidInput,
        Error::Range(_) => ArxStatus::Range,
        Error::Parse { .. } => ArxStatus::Parse,
        Error::Io { .. } => ArxStatus::Io,
        Error::UnsupportedSize(_) => ArxStatus::UnsupportedSize,
        Error::Internal(_) => ArxStatus::Internal,
    }
}

struct Fail(ArxStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(ArxStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<ArxStatus, Fail>) -> ArxStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside arindex".to_string());
            ArxStatus::Panic
        }
    }
}

fn budget(ms: u64) -> Option<Duration> {
    (ms > 0).then(|| Duration::from_millis(ms))
}

/// # Safety
/// `p` must be null or valid for `len` reads.
unsafe fn input<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

/// # Safety
/// `p` must be null or valid for one write.
unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

/// # Safety
/// `g` must be null or a live handle from this library.
unsafe fn graph<'a>(g: *const ArxGraph, what: &str) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

fn into_handle(g: Graph) -> *mut ArxGraph {
    Box::into_raw(Box::new(ArxGraph(g)))
}

/// Last error message on this thread, or null. Valid until the next call
/// into this library from the same thread.
#[no_mangle]
pub extern "C" fn arx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a family graph from a spec such as `"complete 5"` or `"bistar 3 3"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_graph_from_family(spec: *const c_char, out: *mut *mut ArxGraph) -> ArxStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        let text = CStr::from_ptr(spec)
            .to_str()
            .map_err(|_| Fail(ArxStatus::InvalidInput, "spec is not UTF-8".into()))?;
        let g = text.parse::<Family>()?.build()?;
        write(out, into_handle(g), "out")?;
        Ok(ArxStatus::Ok)
    })
}

/// Builds a graph from `edge_count` endpoint pairs stored flat in `endpoints`.
///
/// # Safety
/// `endpoints` must hold `2 * edge_count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_graph_from_edges(
    vertex_count: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut ArxGraph,
) -> ArxStatus {
    guard(|| {
        let len = edge_count
            .checked_mul(2)
            .ok_or_else(|| Fail(ArxStatus::Range, "edge_count overflows".into()))?;
        let flat = input(endpoints, len, "endpoints")?;
        let g = Graph::new(vertex_count, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        write(out, into_handle(g), "out")?;
        Ok(ArxStatus::Ok)
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn arx_graph_free(g: *mut ArxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_graph_vertex_count(g: *const ArxGraph, out: *mut usize) -> ArxStatus {
    guard(|| {
        write(out, graph(g, "graph")?.vertex_count(), "out")?;
        Ok(ArxStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_graph_edge_count(g: *const ArxGraph, out: *mut usize) -> ArxStatus {
    guard(|| {
        write(out, graph(g, "graph")?.edge_count(), "out")?;
        Ok(ArxStatus::Ok)
    })
}

/// Endpoints `u < v` of edge `index` in canonical order.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_graph_edge(g: *const ArxGraph, index: usize, u: *mut usize, v: *mut usize) -> ArxStatus {
    guard(|| {
        let g = graph(g, "graph")?;
        if index >= g.edge_count() {
            return Err(Fail(ArxStatus::InvalidInput, format!("edge {index} out of range")));
        }
        let (a, b) = g.edge(index);
        write(u, a, "u")?;
        write(v, b, "v")?;
        Ok(ArxStatus::Ok)
    })
}

/// Whether `elements` have pairwise distinct subset sums.
///
/// # Safety
/// `elements` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_is_dss(elements: *const u64, len: usize, out: *mut bool) -> ArxStatus {
    guard(|| {
        let ok = is_dss(input(elements, len, "elements")?)?;
        write(out, ok, "out")?;
        Ok(ArxStatus::Ok)
    })
}

/// Computes `ES(n)`. On `BudgetExhausted`, `lower` and `upper` bracket it.
/// `witness` may be null; otherwise it receives `n` elements with maximum `upper`.
///
/// # Safety
/// `lower`, `upper` must be writable; `witness` null or valid for `n` writes.
#[no_mangle]
pub unsafe extern "C" fn arx_es(
    n: usize,
    budget_ms: u64,
    lower: *mut u64,
    upper: *mut u64,
    witness: *mut u64,
) -> ArxStatus {
    guard(|| {
        let rec = es(
            n,
            &EsConfig {
                budget: budget(budget_ms),
                threads: 1,
            },
        )?;
        write(lower, rec.lower, "lower")?;
        write(upper, rec.upper, "upper")?;
        if !witness.is_null() {
            slice::from_raw_parts_mut(witness, n).copy_from_slice(rec.witness.elements());
        }
        Ok(if rec.is_exact() {
            ArxStatus::Ok
        } else {
            ArxStatus::BudgetExhausted
        })
    })
}

/// Checks an edge labeling; `ok` is false on injectivity or subset-sum failure.
///
/// # Safety
/// `labels` must hold `len` values; `ok` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arx_verify(g: *const ArxGraph, labels: *const u64, len: usize, ok: *mut bool) -> ArxStatus {
    guard(|| {
        let g = graph(g, "graph")?;
        let l = Labeling::new(input(labels, len, "labels")?.to_vec())?;
        write(ok, is_ar_labeling(g, &l)?.ok, "ok")?;
        Ok(ArxStatus::Ok)
    })
}

fn copy_labels(labels: &[u64], out: *mut u64, out_len: usize) -> Result<(), Fail> {
    if out.is_null() {
        return Ok(());
    }
    if out_len < labels.len() {
        return Err(Fail(
            ArxStatus::BufferTooSmall,
            format!("labels buffer holds {out_len}, need {}", labels.len()),
        ));
    }
    // SAFETY: the caller promises `out` is valid for `out_len` writes.
    unsafe { slice::from_raw_parts_mut(out, labels.len()) }.copy_from_slice(labels);
    Ok(())
}

/// Searches for an AR-labeling with labels in `1..=k`.
/// `labels` may be null; otherwise it must hold at least the edge count.
///
/// # Safety
/// `g` must be a live handle; `result` writable; `labels` null or valid for `labels_len` writes.
#[no_mangle]
pub unsafe extern "C" fn arx_find_labeling(
    g: *const ArxGraph,
    k: u64,
    budget_ms: u64,
    threads: u32,
    result: *mut ArxSearch,
    labels: *mut u64,
    labels_len: usize,
) -> ArxStatus {
    guard(|| {
        let g = graph(g, "graph")?;
        let cfg = SearchConfig {
            budget: budget(budget_ms),
            threads: threads.max(1) as usize,
            ..SearchConfig::default()
        };
        let attempt = find_ar_labeling(g, k, &cfg)?;
        let outcome = match &attempt.result {
            Feasibility::Found { labeling } => {
                copy_labels(labeling.labels(), labels, labels_len)?;
                ArxSearch::Found
            }
            Feasibility::Refuted | Feasibility::RefutedByBound => ArxSearch::Refuted,
            Feasibility::TimedOut => ArxSearch::TimedOut,
        };
        write(result, outcome, "result")?;
        Ok(ArxStatus::Ok)
    })
}

/// Computes the AR-index. Returns `BudgetExhausted` with bounds in `out` when
/// the budget runs out. `labels` may be null; otherwise it receives the
/// witness when exact.
///
/// # Safety
/// `g` must be a live handle; `out` writable; `labels` null or valid for `labels_len` writes.
#[no_mangle]
pub unsafe extern "C" fn arx_ari(
    g: *const ArxGraph,
    budget_ms: u64,
    threads: u32,
    out: *mut ArxAri,
    labels: *mut u64,
    labels_len: usize,
) -> ArxStatus {
    guard(|| {
        let g = graph(g, "graph")?;
        let cfg = SearchConfig {
            budget: budget(budget_ms),
            threads: threads.max(1) as usize,
            ..SearchConfig::default()
        };
        let res = ari(g, &cfg)?;
        if let Some(w) = &res.witness {
            copy_labels(w.labels(), labels, labels_len)?;
        }
        let exact = res.value().is_some();
        write(
            out,
            ArxAri {
                exact,
                lower: res.lower,
                upper: res.upper,
            },
            "out",
        )?;
        Ok(if exact {
            ArxStatus::Ok
        } else {
            ArxStatus::BudgetExhausted
        })
    })
}
