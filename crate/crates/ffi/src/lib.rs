//! C bindings for `bipinfluence`.
//!
//! Every object crosses the boundary as an opaque pointer owned by the
//! caller and released with its `_free` function. Every fallible call
//! returns a [`BipStatus`]; on failure `bip_last_error_message` describes
//! the error for the calling thread. Output parameters are written only on
//! success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use bipinfluence::io::{builtin_southern_women, load, Format};
use bipinfluence::pipeline::{score, Analysis};
use bipinfluence::{
    build_bipartite, run_ablation, AblationConfig, AblationReport, AnomalyType, BipartiteGraph,
    Direction, Error, Measure, Mode,
};

/// Bumped on any incompatible change to this interface.
pub const BIP_ABI_VERSION: u32 = 1;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    InvalidArgument = 5,
    UnknownNode = 6,
    EmptyGraph = 7,
    Undefined = 8,
    OutOfRange = 9,
    Internal = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipMode {
    A = 0,
    B = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipFormat {
    Tsv = 0,
    Konect = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipMeasure {
    Hh = 0,
    Degree = 1,
    Betweenness = 2,
    Closeness = 3,
    Eigenvector = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipDirection {
    Top = 0,
    Bottom = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipAnomaly {
    Born = 0,
    Vanish = 1,
    Grow = 2,
    Merge = 3,
    Split = 4,
    Shrink = 5,
    Unchanged = 6,
}

/// A bipartite graph.
pub struct BipGraph {
    inner: BipartiteGraph,
}

/// Scores of one measure. Rows keep the node order of the graph.
pub struct BipScoreTable {
    labels: Vec<CString>,
    raw: Vec<f64>,
    normalized: Vec<f64>,
}

/// Outcome of one node-removal experiment.
pub struct BipAblationReport {
    inner: AblationReport,
    removed: Vec<CString>,
}

impl From<BipMode> for Mode {
    fn from(m: BipMode) -> Mode {
        match m {
            BipMode::A => Mode::A,
            BipMode::B => Mode::B,
        }
    }
}

impl From<BipMeasure> for Measure {
    fn from(m: BipMeasure) -> Measure {
        match m {
            BipMeasure::Hh => Measure::HH,
            BipMeasure::Degree => Measure::Degree,
            BipMeasure::Betweenness => Measure::Betweenness,
            BipMeasure::Closeness => Measure::Closeness,
            BipMeasure::Eigenvector => Measure::Eigenvector,
        }
    }
}

impl From<BipAnomaly> for AnomalyType {
    fn from(a: BipAnomaly) -> AnomalyType {
        match a {
            BipAnomaly::Born => AnomalyType::Born,
            BipAnomaly::Vanish => AnomalyType::Vanish,
            BipAnomaly::Grow => AnomalyType::Grow,
            BipAnomaly::Merge => AnomalyType::Merge,
            BipAnomaly::Split => AnomalyType::Split,
            BipAnomaly::Shrink => AnomalyType::Shrink,
            BipAnomaly::Unchanged => AnomalyType::Unchanged,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(BipStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::EmptyGraph => BipStatus::EmptyGraph,
            Error::UnknownNode { .. } | Error::NoSuchEdge(..) => BipStatus::UnknownNode,
            Error::Parse { .. } => BipStatus::Parse,
            Error::Io { .. } => BipStatus::Io,
            Error::InvalidConfig(_) => BipStatus::InvalidArgument,
            Error::EigenvectorUndefined | Error::TooFewNodes(_) | Error::MismatchedTables => {
                BipStatus::Undefined
            }
            Error::Invariant(_) => BipStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: BipStatus, message: impl Into<String>) -> Failure {
    Failure(status, message.into())
}

fn set_last_error(message: String) {
    // Interior NULs cannot appear in a C string.
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BipStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            BipStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside bipinfluence".to_owned());
            BipStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(BipStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(BipStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn obj<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(BipStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(BipStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

fn c_label(s: &str) -> CString {
    CString::new(s.replace('\0', " ")).unwrap_or_default()
}

#[no_mangle]
pub extern "C" fn bip_abi_version() -> u32 {
    BIP_ABI_VERSION
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn bip_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

fn boxed_graph(inner: BipartiteGraph) -> *mut BipGraph {
    Box::into_raw(Box::new(BipGraph { inner }))
}

/// Reads an edge list from `path`.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_graph_load(
    path: *const c_char,
    format: BipFormat,
    out: *mut *mut BipGraph,
) -> BipStatus {
    guard(|| {
        let path = str_arg(path, "path")?;
        let format = match format {
            BipFormat::Tsv => Format::Tsv,
            BipFormat::Konect => Format::Konect,
        };
        let g = load(Path::new(path), format)?;
        put(out, boxed_graph(g))
    })
}

/// The embedded Southern Women network: 18 women (mode A), 14 events (mode B).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_graph_southern_women(out: *mut *mut BipGraph) -> BipStatus {
    guard(|| put(out, boxed_graph(builtin_southern_women())))
}

/// Builds a graph from `n` edges `(a_labels[i], b_labels[i])`.
/// Duplicate edges are dropped.
///
/// # Safety
/// Both arrays must hold `n` NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_graph_from_edges(
    a_labels: *const *const c_char,
    b_labels: *const *const c_char,
    n: usize,
    out: *mut *mut BipGraph,
) -> BipStatus {
    guard(|| {
        if n > 0 && (a_labels.is_null() || b_labels.is_null()) {
            return Err(fail(BipStatus::NullPointer, "label array is null"));
        }
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let a = str_arg(*a_labels.add(i), "mode A label")?;
            let b = str_arg(*b_labels.add(i), "mode B label")?;
            edges.push((a, b));
        }
        put(out, boxed_graph(build_bipartite(edges)?))
    })
}

/// # Safety
/// `g` must come from a `bip_graph_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bip_graph_free(g: *mut BipGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of nodes in `mode`.
///
/// # Safety
/// `g` must be a live graph; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_graph_node_count(
    g: *const BipGraph,
    mode: BipMode,
    out: *mut usize,
) -> BipStatus {
    guard(|| put(out, obj(g, "graph")?.inner.mode_len(mode.into())))
}

/// # Safety
/// `g` must be a live graph; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_graph_edge_count(g: *const BipGraph, out: *mut usize) -> BipStatus {
    guard(|| put(out, obj(g, "graph")?.inner.edge_count()))
}

/// Number of communities in the projection onto `onto`.
///
/// # Safety
/// `g` must be a live graph; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_community_count(
    g: *const BipGraph,
    onto: BipMode,
    min_size: usize,
    out: *mut usize,
) -> BipStatus {
    guard(|| {
        let a = Analysis::new(&obj(g, "graph")?.inner, onto.into(), min_size)?;
        put(out, a.communities.len())
    })
}

/// Scores the nodes of the mode opposite `onto`. `min_size` only affects
/// the H.H measure.
///
/// # Safety
/// `g` must be a live graph; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_score(
    g: *const BipGraph,
    onto: BipMode,
    measure: BipMeasure,
    min_size: usize,
    out: *mut *mut BipScoreTable,
) -> BipStatus {
    guard(|| {
        let t = score(
            &obj(g, "graph")?.inner,
            onto.into(),
            measure.into(),
            min_size,
        )?;
        let table = BipScoreTable {
            labels: t.entries.iter().map(|e| c_label(&e.node)).collect(),
            raw: t.entries.iter().map(|e| e.raw).collect(),
            normalized: t.entries.iter().map(|e| e.normalized).collect(),
        };
        put(out, Box::into_raw(Box::new(table)))
    })
}

/// # Safety
/// `t` must be a live table.
#[no_mangle]
pub unsafe extern "C" fn bip_score_table_len(t: *const BipScoreTable) -> usize {
    t.as_ref().map_or(0, |t| t.labels.len())
}

/// Row `index` of the table. `label` stays valid until the table is freed.
/// Any of the output pointers may be null.
///
/// # Safety
/// `t` must be a live table; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_score_table_get(
    t: *const BipScoreTable,
    index: usize,
    label: *mut *const c_char,
    raw: *mut f64,
    normalized: *mut f64,
) -> BipStatus {
    guard(|| {
        let t = obj(t, "table")?;
        if index >= t.labels.len() {
            return Err(fail(
                BipStatus::OutOfRange,
                format!("row {index} of {}", t.labels.len()),
            ));
        }
        if !label.is_null() {
            label.write(t.labels[index].as_ptr());
        }
        if !raw.is_null() {
            raw.write(t.raw[index]);
        }
        if !normalized.is_null() {
            normalized.write(t.normalized[index]);
        }
        Ok(())
    })
}

/// # Safety
/// `t` must come from `bip_score` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bip_score_table_free(t: *mut BipScoreTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Removes the `fraction` top- or bottom-scoring nodes of the mode opposite
/// `onto` by `measure` and classifies how the communities changed.
///
/// # Safety
/// `g` must be a live graph; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bip_ablate(
    g: *const BipGraph,
    onto: BipMode,
    measure: BipMeasure,
    fraction: f64,
    direction: BipDirection,
    min_size: usize,
    out: *mut *mut BipAblationReport,
) -> BipStatus {
    guard(|| {
        let g = &obj(g, "graph")?.inner;
        let config = AblationConfig {
            onto: onto.into(),
            fraction,
            direction: match direction {
                BipDirection::Top => Direction::Top,
                BipDirection::Bottom => Direction::Bottom,
            },
            min_size,
        };
        let table = score(g, config.onto, measure.into(), min_size)?;
        let inner = run_ablation(g, &table, &config)?;
        let removed = inner.removed.iter().map(|s| c_label(s)).collect();
        put(
            out,
            Box::into_raw(Box::new(BipAblationReport { inner, removed })),
        )
    })
}

/// Fraction of the original communities that changed.
///
/// # Safety
/// `r` must be a live report.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_change_rate(r: *const BipAblationReport) -> f64 {
    r.as_ref().map_or(f64::NAN, |r| r.inner.change_rate())
}

/// Number of communities with change type `kind`.
///
/// # Safety
/// `r` must be a live report.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_count(
    r: *const BipAblationReport,
    kind: BipAnomaly,
) -> usize {
    r.as_ref().map_or(0, |r| r.inner.count(kind.into()))
}

/// # Safety
/// `r` must be a live report.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_before_count(r: *const BipAblationReport) -> usize {
    r.as_ref().map_or(0, |r| r.inner.before.len())
}

/// # Safety
/// `r` must be a live report.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_after_count(r: *const BipAblationReport) -> usize {
    r.as_ref().map_or(0, |r| r.inner.after.len())
}

/// # Safety
/// `r` must be a live report.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_removed_len(r: *const BipAblationReport) -> usize {
    r.as_ref().map_or(0, |r| r.removed.len())
}

/// Label of the `index`-th removed node, or null if out of range. Valid
/// until the report is freed.
///
/// # Safety
/// `r` must be a live report.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_removed(
    r: *const BipAblationReport,
    index: usize,
) -> *const c_char {
    r.as_ref()
        .and_then(|r| r.removed.get(index))
        .map_or(ptr::null(), |c| c.as_ptr())
}

/// # Safety
/// `r` must come from `bip_ablate` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bip_ablation_free(r: *mut BipAblationReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
