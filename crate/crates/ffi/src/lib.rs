//! C ABI over `mlst-core`.
//!
//! Graphs and run results are opaque heap handles created by `mlst_*`
//! constructors and released with the matching `*_free`. Every fallible call
//! returns an [`MlstStatus`]; on failure, [`mlst_last_error`] describes the
//! most recent error on the calling thread.
//!
//! Label subsets cross the boundary as byte arrays of length `k`, one byte
//! per label (label 1 first), nonzero meaning selected. Node and label ids
//! in edge triples are 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mlst_core::evolutionary::{gsemo, one_plus_one_ea, RunOptions, RunRecord};
use mlst_core::heuristics::{modified_mvca, mvca_with_contraction, TieBreakPolicy};
use mlst_core::instances::{
    gen_g1, gen_g2, gen_g3, gen_g_prime, gen_random_mlst_b, load_instance, save_instance,
    InstanceBundle,
};
use mlst_core::oracle::{brute_force_opt, DEFAULT_K_LIMIT};
use mlst_core::{component_count, scalar_fitness, Error, LabelSubset, LabeledGraph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MlstStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    Parse = 4,
    Io = 5,
    WidthMismatch = 6,
    ParamOutOfRange = 7,
    TooManyLabels = 8,
    Infeasible = 9,
    NotReached = 10,
    Panic = 11,
    Internal = 12,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MlstTieBreak {
    LowestIndex = 0,
    HighestIndex = 1,
    SeededRandom = 2,
}

/// Opaque graph handle.
pub struct MlstGraph {
    graph: LabeledGraph,
    known_opt: Option<usize>,
}

/// Opaque result of one evolutionary run.
pub struct MlstRunResult {
    record: RunRecord,
}

/// Settings for [`mlst_run_ea`] and [`mlst_run_gsemo`].
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct MlstRunConfig {
    pub budget: u64,
    pub seed: u64,
    /// `k` bytes, or NULL for a uniformly random start.
    pub init: *const u8,
    pub init_len: usize,
    /// Stop once a feasible solution has at most `target` labels.
    pub has_target: bool,
    pub target: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MlstStatus {
    match e {
        Error::SelfLoop { .. }
        | Error::DuplicateEdge { .. }
        | Error::NodeOutOfRange { .. }
        | Error::LabelOutOfRange { .. }
        | Error::UnusedLabel { .. }
        | Error::DisconnectedInput { .. }
        | Error::EmptyGraph { .. } => MlstStatus::InvalidGraph,
        Error::Parse { .. } => MlstStatus::Parse,
        Error::Io(_) => MlstStatus::Io,
        Error::WidthMismatch { .. } => MlstStatus::WidthMismatch,
        Error::ParamOutOfRange(_) | Error::InfeasibleParams(_) => MlstStatus::ParamOutOfRange,
        Error::TooManyLabels { .. } => MlstStatus::TooManyLabels,
        Error::InfeasibleInit | Error::InfeasibleSolution => MlstStatus::Infeasible,
        _ => MlstStatus::Internal,
    }
}

struct Fail(MlstStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(MlstStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, turning errors and panics into a status and the thread's last
/// error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MlstStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MlstStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MlstStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const MlstGraph) -> Result<&'a MlstGraph, Fail> {
    g.as_ref().ok_or_else(|| null("graph"))
}

unsafe fn subset_from(bits: *const u8, len: usize) -> Result<LabelSubset, Fail> {
    if bits.is_null() {
        return Err(null("label subset"));
    }
    Ok(LabelSubset::from_bytes(std::slice::from_raw_parts(
        bits, len,
    )))
}

unsafe fn write_subset(x: &LabelSubset, out: *mut u8, len: usize) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output buffer"));
    }
    if len != x.width() {
        return Err(Fail(
            MlstStatus::WidthMismatch,
            format!("output buffer has {len} bytes, need {}", x.width()),
        ));
    }
    ptr::copy_nonoverlapping(x.to_bytes().as_ptr(), out, len);
    Ok(())
}

unsafe fn emit_graph(out: *mut *mut MlstGraph, g: MlstGraph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(g));
    Ok(())
}

unsafe fn emit_bundle(out: *mut *mut MlstGraph, b: InstanceBundle) -> Result<(), Fail> {
    emit_graph(
        out,
        MlstGraph {
            known_opt: b.known_opt.map(|o| o.value),
            graph: b.graph,
        },
    )
}

unsafe fn path_from<'a>(path: *const c_char) -> Result<&'a str, Fail> {
    if path.is_null() {
        return Err(null("path"));
    }
    CStr::from_ptr(path)
        .to_str()
        .map_err(|_| Fail(MlstStatus::InvalidArgument, "path is not UTF-8".into()))
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next `mlst_*` call on the same thread.
#[no_mangle]
pub extern "C" fn mlst_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph from `m` triples `(u, v, label)` stored flat in `edges`
/// (`3 * m` values).
///
/// # Safety
/// `edges` must point to `3 * m` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_new(
    n: usize,
    k: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut MlstGraph,
) -> MlstStatus {
    guard(|| {
        if edges.is_null() && m > 0 {
            return Err(null("edges"));
        }
        let flat = if m == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 3 * m)
        };
        let triples: Vec<_> = flat.chunks_exact(3).map(|t| (t[0], t[1], t[2])).collect();
        let graph = LabeledGraph::new(n, k, &triples)?;
        emit_graph(
            out,
            MlstGraph {
                graph,
                known_opt: None,
            },
        )
    })
}

/// Reads an instance file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_load(
    path: *const c_char,
    out: *mut *mut MlstGraph,
) -> MlstStatus {
    guard(|| {
        let graph = load_instance(path_from(path)?)?;
        emit_graph(
            out,
            MlstGraph {
                graph,
                known_opt: None,
            },
        )
    })
}

/// Writes `g` in the canonical instance format.
///
/// # Safety
/// `g` must be a live handle; `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_save(g: *const MlstGraph, path: *const c_char) -> MlstStatus {
    guard(|| Ok(save_instance(&graph_ref(g)?.graph, path_from(path)?)?))
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_free(g: *mut MlstGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_node_count(g: *const MlstGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.node_count())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_label_count(g: *const MlstGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.label_count())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_edge_count(g: *const MlstGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_max_label_frequency(g: *const MlstGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.max_label_frequency())
}

/// Optimum recorded by the generator, if the graph came from one.
/// Returns `MLST_STATUS_NOT_REACHED` when unknown.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_graph_known_opt(g: *const MlstGraph, out: *mut usize) -> MlstStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        match g.known_opt {
            Some(o) => {
                *out = o;
                Ok(())
            }
            None => Err(Fail(MlstStatus::NotReached, "no known optimum".into())),
        }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_gen_g1(k: usize, out: *mut *mut MlstGraph) -> MlstStatus {
    guard(|| emit_bundle(out, gen_g1(k)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_gen_g2(k: usize, out: *mut *mut MlstGraph) -> MlstStatus {
    guard(|| emit_bundle(out, gen_g2(k)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_gen_g3(b: usize, out: *mut *mut MlstGraph) -> MlstStatus {
    guard(|| emit_bundle(out, gen_g3(b)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_gen_g_prime(
    a: usize,
    k: usize,
    out: *mut *mut MlstGraph,
) -> MlstStatus {
    guard(|| emit_bundle(out, gen_g_prime(a, k)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_gen_random(
    n: usize,
    m: usize,
    k: usize,
    b: usize,
    seed: u64,
    out: *mut *mut MlstGraph,
) -> MlstStatus {
    guard(|| emit_bundle(out, gen_random_mlst_b(n, m, k, b, seed)?))
}

/// Components of the subgraph using only the labels selected in `bits`.
///
/// # Safety
/// `g` must be a live handle, `bits` must hold `len` bytes, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_component_count(
    g: *const MlstGraph,
    bits: *const u8,
    len: usize,
    out: *mut usize,
) -> MlstStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let x = subset_from(bits, len)?;
        *out.as_mut().ok_or_else(|| null("out"))? = component_count(&g.graph, &x)?;
        Ok(())
    })
}

/// `(c - 1) * k^2 + |X|`. Fails with `MLST_STATUS_INVALID_ARGUMENT` if the
/// value does not fit in 64 bits.
///
/// # Safety
/// As for [`mlst_component_count`].
#[no_mangle]
pub unsafe extern "C" fn mlst_scalar_fitness(
    g: *const MlstGraph,
    bits: *const u8,
    len: usize,
    out: *mut u64,
) -> MlstStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let x = subset_from(bits, len)?;
        let f = scalar_fitness(&g.graph, &x)?;
        let v = u64::try_from(f).map_err(|_| {
            Fail(
                MlstStatus::InvalidArgument,
                format!("fitness {f} overflows 64 bits"),
            )
        })?;
        *out.as_mut().ok_or_else(|| null("out"))? = v;
        Ok(())
    })
}

/// Exact optimum by enumeration. `k_limit = 0` uses the default limit (24).
/// `witness` receives `k` bytes.
///
/// # Safety
/// `g` live; `opt` writable; `witness` writable for `witness_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn mlst_oracle(
    g: *const MlstGraph,
    k_limit: usize,
    opt: *mut usize,
    witness: *mut u8,
    witness_len: usize,
) -> MlstStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let limit = if k_limit == 0 {
            DEFAULT_K_LIMIT
        } else {
            k_limit
        };
        let r = brute_force_opt(&g.graph, Some(limit))?;
        *opt.as_mut().ok_or_else(|| null("opt"))? = r.opt_value;
        write_subset(&r.witness, witness, witness_len)
    })
}

fn tie_policy(tie: MlstTieBreak, seed: u64) -> TieBreakPolicy {
    match tie {
        MlstTieBreak::LowestIndex => TieBreakPolicy::LowestIndex,
        MlstTieBreak::HighestIndex => TieBreakPolicy::HighestIndex,
        MlstTieBreak::SeededRandom => TieBreakPolicy::SeededRandom(seed),
    }
}

/// Greedy MVCA; `contract` selects the supernode-contraction variant.
///
/// # Safety
/// `g` live; `out` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn mlst_mvca(
    g: *const MlstGraph,
    tie: MlstTieBreak,
    tie_seed: u64,
    contract: bool,
    out: *mut u8,
    len: usize,
) -> MlstStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let policy = tie_policy(tie, tie_seed);
        let x = if contract {
            mvca_with_contraction(&g.graph, policy)
        } else {
            modified_mvca(&g.graph, policy)
        };
        write_subset(&x, out, len)
    })
}

unsafe fn run(
    g: *const MlstGraph,
    config: *const MlstRunConfig,
    out: *mut *mut MlstRunResult,
    ea: bool,
) -> MlstStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let c = config.as_ref().ok_or_else(|| null("config"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut opts = RunOptions::new(c.budget, c.seed);
        if !c.init.is_null() {
            opts = opts.with_init(subset_from(c.init, c.init_len)?);
        }
        if c.has_target {
            opts = opts.with_target(c.target);
        }
        let record = if ea {
            one_plus_one_ea(&g.graph, &opts)?
        } else {
            gsemo(&g.graph, &opts)?.record
        };
        *out = Box::into_raw(Box::new(MlstRunResult { record }));
        Ok(())
    })
}

/// Runs the (1+1) EA.
///
/// # Safety
/// `g` live; `config` readable (its `init` holding `init_len` bytes when not
/// NULL); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_ea(
    g: *const MlstGraph,
    config: *const MlstRunConfig,
    out: *mut *mut MlstRunResult,
) -> MlstStatus {
    run(g, config, out, true)
}

/// Runs GSEMO.
///
/// # Safety
/// As for [`mlst_run_ea`].
#[no_mangle]
pub unsafe extern "C" fn mlst_run_gsemo(
    g: *const MlstGraph,
    config: *const MlstRunConfig,
    out: *mut *mut MlstRunResult,
) -> MlstStatus {
    run(g, config, out, false)
}

/// Releases a run result. NULL is ignored.
///
/// # Safety
/// `r` must be NULL or a result not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_result_free(r: *mut MlstRunResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be NULL or a live result.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_result_iterations(r: *const MlstRunResult) -> u64 {
    r.as_ref().map_or(0, |r| r.record.iterations_used)
}

/// Components of the best solution found.
///
/// # Safety
/// `r` must be NULL or a live result.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_result_components(r: *const MlstRunResult) -> usize {
    r.as_ref().map_or(0, |r| r.record.best_fitness.components)
}

/// Labels in the best solution found (feasible or not).
///
/// # Safety
/// `r` must be NULL or a live result.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_result_labels_used(r: *const MlstRunResult) -> usize {
    r.as_ref().map_or(0, |r| r.record.best_fitness.labels_used)
}

/// Iteration of the first feasible solution; `MLST_STATUS_NOT_REACHED` if
/// the run never found one.
///
/// # Safety
/// `r` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_result_first_feasible(
    r: *const MlstRunResult,
    out: *mut u64,
) -> MlstStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("result"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        match r.record.iterations_to_feasible() {
            Some(t) => {
                *out = t;
                Ok(())
            }
            None => Err(Fail(
                MlstStatus::NotReached,
                "no feasible solution found".into(),
            )),
        }
    })
}

/// Copies the best solution into `out` (`len` must equal `k`).
///
/// # Safety
/// `r` live; `out` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn mlst_run_result_best(
    r: *const MlstRunResult,
    out: *mut u8,
    len: usize,
) -> MlstStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("result"))?;
        write_subset(&r.record.best_solution, out, len)
    })
}
