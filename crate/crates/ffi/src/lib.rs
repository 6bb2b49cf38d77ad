//! C ABI over `sepdec`.
//!
//! Graphs, hypergraphs and decompositions are opaque handles owned by the
//! caller and released with the matching `_free` function. Fallible calls
//! return a [`SepdecStatus`]; on failure a message is kept per thread and can
//! be read with [`sepdec_last_error`]. No call unwinds across the boundary.
//!
//! Pointer arguments must be null or valid for the access described; strings
//! are NUL-terminated UTF-8. Handles are not thread-safe to share mutably.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sepdec::chordal::is_chordal;
use sepdec::cli::{atom_forest, atom_graph_forest, diff_edges, union_join_decomposition, Algo};
use sepdec::hypergraph::{is_alpha_acyclic, join_tree, tuj, AUX_PREFIX};
use sepdec::io::{parse_graph, parse_hypergraph, Decomposition, DecompositionKind};
use sepdec::{Error, ErrorKind, Graph, Hypergraph};

/// Result of a fallible call. The first four values match the exit codes of
/// the `sepdec` binary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SepdecStatus {
    Ok = 0,
    ParseError = 1,
    DomainError = 2,
    /// The result was produced but disagrees with the reference computation.
    VerifyMismatch = 3,
    InvalidArgument = 4,
    NullPointer = 5,
    Panic = 6,
}

/// Values accepted by the `algo` parameters.
#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SepdecAlgo {
    ForestJoin = 0,
    ForestJoinDelta = 1,
    MaxWeight = 2,
    MinWeight = 3,
    Naive = 4,
}

/// Values accepted by [`sepdec_decomposition_render`].
#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SepdecFormat {
    Dot = 0,
    Json = 1,
    Text = 2,
}

pub struct SepdecGraph(Graph);

pub struct SepdecHypergraph(Hypergraph);

pub struct SepdecDecomposition {
    inner: Decomposition,
    names: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).ok();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(SepdecStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.kind() {
            ErrorKind::Parse => SepdecStatus::ParseError,
            ErrorKind::Input => SepdecStatus::InvalidArgument,
            ErrorKind::Domain => SepdecStatus::DomainError,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(SepdecStatus::InvalidArgument, msg.into())
}

fn guard(f: impl FnOnce() -> Result<SepdecStatus, Failure>) -> SepdecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {msg}"));
            SepdecStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SepdecStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(SepdecStatus::NullPointer, format!("{what} is null")))
}

unsafe fn handle_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure(SepdecStatus::NullPointer, format!("{what} is null")))
}

unsafe fn clear_out<T>(out: *mut *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SepdecStatus::NullPointer, "output pointer is null".into()));
    }
    *out = ptr::null_mut();
    Ok(())
}

fn algo_arg(algo: u32) -> Result<Algo, Failure> {
    Ok(match algo {
        0 => Algo::ForestJoin,
        1 => Algo::ForestJoinDelta,
        2 => Algo::MaxWeight,
        3 => Algo::MinWeight,
        4 => Algo::Naive,
        _ => return Err(invalid(format!("unknown algorithm {algo}"))),
    })
}

fn boxed(d: Decomposition) -> *mut SepdecDecomposition {
    let names = d.names.iter().map(|n| CString::new(n.replace('\0', " ")).unwrap()).collect();
    Box::into_raw(Box::new(SepdecDecomposition { inner: d, names }))
}

/// Stores `d` in `out` and turns a non-empty verification diff into
/// `VerifyMismatch`.
unsafe fn finish(d: Decomposition, diff: String, out: *mut *mut SepdecDecomposition) -> SepdecStatus {
    *out = boxed(d);
    if diff.is_empty() {
        SepdecStatus::Ok
    } else {
        set_error(format!("verification failed:\n{diff}"));
        SepdecStatus::VerifyMismatch
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sepdec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sepdec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sepdec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// An empty graph.
#[no_mangle]
pub extern "C" fn sepdec_graph_new() -> *mut SepdecGraph {
    Box::into_raw(Box::new(SepdecGraph(Graph::new())))
}

/// Parses an edge list: one edge `u v` or isolated vertex `v` per line,
/// `#` comments.
#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_parse(text: *const c_char, out: *mut *mut SepdecGraph) -> SepdecStatus {
    guard(|| {
        clear_out(out)?;
        let g = parse_graph(str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(SepdecGraph(g)));
        Ok(SepdecStatus::Ok)
    })
}

fn check_vertex_name(name: &str) -> Result<(), Failure> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(invalid(format!("vertex name `{name}` is empty or contains whitespace")));
    }
    if name.starts_with(AUX_PREFIX) {
        return Err(invalid(format!("`{name}` uses the reserved prefix {AUX_PREFIX}")));
    }
    Ok(())
}

/// Adds a vertex unless present and writes its index to `index` (may be null).
#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_add_vertex(g: *mut SepdecGraph, name: *const c_char, index: *mut usize) -> SepdecStatus {
    guard(|| {
        let g = handle_mut(g, "graph")?;
        let name = str_arg(name, "name")?;
        check_vertex_name(name)?;
        let v = g.0.add_vertex(name);
        if !index.is_null() {
            *index = v;
        }
        Ok(SepdecStatus::Ok)
    })
}

/// Adds the edge `uv`, creating missing endpoints.
#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_add_edge(g: *mut SepdecGraph, u: *const c_char, v: *const c_char) -> SepdecStatus {
    guard(|| {
        let g = handle_mut(g, "graph")?;
        let (u, v) = (str_arg(u, "u")?, str_arg(v, "v")?);
        check_vertex_name(u)?;
        check_vertex_name(v)?;
        if u == v {
            return Err(invalid(format!("self-loop on `{u}`")));
        }
        let (a, b) = (g.0.add_vertex(u), g.0.add_vertex(v));
        g.0.add_edge(a, b)?;
        Ok(SepdecStatus::Ok)
    })
}

/// Number of vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_vertex_count(g: *const SepdecGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Number of edges; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_edge_count(g: *const SepdecGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_is_chordal(g: *const SepdecGraph, out: *mut bool) -> SepdecStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        *handle_mut(out, "output pointer")? = is_chordal(&g.0);
        Ok(SepdecStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_graph_free(g: *mut SepdecGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a hypergraph: one hyperedge per line, vertex names separated by
/// whitespace.
#[no_mangle]
pub unsafe extern "C" fn sepdec_hypergraph_parse(text: *const c_char, out: *mut *mut SepdecHypergraph) -> SepdecStatus {
    guard(|| {
        clear_out(out)?;
        let h = parse_hypergraph(str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(SepdecHypergraph(h)));
        Ok(SepdecStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_hypergraph_vertex_count(h: *const SepdecHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.vertex_count())
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_hypergraph_hyperedge_count(h: *const SepdecHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.hyperedge_count())
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_hypergraph_is_alpha_acyclic(h: *const SepdecHypergraph, out: *mut bool) -> SepdecStatus {
    guard(|| {
        let h = handle(h, "hypergraph")?;
        *handle_mut(out, "output pointer")? = is_alpha_acyclic(&h.0);
        Ok(SepdecStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_hypergraph_free(h: *mut SepdecHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn atom_decomposition(
    g: *const SepdecGraph,
    kind: DecompositionKind,
    verify: bool,
    out: *mut *mut SepdecDecomposition,
) -> SepdecStatus {
    guard(|| {
        clear_out(out)?;
        let g = handle(g, "graph")?;
        let (d, invalid) = atom_forest(&g.0, kind)?;
        let diff = if verify { invalid.join("\n") } else { String::new() };
        Ok(finish(d, diff, out))
    })
}

/// The atoms of `g`, one node per atom and no edges.
#[no_mangle]
pub unsafe extern "C" fn sepdec_atoms(g: *const SepdecGraph, out: *mut *mut SepdecDecomposition) -> SepdecStatus {
    atom_decomposition(g, DecompositionKind::Atoms, false, out)
}

/// An atom tree per connected component. With `verify`, each tree is checked
/// and `VerifyMismatch` is returned (with `*out` still set) on failure.
#[no_mangle]
pub unsafe extern "C" fn sepdec_atom_tree(g: *const SepdecGraph, verify: bool, out: *mut *mut SepdecDecomposition) -> SepdecStatus {
    atom_decomposition(g, DecompositionKind::AtomTree, verify, out)
}

/// The atom graph of each connected component. `algo` is any `SepdecAlgo`
/// except `MIN_WEIGHT`. With `hypergraph_convention`, atoms of different
/// components are joined by empty separators. With `verify`, the result is
/// compared with the naive construction.
#[no_mangle]
pub unsafe extern "C" fn sepdec_atom_graph(
    g: *const SepdecGraph,
    algo: u32,
    hypergraph_convention: bool,
    verify: bool,
    out: *mut *mut SepdecDecomposition,
) -> SepdecStatus {
    guard(|| {
        clear_out(out)?;
        let g = handle(g, "graph")?;
        let algo = algo_arg(algo)?;
        let d = atom_graph_forest(&g.0, algo, hypergraph_convention)?;
        let diff = if verify { diff_edges(&d, &atom_graph_forest(&g.0, Algo::Naive, hypergraph_convention)?) } else { String::new() };
        Ok(finish(d, diff, out))
    })
}

/// The union join graph of an alpha-acyclic hypergraph. `algo` is
/// `FOREST_JOIN`, `MAX_WEIGHT` or `MIN_WEIGHT`. With `verify`, the result is
/// compared with the union of all join trees.
#[no_mangle]
pub unsafe extern "C" fn sepdec_union_join(
    h: *const SepdecHypergraph,
    algo: u32,
    verify: bool,
    out: *mut *mut SepdecDecomposition,
) -> SepdecStatus {
    guard(|| {
        clear_out(out)?;
        let h = handle(h, "hypergraph")?;
        let d = union_join_decomposition(&h.0, algo_arg(algo)?)?;
        let diff = if verify {
            let reference = tuj(&join_tree(&h.0)?);
            diff_edges(&d, &Decomposition::from_atom_graph(DecompositionKind::UnionJoin, h.0.names().to_vec(), &reference))
        } else {
            String::new()
        };
        Ok(finish(d, diff, out))
    })
}

/// Number of vertices of the decomposed input; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_vertex_count(d: *const SepdecDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.names.len())
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_node_count(d: *const SepdecDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.nodes.len())
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_edge_count(d: *const SepdecDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.edges.len())
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_component_count(d: *const SepdecDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.component_count())
}

/// Name of vertex `v`, or null when out of range. Owned by `d`.
#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_vertex_name(d: *const SepdecDecomposition, v: usize) -> *const c_char {
    d.as_ref().and_then(|d| d.names.get(v)).map_or(ptr::null(), |s| s.as_ptr())
}

/// Copies up to `cap` vertex indices of node `i`, ascending, into `buf` and
/// writes the node size to `len`. Call with `cap == 0` to query the size.
#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_node(
    d: *const SepdecDecomposition,
    i: usize,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> SepdecStatus {
    guard(|| {
        let d = handle(d, "decomposition")?;
        let node = d.inner.nodes.get(i).ok_or_else(|| invalid(format!("node {i} out of range")))?;
        *handle_mut(len, "len")? = node.len();
        if cap > 0 {
            if buf.is_null() {
                return Err(Failure(SepdecStatus::NullPointer, "buf is null".into()));
            }
            for (k, v) in node.iter().take(cap).enumerate() {
                *buf.add(k) = v;
            }
        }
        Ok(SepdecStatus::Ok)
    })
}

/// Connected component of the input that node `i` belongs to.
#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_node_component(d: *const SepdecDecomposition, i: usize, out: *mut usize) -> SepdecStatus {
    guard(|| {
        let d = handle(d, "decomposition")?;
        let c = *d.inner.component.get(i).ok_or_else(|| invalid(format!("node {i} out of range")))?;
        *handle_mut(out, "output pointer")? = c;
        Ok(SepdecStatus::Ok)
    })
}

/// Endpoints of edge `i` as node indices, `a < b`.
#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_edge(d: *const SepdecDecomposition, i: usize, a: *mut usize, b: *mut usize) -> SepdecStatus {
    guard(|| {
        let d = handle(d, "decomposition")?;
        let &(x, y) = d.inner.edges.get(i).ok_or_else(|| invalid(format!("edge {i} out of range")))?;
        *handle_mut(a, "a")? = x;
        *handle_mut(b, "b")? = y;
        Ok(SepdecStatus::Ok)
    })
}

/// Renders `d` as a `SepdecFormat`. Release `*out` with `sepdec_string_free`.
#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_render(d: *const SepdecDecomposition, format: u32, out: *mut *mut c_char) -> SepdecStatus {
    guard(|| {
        clear_out(out)?;
        let d = handle(d, "decomposition")?;
        let text = match format {
            0 => d.inner.to_dot(),
            1 => d.inner.to_json(),
            2 => d.inner.to_text(),
            _ => return Err(invalid(format!("unknown format {format}"))),
        };
        *out = CString::new(text).map_err(|_| invalid("output contains NUL"))?.into_raw();
        Ok(SepdecStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sepdec_decomposition_free(d: *mut SepdecDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}
