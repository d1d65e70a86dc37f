//! Bipartite graphs and their one-mode projections.
//!
//! Nodes are identified by their input label within a mode. Node order is
//! the order of first appearance, which makes every downstream output
//! deterministic for a fixed input.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// One side of a bipartite graph. By convention mode A holds actors and
/// mode B holds events.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Mode {
    A,
    B,
}

impl Mode {
    pub fn opposite(self) -> Mode {
        match self {
            Mode::A => Mode::B,
            Mode::B => Mode::A,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::A => f.write_str("a"),
            Mode::B => f.write_str("b"),
        }
    }
}

/// A node label qualified by its mode. The same label in both modes names
/// two distinct nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId {
    pub label: String,
    pub mode: Mode,
}

impl NodeId {
    pub fn new(label: impl Into<String>, mode: Mode) -> Self {
        NodeId {
            label: label.into(),
            mode,
        }
    }

    pub fn a(label: impl Into<String>) -> Self {
        Self::new(label, Mode::A)
    }

    pub fn b(label: impl Into<String>) -> Self {
        Self::new(label, Mode::B)
    }
}

/// Incremental constructor for [`BipartiteGraph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    nodes_a: IndexSet<String>,
    nodes_b: IndexSet<String>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
    duplicates: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a node without edges. Returns its index within the mode.
    pub fn add_node(&mut self, mode: Mode, label: &str) -> usize {
        let set = match mode {
            Mode::A => &mut self.nodes_a,
            Mode::B => &mut self.nodes_b,
        };
        match set.get_index_of(label) {
            Some(i) => i,
            None => set.insert_full(label.to_owned()).0,
        }
    }

    /// Adds the edge (a, b). Returns false if the edge was already present.
    pub fn add_edge(&mut self, a: &str, b: &str) -> bool {
        let ia = self.add_node(Mode::A, a);
        let ib = self.add_node(Mode::B, b);
        if self.seen.insert((ia, ib)) {
            self.edges.push((ia, ib));
            true
        } else {
            self.duplicates += 1;
            false
        }
    }

    pub fn duplicates(&self) -> usize {
        self.duplicates
    }

    /// Distinct edges added so far.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> BipartiteGraph {
        let mut adj_a = vec![Vec::new(); self.nodes_a.len()];
        let mut adj_b = vec![Vec::new(); self.nodes_b.len()];
        for &(a, b) in &self.edges {
            adj_a[a].push(b);
            adj_b[b].push(a);
        }
        adj_a.iter_mut().for_each(|v| v.sort_unstable());
        adj_b.iter_mut().for_each(|v| v.sort_unstable());
        BipartiteGraph {
            nodes_a: self.nodes_a,
            nodes_b: self.nodes_b,
            adj_a,
            adj_b,
            edge_count: self.edges.len(),
        }
    }
}

/// A simple undirected bipartite graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    nodes_a: IndexSet<String>,
    nodes_b: IndexSet<String>,
    // Sorted opposite-mode indices per node.
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Builds a graph from `(mode A label, mode B label)` pairs.
///
/// Duplicate pairs are dropped with a warning. An empty list is an error.
pub fn build_bipartite<I, S, T>(edges: I) -> Result<BipartiteGraph>
where
    I: IntoIterator<Item = (S, T)>,
    S: AsRef<str>,
    T: AsRef<str>,
{
    let mut builder = GraphBuilder::new();
    for (a, b) in edges {
        builder.add_edge(a.as_ref(), b.as_ref());
    }
    if builder.edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if builder.duplicates() > 0 {
        log::warn!("dropped {} duplicate edge(s)", builder.duplicates());
    }
    Ok(builder.build())
}

impl BipartiteGraph {
    pub fn node_count(&self) -> usize {
        self.nodes_a.len() + self.nodes_b.len()
    }

    pub fn mode_len(&self, mode: Mode) -> usize {
        self.labels(mode).len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self, mode: Mode) -> &IndexSet<String> {
        match mode {
            Mode::A => &self.nodes_a,
            Mode::B => &self.nodes_b,
        }
    }

    pub fn label(&self, mode: Mode, index: usize) -> &str {
        &self.labels(mode)[index]
    }

    pub fn index_of(&self, node: &NodeId) -> Option<usize> {
        self.labels(node.mode).get_index_of(node.label.as_str())
    }

    fn require(&self, node: &NodeId) -> Result<usize> {
        self.index_of(node).ok_or_else(|| Error::UnknownNode {
            label: node.label.clone(),
            mode: node.mode,
        })
    }

    /// Sorted opposite-mode indices adjacent to `index`.
    pub fn neighbor_indices(&self, mode: Mode, index: usize) -> &[usize] {
        match mode {
            Mode::A => &self.adj_a[index],
            Mode::B => &self.adj_b[index],
        }
    }

    /// All opposite-mode nodes adjacent to `node`, in node order.
    pub fn neighbors(&self, node: &NodeId) -> Result<Vec<NodeId>> {
        let idx = self.require(node)?;
        let other = node.mode.opposite();
        Ok(self
            .neighbor_indices(node.mode, idx)
            .iter()
            .map(|&j| NodeId::new(self.label(other, j), other))
            .collect())
    }

    pub fn degree(&self, mode: Mode, index: usize) -> usize {
        self.neighbor_indices(mode, index).len()
    }

    /// Edges as `(a index, b index)`, ordered by a then b.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_a
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b)))
    }

    /// Adjacency over all nodes: mode A occupies `0..|A|`, mode B follows.
    pub fn unified_adjacency(&self) -> Vec<Vec<usize>> {
        let offset = self.nodes_a.len();
        self.adj_a
            .iter()
            .map(|bs| bs.iter().map(|&b| b + offset).collect())
            .chain(self.adj_b.iter().cloned())
            .collect()
    }

    /// Offset of `mode`'s first node in [`Self::unified_adjacency`].
    pub fn unified_offset(&self, mode: Mode) -> usize {
        match mode {
            Mode::A => 0,
            Mode::B => self.nodes_a.len(),
        }
    }

    /// Returns a copy without the given nodes of `mode` and their edges.
    /// Nodes of the other mode are kept even if they become isolated.
    pub fn without_nodes(&self, mode: Mode, victims: &HashSet<usize>) -> BipartiteGraph {
        let mut builder = GraphBuilder::new();
        for m in [Mode::A, Mode::B] {
            for (i, label) in self.labels(m).iter().enumerate() {
                if !(m == mode && victims.contains(&i)) {
                    builder.add_node(m, label);
                }
            }
        }
        for (a, b) in self.edges() {
            let victim = match mode {
                Mode::A => victims.contains(&a),
                Mode::B => victims.contains(&b),
            };
            if !victim {
                builder.add_edge(self.label(Mode::A, a), self.label(Mode::B, b));
            }
        }
        builder.build()
    }

    /// Re-checks the structural invariants. Used on embedded and loaded data.
    pub fn validate(&self) -> Result<()> {
        let mut count = 0;
        for (a, bs) in self.adj_a.iter().enumerate() {
            if bs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invariant(format!(
                    "unsorted or duplicate adjacency at a-node {a}"
                )));
            }
            for &b in bs {
                if self.adj_b[b].binary_search(&a).is_err() {
                    return Err(Error::Invariant(format!("asymmetric edge ({a}, {b})")));
                }
            }
            count += bs.len();
        }
        let count_b: usize = self.adj_b.iter().map(Vec::len).sum();
        if count != self.edge_count || count_b != self.edge_count {
            return Err(Error::Invariant("edge count mismatch".into()));
        }
        Ok(())
    }
}

/// One-mode projection. Each edge keeps the set of opposite-mode nodes that
/// created it; the size of that set is the edge's multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedGraph {
    onto: Mode,
    nodes: Vec<String>,
    sources: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    provenance: BTreeMap<(usize, usize), Vec<usize>>,
}

fn key(x: usize, y: usize) -> (usize, usize) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Projects `g` onto `onto`: two nodes are joined iff they share at least
/// one neighbor, and the shared neighbors become the edge's provenance.
pub fn project(g: &BipartiteGraph, onto: Mode) -> ProjectedGraph {
    let via = onto.opposite();
    let mut provenance: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for s in 0..g.mode_len(via) {
        let members = g.neighbor_indices(via, s);
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                provenance.entry((x, y)).or_default().push(s);
            }
        }
    }
    let nodes: Vec<String> = g.labels(onto).iter().cloned().collect();
    let sources: Vec<String> = g.labels(via).iter().cloned().collect();
    ProjectedGraph::assemble(onto, nodes, sources, provenance)
}

impl ProjectedGraph {
    fn assemble(
        onto: Mode,
        nodes: Vec<String>,
        sources: Vec<String>,
        provenance: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for &(x, y) in provenance.keys() {
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
        adjacency.iter_mut().for_each(|v| v.sort_unstable());
        ProjectedGraph {
            onto,
            nodes,
            sources,
            adjacency,
            provenance,
        }
    }

    /// Rebuilds a projection from explicit parts, e.g. when reading one back
    /// from disk. Edges are `(x, y, provenance)` by label.
    pub fn from_parts(
        onto: Mode,
        nodes: Vec<String>,
        sources: Vec<String>,
        edges: Vec<(String, String, Vec<String>)>,
    ) -> Result<Self> {
        let node_index: IndexSet<&str> = nodes.iter().map(String::as_str).collect();
        let source_index: IndexSet<&str> = sources.iter().map(String::as_str).collect();
        if node_index.len() != nodes.len() || source_index.len() != sources.len() {
            return Err(Error::InvalidConfig(
                "duplicate node label in projection".into(),
            ));
        }
        let lookup = |set: &IndexSet<&str>, label: &str, mode: Mode| {
            set.get_index_of(label).ok_or_else(|| Error::UnknownNode {
                label: label.to_owned(),
                mode,
            })
        };
        let mut provenance = BTreeMap::new();
        for (x, y, prov) in edges {
            let ix = lookup(&node_index, &x, onto)?;
            let iy = lookup(&node_index, &y, onto)?;
            if ix == iy {
                return Err(Error::InvalidConfig(format!("self-loop on '{x}'")));
            }
            let mut p = prov
                .iter()
                .map(|s| lookup(&source_index, s, onto.opposite()))
                .collect::<Result<Vec<_>>>()?;
            p.sort_unstable();
            p.dedup();
            if p.is_empty() {
                return Err(Error::InvalidConfig(format!(
                    "edge {x}-{y} has empty provenance"
                )));
            }
            if provenance.insert(key(ix, iy), p).is_some() {
                return Err(Error::InvalidConfig(format!("duplicate edge {x}-{y}")));
            }
        }
        Ok(Self::assemble(onto, nodes, sources, provenance))
    }

    pub fn onto(&self) -> Mode {
        self.onto
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.provenance.len()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    /// Labels of the opposite-mode nodes that can appear in provenance sets.
    pub fn sources(&self) -> &[String] {
        &self.sources
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == label)
    }

    pub fn source_index(&self, label: &str) -> Option<usize> {
        self.sources.iter().position(|n| n == label)
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].binary_search(&y).is_ok()
    }

    /// Sorted source indices that created edge (x, y), if it exists.
    pub fn provenance(&self, x: usize, y: usize) -> Option<&[usize]> {
        self.provenance.get(&key(x, y)).map(Vec::as_slice)
    }

    /// Edges as `(x, y, provenance)` with `x < y`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &[usize])> + '_ {
        self.provenance
            .iter()
            .map(|(&(x, y), p)| (x, y, p.as_slice()))
    }

    /// Number of opposite-mode nodes that create the edge between `x` and `y`.
    pub fn edge_multiplicity(&self, x: &str, y: &str) -> Result<usize> {
        let missing = || Error::NoSuchEdge(x.to_owned(), y.to_owned());
        let ix = self.node_index(x).ok_or_else(missing)?;
        let iy = self.node_index(y).ok_or_else(missing)?;
        self.provenance(ix, iy)
            .map(<[usize]>::len)
            .ok_or_else(missing)
    }
}
