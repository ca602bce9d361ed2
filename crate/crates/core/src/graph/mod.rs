//! Signed bipartite multigraphs.
//!
//! The two color classes are called `E` and `V`. Both are ordinary vertex
//! sets; edges always join one `E`-vertex to one `V`-vertex. Parallel edges
//! are allowed and told apart by their [`EdgeId`].

mod cycles;
mod embedding;
mod ops;
mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::{all_simple_cycles, find_alternating_cycle, find_cycle, CycleWitness};
pub use embedding::PlaneEmbedding;
pub use text::{parse_graph_file, GraphFile, GraphJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_i8(s: i8) -> Option<Sign> {
        match s {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// Serialized as `1` or `-1`.
impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    E,
    V,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::E => Color::V,
            Color::V => Color::E,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub e: String,
    pub v: String,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite `label`.
    pub fn other(&self, label: &str) -> &str {
        if self.e == label {
            &self.v
        } else {
            &self.e
        }
    }

    pub fn touches(&self, label: &str) -> bool {
        self.e == label || self.v == label
    }
}

/// A bipartite multigraph with signed edges.
///
/// Vertices are kept sorted by label and edges by id, so two graphs compare
/// equal exactly when they have the same labeled vertices and the same
/// id-keyed edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedBipartiteGraph {
    e_vertices: BTreeSet<String>,
    v_vertices: BTreeSet<String>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl SignedBipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Convenience constructor; edges get ids `1, 2, ...` in the given order.
    pub fn build(e: &[&str], v: &[&str], edges: &[(&str, &str, Sign)]) -> Result<Self> {
        let mut g = Self::new();
        for l in e {
            g.add_vertex(Color::E, l)?;
        }
        for l in v {
            g.add_vertex(Color::V, l)?;
        }
        for (i, (a, b, s)) in edges.iter().enumerate() {
            g.add_edge(EdgeId(i as u32 + 1), a, b, *s)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, color: Color, label: &str) -> Result<()> {
        if self.contains(label) {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        match color {
            Color::E => self.e_vertices.insert(label.to_string()),
            Color::V => self.v_vertices.insert(label.to_string()),
        };
        Ok(())
    }

    /// Adds an edge between `a` and `b`, which must lie in different color
    /// classes (in either order).
    pub fn add_edge(&mut self, id: EdgeId, a: &str, b: &str, sign: Sign) -> Result<()> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let ca = self.color_of(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
        let cb = self.color_of(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
        let (e, v) = match (ca, cb) {
            (Color::E, Color::V) => (a, b),
            (Color::V, Color::E) => (b, a),
            _ => return Err(Error::ColorMismatch(a.to_string(), b.to_string())),
        };
        self.edges.insert(id, Edge { id, e: e.to_string(), v: v.to_string(), sign });
        Ok(())
    }

    pub fn e_vertices(&self) -> impl Iterator<Item = &str> {
        self.e_vertices.iter().map(String::as_str)
    }

    pub fn v_vertices(&self) -> impl Iterator<Item = &str> {
        self.v_vertices.iter().map(String::as_str)
    }

    /// All labels, sorted.
    pub fn vertices(&self) -> Vec<&str> {
        let mut all: Vec<&str> = self.e_vertices().chain(self.v_vertices()).collect();
        all.sort_unstable();
        all
    }

    pub fn e_count(&self) -> usize {
        self.e_vertices.len()
    }

    pub fn v_count(&self) -> usize {
        self.v_vertices.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.e_vertices.len() + self.v_vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.keys().copied().collect()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.e_vertices.contains(label) || self.v_vertices.contains(label)
    }

    pub fn color_of(&self, label: &str) -> Option<Color> {
        if self.e_vertices.contains(label) {
            Some(Color::E)
        } else if self.v_vertices.contains(label) {
            Some(Color::V)
        } else {
            None
        }
    }

    pub fn incident_edges(&self, label: &str) -> Vec<&Edge> {
        self.edges.values().filter(|e| e.touches(label)).collect()
    }

    pub fn degree(&self, label: &str) -> usize {
        self.edges.values().filter(|e| e.touches(label)).count()
    }

    pub fn negative_edges(&self) -> Vec<EdgeId> {
        self.edges.values().filter(|e| e.sign == Sign::Negative).map(|e| e.id).collect()
    }

    pub fn positive_edges(&self) -> Vec<EdgeId> {
        self.edges.values().filter(|e| e.sign == Sign::Positive).map(|e| e.id).collect()
    }

    pub fn has_negative_edge(&self) -> bool {
        self.edges.values().any(|e| e.sign == Sign::Negative)
    }

    /// One more than the largest edge id in use.
    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.keys().next_back().map_or(1, |id| id.0 + 1))
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let idx = self.index();
        let mut uf = UnionFind::new(idx.labels.len());
        for e in self.edges.values() {
            uf.union(idx.pos(&e.e), idx.pos(&e.v));
        }
        uf.count()
    }

    /// True when the graph has no cycle; parallel edges form a cycle.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.vertex_count()
    }

    pub(crate) fn index(&self) -> VertexIndex<'_> {
        VertexIndex::new(self)
    }
}

/// Dense integer positions for the sorted vertex labels of a graph.
pub(crate) struct VertexIndex<'a> {
    pub labels: Vec<&'a str>,
}

impl<'a> VertexIndex<'a> {
    fn new(g: &'a SignedBipartiteGraph) -> Self {
        Self { labels: g.vertices() }
    }

    pub fn pos(&self, label: &str) -> usize {
        self.labels.binary_search(&label).expect("label belongs to the graph")
    }
}

/// Adjacency lists over [`VertexIndex`] positions: `(neighbor, edge id, sign)`.
pub(crate) fn adjacency(g: &SignedBipartiteGraph, idx: &VertexIndex<'_>) -> Vec<Vec<(usize, EdgeId, Sign)>> {
    let mut adj = vec![Vec::new(); idx.labels.len()];
    for e in g.edges() {
        let (a, b) = (idx.pos(&e.e), idx.pos(&e.v));
        adj[a].push((b, e.id, e.sign));
        adj[b].push((a, e.id, e.sign));
    }
    adj
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Keep the smaller root so representatives are deterministic.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
