use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Color, EdgeId, SignedBipartiteGraph, Sign};

/// A simple cycle. `edge_ids[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`; `vertices[0]` is an `E`-vertex.
///
/// A pair of parallel edges is a cycle of length 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<String>,
    pub edge_ids: Vec<EdgeId>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Checks the witness against `g`: even length at least 2, distinct
    /// vertices alternating `E`/`V`, and each edge joining its neighbors.
    pub fn is_valid_in(&self, g: &SignedBipartiteGraph) -> bool {
        let n = self.edge_ids.len();
        if n < 2 || !n.is_multiple_of(2) || self.vertices.len() != n {
            return false;
        }
        let distinct_vertices: BTreeSet<&String> = self.vertices.iter().collect();
        let distinct_edges: BTreeSet<&EdgeId> = self.edge_ids.iter().collect();
        if distinct_vertices.len() != n || distinct_edges.len() != n {
            return false;
        }
        for (i, label) in self.vertices.iter().enumerate() {
            let expected = if i % 2 == 0 { Color::E } else { Color::V };
            if g.color_of(label) != Some(expected) {
                return false;
            }
        }
        self.edge_ids.iter().enumerate().all(|(i, id)| {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            g.edge(*id).is_some_and(|e| e.touches(a) && e.touches(b))
        })
    }

    /// True if consecutive edges (cyclically) have opposite signs.
    pub fn is_sign_alternating(&self, g: &SignedBipartiteGraph) -> bool {
        let n = self.edge_ids.len();
        let sign = |i: usize| g.edge(self.edge_ids[i % n]).map(|e| e.sign);
        (0..n).all(|i| matches!((sign(i), sign(i + 1)), (Some(a), Some(b)) if a != b))
    }

    /// The edges at even positions `0, 2, 4, ...`.
    pub fn even_edges(&self) -> Vec<EdgeId> {
        self.edge_ids.iter().step_by(2).copied().collect()
    }

    /// The edges at odd positions `1, 3, 5, ...`.
    pub fn odd_edges(&self) -> Vec<EdgeId> {
        self.edge_ids.iter().skip(1).step_by(2).copied().collect()
    }

    fn from_positions(labels: &[String], verts: &[usize], edges: &[EdgeId], g: &SignedBipartiteGraph) -> Self {
        let mut vertices: Vec<String> = verts.iter().map(|&i| labels[i].clone()).collect();
        let mut edge_ids = edges.to_vec();
        if g.color_of(&vertices[0]) == Some(Color::V) {
            vertices.rotate_left(1);
            edge_ids.rotate_left(1);
        }
        Self { vertices, edge_ids }
    }
}

/// A shortest cycle of `g`, or `None` for a forest.
///
/// Ties are broken by the lowest edge id through which the cycle closes.
pub fn find_cycle(g: &SignedBipartiteGraph) -> Option<CycleWitness> {
    let (labels, adj) = g.neighbor_lists();
    let idx = g.index();
    let mut best: Option<(Vec<usize>, Vec<EdgeId>)> = None;
    for e in g.edges() {
        let (start, goal) = (idx.pos(&e.e), idx.pos(&e.v));
        let limit = best.as_ref().map_or(usize::MAX, |(v, _)| v.len());
        let Some((verts, mut path)) = bfs_path(&adj, start, goal, e.id, limit) else {
            continue;
        };
        path.push(e.id);
        let shorter = best.as_ref().is_none_or(|(v, _)| verts.len() < v.len());
        if shorter {
            let done = verts.len() == 2;
            best = Some((verts, path));
            if done {
                break;
            }
        }
    }
    best.map(|(v, e)| CycleWitness::from_positions(&labels, &v, &e, g))
}

/// Shortest path from `start` to `goal` avoiding edge `skip`; gives up once
/// the path would have `limit` or more vertices.
fn bfs_path(
    adj: &[Vec<(usize, EdgeId, Sign)>],
    start: usize,
    goal: usize,
    skip: EdgeId,
    limit: usize,
) -> Option<(Vec<usize>, Vec<EdgeId>)> {
    let mut parent: Vec<Option<(usize, EdgeId)>> = vec![None; adj.len()];
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            break;
        }
        if dist[u] + 2 >= limit {
            continue;
        }
        for &(w, id, _) in &adj[u] {
            if id != skip && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = Some((u, id));
                queue.push_back(w);
            }
        }
    }
    if dist[goal] == usize::MAX || dist[goal] + 1 >= limit {
        return None;
    }
    let mut verts = vec![goal];
    let mut edges = Vec::new();
    let mut cur = goal;
    while let Some((p, id)) = parent[cur] {
        verts.push(p);
        edges.push(id);
        cur = p;
    }
    verts.reverse();
    edges.reverse();
    Some((verts, edges))
}

/// Depth-first enumeration of simple cycles whose smallest vertex is the
/// start vertex. `step_ok(prev, next)` filters consecutive edge signs;
/// `visit` returns `true` to stop the search.
fn search_cycles(
    g: &SignedBipartiteGraph,
    step_ok: impl Fn(Sign, Sign) -> bool,
    mut visit: impl FnMut(&[usize], &[EdgeId]) -> bool,
) {
    let (_, adj) = g.neighbor_lists();
    let sign_of = |id: EdgeId| g.edge(id).expect("edge in graph").sign;

    struct Frame<'a> {
        adj: &'a [Vec<(usize, EdgeId, Sign)>],
        on_path: Vec<bool>,
        verts: Vec<usize>,
        edges: Vec<EdgeId>,
    }

    fn dfs(
        f: &mut Frame<'_>,
        start: usize,
        step_ok: &dyn Fn(Sign, Sign) -> bool,
        sign_of: &dyn Fn(EdgeId) -> Sign,
        visit: &mut dyn FnMut(&[usize], &[EdgeId]) -> bool,
    ) -> bool {
        let u = *f.verts.last().expect("path is non-empty");
        let last = f.edges.last().map(|&id| (id, sign_of(id)));
        for &(w, id, s) in f.adj[u].iter() {
            if let Some((last_id, last_sign)) = last {
                if id == last_id || !step_ok(last_sign, s) {
                    continue;
                }
            }
            if w == start && !f.edges.is_empty() {
                let first = sign_of(f.edges[0]);
                if step_ok(s, first) {
                    f.edges.push(id);
                    let stop = visit(&f.verts, &f.edges);
                    f.edges.pop();
                    if stop {
                        return true;
                    }
                }
                continue;
            }
            if w <= start || f.on_path[w] {
                continue;
            }
            f.on_path[w] = true;
            f.verts.push(w);
            f.edges.push(id);
            let stop = dfs(f, start, step_ok, sign_of, visit);
            f.edges.pop();
            f.verts.pop();
            f.on_path[w] = false;
            if stop {
                return true;
            }
        }
        false
    }

    let n = adj.len();
    for start in 0..n {
        let mut frame = Frame { adj: &adj, on_path: vec![false; n], verts: vec![start], edges: Vec::new() };
        frame.on_path[start] = true;
        if dfs(&mut frame, start, &step_ok, &sign_of, &mut visit) {
            return;
        }
    }
}

/// A simple cycle whose edge signs alternate `+, -, +, -, ...`, if any.
///
/// Exhaustive search over simple paths with sign pruning; exponential in the
/// worst case, fine for graphs of a few dozen edges.
pub fn find_alternating_cycle(g: &SignedBipartiteGraph) -> Option<CycleWitness> {
    if g.positive_edges().is_empty() || g.negative_edges().is_empty() {
        return None;
    }
    let (labels, _) = g.neighbor_lists();
    let mut found = None;
    search_cycles(
        g,
        |a, b| a != b,
        |verts, edges| {
            found = Some(CycleWitness::from_positions(&labels, verts, edges, g));
            true
        },
    );
    found
}

/// Every simple cycle of `g`, each listed once.
pub fn all_simple_cycles(g: &SignedBipartiteGraph) -> Vec<CycleWitness> {
    let (labels, _) = g.neighbor_lists();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    search_cycles(
        g,
        |_, _| true,
        |verts, edges| {
            let key: BTreeSet<EdgeId> = edges.iter().copied().collect();
            if seen.insert(key) {
                out.push(CycleWitness::from_positions(&labels, verts, edges, g));
            }
            false
        },
    );
    out
}
