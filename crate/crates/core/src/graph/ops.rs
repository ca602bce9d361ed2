use std::collections::{BTreeMap, BTreeSet};

use super::{adjacency, Color, EdgeId, SignedBipartiteGraph, Sign, UnionFind};
use crate::error::{Error, Result};

/// `(neighbor position, edge id, sign)`.
pub(crate) type Neighbor = (usize, EdgeId, Sign);

impl SignedBipartiteGraph {
    /// Connected components, ordered by their smallest label. Labels, ids and
    /// signs are preserved.
    pub fn components(&self) -> Vec<SignedBipartiteGraph> {
        let idx = self.index();
        let mut uf = UnionFind::new(idx.labels.len());
        for e in self.edges() {
            uf.union(idx.pos(&e.e), idx.pos(&e.v));
        }
        // Roots are the smallest position in each class, i.e. the smallest label.
        let mut by_root: BTreeMap<usize, SignedBipartiteGraph> = BTreeMap::new();
        for (i, label) in idx.labels.iter().enumerate() {
            let root = uf.find(i);
            let color = self.color_of(label).expect("indexed label");
            by_root.entry(root).or_default().add_vertex(color, label).expect("labels are unique");
        }
        for e in self.edges() {
            let root = uf.find(idx.pos(&e.e));
            let part = by_root.get_mut(&root).expect("component exists");
            part.edges.insert(e.id, e.clone());
        }
        by_root.into_values().collect()
    }

    pub fn delete_edges(&self, ids: &BTreeSet<EdgeId>) -> Result<SignedBipartiteGraph> {
        if let Some(missing) = ids.iter().find(|id| !self.edges.contains_key(id)) {
            return Err(Error::UnknownEdge(*missing));
        }
        let mut g = self.clone();
        g.edges.retain(|id, _| !ids.contains(id));
        Ok(g)
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<SignedBipartiteGraph> {
        self.delete_edges(&BTreeSet::from([id]))
    }

    pub fn forget_signs(&self) -> SignedBipartiteGraph {
        let mut g = self.clone();
        for e in g.edges.values_mut() {
            e.sign = Sign::Positive;
        }
        g
    }

    pub fn with_sign(&self, id: EdgeId, sign: Sign) -> Result<SignedBipartiteGraph> {
        let mut g = self.clone();
        g.edges.get_mut(&id).ok_or(Error::UnknownEdge(id))?.sign = sign;
        Ok(g)
    }

    /// Replaces every sign at once; `signs` is indexed in edge-id order.
    pub fn with_signs(&self, signs: &[Sign]) -> SignedBipartiteGraph {
        let mut g = self.clone();
        for (e, s) in g.edges.values_mut().zip(signs) {
            e.sign = *s;
        }
        g
    }

    /// Disjoint union. Labels and edge ids are kept when they do not clash;
    /// otherwise labels become `a.<label>` / `b.<label>` and the second
    /// graph's edge ids are shifted past the first graph's.
    pub fn disjoint_union(&self, other: &SignedBipartiteGraph) -> SignedBipartiteGraph {
        let label_clash = other.vertices().iter().any(|l| self.contains(l));
        let (left, right) = if label_clash {
            (self.relabeled(|l| format!("a.{l}")), other.relabeled(|l| format!("b.{l}")))
        } else {
            (self.clone(), other.clone())
        };
        let right = left.make_ids_disjoint(&right);
        let mut g = left;
        g.e_vertices.extend(right.e_vertices);
        g.v_vertices.extend(right.v_vertices);
        g.edges.extend(right.edges);
        g
    }

    /// Identifies `v1` in `self` with `v2` in `other`; the merged vertex
    /// keeps the label `v1`.
    pub fn block_sum(&self, other: &SignedBipartiteGraph, v1: &str, v2: &str) -> Result<SignedBipartiteGraph> {
        let c1 = self.color_of(v1).ok_or_else(|| Error::UnknownVertex(v1.to_string()))?;
        let c2 = other.color_of(v2).ok_or_else(|| Error::UnknownVertex(v2.to_string()))?;
        if c1 != c2 {
            return Err(Error::ColorMismatch(v1.to_string(), v2.to_string()));
        }
        let mut prefix = String::from("b.");
        let rename = |prefix: &str, l: &str| if l == v2 { v1.to_string() } else { format!("{prefix}{l}") };
        let clash = |prefix: &str| other.vertices().iter().any(|l| *l != v2 && self.contains(&rename(prefix, l)));
        let right = if other.vertices().iter().any(|l| *l != v2 && self.contains(l)) {
            while clash(&prefix) {
                prefix.insert(0, 'b');
            }
            other.relabeled(|l| rename(&prefix, l))
        } else {
            other.relabeled(|l| if l == v2 { v1.to_string() } else { l.to_string() })
        };
        let right = self.make_ids_disjoint(&right);
        let mut g = self.clone();
        g.e_vertices.extend(right.e_vertices);
        g.v_vertices.extend(right.v_vertices);
        g.edges.extend(right.edges);
        Ok(g)
    }

    /// Disjoint union plus one new edge of the given sign between `u1` (in
    /// `self`) and `u2` (in `other`). Returns the graph and the new edge id.
    pub fn join_by_edge(
        &self,
        other: &SignedBipartiteGraph,
        u1: &str,
        u2: &str,
        sign: Sign,
    ) -> Result<(SignedBipartiteGraph, EdgeId)> {
        let c1 = self.color_of(u1).ok_or_else(|| Error::UnknownVertex(u1.to_string()))?;
        let c2 = other.color_of(u2).ok_or_else(|| Error::UnknownVertex(u2.to_string()))?;
        if c1 == c2 {
            return Err(Error::ColorMismatch(u1.to_string(), u2.to_string()));
        }
        let clash = other.vertices().iter().any(|l| self.contains(l));
        let g = self.disjoint_union(other);
        let (a, b) = if clash { (format!("a.{u1}"), format!("b.{u2}")) } else { (u1.to_string(), u2.to_string()) };
        let mut g = g;
        let id = g.next_edge_id();
        g.add_edge(id, &a, &b, sign)?;
        Ok((g, id))
    }

    /// Adds a new vertex `label` joined to `anchor` by one edge per entry of
    /// `signs`. Returns the new edge ids.
    pub fn add_pendant(&mut self, anchor: &str, label: &str, signs: &[Sign]) -> Result<Vec<EdgeId>> {
        let color = self.color_of(anchor).ok_or_else(|| Error::UnknownVertex(anchor.to_string()))?;
        self.add_vertex(color.other(), label)?;
        let mut ids = Vec::new();
        for &s in signs {
            let id = self.next_edge_id();
            self.add_edge(id, anchor, label, s)?;
            ids.push(id);
        }
        Ok(ids)
    }

    /// `G - v`: removes the vertex and its incident edges.
    pub fn delete_vertex(&self, label: &str) -> Result<SignedBipartiteGraph> {
        if !self.contains(label) {
            return Err(Error::UnknownVertex(label.to_string()));
        }
        let mut g = self.clone();
        g.e_vertices.remove(label);
        g.v_vertices.remove(label);
        g.edges.retain(|_, e| !e.touches(label));
        Ok(g)
    }

    /// `G / v`: `G - v` with all former neighbors of `v` merged into one
    /// vertex, labeled by the smallest neighbor label.
    pub fn contract_vertex(&self, label: &str) -> Result<SignedBipartiteGraph> {
        let neighbors: BTreeSet<String> =
            self.incident_edges(label).iter().map(|e| e.other(label).to_string()).collect();
        let mut g = self.delete_vertex(label)?;
        let Some(keep) = neighbors.first().cloned() else {
            return Ok(g);
        };
        for n in neighbors.iter().skip(1) {
            g.e_vertices.remove(n);
            g.v_vertices.remove(n);
        }
        for e in g.edges.values_mut() {
            if neighbors.contains(&e.e) {
                e.e = keep.clone();
            }
            if neighbors.contains(&e.v) {
                e.v = keep.clone();
            }
        }
        Ok(g)
    }

    /// Applies `f` to every label; `f` must be injective.
    pub fn relabeled(&self, f: impl Fn(&str) -> String) -> SignedBipartiteGraph {
        let e_vertices = self.e_vertices.iter().map(|l| f(l)).collect();
        let v_vertices = self.v_vertices.iter().map(|l| f(l)).collect();
        let edges = self
            .edges
            .iter()
            .map(|(id, e)| (*id, super::Edge { id: *id, e: f(&e.e), v: f(&e.v), sign: e.sign }))
            .collect();
        SignedBipartiteGraph { e_vertices, v_vertices, edges }
    }

    /// Renumbers edges `1..=n` in id order.
    pub fn renumbered(&self) -> SignedBipartiteGraph {
        let mut g = self.clone();
        g.edges = self
            .edges
            .values()
            .enumerate()
            .map(|(i, e)| {
                let id = EdgeId(i as u32 + 1);
                (id, super::Edge { id, ..e.clone() })
            })
            .collect();
        g
    }

    /// `other` with its edge ids shifted if any of them are used by `self`.
    fn make_ids_disjoint(&self, other: &SignedBipartiteGraph) -> SignedBipartiteGraph {
        if other.edges.keys().all(|id| !self.edges.contains_key(id)) {
            return other.clone();
        }
        let offset = self.next_edge_id().0;
        let mut g = other.clone();
        g.edges = other
            .edges
            .values()
            .map(|e| {
                let id = EdgeId(e.id.0 + offset);
                (id, super::Edge { id, ..e.clone() })
            })
            .collect();
        g
    }

    /// Replaces each class of parallel edges by its lowest-id edge.
    pub fn simplified(&self) -> SignedBipartiteGraph {
        let mut seen = BTreeSet::new();
        let mut g = self.clone();
        g.edges.retain(|_, e| seen.insert((e.e.clone(), e.v.clone())));
        g
    }

    /// True if `label` has exactly two incident edges that are not parallel.
    pub fn is_simple_degree_two(&self, label: &str) -> bool {
        let inc = self.incident_edges(label);
        inc.len() == 2 && inc[0].other(label) != inc[1].other(label)
    }

    /// Neighbor positions in the adjacency structure, for search algorithms.
    pub(crate) fn neighbor_lists(&self) -> (Vec<String>, Vec<Vec<Neighbor>>) {
        let idx = self.index();
        let adj = adjacency(self, &idx);
        (idx.labels.iter().map(|s| s.to_string()).collect(), adj)
    }

    pub fn color_count(&self, color: Color) -> usize {
        match color {
            Color::E => self.e_count(),
            Color::V => self.v_count(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use Sign::{Negative as N, Positive as P};

    #[test]
    fn component_counts() {
        assert_eq!(fixtures::hexagon().components().len(), 1);
        assert_eq!(fixtures::hexagon_plus_isolated().components().len(), 2);
        assert!(SignedBipartiteGraph::new().components().is_empty());
    }

    #[test]
    fn components_are_ordered_by_smallest_label() {
        let g = SignedBipartiteGraph::build(&["b", "x"], &["a", "y"], &[("x", "a", P), ("b", "y", N)]).unwrap();
        let parts = g.components();
        assert_eq!(parts[0].vertices(), vec!["a", "x"]);
        assert_eq!(parts[1].vertices(), vec!["b", "y"]);
        assert_eq!(parts[1].edge(EdgeId(2)).unwrap().sign, N);
    }

    #[test]
    fn deleting_hub_edges_of_table_graph() {
        let g = fixtures::table1();
        let hub: BTreeSet<EdgeId> = g.negative_edges().into_iter().collect();
        let h = g.delete_edges(&hub).unwrap();
        assert_eq!(h.forget_signs(), fixtures::hexagon_plus_isolated());
        assert_eq!(g.delete_edges(&BTreeSet::new()).unwrap(), g);
        assert_eq!(g.delete_edges(&BTreeSet::from([EdgeId(99)])), Err(Error::UnknownEdge(EdgeId(99))));
    }

    #[test]
    fn deleting_one_parallel_edge() {
        let g = SignedBipartiteGraph::build(&["e"], &["v"], &[("e", "v", P), ("e", "v", N)]).unwrap();
        let h = g.delete_edge(EdgeId(2)).unwrap();
        assert_eq!(h, SignedBipartiteGraph::build(&["e"], &["v"], &[("e", "v", P)]).unwrap());
    }

    #[test]
    fn forgetting_signs() {
        assert_eq!(fixtures::table1().forget_signs(), fixtures::figure_graph());
        let g = fixtures::figure_graph();
        assert_eq!(g.forget_signs(), g);
        let single = SignedBipartiteGraph::build(&["e"], &["v"], &[("e", "v", N)]).unwrap();
        assert_eq!(single.forget_signs(), SignedBipartiteGraph::build(&["e"], &["v"], &[("e", "v", P)]).unwrap());
    }

    #[test]
    fn block_sum_of_stars_is_a_path() {
        let star = SignedBipartiteGraph::build(&["c"], &["l1", "l2"], &[("c", "l1", P), ("c", "l2", P)]).unwrap();
        let path = star.block_sum(&star, "l2", "l1").unwrap();
        assert_eq!(path.edge_count(), 4);
        assert_eq!(path.vertex_count(), 5);
        assert!(path.is_forest());
        assert_eq!(path.components().len(), 1);
        let max_degree = path.vertices().iter().map(|l| path.degree(l)).max();
        assert_eq!(max_degree, Some(2));
    }

    #[test]
    fn block_sum_with_single_vertex_is_identity() {
        let g = fixtures::hexagon();
        let dot = SignedBipartiteGraph::build(&["p"], &[], &[]).unwrap();
        assert_eq!(g.block_sum(&dot, "e1", "p").unwrap(), g);
        assert_eq!(g.block_sum(&dot, "v1", "p"), Err(Error::ColorMismatch("v1".into(), "p".into())));
        assert!(matches!(g.block_sum(&dot, "nope", "p"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn block_sum_of_two_hexagons() {
        let g = fixtures::hexagon();
        let h = g.block_sum(&g, "e1", "e1").unwrap();
        assert_eq!(h.edge_count(), 12);
        assert_eq!(h.vertex_count(), 11);
        assert_eq!(h.component_count(), 1);
    }

    #[test]
    fn disjoint_union_cases() {
        let g = fixtures::hexagon();
        let empty = SignedBipartiteGraph::new();
        assert_eq!(g.disjoint_union(&empty), g);
        let u = g.disjoint_union(&g);
        assert_eq!(u.components().len(), 2);
        assert_eq!(u.edge_count(), 12);
        assert_eq!(u.vertex_count(), 12);
    }

    #[test]
    fn contraction_and_deletion() {
        let path = SignedBipartiteGraph::build(&["e1", "e2"], &["v1"], &[("e1", "v1", P), ("e2", "v1", P)]).unwrap();
        let c = path.contract_vertex("v1").unwrap();
        assert_eq!(c, SignedBipartiteGraph::build(&["e1"], &[], &[]).unwrap());

        // A 4-cycle e1-v1-e2-v2: contracting v1 merges e1 and e2, leaving two
        // parallel edges to v2.
        let sq = SignedBipartiteGraph::build(
            &["e1", "e2"],
            &["v1", "v2"],
            &[("e1", "v1", P), ("e2", "v1", N), ("e2", "v2", P), ("e1", "v2", N)],
        )
        .unwrap();
        let c = sq.contract_vertex("v1").unwrap();
        assert_eq!(c.vertices(), vec!["e1", "v2"]);
        assert_eq!(c.edge_count(), 2);
        assert!(c.edges().all(|e| e.e == "e1" && e.v == "v2"));

        let iso = SignedBipartiteGraph::build(&["e1", "e2"], &["v1"], &[("e1", "v1", P)]).unwrap();
        let d = iso.delete_vertex("e2").unwrap();
        assert_eq!(d, SignedBipartiteGraph::build(&["e1"], &["v1"], &[("e1", "v1", P)]).unwrap());
        assert!(matches!(iso.delete_vertex("zz"), Err(Error::UnknownVertex(_))));
    }
}
