//! Seeded random graphs and diagrams for property tests and benchmarks.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fixtures::embedding_from_coords;
use crate::graph::{all_simple_cycles, Color, EdgeId, PlaneEmbedding, SignedBipartiteGraph, Sign};
use crate::knot::{braid_closure, LinkDiagram};

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// A bipartite multigraph on `1..=max_side` vertices per class with
/// `0..=max_edges` uniformly random edges and signs.
pub fn random_signed_graph(rng: &mut impl Rng, max_side: usize, max_edges: usize) -> SignedBipartiteGraph {
    let ne = rng.gen_range(1..=max_side);
    let nv = rng.gen_range(1..=max_side);
    let m = rng.gen_range(0..=max_edges);
    let mut g = SignedBipartiteGraph::new();
    for i in 1..=ne {
        g.add_vertex(Color::E, &format!("e{i}")).unwrap();
    }
    for i in 1..=nv {
        g.add_vertex(Color::V, &format!("v{i}")).unwrap();
    }
    for k in 1..=m {
        let e = format!("e{}", rng.gen_range(1..=ne));
        let v = format!("v{}", rng.gen_range(1..=nv));
        g.add_edge(EdgeId(k as u32), &e, &v, random_sign(rng)).unwrap();
    }
    g
}

/// A connected random graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, max_side: usize, max_edges: usize) -> SignedBipartiteGraph {
    loop {
        let g = random_signed_graph(rng, max_side, max_edges);
        if g.component_count() == 1 {
            return g;
        }
    }
}

/// The same graph with independent random signs.
pub fn randomize_signs(rng: &mut impl Rng, g: &SignedBipartiteGraph) -> SignedBipartiteGraph {
    let signs: Vec<Sign> = (0..g.edge_count()).map(|_| random_sign(rng)).collect();
    g.with_signs(&signs)
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Whether two straight edges would overlap anywhere except a shared end.
fn conflict(p: ((i64, i64), (i64, i64)), q: ((i64, i64), (i64, i64))) -> bool {
    let (a, b) = p;
    let (c, d) = q;
    let shared = [a, b].iter().filter(|x| **x == c || **x == d).count();
    if shared == 2 {
        return true;
    }
    if shared == 1 {
        let s = if a == c || a == d { a } else { b };
        let x = if s == a { b } else { a };
        let y = if s == c { d } else { c };
        let dot = (x.0 - s.0) * (y.0 - s.0) + (x.1 - s.1) * (y.1 - s.1);
        return orient(s, x, y) == 0 && dot > 0;
    }
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// A random plane bipartite graph with straight edges between grid points.
/// Roughly a third of the edges are then doubled into parallel bundles.
/// The result has at most `max_edges` edges and all signs positive.
pub fn random_plane_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> (SignedBipartiteGraph, PlaneEmbedding) {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut cells: Vec<(i64, i64)> = (0..5).flat_map(|x| (0..5).map(move |y| (x, y))).collect();
    cells.shuffle(rng);
    let points = &cells[..n];
    let mut g = SignedBipartiteGraph::new();
    let mut coords = BTreeMap::new();
    for (k, p) in points.iter().enumerate() {
        // Alternate the first two so both classes are present.
        let color = if k < 2 { [Color::E, Color::V][k] } else if rng.gen_bool(0.5) { Color::E } else { Color::V };
        let label = match color {
            Color::E => format!("e{}", k + 1),
            Color::V => format!("v{}", k + 1),
        };
        g.add_vertex(color, &label).unwrap();
        coords.insert(label, *p);
    }
    let mut pairs: Vec<(String, String)> = Vec::new();
    for e in g.e_vertices() {
        for v in g.v_vertices() {
            pairs.push((e.to_string(), v.to_string()));
        }
    }
    pairs.shuffle(rng);
    let target = rng.gen_range(1..=max_edges.max(1));
    let mut drawn: Vec<((i64, i64), (i64, i64))> = Vec::new();
    let mut next = 1u32;
    for (e, v) in pairs {
        if next as usize > target {
            break;
        }
        let seg = (coords[&e], coords[&v]);
        let through_point = coords.values().any(|p| *p != seg.0 && *p != seg.1 && on_segment(*p, seg.0, seg.1));
        if through_point || drawn.iter().any(|d| conflict(*d, seg)) {
            continue;
        }
        drawn.push(seg);
        g.add_edge(EdgeId(next), &e, &v, Sign::Positive).unwrap();
        next += 1;
    }
    for id in g.edge_ids() {
        if (next as usize) <= max_edges && rng.gen_bool(0.3) {
            let edge = g.edge(id).unwrap().clone();
            g.add_edge(EdgeId(next), &edge.e, &edge.v, Sign::Positive).unwrap();
            next += 1;
        }
    }
    let emb = embedding_from_coords(&g, &coords);
    debug_assert!(emb.check_planar(&g).is_ok());
    (g, emb)
}

/// Signs that make a randomly chosen cycle alternate, random elsewhere.
/// `None` if `g` is a forest.
pub fn signs_with_alternating_cycle(rng: &mut impl Rng, g: &SignedBipartiteGraph) -> Option<SignedBipartiteGraph> {
    let cycles = all_simple_cycles(g);
    let cycle = cycles.choose(rng)?;
    let mut h = randomize_signs(rng, g);
    let first = random_sign(rng);
    for (k, id) in cycle.edge_ids.iter().enumerate() {
        let s = if k % 2 == 0 { first } else { first.flip() };
        h = h.with_sign(*id, s).unwrap();
    }
    Some(h)
}

/// A random braid word with letters in `±1..strands`.
pub fn random_braid_word(rng: &mut impl Rng, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// The closure of a random braid on 2 to 4 strands with at most
/// `max_crossings` crossings.
pub fn random_braid_diagram(rng: &mut impl Rng, max_crossings: usize) -> LinkDiagram {
    let strands = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_crossings.max(1));
    braid_closure(strands, &random_braid_word(rng, strands, len)).expect("valid braid word")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn segment_conflicts() {
        assert!(conflict(((0, 0), (2, 2)), ((0, 2), (2, 0))));
        assert!(!conflict(((0, 0), (1, 0)), ((0, 1), (1, 1))));
        assert!(conflict(((0, 0), (2, 0)), ((0, 0), (1, 0))));
        assert!(!conflict(((0, 0), (2, 0)), ((0, 0), (0, 1))));
        assert!(conflict(((0, 0), (2, 0)), ((1, 0), (1, 1))));
    }

    #[test]
    fn plane_graphs_are_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (g, emb) = random_plane_graph(&mut rng, 7, 10);
            assert!(g.edge_count() <= 10);
            emb.check_planar(&g).unwrap();
        }
    }

    #[test]
    fn alternating_signs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = signs_with_alternating_cycle(&mut rng, &crate::fixtures::k33()).unwrap();
        assert!(crate::graph::find_alternating_cycle(&g).is_some());
        assert!(signs_with_alternating_cycle(&mut rng, &crate::fixtures::star(3)).is_none());
    }
}
