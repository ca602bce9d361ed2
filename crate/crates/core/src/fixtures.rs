//! Named graphs used throughout the tests, benches and CLI examples.
//!
//! Plane graphs are given by integer coordinates; the rotation system is the
//! exact counterclockwise order of straight edges around each vertex.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::graph::{Color, EdgeId, PlaneEmbedding, SignedBipartiteGraph, Sign};

use Sign::{Negative as N, Positive as P};

/// Counterclockwise angular order of nonzero integer vectors, starting from
/// the positive x-axis.
pub fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

/// Rotation system of a straight-line drawing. Parallel edges are drawn as a
/// thin bundle: ascending ids around the `E` end, descending around the `V`
/// end.
pub fn embedding_from_coords(g: &SignedBipartiteGraph, coords: &BTreeMap<String, (i64, i64)>) -> PlaneEmbedding {
    let mut rotation = BTreeMap::new();
    for label in g.vertices() {
        let here = coords[label];
        let is_e = g.color_of(label) == Some(Color::E);
        let mut inc: Vec<(EdgeId, (i64, i64))> = g
            .incident_edges(label)
            .iter()
            .map(|e| {
                let there = coords[e.other(label)];
                (e.id, (there.0 - here.0, there.1 - here.1))
            })
            .collect();
        inc.sort_by(|(ia, da), (ib, db)| {
            angle_cmp(*da, *db).then_with(|| if is_e { ia.cmp(ib) } else { ib.cmp(ia) })
        });
        rotation.insert(label.to_string(), inc.into_iter().map(|(id, _)| id).collect());
    }
    PlaneEmbedding::new(rotation)
}

fn plane(g: SignedBipartiteGraph, coords: &[(&str, (i64, i64))]) -> (SignedBipartiteGraph, PlaneEmbedding) {
    let coords: BTreeMap<String, (i64, i64)> = coords.iter().map(|(l, c)| (l.to_string(), *c)).collect();
    let emb = embedding_from_coords(&g, &coords);
    (g, emb)
}

const HEX_EDGES: [(&str, &str, Sign); 6] =
    [("e1", "v1", P), ("e2", "v1", P), ("e2", "v2", P), ("e3", "v2", P), ("e3", "v3", P), ("e1", "v3", P)];

const HEX_COORDS: [(&str, (i64, i64)); 7] =
    [("e1", (2, 0)), ("v1", (1, 2)), ("e2", (-1, 2)), ("v2", (-2, 0)), ("e3", (-1, -2)), ("v3", (1, -2)), ("e4", (0, 0))];

/// The 6-cycle `e1 v1 e2 v2 e3 v3`.
pub fn hexagon() -> SignedBipartiteGraph {
    SignedBipartiteGraph::build(&["e1", "e2", "e3"], &["v1", "v2", "v3"], &HEX_EDGES).unwrap()
}

/// The hexagon plus an isolated `E`-vertex `e4`.
pub fn hexagon_plus_isolated() -> SignedBipartiteGraph {
    SignedBipartiteGraph::build(&["e1", "e2", "e3", "e4"], &["v1", "v2", "v3"], &HEX_EDGES).unwrap()
}

fn hub_graph(hub_sign: Sign) -> SignedBipartiteGraph {
    let mut edges = HEX_EDGES.to_vec();
    edges.extend([("e4", "v1", hub_sign), ("e4", "v2", hub_sign), ("e4", "v3", hub_sign)]);
    SignedBipartiteGraph::build(&["e1", "e2", "e3", "e4"], &["v1", "v2", "v3"], &edges).unwrap()
}

/// All-positive hexagon with a hub `e4` joined to `v1, v2, v3` (9 edges).
pub fn figure_graph() -> SignedBipartiteGraph {
    hub_graph(P)
}

/// The hub graph with positive hexagon edges and negative hub edges 7, 8, 9.
pub fn table1() -> SignedBipartiteGraph {
    hub_graph(N)
}

/// [`figure_graph`] drawn with the hub inside the hexagon.
pub fn figure_plane() -> (SignedBipartiteGraph, PlaneEmbedding) {
    plane(figure_graph(), &HEX_COORDS)
}

/// [`table1`] drawn with the hub inside the hexagon.
pub fn table1_plane() -> (SignedBipartiteGraph, PlaneEmbedding) {
    plane(table1(), &HEX_COORDS)
}

pub fn hexagon_plane() -> (SignedBipartiteGraph, PlaneEmbedding) {
    plane(hexagon(), &HEX_COORDS)
}

pub fn k23() -> SignedBipartiteGraph {
    SignedBipartiteGraph::build(
        &["e1", "e2"],
        &["v1", "v2", "v3"],
        &[("e1", "v1", P), ("e1", "v2", P), ("e1", "v3", P), ("e2", "v1", P), ("e2", "v2", P), ("e2", "v3", P)],
    )
    .unwrap()
}

pub fn k23_plane() -> (SignedBipartiteGraph, PlaneEmbedding) {
    plane(k23(), &[("e1", (0, 2)), ("e2", (0, -2)), ("v1", (-2, 0)), ("v2", (0, 0)), ("v3", (2, 0))])
}

pub fn k33() -> SignedBipartiteGraph {
    let mut edges = Vec::new();
    for e in ["e1", "e2", "e3"] {
        for v in ["v1", "v2", "v3"] {
            edges.push((e, v, P));
        }
    }
    SignedBipartiteGraph::build(&["e1", "e2", "e3"], &["v1", "v2", "v3"], &edges).unwrap()
}

/// A star with center `c` (class `E`) and `k` leaves `l1..lk`.
pub fn star(k: usize) -> SignedBipartiteGraph {
    let leaves: Vec<String> = (1..=k).map(|i| format!("l{i}")).collect();
    let leaf_refs: Vec<&str> = leaves.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str, Sign)> = leaf_refs.iter().map(|l| ("c", *l, P)).collect();
    SignedBipartiteGraph::build(&["c"], &leaf_refs, &edges).unwrap()
}

/// A path with `n` edges on vertices `p0 .. pn`; even indices are `E`.
pub fn path(n: usize) -> SignedBipartiteGraph {
    let labels: Vec<String> = (0..=n).map(|i| format!("p{i}")).collect();
    let e: Vec<&str> = labels.iter().step_by(2).map(String::as_str).collect();
    let v: Vec<&str> = labels.iter().skip(1).step_by(2).map(String::as_str).collect();
    let edges: Vec<(&str, &str, Sign)> = (0..n).map(|i| (labels[i].as_str(), labels[i + 1].as_str(), P)).collect();
    SignedBipartiteGraph::build(&e, &v, &edges).unwrap()
}

/// A forest with `k` components: paths of lengths `0, 1, 2, ...`.
pub fn forest(k: usize) -> SignedBipartiteGraph {
    (0..k).fold(SignedBipartiteGraph::new(), |acc, i| {
        let part = path(i).relabeled(|l| format!("t{i}.{l}"));
        acc.disjoint_union(&part)
    })
}

/// Two vertices joined by the given parallel edges.
pub fn bundle(signs: &[Sign]) -> SignedBipartiteGraph {
    let edges: Vec<(&str, &str, Sign)> = signs.iter().map(|s| ("a", "b", *s)).collect();
    SignedBipartiteGraph::build(&["a"], &["b"], &edges).unwrap()
}

/// The 4-cycle `e1 v1 e2 v2` with the given signs.
pub fn square(signs: [Sign; 4]) -> SignedBipartiteGraph {
    SignedBipartiteGraph::build(
        &["e1", "e2"],
        &["v1", "v2"],
        &[("e1", "v1", signs[0]), ("e2", "v1", signs[1]), ("e2", "v2", signs[2]), ("e1", "v2", signs[3])],
    )
    .unwrap()
}

const SQUARE_COORDS: [(&str, (i64, i64)); 4] = [("e1", (0, 0)), ("v1", (2, 0)), ("e2", (2, 2)), ("v2", (0, 2))];

/// Plane bipartite graphs with at most 10 edges and their rotation systems.
pub fn plane_templates() -> Vec<(&'static str, SignedBipartiteGraph, PlaneEmbedding)> {
    let mut out = Vec::new();
    let mut push = |name: &'static str, (g, emb): (SignedBipartiteGraph, PlaneEmbedding)| out.push((name, g, emb));

    let dot = SignedBipartiteGraph::build(&["a"], &[], &[]).unwrap();
    push("single-vertex", plane(dot, &[("a", (0, 0))]));
    for m in 1..=4 {
        push(
            ["bundle-1", "bundle-2", "bundle-3", "bundle-4"][m - 1],
            plane(bundle(&vec![P; m]), &[("a", (0, 0)), ("b", (2, 0))]),
        );
    }
    push("path-3", plane(path(3), &[("p0", (0, 0)), ("p1", (1, 1)), ("p2", (2, 0)), ("p3", (3, 1))]));
    push("star-3", plane(star(3), &[("c", (0, 0)), ("l1", (2, 0)), ("l2", (-1, 2)), ("l3", (-1, -2))]));
    push("square", plane(square([P; 4]), &SQUARE_COORDS));
    push("hexagon", hexagon_plane());
    push("k23", k23_plane());
    push("figure", figure_plane());

    // Square with its first edge doubled.
    let mut g = square([P; 4]);
    g.add_edge(EdgeId(5), "e1", "v1", P).unwrap();
    push("square-doubled", plane(g, &SQUARE_COORDS));

    // Two squares sharing the edge e2-v1 (a domino).
    let domino = SignedBipartiteGraph::build(
        &["e1", "e2", "e3"],
        &["v1", "v2", "v3"],
        &[("e1", "v1", P), ("e2", "v1", P), ("e2", "v2", P), ("e1", "v2", P), ("e3", "v1", P), ("e3", "v3", P), ("e2", "v3", P)],
    )
    .unwrap();
    push(
        "domino",
        plane(domino, &[("e1", (0, 0)), ("v1", (2, 0)), ("e2", (2, 2)), ("v2", (0, 2)), ("e3", (4, 0)), ("v3", (4, 2))]),
    );

    // Hexagon with the chord e1-v2.
    let mut g = hexagon();
    g.add_edge(EdgeId(7), "e1", "v2", P).unwrap();
    push("hexagon-chord", plane(g, &HEX_COORDS[..6]));

    // Two squares sharing the vertex e2 (a block sum).
    let bowtie = SignedBipartiteGraph::build(
        &["e1", "e2", "e3"],
        &["v1", "v2", "v3", "v4"],
        &[
            ("e1", "v1", P), ("e2", "v1", P), ("e2", "v2", P), ("e1", "v2", P),
            ("e2", "v3", P), ("e3", "v3", P), ("e3", "v4", P), ("e2", "v4", P),
        ],
    )
    .unwrap();
    push(
        "bowtie",
        plane(
            bowtie,
            &[("e1", (0, 0)), ("v1", (2, -1)), ("e2", (4, 0)), ("v2", (2, 1)), ("v3", (6, -1)), ("e3", (8, 0)), ("v4", (6, 1))],
        ),
    );

    // K_{2,3} with a pendant vertex on v1.
    let (mut g, _) = k23_plane();
    g.add_pendant("v1", "e9", &[P]).unwrap();
    push(
        "k23-pendant",
        plane(g, &[("e1", (0, 2)), ("e2", (0, -2)), ("v1", (-2, 0)), ("v2", (0, 0)), ("v3", (2, 0)), ("e9", (-4, 0))]),
    );

    // A square next to an isolated vertex.
    let mut g = square([P; 4]);
    g.add_vertex(Color::E, "e9").unwrap();
    push("square-and-dot", plane(g, &[SQUARE_COORDS.as_slice(), &[("e9", (9, 9))]].concat()));

    // Two double bonds side by side.
    let g = bundle(&[P, P]).disjoint_union(&bundle(&[P, P]));
    push("two-bundles", plane(g, &[("a.a", (0, 0)), ("a.b", (2, 0)), ("b.a", (0, 5)), ("b.b", (2, 5))]));

    // 2x3 ladder: three squares in a row (10 edges).
    let ladder = SignedBipartiteGraph::build(
        &["a0", "b1", "a2", "b3"],
        &["b0", "a1", "b2", "a3"],
        &[
            ("a0", "b0", P), ("a0", "a1", P), ("b1", "b0", P), ("b1", "a1", P), ("b1", "b2", P),
            ("a2", "a1", P), ("a2", "b2", P), ("a2", "a3", P), ("b3", "b2", P), ("b3", "a3", P),
        ],
    )
    .unwrap();
    push(
        "ladder",
        plane(
            ladder,
            &[("a0", (0, 0)), ("a1", (2, 0)), ("a2", (4, 0)), ("a3", (6, 0)), ("b0", (0, 2)), ("b1", (2, 2)), ("b2", (4, 2)), ("b3", (6, 2))],
        ),
    );

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angular_order() {
        let mut dirs = vec![(0, -1), (1, 1), (-1, 0), (1, 0), (0, 1), (1, -1)];
        dirs.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(dirs, vec![(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1), (1, -1)]);
    }

    #[test]
    fn hub_rotation_inside_hexagon() {
        let (_, emb) = figure_plane();
        assert_eq!(emb.at("e4"), &[EdgeId(7), EdgeId(8), EdgeId(9)]);
        assert_eq!(emb.at("v1"), &[EdgeId(2), EdgeId(7), EdgeId(1)]);
    }

    #[test]
    fn templates_stay_small() {
        for (name, g, _) in plane_templates() {
            assert!(g.edge_count() <= 10, "{name}");
        }
    }

    #[test]
    fn forests() {
        let f = forest(4);
        assert_eq!(f.component_count(), 4);
        assert!(f.is_forest());
    }
}
