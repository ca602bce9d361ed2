//! The median construction: a link diagram from a plane bipartite graph.
//!
//! Every vertex becomes a Seifert circle and every edge a crossing where the
//! circles of its two ends touch. Circles around `E`-vertices run
//! counterclockwise and those around `V`-vertices clockwise, so along an
//! `E`-circle the crossings follow the rotation at that vertex and along a
//! `V`-circle they follow it backwards. Near an edge, drawn with its `E` end
//! on the left, both strands point up; a positive edge puts the strand
//! coming up from the `E` side on top.

use std::collections::HashMap;

use super::diagram::{Arc, CircleLabel, Crossing, LinkDiagram};
use crate::error::Result;
use crate::graph::{Color, EdgeId, PlaneEmbedding, SignedBipartiteGraph, Sign};

pub fn median_construct(g: &SignedBipartiteGraph, emb: &PlaneEmbedding) -> Result<LinkDiagram> {
    emb.check_consistent(g)?;
    emb.check_planar(g)?;
    let mut next: Arc = 1;
    let mut arc_in: HashMap<(EdgeId, &str), Arc> = HashMap::new();
    let mut arc_out: HashMap<(EdgeId, &str), Arc> = HashMap::new();
    let mut free_loops = Vec::new();
    let mut labels = Vec::new();
    for label in g.vertices() {
        let color = g.color_of(label).expect("vertex of g");
        let mut order = emb.at(label).to_vec();
        if color == Color::V {
            order.reverse();
        }
        let first = next;
        if order.is_empty() {
            free_loops.push(next);
            next += 1;
        }
        for (t, id) in order.iter().enumerate() {
            arc_out.insert((*id, label), next);
            arc_in.insert((order[(t + 1) % order.len()], label), next);
            next += 1;
        }
        labels.push(CircleLabel { color, label: label.to_string(), arcs: (first..next).collect() });
    }
    let crossings = g
        .edges()
        .map(|e| {
            let (bl, tl) = (arc_in[&(e.id, e.e.as_str())], arc_out[&(e.id, e.e.as_str())]);
            let (br, tr) = (arc_in[&(e.id, e.v.as_str())], arc_out[&(e.id, e.v.as_str())]);
            let slots = match e.sign {
                Sign::Positive => [br, tr, tl, bl],
                Sign::Negative => [bl, br, tr, tl],
            };
            Crossing::new(e.id.0, slots, e.sign)
        })
        .collect();
    let d = LinkDiagram::new(crossings, free_loops)?.with_circle_labels(labels);
    d.check_planar()?;
    Ok(d)
}
