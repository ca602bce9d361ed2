//! Seifert circles and the Seifert graph of a diagram.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use super::diagram::{Arc, LinkDiagram};
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeId, SignedBipartiteGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertCircle {
    pub label: String,
    pub color: Color,
    /// Arcs on the circle, sorted.
    pub arcs: Vec<Arc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertDecomposition {
    pub circles: Vec<SeifertCircle>,
    /// Vertices are circles, edges are crossings (edge id = crossing id).
    pub graph: SignedBipartiteGraph,
}

impl SeifertDecomposition {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }
}

/// `s(D)`, the number of circles after smoothing every crossing.
pub fn circle_count(d: &LinkDiagram) -> usize {
    let arcs = d.arcs();
    let pos: HashMap<Arc, usize> = arcs.iter().enumerate().map(|(k, a)| (*a, k)).collect();
    let mut uf = crate::graph::UnionFind::new(arcs.len());
    for c in d.crossings() {
        for (a, b) in c.smoothing() {
            uf.union(pos[&a], pos[&b]);
        }
    }
    uf.count()
}

/// Smooths every crossing and reads off circles and the Seifert graph.
///
/// Circles are named and colored by the diagram's circle labels when it has
/// them. Otherwise they are called `c1, c2, ...` in order of their smallest
/// arc and 2-colored from the smallest circle of each component, which gets
/// color `E`.
pub fn seifert_decompose(d: &LinkDiagram) -> Result<SeifertDecomposition> {
    let arcs = d.arcs();
    let pos: HashMap<Arc, usize> = arcs.iter().enumerate().map(|(k, a)| (*a, k)).collect();
    let mut uf = crate::graph::UnionFind::new(arcs.len());
    for c in d.crossings() {
        for (a, b) in c.smoothing() {
            uf.union(pos[&a], pos[&b]);
        }
    }
    let mut classes: BTreeMap<usize, Vec<Arc>> = BTreeMap::new();
    for a in &arcs {
        classes.entry(uf.find(pos[a])).or_default().push(*a);
    }
    // Roots are the smallest member, so this is ordered by smallest arc.
    let groups: Vec<Vec<Arc>> = classes.into_values().collect();
    let circle_of: HashMap<Arc, usize> =
        groups.iter().enumerate().flat_map(|(k, g)| g.iter().map(move |a| (*a, k))).collect();

    let ends: Vec<(usize, usize)> = d
        .crossings()
        .iter()
        .map(|c| {
            let [(a, _), (b, _)] = c.smoothing();
            (circle_of[&a], circle_of[&b])
        })
        .collect();
    if let Some(c) = ends.iter().position(|(a, b)| a == b) {
        return Err(Error::InvalidDiagram(format!(
            "both strands of crossing {} lie on the same Seifert circle",
            d.crossings()[c].id
        )));
    }

    let names = if d.circle_labels().is_empty() {
        default_names(groups.len(), &ends)?
    } else {
        annotated_names(d, &groups, &circle_of)?
    };

    let mut graph = SignedBipartiteGraph::new();
    for (label, color) in &names {
        graph.add_vertex(*color, label)?;
    }
    for (c, (a, b)) in d.crossings().iter().zip(&ends) {
        graph.add_edge(EdgeId(c.id), &names[*a].0, &names[*b].0, c.sign)?;
    }
    let circles = groups
        .into_iter()
        .zip(names)
        .map(|(arcs, (label, color))| SeifertCircle { label, color, arcs })
        .collect();
    Ok(SeifertDecomposition { circles, graph })
}

fn default_names(n: usize, ends: &[(usize, usize)]) -> Result<Vec<(String, Color)>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in ends {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color: Vec<Option<Color>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Color::E);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(cu.other());
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Err(Error::InvalidDiagram("Seifert graph is not bipartite".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().enumerate().map(|(k, c)| (format!("c{}", k + 1), c.unwrap())).collect())
}

fn annotated_names(
    d: &LinkDiagram,
    groups: &[Vec<Arc>],
    circle_of: &HashMap<Arc, usize>,
) -> Result<Vec<(String, Color)>> {
    let mut names: Vec<Option<(String, Color)>> = vec![None; groups.len()];
    for s in d.circle_labels() {
        let bad = |m: &str| Error::InvalidDiagram(format!("circle label `{}`: {m}", s.label));
        let first = s.arcs.first().ok_or_else(|| bad("no arcs"))?;
        let k = *circle_of.get(first).ok_or_else(|| bad("unknown arc"))?;
        if s.arcs.iter().any(|a| circle_of.get(a) != Some(&k)) {
            return Err(bad("arcs lie on different circles"));
        }
        if names[k].is_some() {
            return Err(bad("circle is labelled twice"));
        }
        names[k] = Some((s.label.clone(), s.color));
    }
    names
        .into_iter()
        .enumerate()
        .map(|(k, n)| {
            n.ok_or_else(|| Error::InvalidDiagram(format!("Seifert circle through arc {} is not labelled", groups[k][0])))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Sign;
    use crate::knot::diagram::{parse_pd, Crossing};

    #[test]
    fn hopf_link() {
        let d = LinkDiagram::new(
            vec![Crossing::new(1, [2, 4, 3, 1], Sign::Positive), Crossing::new(2, [4, 2, 1, 3], Sign::Positive)],
            vec![],
        )
        .unwrap();
        let s = seifert_decompose(&d).unwrap();
        assert_eq!(s.circle_count(), 2);
        assert_eq!(s.graph, fixtures::bundle(&[Sign::Positive; 2]).relabeled(|l| if l == "a" { "c1".into() } else { "c2".into() }));
    }

    #[test]
    fn unknot() {
        let s = seifert_decompose(&parse_pd("O 1").unwrap()).unwrap();
        assert_eq!(s.circle_count(), 1);
        assert_eq!(s.graph.edge_count(), 0);
    }

    #[test]
    fn trefoil_has_two_circles() {
        let s = seifert_decompose(&parse_pd("X 1 5 2 4 +\nX 3 1 4 6 +\nX 5 3 6 2 +").unwrap()).unwrap();
        assert_eq!(s.circle_count(), 2);
        assert_eq!(s.graph.edge_count(), 3);
    }

    #[test]
    fn labels_must_cover_every_circle() {
        let text = "X 1 5 2 4 +\nX 3 1 4 6 +\nX 5 3 6 2 +\nS E a : 1\n";
        assert!(seifert_decompose(&parse_pd(text).unwrap()).is_err());
    }
}
