use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{EdgeId, SignedBipartiteGraph};
use crate::error::{Error, Result};

/// A rotation system: for each vertex, the counterclockwise cyclic order of
/// its incident edges in a plane drawing.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PlaneEmbedding {
    pub rotation: BTreeMap<String, Vec<EdgeId>>,
}

impl PlaneEmbedding {
    pub fn new(rotation: BTreeMap<String, Vec<EdgeId>>) -> Self {
        Self { rotation }
    }

    pub fn from_lists(lists: &[(&str, &[u32])]) -> Self {
        let rotation = lists
            .iter()
            .map(|(l, ids)| (l.to_string(), ids.iter().map(|&i| EdgeId(i)).collect()))
            .collect();
        Self { rotation }
    }

    /// Rotation at `label`; empty for a vertex with no entry.
    pub fn at(&self, label: &str) -> &[EdgeId] {
        self.rotation.get(label).map_or(&[], Vec::as_slice)
    }

    /// Checks that every vertex lists each incident edge exactly once and
    /// nothing else.
    pub fn check_consistent(&self, g: &SignedBipartiteGraph) -> Result<()> {
        for label in self.rotation.keys() {
            if !g.contains(label) {
                return Err(Error::InvalidEmbedding(format!("rotation for unknown vertex `{label}`")));
            }
        }
        for label in g.vertices() {
            let listed: Vec<EdgeId> = self.at(label).to_vec();
            let listed_set: BTreeSet<EdgeId> = listed.iter().copied().collect();
            if listed_set.len() != listed.len() {
                return Err(Error::InvalidEmbedding(format!("edge repeated in rotation at `{label}`")));
            }
            let incident: BTreeSet<EdgeId> = g.incident_edges(label).iter().map(|e| e.id).collect();
            if listed_set != incident {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at `{label}` lists {listed_set:?}, incident edges are {incident:?}"
                )));
            }
        }
        Ok(())
    }

    /// Faces traced through the rotation system, each as its cyclic list of
    /// darts `(edge, tail vertex)`. Isolated vertices contribute no darts.
    pub fn faces(&self, g: &SignedBipartiteGraph) -> Result<Vec<Vec<(EdgeId, String)>>> {
        self.check_consistent(g)?;
        let mut used: BTreeSet<(EdgeId, String)> = BTreeSet::new();
        let mut faces = Vec::new();
        for e in g.edges() {
            for tail in [&e.e, &e.v] {
                let start = (e.id, tail.clone());
                if used.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = start.clone();
                loop {
                    used.insert(dart.clone());
                    face.push(dart.clone());
                    let (id, tail) = &dart;
                    let head = g.edge(*id).expect("edge in graph").other(tail).to_string();
                    let rot = self.at(&head);
                    let pos = rot.iter().position(|x| x == id).expect("consistent rotation");
                    let next = rot[(pos + 1) % rot.len()];
                    dart = (next, head);
                    if dart == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Verifies that the rotation system describes a plane drawing: every
    /// component has Euler characteristic 2.
    pub fn check_planar(&self, g: &SignedBipartiteGraph) -> Result<()> {
        let faces = self.faces(g)?.len() as i64;
        let isolated = g.vertices().iter().filter(|l| g.degree(l) == 0).count() as i64;
        let k = g.component_count() as i64;
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces + isolated;
        // Components share the outer face in the plane: V - E + F = 1 + k.
        let plane = chi - (k - 1);
        if chi == 2 * k {
            Ok(())
        } else {
            Err(Error::NonPlanar(plane, 1 + k))
        }
    }

    /// Inserts `id` into the rotation at `label` right after `after`, or as
    /// the only entry when `after` is `None`.
    pub fn insert_after(&mut self, label: &str, after: Option<EdgeId>, id: EdgeId) {
        let rot = self.rotation.entry(label.to_string()).or_default();
        match after.and_then(|a| rot.iter().position(|x| *x == a)) {
            Some(pos) => rot.insert(pos + 1, id),
            None => rot.push(id),
        }
    }
}
