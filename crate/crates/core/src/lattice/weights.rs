//! Points of the root polytope and the weight systems representing them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::flow::Transport;
use crate::error::{Error, Result};
use crate::graph::{CycleWitness, EdgeId, SignedBipartiteGraph};

/// A lattice point of a dilated root polytope: integer marginals on both
/// color classes with equal sums.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub e_coords: BTreeMap<String, u64>,
    pub v_coords: BTreeMap<String, u64>,
}

impl LatticePoint {
    /// The dilation level `s`, or `None` if the two sides disagree.
    pub fn level(&self) -> Option<u64> {
        let a: u64 = self.e_coords.values().sum();
        let b: u64 = self.v_coords.values().sum();
        (a == b).then_some(a)
    }

    /// Whether the point lies in `s·Q_G` for its own level `s`, decided by max-flow.
    pub fn is_in_polytope_of(&self, g: &SignedBipartiteGraph) -> bool {
        self.level().is_some() && WeightSystem::for_point(g, self).is_ok()
    }
}

/// Nonnegative edge weights summing to `total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: BTreeMap<EdgeId, BigRational>,
    total: BigRational,
}

impl WeightSystem {
    /// Weights for every edge of `g`; missing edges get weight zero.
    pub fn new(g: &SignedBipartiteGraph, weights: BTreeMap<EdgeId, BigRational>) -> Result<Self> {
        let mut full = BTreeMap::new();
        for id in g.edge_ids() {
            full.insert(id, BigRational::zero());
        }
        for (id, w) in weights {
            if !full.contains_key(&id) {
                return Err(Error::UnknownEdge(id));
            }
            if w.is_negative() {
                return Err(Error::InvalidWeights(format!("edge {id} has negative weight {w}")));
            }
            full.insert(id, w);
        }
        let total = full.values().sum();
        Ok(Self { weights: full, total })
    }

    /// Equal weights summing to `total`.
    pub fn uniform(g: &SignedBipartiteGraph, total: BigRational) -> Result<Self> {
        if g.edge_count() == 0 {
            return Err(Error::NoEdges);
        }
        let each = total / BigRational::from_integer(BigInt::from(g.edge_count()));
        Self::new(g, g.edge_ids().into_iter().map(|id| (id, each.clone())).collect())
    }

    /// An integral weight system with the marginals of `p`.
    pub fn for_point(g: &SignedBipartiteGraph, p: &LatticePoint) -> Result<Self> {
        let e: Vec<&str> = g.e_vertices().collect();
        let v: Vec<&str> = g.v_vertices().collect();
        let coord = |m: &BTreeMap<String, u64>, l: &str| m.get(l).copied().unwrap_or(0);
        for l in p.e_coords.keys().chain(p.v_coords.keys()) {
            if !g.contains(l) {
                return Err(Error::UnknownVertex(l.clone()));
            }
        }
        let supply: Vec<u64> = e.iter().map(|l| coord(&p.e_coords, l)).collect();
        let demand: Vec<u64> = v.iter().map(|l| coord(&p.v_coords, l)).collect();
        let ids = g.edge_ids();
        let arcs: Vec<(usize, usize)> = ids
            .iter()
            .map(|id| {
                let edge = g.edge(*id).expect("listed id");
                (e.binary_search(&edge.e.as_str()).unwrap(), v.binary_search(&edge.v.as_str()).unwrap())
            })
            .collect();
        let flow = Transport { supply: &supply, demand: &demand, arcs: &arcs }
            .solve()
            .ok_or_else(|| Error::InvalidWeights("point lies outside the dilated root polytope".into()))?;
        let weights = ids.into_iter().zip(flow).map(|(id, f)| (id, BigRational::from_integer(f.into()))).collect();
        Self::new(g, weights)
    }

    pub fn weight(&self, id: EdgeId) -> Option<&BigRational> {
        self.weights.get(&id)
    }

    pub fn weights(&self) -> &BTreeMap<EdgeId, BigRational> {
        &self.weights
    }

    pub fn total(&self) -> &BigRational {
        &self.total
    }

    /// Sum of incident weights at every vertex, split by color class.
    pub fn marginals(
        &self,
        g: &SignedBipartiteGraph,
    ) -> (BTreeMap<String, BigRational>, BTreeMap<String, BigRational>) {
        let mut e: BTreeMap<String, BigRational> = g.e_vertices().map(|l| (l.to_string(), BigRational::zero())).collect();
        let mut v: BTreeMap<String, BigRational> = g.v_vertices().map(|l| (l.to_string(), BigRational::zero())).collect();
        for (id, w) in &self.weights {
            let edge = g.edge(*id).expect("weights only cover edges of g");
            *e.get_mut(&edge.e).unwrap() += w;
            *v.get_mut(&edge.v).unwrap() += w;
        }
        (e, v)
    }

    /// Adds `delta` to the odd-position edges of `cycle` and subtracts it
    /// from the even-position ones.
    pub fn cycle_change(&self, cycle: &CycleWitness, delta: &BigRational) -> Result<Self> {
        let mut next = self.weights.clone();
        for (i, id) in cycle.edge_ids.iter().enumerate() {
            let w = next.get_mut(id).ok_or(Error::UnknownEdge(*id))?;
            if i % 2 == 0 {
                *w += delta;
            } else {
                *w -= delta;
            }
            if w.is_negative() {
                return Err(Error::InvalidWeights(format!("cycle change makes edge {id} negative")));
            }
        }
        Ok(Self { weights: next, total: self.total.clone() })
    }
}
