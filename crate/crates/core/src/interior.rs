//! The interior polynomial `I'` of unsigned bipartite graphs.
//!
//! Computed by the cycle-deletion recursion: a forest with `c` components
//! has `I' = (1 - x)^(c - 1)`; otherwise pick a cycle
//! `ε₁ δ₁ ε₂ δ₂ … εₙ δₙ` and use
//!
//! ```text
//! I'(G) = Σ_{∅ ≠ S ⊆ {ε₁ … εₙ}} (-1)^(|S| - 1) I'(G \ S)
//! ```
//!
//! Every deletion destroys the chosen cycle, so the recursion ends in forests.
//! A pair of parallel edges counts as a 2-cycle (`n = 1`), which amounts to
//! dropping one of the two edges.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_simple_cycles, find_cycle, CycleWitness, EdgeId, SignedBipartiteGraph, Sign};
use crate::poly::IntPolynomial;

/// Which half of the chosen cycle's edges is deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EpsilonChoice {
    /// Positions 1, 3, 5, ... of the witness (counting from 1).
    #[default]
    OddPositions,
    /// Positions 2, 4, 6, ...
    EvenPositions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CycleChoice {
    /// A shortest cycle, as returned by [`find_cycle`].
    #[default]
    Shortest,
    /// A uniformly random simple cycle, seeded. Disables memoization.
    Random(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct InteriorOptions {
    pub epsilon: EpsilonChoice,
    pub cycle: CycleChoice,
}

/// `I'` of an all-positive graph with at least one vertex.
pub fn interior_prime(g: &SignedBipartiteGraph) -> Result<IntPolynomial> {
    interior_prime_with(g, InteriorOptions::default())
}

pub fn interior_prime_with(g: &SignedBipartiteGraph, opts: InteriorOptions) -> Result<IntPolynomial> {
    check_input(g)?;
    let mut state = State::new(opts);
    Ok(state.eval(g))
}

fn check_input(g: &SignedBipartiteGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(e) = g.edges().find(|e| e.sign == Sign::Negative) {
        return Err(Error::NegativeEdge(e.id));
    }
    Ok(())
}

/// `(1 - x)^(c - 1)` for a forest with `c` components.
pub fn forest_polynomial(components: usize) -> IntPolynomial {
    IntPolynomial::one_minus_x_pow(components.saturating_sub(1))
}

/// Byte key identifying a graph up to edge ids: sorted labels of each class
/// and the sorted multiset of `(E-end, V-end, sign)` edge records.
pub fn canonical_key(g: &SignedBipartiteGraph) -> Vec<u8> {
    fn put(out: &mut Vec<u8>, s: &str) {
        out.extend_from_slice(&(s.len() as u32).to_le_bytes());
        out.extend_from_slice(s.as_bytes());
    }
    let mut out = Vec::new();
    out.push(b'E');
    for l in g.e_vertices() {
        put(&mut out, l);
    }
    out.push(b'V');
    for l in g.v_vertices() {
        put(&mut out, l);
    }
    let mut edges: Vec<(&str, &str, i8)> = g.edges().map(|e| (e.e.as_str(), e.v.as_str(), e.sign.as_i8())).collect();
    edges.sort_unstable();
    out.push(b'#');
    for (e, v, s) in edges {
        put(&mut out, e);
        put(&mut out, v);
        out.push(s as u8);
    }
    out
}

fn epsilon_edges(c: &CycleWitness, choice: EpsilonChoice) -> Vec<EdgeId> {
    match choice {
        EpsilonChoice::OddPositions => c.even_edges(),
        EpsilonChoice::EvenPositions => c.odd_edges(),
    }
}

/// All non-empty subsets of `items`, with the sign `(-1)^(|S| - 1)`.
fn signed_subsets(items: &[EdgeId]) -> impl Iterator<Item = (BTreeSet<EdgeId>, bool)> + '_ {
    (1u64..(1 << items.len())).map(move |mask| {
        let set: BTreeSet<EdgeId> =
            items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, id)| *id).collect();
        let positive = set.len() % 2 == 1;
        (set, positive)
    })
}

struct State {
    opts: InteriorOptions,
    memo: HashMap<Vec<u8>, IntPolynomial>,
    rng: Option<ChaCha8Rng>,
}

impl State {
    fn new(opts: InteriorOptions) -> Self {
        let rng = match opts.cycle {
            CycleChoice::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            CycleChoice::Shortest => None,
        };
        Self { opts, memo: HashMap::new(), rng }
    }

    fn choose_cycle(&mut self, g: &SignedBipartiteGraph) -> CycleWitness {
        match &mut self.rng {
            None => find_cycle(g).expect("graph is not a forest"),
            Some(rng) => all_simple_cycles(g).choose(rng).cloned().expect("graph is not a forest"),
        }
    }

    fn eval(&mut self, g: &SignedBipartiteGraph) -> IntPolynomial {
        if g.is_forest() {
            return forest_polynomial(g.component_count());
        }
        let key = (self.rng.is_none()).then(|| canonical_key(g));
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return hit.clone();
        }
        let cycle = self.choose_cycle(g);
        let eps = epsilon_edges(&cycle, self.opts.epsilon);
        let mut total = IntPolynomial::zero();
        for (subset, positive) in signed_subsets(&eps) {
            let term = self.eval(&g.delete_edges(&subset).expect("cycle edges exist"));
            total = if positive { total + term } else { total - term };
        }
        if let Some(k) = key {
            self.memo.insert(k, total.clone());
        }
        total
    }
}

/// One node of the recursion tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceNode {
    /// Edge ids still present.
    pub edges: Vec<EdgeId>,
    /// The cycle chosen here; `None` at forest leaves.
    pub cycle: Option<CycleWitness>,
    pub epsilon: Vec<EdgeId>,
    pub branches: Vec<TraceBranch>,
    /// Component count of a forest leaf.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forest_components: Option<usize>,
    pub value: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceBranch {
    pub deleted: Vec<EdgeId>,
    /// `+1` or `-1`, i.e. `(-1)^(|S| - 1)`.
    pub sign: i8,
    pub node: TraceNode,
}

impl TraceNode {
    /// Leaves as `(sign along the path, forest polynomial)`.
    pub fn signed_leaves(&self) -> Vec<(i8, IntPolynomial)> {
        if self.branches.is_empty() {
            return vec![(1, self.value.clone())];
        }
        self.branches
            .iter()
            .flat_map(|b| b.node.signed_leaves().into_iter().map(move |(s, p)| (s * b.sign, p)))
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        if self.branches.is_empty() {
            1
        } else {
            self.branches.iter().map(|b| b.node.leaf_count()).sum()
        }
    }
}

/// The full, unmemoized computation tree of [`interior_prime`].
pub fn recursion_trace(g: &SignedBipartiteGraph) -> Result<TraceNode> {
    check_input(g)?;
    fn build(g: &SignedBipartiteGraph) -> TraceNode {
        let edges = g.edge_ids();
        if g.is_forest() {
            let c = g.component_count();
            return TraceNode {
                edges,
                cycle: None,
                epsilon: Vec::new(),
                branches: Vec::new(),
                forest_components: Some(c),
                value: forest_polynomial(c),
            };
        }
        let cycle = find_cycle(g).expect("graph is not a forest");
        let eps = epsilon_edges(&cycle, EpsilonChoice::OddPositions);
        let branches: Vec<TraceBranch> = signed_subsets(&eps)
            .map(|(subset, positive)| TraceBranch {
                deleted: subset.iter().copied().collect(),
                sign: if positive { 1 } else { -1 },
                node: build(&g.delete_edges(&subset).expect("cycle edges exist")),
            })
            .collect();
        let value = branches
            .iter()
            .map(|b| if b.sign > 0 { b.node.value.clone() } else { -&b.node.value })
            .sum();
        TraceNode { edges, cycle: Some(cycle), epsilon: eps, branches, forest_components: None, value }
    }
    Ok(build(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use Sign::Positive as P;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn known_fixtures() {
        assert_eq!(interior_prime(&fixtures::hexagon()).unwrap(), p(&[1, 1, 1]));
        assert_eq!(interior_prime(&fixtures::k23()).unwrap(), p(&[1, 2]));
        assert_eq!(interior_prime(&fixtures::figure_graph()).unwrap(), p(&[1, 3, 3]));
        assert_eq!(interior_prime(&fixtures::hexagon_plus_isolated()).unwrap(), p(&[1, 0, 0, -1]));
    }

    #[test]
    fn trees_and_forests() {
        for k in 1..5 {
            assert_eq!(interior_prime(&fixtures::star(k)).unwrap(), IntPolynomial::one());
            assert_eq!(interior_prime(&fixtures::path(k)).unwrap(), IntPolynomial::one());
        }
        for k in 1..=4 {
            assert_eq!(interior_prime(&fixtures::forest(k)).unwrap(), IntPolynomial::one_minus_x_pow(k - 1));
        }
        let two_dots = SignedBipartiteGraph::build(&["a"], &["b"], &[]).unwrap();
        assert_eq!(interior_prime(&two_dots).unwrap(), p(&[1, -1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(interior_prime(&SignedBipartiteGraph::new()), Err(Error::EmptyGraph));
        assert_eq!(interior_prime(&fixtures::table1()), Err(Error::NegativeEdge(EdgeId(7))));
    }

    #[test]
    fn parallel_edges_do_not_matter() {
        for m in 1..5 {
            assert_eq!(interior_prime(&fixtures::bundle(&vec![P; m])).unwrap(), IntPolynomial::one());
        }
        let mut g = fixtures::hexagon();
        g.add_edge(EdgeId(7), "e1", "v1", P).unwrap();
        g.add_edge(EdgeId(8), "e1", "v1", P).unwrap();
        assert_eq!(interior_prime(&g).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn either_half_of_the_cycle_works() {
        let opts = InteriorOptions { epsilon: EpsilonChoice::EvenPositions, ..Default::default() };
        for g in [fixtures::hexagon(), fixtures::k23(), fixtures::figure_graph(), fixtures::k33()] {
            assert_eq!(interior_prime_with(&g, opts).unwrap(), interior_prime(&g).unwrap());
        }
    }

    #[test]
    fn random_cycle_choices_agree() {
        let g = fixtures::k33();
        let expected = interior_prime(&g).unwrap();
        for seed in 0..5 {
            let opts = InteriorOptions { cycle: CycleChoice::Random(seed), ..Default::default() };
            assert_eq!(interior_prime_with(&g, opts).unwrap(), expected);
        }
    }

    #[test]
    fn canonical_keys() {
        let g = fixtures::table1();
        assert_eq!(canonical_key(&g), canonical_key(&g.clone()));
        assert_eq!(canonical_key(&fixtures::figure_graph()), canonical_key(&fixtures::figure_graph().renumbered()));
        assert_ne!(canonical_key(&g), canonical_key(&g.forget_signs()));
        // Same edges listed in a different order.
        let text: String = g.to_text(None).lines().rev().collect::<Vec<_>>().join("\n");
        let back = crate::graph::parse_graph_file(&text).unwrap().graph;
        assert_eq!(canonical_key(&back), canonical_key(&g));
    }

    #[test]
    fn k23_trace_sums_correctly() {
        let t = recursion_trace(&fixtures::k23()).unwrap();
        assert_eq!(t.value, p(&[1, 2]));
        let leaves: IntPolynomial =
            t.signed_leaves().iter().map(|(s, q)| if *s > 0 { q.clone() } else { -q }).sum();
        assert_eq!(leaves, p(&[1, 2]));
        assert_eq!(t.cycle.as_ref().map(CycleWitness::len), Some(4));
        assert_eq!(t.branches.len(), 3);
    }

    #[test]
    fn tree_trace_is_a_single_leaf() {
        let t = recursion_trace(&fixtures::star(3)).unwrap();
        assert_eq!(t.leaf_count(), 1);
        assert_eq!(t.forest_components, Some(1));
    }
}
