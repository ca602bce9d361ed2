//! The signed interior polynomial
//!
//! ```text
//! I⁺(G) = Σ_{S ⊆ E₋(G)} (-1)^|S| I'(G \ S)
//! ```
//!
//! summed over sets of negative edges. Graphs with a sign-alternating cycle
//! have `I⁺ = 0`, which is checked first unless disabled.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{find_alternating_cycle, CycleWitness, EdgeId, SignedBipartiteGraph, Sign};
use crate::interior::{canonical_key, interior_prime};
use crate::par;
use crate::poly::IntPolynomial;

/// Largest number of negative edges the subset sum will expand.
pub const MAX_NEGATIVE_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// The defining sum over negative-edge subsets.
    #[default]
    SubsetSum,
    /// `I⁺(G) = I⁺(G + ε) - I⁺(G \ ε)` on the first negative edge, recursively.
    Skein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedOptions {
    /// Return 0 straight away when an alternating cycle exists.
    pub shortcut: bool,
    pub strategy: Strategy,
}

impl Default for SignedOptions {
    fn default() -> Self {
        Self { shortcut: true, strategy: Strategy::SubsetSum }
    }
}

/// Subsets of the negative edges in Gray-code order, each with whether its
/// size is odd. Consecutive subsets differ in exactly one edge.
pub fn negative_subsets(g: &SignedBipartiteGraph) -> Result<Vec<(BTreeSet<EdgeId>, bool)>> {
    let neg = g.negative_edges();
    if neg.len() > MAX_NEGATIVE_EDGES {
        return Err(Error::TooManyNegativeEdges(neg.len(), MAX_NEGATIVE_EDGES));
    }
    Ok((0u64..1 << neg.len())
        .map(|i| {
            let gray = i ^ (i >> 1);
            let set: BTreeSet<EdgeId> =
                neg.iter().enumerate().filter(|(k, _)| gray >> k & 1 == 1).map(|(_, id)| *id).collect();
            let odd = set.len() % 2 == 1;
            (set, odd)
        })
        .collect())
}

pub fn signed_interior(g: &SignedBipartiteGraph) -> Result<IntPolynomial> {
    signed_interior_with(g, SignedOptions::default())
}

pub fn signed_interior_with(g: &SignedBipartiteGraph, opts: SignedOptions) -> Result<IntPolynomial> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if opts.shortcut && find_alternating_cycle(g).is_some() {
        return Ok(IntPolynomial::zero());
    }
    match opts.strategy {
        Strategy::SubsetSum => Ok(terms(g)?.into_iter().map(|t| t.signed_value()).sum()),
        Strategy::Skein => Ok(skein(g, opts.shortcut, &mut HashMap::new())),
    }
}

fn skein(g: &SignedBipartiteGraph, shortcut: bool, memo: &mut HashMap<Vec<u8>, IntPolynomial>) -> IntPolynomial {
    let Some(&eps) = g.negative_edges().first() else {
        return interior_prime(g).expect("all-positive, nonempty");
    };
    if shortcut && find_alternating_cycle(g).is_some() {
        return IntPolynomial::zero();
    }
    let key = canonical_key(g);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let plus = skein(&g.with_sign(eps, Sign::Positive).expect("edge exists"), shortcut, memo);
    let minus = skein(&g.delete_edge(eps).expect("edge exists"), shortcut, memo);
    let value = plus - minus;
    memo.insert(key, value.clone());
    value
}

/// One summand `(-1)^|S| I'(G \ S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedTerm {
    pub deleted: Vec<EdgeId>,
    pub sign: i8,
    pub interior: IntPolynomial,
}

impl SignedTerm {
    pub fn signed_value(&self) -> IntPolynomial {
        if self.sign > 0 {
            self.interior.clone()
        } else {
            -&self.interior
        }
    }
}

/// Summands grouped by subset size and value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub size: usize,
    pub sign: i8,
    pub count: usize,
    pub interior: IntPolynomial,
    pub subsets: Vec<Vec<EdgeId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedLedger {
    pub negative_edges: Vec<EdgeId>,
    /// All summands in Gray-code order.
    pub terms: Vec<SignedTerm>,
    pub rows: Vec<LedgerRow>,
    pub total: IntPolynomial,
    /// An alternating cycle, if any; the total is then zero.
    pub alternating_cycle: Option<CycleWitness>,
}

fn terms(g: &SignedBipartiteGraph) -> Result<Vec<SignedTerm>> {
    let subsets = negative_subsets(g)?;
    Ok(par::map_collect(&subsets, |(set, odd)| SignedTerm {
        deleted: set.iter().copied().collect(),
        sign: if *odd { -1 } else { 1 },
        interior: interior_prime(&g.delete_edges(set).expect("negative edges exist").forget_signs())
            .expect("nonempty after forgetting signs"),
    }))
}

/// The full subset sum, term by term.
pub fn signed_ledger(g: &SignedBipartiteGraph) -> Result<SignedLedger> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let terms = terms(g)?;
    let mut rows: Vec<LedgerRow> = Vec::new();
    for t in &terms {
        match rows.iter_mut().find(|r| r.size == t.deleted.len() && r.interior == t.interior) {
            Some(r) => {
                r.count += 1;
                r.subsets.push(t.deleted.clone());
            }
            None => rows.push(LedgerRow {
                size: t.deleted.len(),
                sign: t.sign,
                count: 1,
                interior: t.interior.clone(),
                subsets: vec![t.deleted.clone()],
            }),
        }
    }
    rows.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.interior.coeffs().cmp(b.interior.coeffs())));
    for r in &mut rows {
        r.subsets.sort();
    }
    let total = terms.iter().map(SignedTerm::signed_value).sum();
    Ok(SignedLedger {
        negative_edges: g.negative_edges(),
        terms,
        rows,
        total,
        alternating_cycle: find_alternating_cycle(g),
    })
}

/// Both sides of `I⁺(G) = I⁺(G + ε) - I⁺(G \ ε)` for a negative edge `ε`,
/// each by the plain subset sum.
pub fn skein_triple_identity_check(g: &SignedBipartiteGraph, eps: EdgeId) -> Result<(IntPolynomial, IntPolynomial)> {
    let edge = g.edge(eps).ok_or(Error::UnknownEdge(eps))?;
    if edge.sign != Sign::Negative {
        return Err(Error::NotNegative(eps));
    }
    let plain = SignedOptions { shortcut: false, strategy: Strategy::SubsetSum };
    let lhs = signed_interior_with(g, plain)?;
    let rhs = signed_interior_with(&g.with_sign(eps, Sign::Positive)?, plain)?
        - signed_interior_with(&g.delete_edge(eps)?, plain)?;
    Ok((lhs, rhs))
}
