//! Lattice points of dilated root polytopes and their Ehrhart data.
//!
//! The root polytope `Q_G` is the convex hull of `e + v` over the edges of
//! `G`. A pair of marginals `(a, b)` with `Σa = Σb = s` lies in `s·Q_G`
//! exactly when some nonnegative edge weighting has those vertex sums, i.e.
//! when the transportation problem with supplies `a` and demands `b` along
//! the edges is feasible. By Gale's theorem that happens iff
//! `b(T) <= a(N(T))` for every set `T` of `V`-vertices, which lets the
//! enumeration below prune every partial `b` that cannot be completed.

mod flow;
mod weights;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

pub use flow::Transport;
pub use weights::{LatticePoint, WeightSystem};

use crate::error::{Error, Result};
use crate::graph::SignedBipartiteGraph;
use crate::par;
use crate::poly::{IntPolynomial, PowerSeriesTrunc};
use crate::signed::negative_subsets;

/// Counts and interpolation data for `ε(s)`, `0 <= s <= d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EhrhartData {
    /// `|E| + |V| - 2`.
    pub degree_bound: usize,
    #[serde(with = "crate::poly::bigint_json::vec")]
    pub counts: Vec<BigInt>,
    #[serde(serialize_with = "ser_rationals")]
    pub basis_coeffs: Vec<BigRational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        if q.is_integer() {
            match i64::try_from(q.to_integer()) {
                Ok(n) => seq.serialize_element(&n)?,
                Err(_) => seq.serialize_element(&q.to_integer().to_string())?,
            }
        } else {
            seq.serialize_element(&q.to_string())?;
        }
    }
    seq.end()
}

/// Precomputed neighborhood data: the `E`- and `V`-vertices with at least one
/// edge, and for every set `T` of active `V`-vertices the set `N(T)` as a
/// bitmask over active `E`-vertices.
struct Shape {
    e_labels: Vec<String>,
    v_labels: Vec<String>,
    nbhd: Vec<u64>,
}

impl Shape {
    fn new(g: &SignedBipartiteGraph) -> Self {
        let e_labels: Vec<String> = g.e_vertices().filter(|l| g.degree(l) > 0).map(str::to_string).collect();
        let v_labels: Vec<String> = g.v_vertices().filter(|l| g.degree(l) > 0).map(str::to_string).collect();
        assert!(e_labels.len() < 24 && v_labels.len() < 24, "graph too large for lattice enumeration");
        let single: Vec<u64> = v_labels
            .iter()
            .map(|v| {
                g.incident_edges(v).iter().fold(0u64, |m, edge| {
                    m | 1 << e_labels.iter().position(|e| *e == edge.e).expect("active endpoint")
                })
            })
            .collect();
        let mut nbhd = vec![0u64; 1 << v_labels.len()];
        for t in 1..nbhd.len() {
            let low = t.trailing_zeros() as usize;
            nbhd[t] = nbhd[t & (t - 1)] | single[low];
        }
        Self { e_labels, v_labels, nbhd }
    }

    /// Visits every lattice point of `s·Q_G` as a pair of marginal vectors.
    fn for_each_point(&self, s: u64, visit: &mut dyn FnMut(&[u64], &[u64])) {
        let mut a = vec![0u64; self.e_labels.len()];
        compositions(&mut a, 0, s, &mut |a| {
            // cap[t] = a(N(t)); subset sums of a by bitmask first.
            let mut sum_a = vec![0u64; 1 << a.len()];
            for m in 1..sum_a.len() {
                let low = m.trailing_zeros() as usize;
                sum_a[m] = sum_a[m & (m - 1)] + a[low];
            }
            let cap: Vec<u64> = self.nbhd.iter().map(|&m| sum_a[m as usize]).collect();
            let mut b = vec![0u64; self.v_labels.len()];
            let mut partial = vec![0u64; cap.len()];
            extend_demand(&cap, &mut partial, &mut b, 0, s, &mut |b| visit(a, b));
        });
    }
}

/// All `a` with `a.len()` nonnegative parts summing to `rest` (from index `i`).
fn compositions(a: &mut [u64], i: usize, rest: u64, f: &mut dyn FnMut(&[u64])) {
    if a.is_empty() {
        if rest == 0 {
            f(a);
        }
        return;
    }
    if i + 1 == a.len() {
        a[i] = rest;
        f(a);
        return;
    }
    for x in 0..=rest {
        a[i] = x;
        compositions(a, i + 1, rest - x, f);
    }
}

/// Depth-first assignment of `b[j..]`. `partial[t]` holds `b(t)` for sets `t`
/// inside `{0..j}`; each new coordinate is checked against every set it
/// completes. Gale's condition on the assigned prefix is exactly what makes
/// it extendable, so the search has no dead branches except the last slot.
fn extend_demand(cap: &[u64], partial: &mut [u64], b: &mut [u64], j: usize, rest: u64, f: &mut dyn FnMut(&[u64])) {
    let n = b.len();
    if j == n {
        if rest == 0 {
            f(b);
        }
        return;
    }
    let bit = 1usize << j;
    let lo = if j + 1 == n { rest } else { 0 };
    let hi = rest.min(cap[bit]);
    if lo > hi {
        return;
    }
    'values: for x in lo..=hi {
        for t in 0..bit {
            let with = partial[t] + x;
            if with > cap[t | bit] {
                continue 'values;
            }
            partial[t | bit] = with;
        }
        b[j] = x;
        extend_demand(cap, partial, b, j + 1, rest - x, f);
    }
}

/// `|s·Q_G ∩ (Z^E ⊕ Z^V)|`. Signs are ignored.
pub fn count_lattice_points(g: &SignedBipartiteGraph, s: u64) -> BigInt {
    if g.edge_count() == 0 {
        return BigInt::zero();
    }
    let mut n = 0u64;
    Shape::new(g).for_each_point(s, &mut |_, _| n += 1);
    BigInt::from(n)
}

/// Every lattice point of `s·Q_G`, in lexicographic order of marginals.
pub fn lattice_points(g: &SignedBipartiteGraph, s: u64) -> Vec<LatticePoint> {
    if g.edge_count() == 0 {
        return Vec::new();
    }
    let shape = Shape::new(g);
    let zeros = |labels: Vec<&str>| labels.into_iter().map(|l| (l.to_string(), 0u64)).collect();
    let base = LatticePoint { e_coords: zeros(g.e_vertices().collect()), v_coords: zeros(g.v_vertices().collect()) };
    let mut out = Vec::new();
    shape.for_each_point(s, &mut |a, b| {
        let mut p = base.clone();
        for (l, x) in shape.e_labels.iter().zip(a) {
            p.e_coords.insert(l.clone(), *x);
        }
        for (l, x) in shape.v_labels.iter().zip(b) {
            p.v_coords.insert(l.clone(), *x);
        }
        out.push(p);
    });
    out.sort();
    out
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn degree_bound(g: &SignedBipartiteGraph) -> usize {
    g.vertex_count() - 2
}

/// Solves `ε(s) = Σ_k a_k C(s + d - k, d)` for `a` given `ε(0..=d)`. The
/// system is lower unitriangular, since `C(s + d - k, d)` is 1 at `k = s`
/// and 0 for `s < k <= d`.
fn basis_coefficients(counts: &[BigInt], d: usize) -> Vec<BigRational> {
    let mut a: Vec<BigRational> = Vec::with_capacity(d + 1);
    for (s, count) in counts.iter().enumerate().take(d + 1) {
        let mut rest = BigRational::from_integer(count.clone());
        for (k, ak) in a.iter().enumerate() {
            rest -= ak * BigRational::from_integer(binomial((s + d - k) as u64, d as u64));
        }
        a.push(rest);
    }
    a
}

/// Lattice counts `ε(0..=d)` and the coefficients in the binomial basis.
pub fn ehrhart_data(g: &SignedBipartiteGraph) -> Result<EhrhartData> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let d = degree_bound(g);
    let counts = par::map_range(d + 1, |s| count_lattice_points(g, s as u64));
    let basis_coeffs = basis_coefficients(&counts, d);
    Ok(EhrhartData { degree_bound: d, counts, basis_coeffs })
}

fn integral_poly(coeffs: &[BigRational]) -> Result<IntPolynomial> {
    coeffs
        .iter()
        .map(|q| if q.is_integer() { Ok(q.to_integer()) } else { Err(Error::NotIntegral(q.to_string())) })
        .collect::<Result<Vec<_>>>()
        .map(IntPolynomial::new)
}

/// `I'` read off from the Ehrhart polynomial. Edgeless graphs on `k`
/// vertices give `(1 - x)^(k - 1)`.
pub fn interior_via_ehrhart(g: &SignedBipartiteGraph) -> Result<IntPolynomial> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(IntPolynomial::one_minus_x_pow(g.vertex_count() - 1));
    }
    integral_poly(&ehrhart_data(g)?.basis_coeffs)
}

/// `1 + Σ_{s>=1} ε(s) x^s` truncated at `x^order`.
pub fn ehrhart_series(g: &SignedBipartiteGraph, order: usize) -> PowerSeriesTrunc {
    let counts = par::map_range(order + 1, |s| {
        if s == 0 {
            BigInt::one()
        } else {
            count_lattice_points(g, s as u64)
        }
    });
    PowerSeriesTrunc::from_integers(order, counts)
}

/// `Σ_S (-1)^|S| Ehr(Q_{G∖S})` over sets `S` of negative edges.
pub fn signed_ehrhart_series(g: &SignedBipartiteGraph, order: usize) -> Result<PowerSeriesTrunc> {
    let terms = par::map_collect(&negative_subsets(g)?, |(set, odd)| {
        let s = ehrhart_series(&g.delete_edges(set).expect("negative edges exist"), order);
        if *odd {
            s.neg()
        } else {
            s
        }
    });
    terms.iter().try_fold(PowerSeriesTrunc::zero(order), |acc, t| acc.add(t))
}

/// `I⁺` from the signed Ehrhart polynomial `Σ_S (-1)^|S| ε_{Q_{G∖S}}`.
///
/// When every deletion keeps an edge the alternating sum of counts is
/// interpolated directly. Otherwise (no positive edge) some term is edgeless
/// and its Ehrhart polynomial is not the one its series convention assumes,
/// so the terms are converted one at a time.
pub fn signed_ehrhart_poly_coeffs(g: &SignedBipartiteGraph) -> Result<IntPolynomial> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let subsets = negative_subsets(g)?;
    if g.positive_edges().is_empty() {
        let terms = par::map_collect(&subsets, |(set, odd)| {
            interior_via_ehrhart(&g.delete_edges(set).expect("negative edges exist")).map(|p| if *odd { -p } else { p })
        });
        return terms.into_iter().sum::<Result<IntPolynomial>>();
    }
    let d = degree_bound(g);
    let per_term = par::map_collect(&subsets, |(set, odd)| {
        let h = g.delete_edges(set).expect("negative edges exist");
        (0..=d as u64).map(|s| count_lattice_points(&h, s)).map(|c| if *odd { -c } else { c }).collect::<Vec<_>>()
    });
    let counts: Vec<BigInt> =
        (0..=d).map(|s| per_term.iter().map(|t| &t[s]).sum()).collect();
    integral_poly(&basis_coefficients(&counts, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn small_counts() {
        let edge = fixtures::bundle(&[P]);
        for s in 0..5 {
            assert_eq!(count_lattice_points(&edge, s), BigInt::one());
        }
        assert_eq!(count_lattice_points(&fixtures::k23(), 0), BigInt::one());
        assert_eq!(count_lattice_points(&fixtures::k23(), 1), BigInt::from(6));
        let dots = SignedBipartiteGraph::build(&["a"], &["b"], &[]).unwrap();
        assert_eq!(count_lattice_points(&dots, 0), BigInt::zero());
        assert_eq!(count_lattice_points(&dots, 3), BigInt::zero());
    }

    #[test]
    fn k23_points_are_the_vertices() {
        let pts = lattice_points(&fixtures::k23(), 1);
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|q| q.level() == Some(1) && q.is_in_polytope_of(&fixtures::k23())));
    }

    #[test]
    fn basis_coefficients_of_fixtures() {
        let k23 = ehrhart_data(&fixtures::k23()).unwrap();
        assert_eq!(k23.degree_bound, 3);
        assert_eq!(integral_poly(&k23.basis_coeffs).unwrap(), p(&[1, 2]));
        assert_eq!(k23.basis_coeffs.len(), 4);
        let hex = ehrhart_data(&fixtures::hexagon()).unwrap();
        assert_eq!(integral_poly(&hex.basis_coeffs).unwrap(), p(&[1, 1, 1]));
        let edge = ehrhart_data(&fixtures::bundle(&[P])).unwrap();
        assert_eq!(edge.degree_bound, 0);
        assert_eq!(edge.basis_coeffs, vec![BigRational::one()]);
        assert_eq!(ehrhart_data(&SignedBipartiteGraph::build(&["a"], &["b"], &[]).unwrap()), Err(Error::NoEdges));
    }

    #[test]
    fn interior_from_lattice() {
        assert_eq!(interior_via_ehrhart(&fixtures::figure_graph()).unwrap(), p(&[1, 3, 3]));
        assert_eq!(interior_via_ehrhart(&fixtures::hexagon_plus_isolated()).unwrap(), p(&[1, 0, 0, -1]));
        let dot = SignedBipartiteGraph::build(&["a"], &[], &[]).unwrap();
        assert_eq!(interior_via_ehrhart(&dot).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn series() {
        let dots = SignedBipartiteGraph::build(&["a"], &["b"], &[]).unwrap();
        assert_eq!(ehrhart_series(&dots, 4), PowerSeriesTrunc::from_integers(4, big(&[1])));
        assert_eq!(ehrhart_series(&fixtures::bundle(&[P]), 3), PowerSeriesTrunc::from_integers(3, big(&[1, 1, 1, 1])));
        assert_eq!(ehrhart_series(&fixtures::k23(), 2), PowerSeriesTrunc::from_integers(2, big(&[1, 6, 18])));
    }

    #[test]
    fn signed_series_and_coefficients() {
        assert_eq!(signed_ehrhart_poly_coeffs(&fixtures::table1()).unwrap(), p(&[0, 0, 0, 1]));
        let alt = fixtures::square([P, N, P, N]);
        assert!(signed_ehrhart_series(&alt, 6).unwrap().is_zero());
        assert!(signed_ehrhart_poly_coeffs(&alt).unwrap().is_zero());
        let pos = fixtures::hexagon();
        assert_eq!(signed_ehrhart_series(&pos, 5).unwrap(), ehrhart_series(&pos, 5));
        // Only negative edges: termwise route.
        assert_eq!(signed_ehrhart_poly_coeffs(&fixtures::bundle(&[N, N])).unwrap(), p(&[0, -1]));
    }
}
