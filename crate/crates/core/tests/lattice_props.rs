use std::collections::BTreeMap;

use interior_core::fixtures;
use interior_core::generate::{random_connected_graph, random_signed_graph};
use interior_core::graph::{all_simple_cycles, SignedBipartiteGraph};
use interior_core::interior::interior_prime;
use interior_core::lattice::{
    count_lattice_points, ehrhart_data, ehrhart_series, lattice_points, signed_ehrhart_poly_coeffs,
    signed_ehrhart_series, Transport, WeightSystem,
};
use interior_core::poly::series_from_poly_over_power;
use interior_core::signed::signed_interior;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All ways to write `s` as an ordered sum of `n` nonnegative parts.
fn compositions(n: usize, s: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return if s == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=s)
        .flat_map(|x| compositions(n - 1, s - x).into_iter().map(move |mut rest| {
            rest.insert(0, x);
            rest
        }))
        .collect()
}

/// Lattice points by brute force: every pair of marginals with sum `s`,
/// kept when a max-flow finds edge weights realizing them.
fn brute_force_count(g: &SignedBipartiteGraph, s: u64) -> u64 {
    if g.edge_count() == 0 {
        return 0;
    }
    let e: Vec<&str> = g.e_vertices().collect();
    let v: Vec<&str> = g.v_vertices().collect();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|x| (e.iter().position(|l| *l == x.e).unwrap(), v.iter().position(|l| *l == x.v).unwrap()))
        .collect();
    let mut n = 0;
    for a in compositions(e.len(), s) {
        for b in compositions(v.len(), s) {
            if (Transport { supply: &a, demand: &b, arcs: &arcs }).feasible() {
                n += 1;
            }
        }
    }
    n
}

/// Hall's condition for the same question, checked over all subsets.
fn hall_count(g: &SignedBipartiteGraph, s: u64) -> u64 {
    if g.edge_count() == 0 {
        return 0;
    }
    let e: Vec<&str> = g.e_vertices().collect();
    let v: Vec<&str> = g.v_vertices().collect();
    let mut n = 0;
    for a in compositions(e.len(), s) {
        'b: for b in compositions(v.len(), s) {
            for t in 0u32..1 << v.len() {
                let demand: u64 = (0..v.len()).filter(|k| t >> k & 1 == 1).map(|k| b[k]).sum();
                let supply: u64 = (0..e.len())
                    .filter(|&i| (0..v.len()).any(|k| t >> k & 1 == 1 && g.edges().any(|x| x.e == e[i] && x.v == v[k])))
                    .map(|i| a[i])
                    .sum();
                if demand > supply {
                    continue 'b;
                }
            }
            n += 1;
        }
    }
    n
}

#[test]
fn k23_counts_by_brute_force() {
    let g = fixtures::k23();
    assert_eq!(brute_force_count(&g, 1), 6);
    assert_eq!(brute_force_count(&g, 2), 18);
    let series: Vec<BigInt> = (0..3).map(|s| if s == 0 { 1.into() } else { brute_force_count(&g, s).into() }).collect();
    assert_eq!(ehrhart_series(&g, 2).to_integers().unwrap(), series);
    // The same numbers from (1 + 2x) / (1 - x)^4.
    assert_eq!(series_from_poly_over_power(&interior_prime(&g).unwrap(), 4, 2), ehrhart_series(&g, 2));
}

#[test]
fn isolated_vertices_add_nothing() {
    let g = fixtures::hexagon_plus_isolated();
    for s in 0..5 {
        assert_eq!(count_lattice_points(&g, s), count_lattice_points(&fixtures::hexagon(), s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_oracles(seed in any::<u64>(), s in 0u64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_signed_graph(&mut rng, 3, 7);
        let want = brute_force_count(&g, s);
        prop_assert_eq!(hall_count(&g, s), want);
        prop_assert_eq!(count_lattice_points(&g, s), BigInt::from(want));
        prop_assert_eq!(lattice_points(&g, s).len() as u64, want);
    }

    #[test]
    fn cycle_changes_keep_marginals(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, 3, 8);
        let cycles = all_simple_cycles(&g);
        prop_assume!(!cycles.is_empty());
        let weights: BTreeMap<_, _> = g
            .edge_ids()
            .into_iter()
            .map(|id| (id, BigRational::new(rng.gen_range(0..20).into(), rng.gen_range(1..6).into())))
            .collect();
        let w = WeightSystem::new(&g, weights).unwrap();
        let c = &cycles[rng.gen_range(0..cycles.len())];
        // The largest shift that keeps every weight nonnegative.
        let room = c.edge_ids.iter().skip(1).step_by(2).map(|id| w.weight(*id).unwrap().clone()).min().unwrap();
        let moved = w.cycle_change(c, &room).unwrap();
        prop_assert_eq!(moved.marginals(&g), w.marginals(&g));
        prop_assert_eq!(moved.total(), w.total());
    }

    #[test]
    fn basis_coefficients_are_nonnegative_integers(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, 3, 8);
        prop_assume!(g.edge_count() > 0);
        let d = ehrhart_data(&g).unwrap();
        prop_assert_eq!(d.counts[0].clone(), BigInt::from(1));
        for a in &d.basis_coeffs {
            prop_assert!(a.is_integer() && !a.is_negative(), "{:?}", d.basis_coeffs);
        }
    }

    #[test]
    fn series_identities(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_signed_graph(&mut rng, 3, 7);
        let n = g.vertex_count() - 1;
        let lhs = series_from_poly_over_power(&interior_prime(&g.forget_signs()).unwrap(), n, 6);
        prop_assert_eq!(lhs, ehrhart_series(&g, 6));
        let lhs = series_from_poly_over_power(&signed_interior(&g).unwrap(), n, 6);
        prop_assert_eq!(lhs, signed_ehrhart_series(&g, 6).unwrap());
        prop_assert_eq!(signed_ehrhart_poly_coeffs(&g).unwrap(), signed_interior(&g).unwrap());
    }
}
