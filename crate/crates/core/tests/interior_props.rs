use interior_core::fixtures;
use interior_core::generate::{random_connected_graph, random_signed_graph};
use interior_core::graph::{Color, SignedBipartiteGraph, Sign};
use interior_core::interior::{interior_prime, interior_prime_with, CycleChoice, EpsilonChoice, InteriorOptions};
use interior_core::lattice::interior_via_ehrhart;
use interior_core::IntPolynomial;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unsigned(rng: &mut ChaCha8Rng, max_edges: usize) -> SignedBipartiteGraph {
    random_signed_graph(rng, 4, max_edges).forget_signs()
}

fn ip(g: &SignedBipartiteGraph) -> IntPolynomial {
    interior_prime(g).unwrap()
}

/// Expands the activity-free recursion by hand for K_{2,3}: the 4-cycle
/// e1 v1 e2 v2 has ε-edges e1v1 and e2v2; deleting one leaves a graph with a
/// single 4-cycle left, deleting both leaves a tree.
#[test]
fn k23_by_hand() {
    // I(C4 with a pendant path) = 1 + x; by the recursion from the example:
    // -1 + 4 - 2(1 - x) = 1 + 2x.
    let expected = IntPolynomial::from_i64s(&[-1]) + IntPolynomial::from_i64s(&[4]) - IntPolynomial::from_i64s(&[2, -2]);
    assert_eq!(ip(&fixtures::k23()), expected);
}

#[test]
fn fixtures_agree_with_lattice() {
    for (name, g, _) in fixtures::plane_templates() {
        assert_eq!(ip(&g), interior_via_ehrhart(&g).unwrap(), "{name}");
    }
    assert_eq!(ip(&fixtures::k33()), interior_via_ehrhart(&fixtures::k33()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn parallel_edges_are_irrelevant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = unsigned(&mut rng, 10);
        prop_assert_eq!(ip(&g), ip(&g.simplified()));
    }

    #[test]
    fn cycle_choice_is_irrelevant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = unsigned(&mut rng, 9);
        let want = ip(&g);
        let other = InteriorOptions { epsilon: EpsilonChoice::EvenPositions, cycle: CycleChoice::Random(seed) };
        prop_assert_eq!(interior_prime_with(&g, other).unwrap(), want);
    }

    #[test]
    fn recursion_matches_lattice(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = unsigned(&mut rng, 8);
        prop_assert_eq!(ip(&g), interior_via_ehrhart(&g).unwrap());
    }

    #[test]
    fn disjoint_union_and_block_sum(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, h) = (unsigned(&mut rng, 5), unsigned(&mut rng, 5));
        let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
        prop_assert_eq!(ip(&g.disjoint_union(&h)), &(&one_minus_x * &ip(&g)) * &ip(&h));
        let a = g.e_vertices().next().map(str::to_string);
        let b = h.e_vertices().next().map(str::to_string);
        if let (Some(a), Some(b)) = (a, b) {
            prop_assert_eq!(ip(&g.block_sum(&h, &a, &b).unwrap()), &ip(&g) * &ip(&h));
        }
    }

    #[test]
    fn bridges_multiply(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, h) = (unsigned(&mut rng, 5), unsigned(&mut rng, 4));
        let a = g.e_vertices().next().map(str::to_string);
        let b = h.v_vertices().next().map(str::to_string);
        if let (Some(a), Some(b)) = (a, b) {
            let (j, _) = g.join_by_edge(&h, &a, &b, Sign::Positive).unwrap();
            prop_assert_eq!(ip(&j), &ip(&g) * &ip(&h));
        }
    }

    #[test]
    fn degree_two_recursion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = unsigned(&mut rng, 8);
        let es: Vec<String> = g.e_vertices().map(str::to_string).collect();
        if es.len() >= 2 {
            let mut h = g.clone();
            h.add_pendant(&es[0], "w", &[Sign::Positive]).unwrap();
            let id = h.next_edge_id();
            h.add_edge(id, "w", &es[1], Sign::Positive).unwrap();
            prop_assert_eq!(h.color_of("w"), Some(Color::V));
            let want = ip(&h.delete_vertex("w").unwrap()) + IntPolynomial::x() * ip(&h.contract_vertex("w").unwrap());
            prop_assert_eq!(ip(&h), want);
        }
    }

    #[test]
    fn connected_constant_term_is_one(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, 3, 9).forget_signs();
        prop_assert_eq!(ip(&g).coeff(0), 1.into());
        let _ = rng.gen::<u8>();
    }
}
