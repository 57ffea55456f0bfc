use proptest::prelude::*;

use dtg::cover::{is_cover, quotient, stab_divisibility, VertexPartition};
use dtg::drg::{girth_from_array, intersection_array};
use dtg::graph::io::{format_graph, parse_graph};
use dtg::graph::{diameter, girth};
use dtg::{Graph, PermGroup, Permutation};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (3usize..12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// `C_{rm}` with blocks `{i, i+m, i+2m, ...}`: an `r`-fold cover of `C_m`.
fn cycle_cover(m: usize, r: usize) -> (Graph, VertexPartition) {
    let n = m * r;
    let g = Graph::from_fn(n, |a, b| (a + 1) % n == b || (b + 1) % n == a);
    let p = VertexPartition::from_blocks(n, (0..m).map(|i| (0..r).map(|j| i + j * m).collect()).collect()).unwrap();
    (g, p)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn graph_text_round_trips(g in random_graph()) {
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn relabelling_keeps_invariants((g, perm) in random_graph().prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(girth(&g), girth(&h));
        prop_assert_eq!(diameter(&g).ok(), diameter(&h).ok());
        prop_assert_eq!(intersection_array(&g).ok(), intersection_array(&h).ok());
    }

    #[test]
    fn distance_regular_girth_matches_array(g in random_graph()) {
        if let Ok(a) = intersection_array(&g) {
            prop_assert_eq!(girth(&g).map(|x| x as u64), girth_from_array(&a));
            prop_assert_eq!(a.sphere_sizes().unwrap().iter().sum::<u64>(), g.n() as u64);
        }
    }

    #[test]
    fn group_order_divides_symmetric(p in permutation(7), q in permutation(7)) {
        let g = PermGroup::new(7, vec![p.clone(), q]).unwrap();
        prop_assert_eq!(5040 % g.order(), 0);
        prop_assert!(g.contains(&p.pow(3)).unwrap());
        prop_assert_eq!(g.order() % p.order() as u128, 0);
    }

    #[test]
    fn cycle_covers(m in 3usize..9, r in 2usize..5) {
        let (g, p) = cycle_cover(m, r);
        prop_assert!(is_cover(&g, &p).unwrap().is_ok());
        let q = quotient(&g, &p).unwrap();
        prop_assert_eq!(q.valency(), g.valency());
        prop_assert!(girth(&q) <= girth(&g));
    }

    #[test]
    fn divisibility_is_monotone_in_b3(k in 3u64..20, b3 in 1u64..6, stab in 1u128..100_000) {
        if stab_divisibility(k, b3, stab).unwrap() {
            prop_assert!(stab_divisibility(k, 1, stab).unwrap());
        }
    }
}

#[test]
fn cover_condition_fails_off_cycles() {
    let k4 = Graph::from_fn(4, |_, _| true);
    let p = VertexPartition::from_blocks(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    let v = is_cover(&k4, &p).unwrap().unwrap_err();
    assert_eq!(v.vertex, 0);
}
