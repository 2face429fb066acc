//! Structural invariants over the small catalog.

mod common;

use std::sync::Arc;

use gencay_core::automorphism::{automorphism_group, involution_conjugacy_classes, involutory_automorphisms};
use gencay_core::catalog::{build_str, parse_group_expr};
use gencay_core::criteria::{connected_algebraic, inverse_product_subgroup, theta_class};
use gencay_core::gcs::{alpha_partition, enumerate_gcs, stabilizer_set, validate_gcs};
use gencay_core::graph::{are_isomorphic, build_gc_graph, is_isomorphism, is_odd_cycle, Bipartition, SimpleGraph};
use gencay_core::ElementSet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SMALL: &[&str] = &["Z4", "Z2^2", "Z6", "D6", "Z8", "Z2 x Z4", "Z2^3", "D8", "Q8", "Z10", "D10", "D12", "T12", "A4", "Z2 x Z6"];

#[test]
fn automorphisms_are_bijective_homomorphisms() {
    for name in SMALL {
        let g = build_str(name).unwrap();
        for a in automorphism_group(&g).unwrap() {
            for x in 0..g.order() {
                for y in 0..g.order() {
                    assert_eq!(a.apply(g.mul(x, y)), g.mul(a.apply(x), a.apply(y)), "{name}");
                }
            }
        }
    }
}

#[test]
fn involution_classes_partition_the_involutions() {
    for name in SMALL {
        let g = build_str(name).unwrap();
        let mut all: Vec<_> = involution_conjugacy_classes(&g).unwrap().into_iter().flatten().collect();
        all.sort();
        assert_eq!(all, involutory_automorphisms(&g, false).unwrap(), "{name}");
    }
}

/// Enumeration equals brute force over every k-subset.
#[test]
fn enumeration_matches_brute_force() {
    for name in ["Z6", "D6", "Z2^3", "D8", "Q8", "Z2 x Z4"] {
        let g = Arc::new(build_str(name).unwrap());
        for alpha in involutory_automorphisms(&g, true).unwrap() {
            for k in 1..=4 {
                let found: Vec<ElementSet> = enumerate_gcs(&g, &alpha, k).unwrap().iter().map(|s| s.members().clone()).collect();
                let mut brute = Vec::new();
                for mask in 0u64..1 << g.order() {
                    if mask.count_ones() as usize == k {
                        let s = ElementSet::from_indices(g.order(), (0..g.order()).filter(|i| mask >> i & 1 == 1));
                        if validate_gcs(&g, &alpha, &s).is_ok() {
                            brute.push(s);
                        }
                    }
                }
                brute.sort_by_key(|s| s.to_vec());
                assert_eq!(found, brute, "{name} k={k}");
            }
        }
    }
}

#[test]
fn partition_covers_the_group() {
    for name in SMALL {
        let g = build_str(name).unwrap();
        for alpha in involutory_automorphisms(&g, true).unwrap() {
            let p = alpha_partition(&g, &alpha).unwrap();
            assert_eq!(p.omega.len() + p.big_omega.len() + p.mho.len(), g.order());
            assert_eq!(p.omega.union(&p.big_omega).union(&p.mho), g.full_set());
            assert!(p.omega.contains(0));
        }
    }
}

fn random_instances(seed: u64, per_group: usize) -> Vec<gencay_core::gcs::GCSubset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for name in SMALL {
        let g = Arc::new(build_str(name).unwrap());
        for alpha in involutory_automorphisms(&g, false).unwrap() {
            for _ in 0..per_group {
                if let Some(s) = common::random_subset(&mut rng, &g, &alpha) {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[test]
fn graphs_are_regular_of_degree_s() {
    for s in random_instances(1, 4) {
        let x = build_gc_graph(&s).unwrap();
        assert_eq!(x.regular_degree(), Some(s.len()), "{s:?}");
        assert!(!x.has_loops());
    }
}

#[test]
fn theta_is_the_inverse_product_subgroup_when_connected() {
    for s in random_instances(2, 4) {
        if connected_algebraic(&s).connected {
            assert_eq!(theta_class(&s).unwrap(), inverse_product_subgroup(&s), "{s:?}");
        }
    }
}

#[test]
fn stabilizer_translations_are_graph_automorphisms() {
    for s in random_instances(3, 4).into_iter().filter(|s| s.group().is_abelian()) {
        let x = build_gc_graph(&s).unwrap();
        let g = s.group();
        for t in stabilizer_set(&s).unwrap().iter() {
            let map: Vec<usize> = (0..g.order()).map(|v| g.mul(v, t)).collect();
            assert!(is_isomorphism(&x, &x, &map), "{s:?} by {}", g.element_name(t));
        }
    }
}

#[test]
fn odd_cycles_certify_non_bipartite_graphs() {
    for s in random_instances(4, 4) {
        let x = build_gc_graph(&s).unwrap();
        match x.bipartition() {
            Bipartition::Coloring(c) => assert!(x.edges().iter().all(|&(u, v)| c[u] != c[v])),
            Bipartition::OddCycle(cycle) => assert!(is_odd_cycle(&x, &cycle), "{s:?}"),
        }
    }
}

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let edges: Vec<_> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            SimpleGraph::from_edges((0..n).map(|i| i.to_string()).collect(), &edges, false).unwrap()
        })
    })
}

fn arb_expr() -> impl Strategy<Value = String> {
    let atom = prop_oneof![
        (1usize..=12).prop_map(|n| format!("Z{n}")),
        (1usize..=3).prop_map(|k| format!("Z2^{k}")),
        (2usize..=6).prop_map(|n| format!("D{}", 2 * n)),
        (1usize..=3).prop_map(|n| format!("T{}", 4 * n)),
        Just("Q8".to_string()),
        Just("A4".to_string()),
        Just("SL23".to_string()),
    ];
    atom.prop_recursive(2, 4, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} x ({b})")),
            (inner, 2usize..=3).prop_map(|(a, k)| format!("({a})^{k}")),
        ]
    })
}

proptest! {
    #[test]
    fn relabelled_graphs_are_isomorphic(x in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..x.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let y = x.relabel(&perm);
        let map = are_isomorphic(&x, &y).unwrap();
        prop_assert!(map.is_some_and(|m| is_isomorphism(&x, &y, &m)));
    }

    #[test]
    fn expressions_round_trip(text in arb_expr()) {
        let e = parse_group_expr(&text).unwrap();
        prop_assert_eq!(parse_group_expr(&e.to_string()).unwrap(), e);
    }
}
