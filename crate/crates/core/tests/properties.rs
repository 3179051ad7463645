mod common;

use common::naive_gamma_out;
use modf_core::domination::{is_minimal_modf, minimality_necessary_condition, satisfied_set};
use modf_core::io::{parse_digraph, parse_graph, write_digraph, write_graph};
use modf_core::orientations::{dom_range, dom_range_with, enumerate_orientations, DomOptions, Symmetry};
use modf_core::solver::{
    all_optimal_modfs, check_gamma_minus_bound, gamma_maj_out_bb, gamma_maj_out_oracle,
    gamma_maj_undirected, Method,
};
use modf_core::transforms::{delete_arc, delete_vertex, orientation_from_majority_function, reverse_arc};
use modf_core::{families, is_majority_dominating, is_modf, Digraph, Graph, SignFunction, VertexSet};
use proptest::prelude::*;

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn arb_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| bits[u * n + v])
                .take(max_edges)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_out_regular(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 0..n, any::<u64>()))
        .prop_map(|(n, d, seed)| modf_core::generate::random_out_regular(n, d, &mut common::rng(seed)))
}

fn arb_sign(n: usize) -> impl Strategy<Value = SignFunction> {
    (0u64..1 << n).prop_map(move |m| SignFunction::new(n, VertexSet::from_bits(m)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn optimum_has_parity_and_range(d in arb_digraph(10)) {
        let n = d.order() as i64;
        let r = gamma_maj_out_oracle(&d).unwrap();
        prop_assert_eq!((r.optimum - n).rem_euclid(2), 0);
        prop_assert!(-n <= r.optimum && r.optimum <= n);
        prop_assert!(is_modf(&d, &r.witness).unwrap());
        prop_assert_eq!(r.witness.weight(), r.optimum);
    }

    #[test]
    fn optimum_n_iff_all_positive_is_the_only_modf(d in arb_digraph(7)) {
        let n = d.order();
        let only_all_positive = (0u64..(1u64 << n) - 1)
            .all(|m| !is_modf(&d, &SignFunction::new(n, VertexSet::from_bits(m)).unwrap()).unwrap());
        prop_assert_eq!(gamma_maj_out_oracle(&d).unwrap().optimum == n as i64, only_all_positive);
    }

    #[test]
    fn branch_and_bound_agrees(d in arb_digraph(12)) {
        let bb = gamma_maj_out_bb(&d).unwrap();
        prop_assert_eq!(bb.optimum, gamma_maj_out_oracle(&d).unwrap().optimum);
        prop_assert!(is_modf(&d, &bb.witness).unwrap());
        prop_assert_eq!(bb.witness.weight(), bb.optimum);
    }

    #[test]
    fn oracle_matches_reference(d in arb_digraph(8)) {
        prop_assert_eq!(gamma_maj_out_oracle(&d).unwrap().optimum, naive_gamma_out(&d));
    }

    #[test]
    fn every_listed_optimum_is_optimal(d in arb_digraph(8)) {
        let (opt, all) = all_optimal_modfs(&d).unwrap();
        prop_assert!(!all.is_empty());
        for f in &all {
            prop_assert!(is_modf(&d, f).unwrap());
            prop_assert_eq!(f.weight(), opt);
        }
        prop_assert_eq!(all[0], gamma_maj_out_oracle(&d).unwrap().witness);
    }

    #[test]
    fn reversing_and_deleting_an_arc_moves_at_most_two(d in arb_digraph(8), pick in any::<prop::sample::Index>()) {
        let arcs: Vec<_> = d.arcs().collect();
        prop_assume!(!arcs.is_empty());
        let (u, v) = arcs[pick.index(arcs.len())];
        let before = gamma_maj_out_oracle(&d).unwrap().optimum;
        let deleted = gamma_maj_out_oracle(&delete_arc(&d, u, v).unwrap()).unwrap().optimum;
        prop_assert!((deleted - before).abs() <= 2);
        if !d.has_arc(v, u) {
            let r = reverse_arc(&d, u, v).unwrap();
            let reversed = gamma_maj_out_oracle(&r).unwrap().optimum;
            prop_assert!((reversed - before).abs() <= 2);
            prop_assert_eq!(reverse_arc(&r, v, u).unwrap(), d);
        }
    }

    #[test]
    fn deleting_a_sink_costs_at_most_one(d in arb_digraph(9)) {
        prop_assume!(d.order() >= 2);
        let before = gamma_maj_out_oracle(&d).unwrap().optimum;
        for v in (0..d.order()).filter(|&v| d.out_degree(v) == 0) {
            let after = gamma_maj_out_oracle(&delete_vertex(&d, v).unwrap()).unwrap().optimum;
            prop_assert!(after >= before - 1);
        }
    }

    #[test]
    fn minimal_modfs_meet_the_necessary_condition(d in arb_digraph(6), f in arb_sign(6)) {
        let n = d.order();
        let f = SignFunction::new(n, f.positives() & VertexSet::full(n)).unwrap();
        if is_modf(&d, &f).unwrap() && is_minimal_modf(&d, &f).unwrap() {
            prop_assert!(minimality_necessary_condition(&d, &f).unwrap());
        }
    }

    #[test]
    fn induced_orientation_keeps_the_function(g in arb_graph(8, 20), f in arb_sign(8)) {
        let n = g.order();
        let f = SignFunction::new(n, f.positives() & VertexSet::full(n)).unwrap();
        if is_majority_dominating(&g, &f).unwrap() {
            let d = orientation_from_majority_function(&g, &f).unwrap();
            prop_assert!(d.is_orientation_of(&g));
            prop_assert!(is_modf(&d, &f).unwrap());
            // pointwise, orienting can only help
            let sat_d = satisfied_set(&d, &f).unwrap();
            for v in 0..n {
                if f.sum_over(g.closed_neighbors(v)) >= 1 {
                    prop_assert!(sat_d.contains(v));
                }
            }
        }
    }

    #[test]
    fn orientations_bracket_every_orientation(g in arb_graph(6, 9)) {
        let r = dom_range(&g).unwrap();
        prop_assert!(r.dom_plus <= r.dom_max);
        prop_assert!(r.dom_plus <= gamma_maj_undirected(&g).unwrap().optimum);
        let mut seen = 0u64;
        for d in enumerate_orientations(&g).unwrap() {
            prop_assert_eq!(d.arc_count(), g.edge_count());
            prop_assert!(!d.has_opposite_pair());
            let v = gamma_maj_out_oracle(&d).unwrap().optimum;
            prop_assert!(r.dom_plus <= v && v <= r.dom_max);
            seen += 1;
        }
        prop_assert_eq!(seen, r.orientations_enumerated);
    }

    #[test]
    fn gamma_minus_bound_on_out_regular(d in arb_out_regular(12)) {
        prop_assert!(check_gamma_minus_bound(&d).unwrap());
    }

    #[test]
    fn edge_lists_round_trip(d in arb_digraph(12), g in arb_graph(12, 40)) {
        let text = write_digraph(&d);
        prop_assert_eq!(parse_digraph(&text).unwrap(), d);
        prop_assert_eq!(write_digraph(&parse_digraph(&text).unwrap()), text);
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn leaf_symmetry_agrees_with_plain_enumeration(a in 1usize..5, b in 1usize..5, star in any::<bool>()) {
        let g = if star {
            families::star_graph(a + b + 1).unwrap()
        } else {
            families::double_star_graph(a, b).unwrap()
        };
        let plain = dom_range(&g).unwrap();
        let sym = dom_range_with(&g, DomOptions { symmetry: Symmetry::Stars, method: Method::Oracle }).unwrap();
        prop_assert_eq!((plain.dom_plus, plain.dom_max), (sym.dom_plus, sym.dom_max));
    }
}
