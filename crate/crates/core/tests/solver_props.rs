//! Exact solvers against each other, the engine and the independent oracles.

use oriented_forcing::constructions::is_reachable;
use oriented_forcing::enumerate::{graph_from_pair_mask, vertex_pairs};
use oriented_forcing::kernel::MaskDigraph;
use oriented_forcing::solver::{self, forcing_number_masks};
use oriented_forcing::{is_forcing_set, Graph, OrientedGraph, VertexSet};
use proptest::prelude::*;

const CASES: u32 = 10_000;

fn graph(nmin: usize, nmax: usize) -> impl Strategy<Value = Graph> {
    (nmin..=nmax).prop_flat_map(|n| {
        any::<u64>().prop_map(move |mask| {
            let pairs = vertex_pairs(n);
            graph_from_pair_mask(n, &pairs, mask & ((1u64 << pairs.len()) - 1))
        })
    })
}

fn oriented(nmax: usize) -> impl Strategy<Value = OrientedGraph> {
    (graph(1, nmax), any::<u64>()).prop_map(|(g, bits)| g.orient_bits(bits))
}

fn f(d: &OrientedGraph, k: usize) -> usize {
    forcing_number_masks(&MaskDigraph::new(d), k).0
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn forcing_number_facts(d in oriented(9)) {
        let top = d.max_out_degree() + 1;
        let fk: Vec<usize> = (1..=top).map(|k| f(&d, k)).collect();
        prop_assert!(fk.windows(2).all(|w| w[0] >= w[1]));
        if is_reachable(&d) {
            prop_assert_eq!(fk[top.max(2) - 2], 1);
        }
        prop_assert_eq!(f(&d.reversal(), 1), fk[0]);
        let r = solver::min_forcing_number(&d, 1).unwrap();
        prop_assert_eq!(r.value, fk[0]);
        prop_assert!(is_forcing_set(&d, r.witness.forcing_set(), 1).unwrap());
    }

    #[test]
    fn witness_is_lex_least_minimum(d in oriented(7), k in 1usize..=3) {
        let (value, witness, _) = forcing_number_masks(&MaskDigraph::new(&d), k);
        let n = d.n();
        let best = (1u64..1 << n)
            .filter(|&s| s.count_ones() as usize == value)
            .map(VertexSet::from_mask)
            .filter(|s| is_forcing_set(&d, s, k).unwrap())
            .min_by(|a, b| a.lex_cmp(b))
            .unwrap();
        prop_assert_eq!(VertexSet::from_mask(witness), best);
        prop_assert!((1u64..1 << n)
            .filter(|&s| (s.count_ones() as usize) < value)
            .all(|s| !is_forcing_set(&d, &VertexSet::from_mask(s), k).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn extremes_against_oracles(g in graph(1, 5)) {
        let big = g.max_degree().max(1);
        let profile = solver::extreme_profile(&g, big + 1).unwrap();
        let alpha = solver::independence_number(&g).unwrap().count();
        let rho = solver::path_cover_number(&g).unwrap().count();
        prop_assert_eq!(profile[0].min, rho);
        for e in &profile {
            prop_assert_eq!(e.min, solver::tree_cover_number(&g, e.k).unwrap().count());
            prop_assert!(e.max >= alpha);
            if e.k >= g.max_degree() {
                prop_assert_eq!(e.max, alpha);
            }
            // the witnesses realise the values
            prop_assert_eq!(f(&g.orient_bits(e.min_bits), e.k), e.min);
            prop_assert_eq!(f(&g.orient_bits(e.max_bits), e.k), e.max);
        }
        for w in profile.windows(2) {
            prop_assert!(w[1].min <= w[0].min && w[1].max <= w[0].max);
        }
        let last = &profile[big - 1];
        let chain = [last.min, profile[0].min, rho, alpha, last.max, profile[0].max];
        prop_assert!(chain.windows(2).all(|w| w[0] <= w[1]));
        if g.m() > 0 {
            prop_assert!(profile[0].max < g.n());
        }
    }
}
