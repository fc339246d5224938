//! Invariants of the color change rule on random oriented graphs.

use oriented_forcing::kernel::MaskDigraph;
use oriented_forcing::solver::{forcing_number_masks, min_forcing_number};
use oriented_forcing::{closure, forcing_chains, OrientedGraph, VertexSet};
use proptest::prelude::*;

const CASES: u32 = 10_000;

fn oriented() -> impl Strategy<Value = OrientedGraph> {
    oriented_up_to(9)
}

/// n in 1..=nmax; each vertex pair is absent, forward or backward.
fn oriented_up_to(nmax: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=nmax).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |choice| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let arcs = pairs.zip(choice).filter_map(|((u, v), c)| match c {
                1 => Some((u, v)),
                2 => Some((v, u)),
                _ => None,
            });
            OrientedGraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn with_sets() -> impl Strategy<Value = (OrientedGraph, u64, u64, usize)> {
    (oriented(), any::<u64>(), any::<u64>(), 1usize..=4).prop_map(|(d, a, b, k)| {
        let full = (1u64 << d.n()) - 1;
        // the engine rejects an empty initial set
        let s = (a & full) | 1 << (a.count_ones() as usize % d.n());
        (d, s, s | (b & full), k)
    })
}

fn final_mask(d: &OrientedGraph, s: u64, k: usize) -> u64 {
    closure(d, &VertexSet::from_mask(s), k).unwrap().final_set.to_mask().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closure_is_monotone_in_set_and_k((d, s, t, k) in with_sets()) {
        let small = final_mask(&d, s, k);
        prop_assert_eq!(small & !final_mask(&d, t, k), 0);
        prop_assert_eq!(small & !final_mask(&d, s, k + 1), 0);
    }

    #[test]
    fn closure_is_idempotent_and_matches_masks((d, s, _t, k) in with_sets()) {
        let once = final_mask(&d, s, k);
        prop_assert_eq!(final_mask(&d, once, k), once);
        prop_assert_eq!(once & s, s);
        prop_assert_eq!(MaskDigraph::new(&d).closure(s, k as u32), once);
    }

    #[test]
    fn trace_rounds_are_bounded((d, s, _t, k) in with_sets()) {
        let set = VertexSet::from_mask(s);
        let t = closure(&d, &set, k).unwrap();
        prop_assert!(t.rounds.len() <= d.n() - set.len());
        prop_assert_eq!(t.forced_count(), t.final_set.len() - set.len());
    }

    #[test]
    fn chains_of_forcing_sets((d, s, _t, k) in with_sets()) {
        // enlarge to a forcing set by adding everything left uncolored
        let full = (1u64 << d.n()) - 1;
        let forcing = s | (full & !final_mask(&d, s, k));
        let set = VertexSet::from_mask(forcing);
        let forest = forcing_chains(&d, &set, k).unwrap();
        prop_assert_eq!(forest.component_count(), set.len());
        prop_assert!(forest.validate(&d, k).is_ok());
        for v in 0..d.n() {
            prop_assert!(forest.children(v).len() <= k);
            prop_assert!(set.contains(forest.root_of(v)));
        }
    }

    #[test]
    fn sources_belong_to_every_forcing_set((d, s, _t, k) in with_sets()) {
        let sources = d.sources().to_mask().unwrap();
        let full = (1u64 << d.n()) - 1;
        let reached = final_mask(&d, s, k);
        // sources are never forced
        prop_assert_eq!(reached & sources, s & sources);
        if reached == full {
            prop_assert_eq!(sources & !s, 0);
        }
        // a minimum forcing set contains them too
        let (_, witness, _) = forcing_number_masks(&MaskDigraph::new(&d), k);
        prop_assert_eq!(sources & !witness, 0);
    }

    #[test]
    fn forcing_number_is_additive(a in oriented_up_to(6), b in oriented_up_to(6), k in 1usize..=3) {
        let union = a.disjoint_union(&b);
        let f = |d: &OrientedGraph| min_forcing_number(d, k).unwrap().value;
        prop_assert_eq!(f(&union), f(&a) + f(&b));
    }
}
