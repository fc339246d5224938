use serde_json::json;

use super::{SolveResult, Witness};
use crate::error::{check_limit, Error, Result};
use crate::forcing;
use crate::graph::{OrientedGraph, VertexSet};
use crate::kernel::{for_each_combination, MaskDigraph};

pub const SUBSET_LIMIT: usize = 20;

/// Exact `F_k` of a mask digraph.
///
/// Returns the value, the lexicographically least minimum forcing set, and
/// the number of candidate sets tested.
pub fn forcing_number_masks(md: &MaskDigraph, k: usize) -> (usize, u64, u64) {
    let k = k.min(64) as u32;
    let n = md.n();
    if n == 0 {
        return (0, 0, 0);
    }
    let max_out = (0..n).map(|v| md.out(v).count_ones()).max().unwrap_or(0);
    if k >= max_out {
        return reaching_minimum(md);
    }
    let sources = md.sources();
    let (mut total, mut witness, mut explored) = (0, 0, 0);
    for comp in md.weak_components() {
        let (v, w, e) = component_minimum(md, k, comp, sources & comp);
        total += v;
        witness |= w;
        explored += e;
    }
    (total, witness, explored)
}

fn component_minimum(md: &MaskDigraph, k: u32, comp: u64, mandatory: u64) -> (usize, u64, u64) {
    let size = comp.count_ones() as usize;
    let forced_in = mandatory.count_ones() as usize;
    let mut free = Vec::with_capacity(size);
    let mut rest = comp & !mandatory;
    while rest != 0 {
        free.push(rest & rest.wrapping_neg());
        rest &= rest - 1;
    }
    let degree_bound = (md.min_out_degree(comp) + 1).saturating_sub(k as usize);
    let lower = degree_bound.max(1).max(forced_in);
    let mut explored = 0u64;
    for c in lower..=size {
        let mut hit = 0;
        let found = for_each_combination(&free, c - forced_in, |extra| {
            explored += 1;
            let s = mandatory | extra;
            if md.forces(s, k, comp) {
                hit = s;
                true
            } else {
                false
            }
        });
        if found {
            return (c, hit, explored);
        }
    }
    unreachable!("a whole component always forces itself")
}

/// When `k` is at least every out-degree, a set forces exactly what it
/// reaches, so the minimum is one vertex per source strong component; the
/// smallest vertex of each gives the lexicographically least choice.
fn reaching_minimum(md: &MaskDigraph) -> (usize, u64, u64) {
    let n = md.n();
    let reach: Vec<u64> = (0..n).map(|v| md.closure(1 << v, 64)).collect();
    let mut set = 0u64;
    for v in 0..n {
        let bit = 1u64 << v;
        let in_source_scc = (0..n).all(|u| reach[u] & bit == 0 || reach[v] >> u & 1 == 1);
        let smallest = (0..v).all(|u| !(reach[v] >> u & 1 == 1 && reach[u] & bit != 0));
        if in_source_scc && smallest {
            set |= bit;
        }
    }
    (set.count_ones() as usize, set, n as u64)
}

pub fn min_forcing_number(d: &OrientedGraph, k: usize) -> Result<SolveResult> {
    min_forcing_number_with_limit(d, k, SUBSET_LIMIT)
}

pub fn min_forcing_number_with_limit(
    d: &OrientedGraph,
    k: usize,
    limit: usize,
) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::Parameter("k must be a positive integer".into()));
    }
    if d.n() == 0 {
        return Err(Error::Parameter("the forcing number needs n >= 1".into()));
    }
    check_limit("vertex count for subset search", d.n(), limit.min(64))?;
    let md = MaskDigraph::new(d);
    let (value, mask, explored) = forcing_number_masks(&md, k);
    let set = VertexSet::from_mask(mask);
    if !forcing::is_forcing_set(d, &set, k)? {
        return Err(Error::Verification(format!(
            "witness {set:?} does not force the digraph"
        )));
    }
    Ok(SolveResult {
        problem: "fk".into(),
        parameters: json!({ "k": k, "n": d.n(), "m": d.m() }),
        value,
        witness: Witness::ForcingSet { set },
        explored,
        limits_hit: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute_force(d: &OrientedGraph, k: usize) -> (usize, u64) {
        let md = MaskDigraph::new(d);
        let full = md.full();
        let mut best: Option<(usize, u64)> = None;
        for s in 1..=full {
            if md.closure(s, k as u32) == full {
                let c = s.count_ones() as usize;
                let better = match best {
                    None => true,
                    Some((bc, bs)) => {
                        c < bc
                            || (c == bc
                                && VertexSet::from_mask(s).lex_cmp(&VertexSet::from_mask(bs))
                                    == std::cmp::Ordering::Less)
                    }
                };
                if better {
                    best = Some((c, s));
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn out_star_on_five_vertices() {
        // n = 5 vertices: F_k = n - k out of the centre, n - 1 into it
        let d = families::star(4).unwrap().orient_bits(0b1111);
        assert_eq!(min_forcing_number(&d, 2).unwrap().value, 3);
        assert_eq!(min_forcing_number(&d, 1).unwrap().value, 4);
        assert_eq!(min_forcing_number(&d.reversal(), 2).unwrap().value, 4);
        let d = families::star(5).unwrap().orient_bits(0b11111);
        assert_eq!(min_forcing_number(&d, 2).unwrap().value, 4);
    }

    #[test]
    fn greedy_tree_3_2() {
        let t = families::greedy_tree(3, 2).unwrap();
        assert_eq!(min_forcing_number(&t, 1).unwrap().value, 9);
    }

    #[test]
    fn directed_paths_have_forcing_number_one() {
        for n in 1..=10 {
            let g = families::path(n).unwrap();
            let d = g.orient_bits(u64::MAX);
            let r = min_forcing_number(&d, 1).unwrap();
            assert_eq!(r.value, 1);
            assert_eq!(r.witness.forcing_set().to_vec(), vec![0]);
        }
    }

    #[test]
    fn d6_needs_two() {
        let d = families::gp_graph(6).unwrap();
        let r = min_forcing_number(&d, 1).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.forcing_set().to_vec(), vec![0, 2]);
        assert!(forcing::is_forcing_set(&d, &[0, 6].into_iter().collect(), 1).unwrap());
    }

    #[test]
    fn matches_brute_force_on_all_small_orientations() {
        for g in crate::enumerate::labeled_graphs(5, false).unwrap().step_by(7) {
            for d in crate::enumerate::orientations(&g).unwrap() {
                for k in 1..=3 {
                    let (v, w, _) = forcing_number_masks(&MaskDigraph::new(&d), k);
                    assert_eq!((v, w), brute_force(&d, k), "{d:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn degenerate_inputs() {
        let e = crate::graph::Graph::empty(4).orient_bits(0);
        assert_eq!(min_forcing_number(&e, 1).unwrap().value, 4);
        let t = crate::graph::Graph::empty(1).orient_bits(0);
        assert_eq!(min_forcing_number(&t, 1).unwrap().value, 1);
        assert!(matches!(min_forcing_number(&t, 0), Err(Error::Parameter(_))));
        let big = families::path(21).unwrap().orient_bits(0);
        assert!(matches!(min_forcing_number(&big, 1), Err(Error::Limit { .. })));
    }
}
