//! Independent oracles for classical graph invariants.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::covers::CoverPart;
use crate::error::{check_limit, Result};
use crate::graph::{Graph, VertexSet};

pub const CLIQUE_LIMIT: usize = 20;
pub const MATCHING_LIMIT: usize = 20;
pub const MIM_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(u64),
    Rational {
        num: i64,
        den: i64,
    },
}

impl Number {
    pub fn ratio(r: Ratio<i64>) -> Self {
        Number::Rational {
            num: *r.numer(),
            den: *r.denom(),
        }
    }

    pub fn as_int(&self) -> Option<u64> {
        match *self {
            Number::Int(v) => Some(v),
            Number::Rational { num, den } => (den == 1 && num >= 0).then_some(num as u64),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum InvariantWitness {
    Set(VertexSet),
    Edges(Vec<(usize, usize)>),
    Paths(Vec<Vec<usize>>),
    Trees(Vec<CoverPart>),
    /// Vertex attaining a degree value.
    Vertex(usize),
    /// Endpoints of a longest shortest path.
    Pair(usize, usize),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub name: String,
    pub value: Number,
    pub witness: InvariantWitness,
}

impl InvariantValue {
    pub(crate) fn int(name: &str, value: usize, witness: InvariantWitness) -> Self {
        InvariantValue {
            name: name.into(),
            value: Number::Int(value as u64),
            witness,
        }
    }

    /// The value when it is an integer.
    pub fn count(&self) -> usize {
        self.value.as_int().expect("integer-valued invariant") as usize
    }
}

/// Lexicographically least maximum independent set by branch and bound:
/// branching on the smallest candidate, inclusion first, visits sets of equal
/// size in lexicographic order, so the first maximum found is the least.
fn max_independent(adj: &[u64], candidates: u64) -> u64 {
    fn go(adj: &[u64], chosen: u64, cand: u64, best: &mut (u32, u64)) {
        if cand == 0 {
            if chosen.count_ones() > best.0 {
                *best = (chosen.count_ones(), chosen);
            }
            return;
        }
        if chosen.count_ones() + cand.count_ones() <= best.0 {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        go(adj, chosen | bit, cand & !bit & !adj[v], best);
        go(adj, chosen, cand & !bit, best);
    }
    let mut best = (0, 0);
    go(adj, 0, candidates, &mut best);
    best.1
}

pub fn independence_number(g: &Graph) -> Result<InvariantValue> {
    check_limit("vertex count for independence number", g.n(), CLIQUE_LIMIT)?;
    let set = max_independent(&g.adj_masks(), crate::kernel::full_mask(g.n()));
    Ok(InvariantValue::int(
        "alpha",
        set.count_ones() as usize,
        InvariantWitness::Set(VertexSet::from_mask(set)),
    ))
}

pub fn clique_number(g: &Graph) -> Result<InvariantValue> {
    check_limit("vertex count for clique number", g.n(), CLIQUE_LIMIT)?;
    let set = max_independent(&g.complement().adj_masks(), crate::kernel::full_mask(g.n()));
    Ok(InvariantValue::int(
        "clique",
        set.count_ones() as usize,
        InvariantWitness::Set(VertexSet::from_mask(set)),
    ))
}

/// Maximum matching by memoised recursion over vertex subsets: the lowest
/// vertex is either left unmatched or matched to a neighbour.
pub fn matching_number(g: &Graph) -> Result<InvariantValue> {
    check_limit("vertex count for matching number", g.n(), MATCHING_LIMIT)?;
    let adj = g.adj_masks();
    let mut memo = vec![u8::MAX; 1 << g.n()];
    fn go(adj: &[u64], mask: u64, memo: &mut [u8]) -> u8 {
        if mask == 0 {
            return 0;
        }
        if memo[mask as usize] != u8::MAX {
            return memo[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(adj, rest, memo);
        let mut nb = adj[v] & rest;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + go(adj, rest & !(1 << w), memo));
        }
        memo[mask as usize] = best;
        best
    }
    let full = crate::kernel::full_mask(g.n());
    let value = go(&adj, full, &mut memo);
    // walk the memo back to a matching
    let mut edges = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let here = go(&adj, mask, &mut memo);
        if go(&adj, rest, &mut memo) == here {
            mask = rest;
            continue;
        }
        let mut nb = adj[v] & rest;
        loop {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if 1 + go(&adj, rest & !(1 << w), &mut memo) == here {
                edges.push((v, w));
                mask = rest & !(1 << w);
                break;
            }
        }
    }
    Ok(InvariantValue::int(
        "matching",
        value as usize,
        InvariantWitness::Edges(edges),
    ))
}

/// Largest induced matching: choosing edge `vw` removes `N[v] ∪ N[w]`.
pub fn induced_matching_number(g: &Graph) -> Result<InvariantValue> {
    check_limit("vertex count for induced matching number", g.n(), MIM_LIMIT)?;
    let adj = g.adj_masks();
    let mut memo = vec![u8::MAX; 1 << g.n()];
    fn go(adj: &[u64], mask: u64, memo: &mut [u8]) -> u8 {
        if mask == 0 {
            return 0;
        }
        if memo[mask as usize] != u8::MAX {
            return memo[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(adj, rest, memo);
        let mut nb = adj[v] & rest;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let removed = adj[v] | adj[w] | 1 << v | 1 << w;
            best = best.max(1 + go(adj, mask & !removed, memo));
        }
        memo[mask as usize] = best;
        best
    }
    let full = crate::kernel::full_mask(g.n());
    let value = go(&adj, full, &mut memo);
    let mut edges = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let here = go(&adj, mask, &mut memo);
        if go(&adj, rest, &mut memo) == here {
            mask = rest;
            continue;
        }
        let mut nb = adj[v] & rest;
        loop {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let removed = adj[v] | adj[w] | 1 << v | 1 << w;
            if 1 + go(&adj, mask & !removed, &mut memo) == here {
                edges.push((v, w));
                mask &= !removed;
                break;
            }
        }
    }
    Ok(InvariantValue::int(
        "induced_matching",
        value as usize,
        InvariantWitness::Edges(edges),
    ))
}

/// Minimum, maximum and average degree.
pub fn degree_invariants(g: &Graph) -> Vec<InvariantValue> {
    let arg = |want: usize| (0..g.n()).find(|&v| g.degree(v) == want);
    let min = g.min_degree();
    let max = g.max_degree();
    vec![
        InvariantValue::int(
            "min_degree",
            min,
            arg(min).map_or(InvariantWitness::None, InvariantWitness::Vertex),
        ),
        InvariantValue::int(
            "max_degree",
            max,
            arg(max).map_or(InvariantWitness::None, InvariantWitness::Vertex),
        ),
        InvariantValue {
            name: "avg_degree".into(),
            value: Number::ratio(g.avg_degree()),
            witness: InvariantWitness::None,
        },
    ]
}

/// `None` for disconnected graphs.
pub fn diameter(g: &Graph) -> Option<InvariantValue> {
    let d = g.diameter()?;
    let pair = (0..g.n())
        .flat_map(|u| {
            let dist = g.distances_from(u);
            (u..g.n()).map(move |v| (u, v, dist[v]))
        })
        .find(|&(_, _, dv)| dv == Some(d))
        .map(|(u, v, _)| InvariantWitness::Pair(u, v))
        .unwrap_or(InvariantWitness::None);
    Some(InvariantValue::int("diameter", d, pair))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute_alpha(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&s| g.is_independent(&VertexSet::from_mask(s)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_values() {
        let p6 = families::path(6).unwrap();
        let a = independence_number(&p6).unwrap();
        assert_eq!(a.count(), 3);
        assert_eq!(a.witness, InvariantWitness::Set([0, 2, 4].into_iter().collect()));
        assert_eq!(independence_number(&families::star(7).unwrap()).unwrap().count(), 7);
        let p2 = families::path(2).unwrap();
        assert_eq!(matching_number(&p2).unwrap().count(), 1);
        assert_eq!(induced_matching_number(&p2).unwrap().count(), 1);
        assert_eq!(clique_number(&p2).unwrap().count(), 2);
        assert_eq!(clique_number(&families::complete(5).unwrap()).unwrap().count(), 5);
        assert_eq!(induced_matching_number(&families::path(6).unwrap()).unwrap().count(), 2);
        assert_eq!(matching_number(&families::cycle(7).unwrap()).unwrap().count(), 3);
    }

    #[test]
    fn alpha_matches_brute_force_with_least_witness() {
        for g in crate::enumerate::labeled_graphs(5, false).unwrap() {
            let a = independence_number(&g).unwrap();
            assert_eq!(a.count(), brute_alpha(&g));
            let best = (0u64..1 << g.n())
                .filter(|&s| {
                    s.count_ones() as usize == a.count()
                        && g.is_independent(&VertexSet::from_mask(s))
                })
                .map(VertexSet::from_mask)
                .min_by(|x, y| x.lex_cmp(y))
                .unwrap();
            assert_eq!(a.witness, InvariantWitness::Set(best));
        }
    }

    #[test]
    fn matching_witnesses_are_valid() {
        for g in crate::enumerate::labeled_graphs(5, false).unwrap().step_by(5) {
            for inv in [matching_number(&g).unwrap(), induced_matching_number(&g).unwrap()] {
                let InvariantWitness::Edges(edges) = &inv.witness else { panic!() };
                assert_eq!(edges.len(), inv.count());
                let ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
                let set: VertexSet = ends.iter().copied().collect();
                assert_eq!(set.len(), ends.len());
                assert!(edges.iter().all(|&(u, v)| g.has_edge(u, v)));
                if inv.name == "induced_matching" {
                    let (h, _) = g.induced_subgraph(&set).unwrap_or((Graph::empty(0), vec![]));
                    assert_eq!(h.m(), edges.len());
                }
            }
        }
    }

    #[test]
    fn degrees_and_diameter() {
        let g = families::path(4).unwrap();
        let d = degree_invariants(&g);
        assert_eq!(d[0].count(), 1);
        assert_eq!(d[1].count(), 2);
        assert_eq!(d[2].value, Number::Rational { num: 3, den: 2 });
        assert_eq!(diameter(&g).unwrap().count(), 3);
        assert!(diameter(&Graph::empty(2)).is_none());
    }
}
