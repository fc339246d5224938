//! Vertex-partition covers by paths, bounded-degree trees, and k-ary out-trees.
//!
//! All three are "minimum number of feasible blocks partitioning V" over
//! vertex subsets. Tree feasibility comes from one table:
//! `part[Y][u]` = fewest disjoint rooted subtrees, each hanging from `u` by an
//! edge (or an arc out of `u`) to its root, that together cover `Y`; a subtree
//! on `U` may be rooted at `x` when `part[U - x][x] <= k`.

use serde::{Deserialize, Serialize};

use super::invariants::{InvariantValue, InvariantWitness};
use crate::error::{check_limit, Result};
use crate::graph::{Graph, OrientedGraph, VertexSet};
use crate::kernel::full_mask;

pub const COVER_LIMIT: usize = 12;
pub const PATH_COVER_LIMIT: usize = 14;

const INF: u8 = u8::MAX;

/// One tree of a cover. For oriented covers `edges` are arcs `(parent, child)`;
/// for undirected covers they are `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPart {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCover {
    pub parts: Vec<CoverPart>,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

struct TreeDp {
    n: usize,
    nbr: Vec<u64>,
    roots_k: Vec<u64>,
    part: Vec<u8>,
    choice: Vec<u32>,
}

impl TreeDp {
    fn new(nbr: Vec<u64>, k: usize) -> Self {
        let n = nbr.len();
        let size = 1usize << n;
        let mut roots_k = vec![0u64; size];
        let mut part = vec![INF; size * n];
        let mut choice = vec![0u32; size * n];
        part[..n].fill(0);
        for y in 1..size {
            let ym = y as u64;
            roots_k[y] = bits(ym)
                .filter(|&x| (part[(y & !(1 << x)) * n + x] as usize) <= k)
                .fold(0, |r, x| r | 1 << x);
            let low = y & y.wrapping_neg();
            let rest = y ^ low;
            for u in (0..n).filter(|&u| y >> u & 1 == 0) {
                let mut best = INF;
                let mut arg = 0;
                let mut sub = rest;
                loop {
                    let block = sub | low;
                    if roots_k[block] & nbr[u] != 0 {
                        let p = part[(y ^ block) * n + u];
                        if p != INF && p + 1 < best {
                            best = p + 1;
                            arg = block;
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                part[y * n + u] = best;
                choice[y * n + u] = arg as u32;
            }
        }
        TreeDp { n, nbr, roots_k, part, choice }
    }

    fn part(&self, y: u64, u: usize) -> usize {
        self.part[y as usize * self.n + u] as usize
    }

    /// Appends the `(parent, child)` edges hanging the cover of `y` from `u`.
    fn hang(&self, mut y: u64, u: usize, edges: &mut Vec<(usize, usize)>) {
        while y != 0 {
            let block = self.choice[y as usize * self.n + u] as u64;
            let x = (self.roots_k[block as usize] & self.nbr[u]).trailing_zeros() as usize;
            edges.push((u, x));
            self.hang(block & !(1 << x), x, edges);
            y ^= block;
        }
    }
}

/// Minimum partition of `full` into feasible blocks; returns the block list.
fn min_partition(n: usize, feasible: impl Fn(u64) -> bool) -> Vec<u64> {
    let size = 1usize << n;
    let mut best = vec![INF; size];
    let mut arg = vec![0u64; size];
    best[0] = 0;
    for w in 1..size {
        let low = w & w.wrapping_neg();
        let rest = w ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            let p = best[w ^ block];
            if p != INF && p + 1 < best[w] && feasible(block as u64) {
                best[w] = p + 1;
                arg[w] = block as u64;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut blocks = Vec::new();
    let mut w = size - 1;
    while w != 0 {
        blocks.push(arg[w]);
        w ^= arg[w] as usize;
    }
    blocks.sort_unstable_by_key(|b| b.trailing_zeros());
    blocks
}

/// `ρ(G)`: Hamiltonian-path blocks found by an endpoint table over subsets.
pub fn path_cover_number(g: &Graph) -> Result<InvariantValue> {
    check_limit("vertex count for path cover", g.n(), PATH_COVER_LIMIT)?;
    let n = g.n();
    let adj = g.adj_masks();
    let size = 1usize << n;
    // ends[S] = vertices at which some Hamiltonian path of G[S] ends
    let mut ends = vec![0u64; size];
    for s in 1..size {
        let sm = s as u64;
        if sm.count_ones() == 1 {
            ends[s] = sm;
            continue;
        }
        ends[s] = bits(sm)
            .filter(|&v| ends[s & !(1 << v)] & adj[v] != 0)
            .fold(0, |e, v| e | 1 << v);
    }
    let blocks = min_partition(n, |b| ends[b as usize] != 0);
    let paths = blocks
        .iter()
        .map(|&b| {
            let mut v = ends[b as usize].trailing_zeros() as usize;
            let mut left = b;
            let mut path = vec![v];
            while left.count_ones() > 1 {
                left &= !(1 << v);
                v = (ends[left as usize] & adj[v]).trailing_zeros() as usize;
                path.push(v);
            }
            path
        })
        .collect::<Vec<_>>();
    Ok(InvariantValue::int(
        "rho",
        paths.len(),
        InvariantWitness::Paths(paths),
    ))
}

/// `T_k(G)`: fewest vertex-disjoint trees of maximum degree at most `k + 1`
/// covering `V`. Each witness tree is rooted at its smallest leaf.
pub fn tree_cover_number(g: &Graph, k: usize) -> Result<InvariantValue> {
    check_limit("vertex count for tree cover", g.n(), COVER_LIMIT)?;
    let n = g.n();
    let dp = TreeDp::new(g.adj_masks(), k);
    let centre = |w: u64| bits(w).find(|&u| dp.part(w & !(1 << u), u) <= k + 1);
    let blocks = min_partition(n, |w| centre(w).is_some());
    let parts = blocks
        .iter()
        .map(|&w| {
            let c = centre(w).expect("feasible block");
            let mut edges = Vec::new();
            dp.hang(w & !(1 << c), c, &mut edges);
            let mut edges: Vec<(usize, usize)> =
                edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            let root = bits(w)
                .find(|&v| edges.iter().filter(|&&(a, b)| a == v || b == v).count() <= 1)
                .expect("every tree has a leaf");
            CoverPart {
                vertices: VertexSet::from_mask(w),
                edges,
                root,
            }
        })
        .collect::<Vec<_>>();
    Ok(InvariantValue::int(
        "tree_cover_k",
        parts.len(),
        InvariantWitness::Trees(parts),
    ))
}

/// `IT_k(D)`: fewest vertex-disjoint out-trees of `D`, every vertex with at
/// most `k` children, covering `V`.
pub fn induced_kary_cover_number(d: &OrientedGraph, k: usize) -> Result<InvariantValue> {
    induced_kary_cover_number_with(d, k, false)
}

/// With `strict`, a block must also carry no arcs of `D` beyond its tree.
pub fn induced_kary_cover_number_with(
    d: &OrientedGraph,
    k: usize,
    strict: bool,
) -> Result<InvariantValue> {
    check_limit("vertex count for k-ary tree cover", d.n(), COVER_LIMIT)?;
    let n = d.n();
    let out = d.out_masks();
    let dp = TreeDp::new(out.clone(), k);
    let arcs_inside = |w: u64| bits(w).map(|v| (out[v] & w).count_ones()).sum::<u32>();
    let feasible = |w: u64| {
        dp.roots_k[w as usize] != 0 && (!strict || arcs_inside(w) + 1 == w.count_ones())
    };
    let blocks = min_partition(n, feasible);
    let parts = blocks
        .iter()
        .map(|&w| {
            let root = dp.roots_k[w as usize].trailing_zeros() as usize;
            let mut edges = Vec::new();
            dp.hang(w & !(1 << root), root, &mut edges);
            edges.sort_unstable();
            CoverPart {
                vertices: VertexSet::from_mask(w),
                edges,
                root,
            }
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(
        parts.iter().map(|p| p.vertices.len()).sum::<usize>(),
        full_mask(n).count_ones() as usize
    );
    Ok(InvariantValue::int(
        if strict { "induced_kary_k_strict" } else { "induced_kary_k" },
        parts.len(),
        InvariantWitness::Trees(parts),
    ))
}
