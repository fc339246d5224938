//! Exhaustive enumerators for orientations, labeled graphs and labeled trees,
//! plus brute-force canonical forms for isomorphism dedup at small order.

use crate::error::{check_limit, Error, Result};
use crate::graph::{Graph, OrientedGraph};

pub const ORIENTATION_LIMIT: usize = 24;
pub const LABELED_GRAPH_LIMIT: usize = 8;
pub const LABELED_TREE_LIMIT: usize = 10;
pub const CANONICAL_FORM_LIMIT: usize = 7;

/// All `2^m` orientations of `g`, in increasing order of the direction bits
/// read as an integer (bit `i` = edge `i`).
pub fn orientations(g: &Graph) -> Result<Orientations<'_>> {
    orientations_with_limit(g, ORIENTATION_LIMIT)
}

pub fn orientations_with_limit(g: &Graph, limit: usize) -> Result<Orientations<'_>> {
    check_limit("edge count for orientation enumeration", g.m(), limit.min(63))?;
    Ok(Orientations {
        graph: g,
        next: 0,
        end: 1u64 << g.m(),
    })
}

pub struct Orientations<'a> {
    graph: &'a Graph,
    next: u64,
    end: u64,
}

impl Iterator for Orientations<'_> {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        if self.next >= self.end {
            return None;
        }
        let d = self.graph.orient_bits(self.next);
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// The labeled graph whose edge set is selected by `mask` over
/// [`vertex_pairs`]`(n)`.
pub fn graph_from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("pairs are valid")
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = [0u16; 16];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full = (1u16 << n) - 1;
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices in increasing order of
/// their pair mask, optionally only the connected ones.
pub fn labeled_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    check_limit("n for labeled graph enumeration", n, LABELED_GRAPH_LIMIT)?;
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        if connected_only && !mask_connected(n, &pairs, mask) {
            None
        } else {
            Some(graph_from_pair_mask(n, &pairs, mask))
        }
    }))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// All `n^(n-2)` labeled trees on `n` vertices, by decoding Prüfer sequences in
/// lexicographic order. `n = 1` and `n = 2` yield the single tree.
pub fn labeled_trees(n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    check_limit("n for labeled tree enumeration", n, LABELED_TREE_LIMIT)?;
    match n {
        0 => Err(Error::Parameter("trees need n >= 1".into())),
        1 => Ok(Box::new(std::iter::once(Graph::empty(1)))),
        2 => Ok(Box::new(std::iter::once(
            Graph::new(2, [(0, 1)]).unwrap(),
        ))),
        _ => {
            let mut seq = vec![0usize; n - 2];
            let mut done = false;
            Ok(Box::new(std::iter::from_fn(move || {
                if done {
                    return None;
                }
                let tree = prufer_decode(&seq, n);
                // odometer increment, last position fastest
                let mut i = seq.len();
                loop {
                    if i == 0 {
                        done = true;
                        break;
                    }
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                }
                Some(tree)
            })))
        }
    }
}

/// Minimum upper-triangle adjacency code over all vertex permutations. Two
/// graphs of the same order are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    check_limit("n for brute-force canonical form", n, CANONICAL_FORM_LIMIT)?;
    let adj = g.adj_masks();
    let pairs = vertex_pairs(n);
    let code_of = |perm: &[usize]| -> u64 {
        // pair i of the relabelled graph is an edge iff the preimages are adjacent
        pairs.iter().enumerate().fold(0u64, |acc, (i, &(a, b))| {
            if adj[perm[a]] >> perm[b] & 1 == 1 {
                acc | 1 << (pairs.len() - 1 - i)
            } else {
                acc
            }
        })
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = code_of(&perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code_of(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Keeps the first labeled graph of each isomorphism class, by canonical code.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<Graph>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert((g.n(), canonical_code(&g)?)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Isomorphism-invariant code of a tree: the smaller of the nested-parenthesis
/// encodings rooted at its centre vertices.
pub fn tree_canonical_code(t: &Graph) -> Result<Vec<u8>> {
    if !t.is_tree() {
        return Err(Error::Parameter("tree code needs a tree".into()));
    }
    let centres = tree_centres(t);
    Ok(centres
        .iter()
        .map(|&c| rooted_code(t, c))
        .min()
        .unwrap())
}

fn tree_centres(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, root: usize) -> Vec<u8> {
    fn go(t: &Graph, v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| go(t, w, v))
            .collect();
        kids.sort_unstable();
        let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        out.push(b'(');
        for k in kids {
            out.extend(k);
        }
        out.push(b')');
        out
    }
    go(t, root, usize::MAX)
}
