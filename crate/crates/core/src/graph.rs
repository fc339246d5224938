//! Simple graphs, their orientations, and vertex sets.
//!
//! Vertices are `0..n`. Edges are stored once as `(u, v)` with `u < v`, sorted
//! lexicographically; the position of an edge in that list is its identity.
//! An orientation is one bit per edge: `true` means the arc `u -> v` (low to
//! high endpoint), `false` means `v -> u`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of vertices, stored as a bitset with no trailing zero words.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new();
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet { words: vec![mask] };
        s.trim();
        s
    }

    /// The set as a single machine word, if every member is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        was
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn union(&self, other: &Self) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| self.word(i) | other.word(i))
            .collect();
        VertexSet { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let len = self.words.len().min(other.words.len());
        let mut s = VertexSet {
            words: (0..len).map(|i| self.word(i) & other.word(i)).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = VertexSet {
            words: (0..self.words.len())
                .map(|i| self.word(i) & !other.word(i))
                .collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from any list of unordered pairs. Pairs are normalised to
    /// `u < v` and sorted; loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Parameter(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Parameter(format!(
                    "edge {{{a},{b}}} has an endpoint outside 0..{n}"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!(
                "duplicate edge {{{},{}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Average degree `2m/n` (zero for the graph with no vertices).
    pub fn avg_degree(&self) -> Ratio<i64> {
        if self.n == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(2 * self.m() as i64, self.n as i64)
        }
    }

    /// Neighbourhood bitmasks; only valid for `n <= 64`.
    pub fn adj_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter of a connected graph; `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        (0..self.n)
            .map(|s| self.distances_from(s).into_iter().flatten().max().unwrap_or(0))
            .max()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(set.contains(u) && set.contains(v)))
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Indices of bridge edges (cut-edges), ascending.
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge index, next neighbour position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (u, pe) = (top.0, top.1);
                if top.2 < self.adj[u].len() {
                    let w = self.adj[u][top.2];
                    top.2 += 1;
                    let e = self.edge_index(u, w).unwrap();
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push(pe);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected, at least two vertices, and no bridges.
    pub fn is_two_edge_connected(&self) -> bool {
        self.n >= 2 && self.is_connected() && self.bridges().is_empty()
    }

    /// The graph with the edge at index `e` removed.
    pub fn without_edge(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self::from_sorted(self.n, edges)
    }

    /// Subgraph induced by `w`, relabelled `0..|w|` in increasing order.
    /// Returns the subgraph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let keep = self.checked_members(w)?;
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        Ok((Self::from_sorted(keep.len(), edges), keep))
    }

    fn checked_members(&self, w: &VertexSet) -> Result<Vec<usize>> {
        if w.is_empty() {
            return Err(Error::Parameter("vertex set must be nonempty".into()));
        }
        let keep = w.to_vec();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::Parameter(format!(
                "vertex {bad} outside 0..{}",
                self.n
            )));
        }
        Ok(keep)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Orientation with the given direction bits (one per edge).
    pub fn orient(&self, direction: Vec<bool>) -> Result<OrientedGraph> {
        OrientedGraph::new(self.clone(), direction)
    }

    /// Orientation whose bit `i` is bit `i` of `bits`; needs `m <= 64`.
    pub fn orient_bits(&self, bits: u64) -> OrientedGraph {
        assert!(self.m() <= 64);
        let direction = (0..self.m()).map(|i| bits >> i & 1 == 1).collect();
        OrientedGraph::build(self.clone(), direction)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::new(r.n, r.edges).map_err(serde::de::Error::custom)
    }
}

/// An orientation of a simple graph: exactly one arc per edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    graph: Graph,
    direction: Vec<bool>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl OrientedGraph {
    pub fn new(graph: Graph, direction: Vec<bool>) -> Result<Self> {
        if direction.len() != graph.m() {
            return Err(Error::Parameter(format!(
                "direction vector has length {} but the graph has {} edges",
                direction.len(),
                graph.m()
            )));
        }
        Ok(Self::build(graph, direction))
    }

    fn build(graph: Graph, direction: Vec<bool>) -> Self {
        let n = graph.n();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (i, &(u, v)) in graph.edges().iter().enumerate() {
            let (a, b) = if direction[i] { (u, v) } else { (v, u) };
            out_adj[a].push(b);
            in_adj[b].push(a);
        }
        for l in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            l.sort_unstable();
        }
        OrientedGraph {
            graph,
            direction,
            out_adj,
            in_adj,
        }
    }

    /// Builds an oriented graph from a list of arcs. Rejects loops, repeated
    /// arcs and antiparallel pairs.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let graph = Graph::new(n, arcs.iter().copied())?;
        let mut direction = vec![false; graph.m()];
        for &(a, b) in &arcs {
            let i = graph.edge_index(a, b).unwrap();
            direction[i] = a < b;
        }
        Ok(Self::build(graph, direction))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn direction(&self) -> &[bool] {
        &self.direction
    }

    /// Direction bits packed into an integer (bit `i` = edge `i`); `m <= 64`.
    pub fn direction_bits(&self) -> Option<u64> {
        if self.m() > 64 {
            return None;
        }
        Some(
            self.direction
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i),
        )
    }

    /// Arcs `(tail, head)` in canonical edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.direction)
            .map(|(&(u, v), &d)| if d { (u, v) } else { (v, u) })
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn min_out_degree(&self) -> usize {
        (0..self.n()).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n()).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        (0..self.n()).map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        (0..self.n()).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    /// Vertices of in-degree zero.
    pub fn sources(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.in_degree(v) == 0).collect()
    }

    /// Out-neighbourhood bitmasks; only valid for `n <= 64`.
    pub fn out_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs n <= 64");
        self.out_adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }

    /// The converse: every arc flipped.
    pub fn reversal(&self) -> OrientedGraph {
        let direction = self.direction.iter().map(|b| !b).collect();
        Self::build(self.graph.clone(), direction)
    }

    /// Vertices reachable from `s` by directed paths (including `s`).
    pub fn reachable_from(&self, s: usize) -> VertexSet {
        let mut seen = VertexSet::new();
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &self.out_adj[u] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Oriented subgraph induced by `w`, relabelled in increasing order, with
    /// directions preserved. Returns the map from new labels to old ones.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(OrientedGraph, Vec<usize>)> {
        let (sub, keep) = self.graph.induced_subgraph(w)?;
        let direction = sub
            .edges()
            .iter()
            .map(|&(a, b)| {
                let i = self.graph.edge_index(keep[a], keep[b]).unwrap();
                // relabelling preserves order, so low/high endpoints agree
                self.direction[i]
            })
            .collect();
        Ok((Self::build(sub, direction), keep))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &OrientedGraph) -> OrientedGraph {
        let graph = self.graph.disjoint_union(&other.graph);
        let mut direction = self.direction.clone();
        direction.extend_from_slice(&other.direction);
        Self::build(graph, direction)
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "OrientedGraph(n={}, arcs={:?})",
            self.n(),
            self.arcs().collect::<Vec<_>>()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct OrientedRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for OrientedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrientedRepr {
            n: self.n(),
            arcs: self.arcs().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrientedGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = OrientedRepr::deserialize(d)?;
        OrientedGraph::from_arcs(r.n, r.arcs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::Parameter(_))));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::Parameter(_))));
    }

    #[test]
    fn edges_are_normalised_and_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn p3_orientations_decode() {
        let g = path(3);
        let d = g.orient(vec![true, true]).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let d = g.orient(vec![true, false]).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 1)]);
        assert!(matches!(g.orient(vec![true]), Err(Error::Parameter(_))));
    }

    #[test]
    fn c4_orientation_decodes_against_edge_order() {
        // edge order: (0,1) (0,3) (1,2) (2,3); bits 1110
        let g = cycle(4);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        let d = g.orient(vec![true, true, true, false]).unwrap();
        assert_eq!(
            d.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (3, 2)]
        );
    }

    #[test]
    fn reversal_is_an_involution_and_swaps_degrees() {
        let g = cycle(5);
        let d = g.orient_bits(0b10110);
        let r = d.reversal();
        for v in 0..5 {
            assert_eq!(d.out_degree(v), r.in_degree(v));
            assert_eq!(d.out_degree(v) + d.in_degree(v), g.degree(v));
        }
        assert_eq!(r.reversal(), d);
        let p = path(3).orient_bits(0b11);
        assert_eq!(p.reversal().arcs().collect::<Vec<_>>(), vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn from_arcs_rejects_antiparallel() {
        assert!(OrientedGraph::from_arcs(2, [(0, 1), (1, 0)]).is_err());
        let d = OrientedGraph::from_arcs(3, [(2, 0), (1, 2)]).unwrap();
        assert_eq!(d.direction(), &[false, true]);
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let d = OrientedGraph::from_arcs(4, [(0, 1), (3, 1), (2, 3)]).unwrap();
        let (h, map) = d
            .induced_subgraph(&[1, 2, 3].into_iter().collect())
            .unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![(2, 0), (1, 2)]);
        assert!(d.induced_subgraph(&VertexSet::new()).is_err());
    }

    #[test]
    fn bridges_and_two_edge_connectivity() {
        assert_eq!(path(4).bridges(), vec![0, 1, 2]);
        assert!(cycle(5).bridges().is_empty());
        assert!(cycle(5).is_two_edge_connected());
        // two triangles joined by an edge
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.bridges(), vec![g.edge_index(2, 3).unwrap()]);
        assert!(!Graph::new(2, [(0, 1)]).unwrap().is_two_edge_connected());
    }

    #[test]
    fn vertex_set_basics() {
        let mut s: VertexSet = [3, 70, 1].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 70]);
        assert_eq!(s.max(), Some(70));
        assert!(s.to_mask().is_none());
        s.remove(70);
        assert_eq!(s.to_mask(), Some(0b1010));
        let a: VertexSet = [0, 2].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0]);
        assert_eq!(a.difference(&a), VertexSet::new());
    }

    #[test]
    fn diameter_and_components() {
        assert_eq!(path(5).diameter(), Some(4));
        assert_eq!(Graph::empty(2).diameter(), None);
        assert_eq!(Graph::empty(3).components().len(), 3);
    }
}
