//! Orientations built by construction, and reachability structure.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forcing;
use crate::graph::{Graph, OrientedGraph, VertexSet};
use crate::solver::TreeCover;

/// Strong components and the acyclic graph between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condensation {
    /// Components numbered in increasing order of their smallest vertex.
    pub components: Vec<VertexSet>,
    pub component_of: Vec<usize>,
    /// Arcs between components, sorted, without repeats.
    pub arcs: Vec<(usize, usize)>,
}

impl Condensation {
    /// Components with no incoming arc.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.components.len()];
        for &(_, b) in &self.arcs {
            has_in[b] = true;
        }
        (0..self.components.len()).filter(|&c| !has_in[c]).collect()
    }
}

/// Tarjan's algorithm, iterative.
pub fn condensation(d: &OrientedGraph) -> Condensation {
    let n = d.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(start, 0)];
        index[start] = counter;
        low[start] = counter;
        counter += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some(top) = call.last_mut() {
            let (v, pos) = (top.0, top.1);
            if let Some(&w) = d.out_neighbors(v).get(pos) {
                top.1 += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("v is on the stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                raw.push(comp);
            }
        }
    }
    let mut components: Vec<VertexSet> = raw.into_iter().map(|c| c.into_iter().collect()).collect();
    components.sort_by_key(|c| c.iter().next());
    let mut component_of = vec![0; n];
    for (i, c) in components.iter().enumerate() {
        for v in c.iter() {
            component_of[v] = i;
        }
    }
    let mut arcs: Vec<(usize, usize)> = d
        .arcs()
        .map(|(u, v)| (component_of[u], component_of[v]))
        .filter(|(a, b)| a != b)
        .collect();
    arcs.sort_unstable();
    arcs.dedup();
    Condensation {
        components,
        component_of,
        arcs,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachingSetResult {
    pub roots: VertexSet,
    /// `assignment[v]` is the position (in increasing root order) of the first
    /// root that reaches `v`.
    pub assignment: Vec<usize>,
}

impl ReachingSetResult {
    pub fn r(&self) -> usize {
        self.roots.len()
    }

    /// Vertices assigned to each root, in root order.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new(); self.roots.len()];
        for (v, &i) in self.assignment.iter().enumerate() {
            out[i].insert(v);
        }
        out
    }
}

/// The smallest vertex of every source strong component. No smaller reaching
/// set exists, since each source component needs a root of its own.
pub fn min_reaching_set(d: &OrientedGraph) -> ReachingSetResult {
    let c = condensation(d);
    let roots: VertexSet = c
        .sources()
        .into_iter()
        .map(|s| c.components[s].iter().next().expect("components are nonempty"))
        .collect();
    let mut assignment = vec![usize::MAX; d.n()];
    for (i, r) in roots.iter().enumerate() {
        let mut queue = VecDeque::from([r]);
        if assignment[r] == usize::MAX {
            assignment[r] = i;
        }
        while let Some(u) = queue.pop_front() {
            for &w in d.out_neighbors(u) {
                if assignment[w] == usize::MAX {
                    assignment[w] = i;
                    queue.push_back(w);
                }
            }
        }
    }
    ReachingSetResult { roots, assignment }
}

/// Some vertex reaches every vertex.
pub fn is_reachable(d: &OrientedGraph) -> bool {
    d.n() > 0 && condensation(d).sources().len() == 1
}

/// Every vertex reaches every vertex.
pub fn is_strongly_reachable(d: &OrientedGraph) -> bool {
    d.n() > 0 && condensation(d).components.len() == 1
}

/// `|d⁺(v) − d⁻(v)| ≤ 1` at every vertex.
pub fn is_balanced(d: &OrientedGraph) -> bool {
    (0..d.n()).all(|v| d.out_degree(v).abs_diff(d.in_degree(v)) <= 1)
}

/// Joins an auxiliary vertex to every odd-degree vertex, orients every edge
/// along an Euler circuit of each component (Hierholzer, starting at the
/// smallest vertex with unused edges and always taking the smallest-index
/// unused edge), then drops the auxiliary vertex.
pub fn balanced_orientation(g: &Graph) -> OrientedGraph {
    let n = g.n();
    let aux = n;
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).filter(|&v| g.degree(v) % 2 == 1).map(|v| (v, aux)));
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut used = vec![false; edges.len()];
    let mut next = vec![0usize; n + 1];
    // traversal direction of each used edge: (from, to)
    let mut walked = vec![(0, 0); edges.len()];
    for start in 0..=n {
        loop {
            while next[start] < incident[start].len() && used[incident[start][next[start]]] {
                next[start] += 1;
            }
            if next[start] == incident[start].len() {
                break;
            }
            let mut stack = vec![start];
            while let Some(&v) = stack.last() {
                while next[v] < incident[v].len() && used[incident[v][next[v]]] {
                    next[v] += 1;
                }
                if let Some(&e) = incident[v].get(next[v]) {
                    used[e] = true;
                    let (a, b) = edges[e];
                    let w = if a == v { b } else { a };
                    walked[e] = (v, w);
                    stack.push(w);
                } else {
                    stack.pop();
                }
            }
        }
    }
    let direction = (0..g.m()).map(|e| walked[e].0 == edges[e].0).collect();
    g.orient(direction).expect("one bit per edge")
}

/// Edges at `i` point away from it; every other edge points low to high.
pub fn orient_away_from(g: &Graph, i: &VertexSet) -> Result<OrientedGraph> {
    if i.max().is_some_and(|v| v >= g.n()) {
        return Err(Error::Parameter("vertex outside the graph".into()));
    }
    if !g.is_independent(i) {
        return Err(Error::Precondition("the set is not independent".into()));
    }
    let direction = g
        .edges()
        .iter()
        .map(|&(_, v)| !i.contains(v))
        .collect();
    g.orient(direction)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCoverOrientation {
    pub orientation: OrientedGraph,
    pub roots: VertexSet,
    /// Distance of each vertex from its tree root.
    pub level: Vec<usize>,
    /// Index of the cover tree holding each vertex.
    pub tree: Vec<usize>,
}

fn validate_cover(g: &Graph, cover: &TreeCover, k: usize) -> Result<()> {
    let n = g.n();
    let mut seen = vec![false; n];
    for (p, part) in cover.parts.iter().enumerate() {
        let bad = |what: String| Err(Error::Precondition(format!("part {p}: {what}")));
        if part.vertices.is_empty() {
            return bad("no vertices".into());
        }
        for v in part.vertices.iter() {
            if v >= n {
                return bad(format!("vertex {v} outside the graph"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return bad(format!("vertex {v} already covered by another part"));
            }
        }
        if !part.vertices.contains(part.root) {
            return bad(format!("root {} is not in the part", part.root));
        }
        if part.edges.len() + 1 != part.vertices.len() {
            return bad("edge count is not vertex count minus one".into());
        }
        let mut deg = vec![0usize; n];
        for &(u, v) in &part.edges {
            if !g.has_edge(u, v) {
                return bad(format!("{{{u},{v}}} is not an edge of the graph"));
            }
            if !part.vertices.contains(u) || !part.vertices.contains(v) {
                return bad(format!("{{{u},{v}}} leaves the part"));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        if let Some(v) = part.vertices.iter().find(|&v| deg[v] > k + 1) {
            return bad(format!("vertex {v} has tree degree above {}", k + 1));
        }
        if deg[part.root] > k {
            return bad(format!("root {} has tree degree above {k}", part.root));
        }
        let t = Graph::new(n, part.edges.iter().copied())?;
        let reach = t.distances_from(part.root);
        if let Some(v) = part.vertices.iter().find(|&v| reach[v].is_none()) {
            return bad(format!("vertex {v} is not connected to the root"));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::Precondition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// Orients each cover tree away from its root and every other edge from the
/// higher level to the lower one. On equal levels the endpoint in the
/// lower-indexed tree receives the arc, and within one tree the lower vertex.
/// The roots are then re-checked as a `k`-forcing set.
pub fn tree_cover_orientation(g: &Graph, cover: &TreeCover, k: usize) -> Result<TreeCoverOrientation> {
    if k == 0 {
        return Err(Error::Parameter("k must be a positive integer".into()));
    }
    validate_cover(g, cover, k)?;
    let n = g.n();
    let mut level = vec![0; n];
    let mut tree = vec![0; n];
    let mut parent_edge = vec![None; n];
    for (p, part) in cover.parts.iter().enumerate() {
        let t = Graph::new(n, part.edges.iter().copied())?;
        let dist = t.distances_from(part.root);
        for v in part.vertices.iter() {
            level[v] = dist[v].expect("validated");
            tree[v] = p;
        }
        for &(u, v) in &part.edges {
            let child = if dist[u] < dist[v] { v } else { u };
            parent_edge[child] = Some((u.min(v), u.max(v)));
        }
    }
    let is_tree_edge = |u: usize, v: usize| parent_edge[v] == Some((u.min(v), u.max(v)));
    let direction = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            // true means u -> v
            if is_tree_edge(u, v) {
                return true;
            }
            if is_tree_edge(v, u) {
                return false;
            }
            match level[u].cmp(&level[v]) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => {
                    // the receiver is the endpoint in the lower-indexed tree;
                    // within a tree u < v makes u the receiver
                    tree[v] < tree[u]
                }
            }
        })
        .collect();
    let orientation = g.orient(direction)?;
    let roots: VertexSet = cover.parts.iter().map(|p| p.root).collect();
    if !roots.is_empty() && !forcing::is_forcing_set(&orientation, &roots, k)? {
        return Err(Error::Verification(
            "cover roots do not force the constructed orientation".into(),
        ));
    }
    Ok(TreeCoverOrientation {
        orientation,
        roots,
        level,
        tree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::solver::{self, CoverPart, InvariantWitness};

    #[test]
    fn condensation_of_alternating_path() {
        let d = families::orient_preset(
            &families::path(4).unwrap(),
            families::OrientationPreset::Alternating,
        );
        let r = min_reaching_set(&d);
        assert_eq!(r.roots.to_vec(), vec![0, 2]);
        assert_eq!(r.assignment, vec![0, 0, 1, 1]);
        assert!(!is_reachable(&d));
    }

    #[test]
    fn directed_cycle_is_strongly_reachable() {
        let d = OrientedGraph::from_arcs(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(is_strongly_reachable(&d));
        assert_eq!(min_reaching_set(&d).r(), 1);
        let c = condensation(&d);
        assert_eq!(c.components.len(), 1);
        assert!(c.arcs.is_empty());
    }

    #[test]
    fn condensation_orders_components_by_smallest_vertex() {
        // 3 <-> cycle {2,3,4}, 0 -> 2, 1 -> 0
        let d = OrientedGraph::from_arcs(5, [(2, 3), (3, 4), (4, 2), (0, 2), (1, 0)]).unwrap();
        let c = condensation(&d);
        assert_eq!(c.components.len(), 3);
        assert_eq!(c.components[2].to_vec(), vec![2, 3, 4]);
        assert_eq!(c.arcs, vec![(0, 2), (1, 0)]);
        assert_eq!(min_reaching_set(&d).roots.to_vec(), vec![1]);
    }

    #[test]
    fn balanced_examples() {
        let c4 = balanced_orientation(&families::cycle(4).unwrap());
        assert!((0..4).all(|v| c4.out_degree(v) == 1 && c4.in_degree(v) == 1));
        assert!(is_strongly_reachable(&c4));
        let s3 = balanced_orientation(&families::star(3).unwrap());
        assert!(is_balanced(&s3));
        assert!([1, 2].contains(&s3.out_degree(0)));
    }

    #[test]
    fn balanced_on_all_small_graphs() {
        for n in 1..=6 {
            for g in crate::enumerate::labeled_graphs(n, false).unwrap() {
                let d = balanced_orientation(&g);
                assert!(is_balanced(&d), "{g:?}");
                assert!(d.min_out_degree() >= g.min_degree() / 2);
            }
        }
    }

    #[test]
    fn away_from_alternate_path_vertices() {
        let g = families::path(6).unwrap();
        let i: VertexSet = [0, 2, 4].into_iter().collect();
        let d = orient_away_from(&g, &i).unwrap();
        assert!(i.iter().all(|v| d.in_degree(v) == 0));
        assert_eq!(solver::min_forcing_number(&d, 1).unwrap().value, 3);
        assert!(matches!(
            orient_away_from(&g, &[0, 1].into_iter().collect()),
            Err(Error::Precondition(_))
        ));
        let e = orient_away_from(&g, &VertexSet::new()).unwrap();
        assert!(e.direction().iter().all(|&b| b));
    }

    #[test]
    fn tree_cover_orientations() {
        let p6 = families::path(6).unwrap();
        let cover = TreeCover {
            parts: vec![CoverPart {
                vertices: VertexSet::full(6),
                edges: p6.edges().to_vec(),
                root: 0,
            }],
        };
        let t = tree_cover_orientation(&p6, &cover, 1).unwrap();
        assert_eq!(t.orientation.direction(), &[true; 5]);
        assert_eq!(t.roots.to_vec(), vec![0]);

        let s3 = families::star(3).unwrap();
        let cover = TreeCover {
            parts: vec![
                CoverPart {
                    vertices: [0, 1, 2].into_iter().collect(),
                    edges: vec![(0, 1), (0, 2)],
                    root: 1,
                },
                CoverPart {
                    vertices: [3].into_iter().collect(),
                    edges: vec![],
                    root: 3,
                },
            ],
        };
        let t = tree_cover_orientation(&s3, &cover, 1).unwrap();
        assert!(forcing::is_forcing_set(&t.orientation, &t.roots, 1).unwrap());
        assert_eq!(t.level, vec![1, 0, 2, 0]);

        let mut bad = cover.clone();
        bad.parts[0].root = 0;
        let err = tree_cover_orientation(&s3, &bad, 1).unwrap_err();
        assert!(err.to_string().contains("root 0"));
        bad.parts[0].root = 1;
        bad.parts[1].vertices = VertexSet::new();
        assert!(tree_cover_orientation(&s3, &bad, 1).is_err());
    }

    #[test]
    fn optimal_covers_always_orient_to_a_forcing_root_set() {
        for g in crate::enumerate::labeled_graphs(5, false).unwrap().step_by(3) {
            for k in 1..=3 {
                let tk = solver::tree_cover_number(&g, k).unwrap();
                let InvariantWitness::Trees(parts) = tk.witness.clone() else { panic!() };
                let t = tree_cover_orientation(&g, &TreeCover { parts }, k).unwrap();
                assert_eq!(t.roots.len(), tk.count());
            }
        }
    }

    #[test]
    fn reaching_set_is_bounded_by_alpha() {
        for g in crate::enumerate::labeled_graphs(4, true).unwrap() {
            let alpha = solver::independence_number(&g).unwrap().count();
            for d in crate::enumerate::orientations(&g).unwrap() {
                let r = min_reaching_set(&d);
                assert!(r.r() <= alpha);
                for (i, a) in r.roots.iter().enumerate() {
                    for b in r.roots.iter().skip(i + 1) {
                        assert!(!d.reachable_from(a).contains(b));
                        assert!(!d.reachable_from(b).contains(a));
                    }
                }
            }
        }
    }
}
