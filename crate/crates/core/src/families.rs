//! Deterministic generators for the named graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, OrientedGraph};

/// A named family member. Random families carry an explicit seed; the
/// generator is ChaCha8 seeded with `seed_from_u64`, drawing one `gen_bool(p)`
/// per vertex pair in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{1,q}`: centre 0, leaves `1..=q`.
    Star { leaves: usize },
    /// `K_{x,y}`: parts `0..x` and `x..x+y`.
    CompleteBipartite { x: usize, y: usize },
    Complete { n: usize },
    /// Complete out-tree with every internal vertex of out-degree
    /// `out_degree` and `layers` layers below the root, numbered in heap order.
    GreedyTree { out_degree: usize, layers: usize },
    /// The oriented graph `D_p`: path `x_1 -> ... -> x_p` (vertices `0..p`) plus
    /// a hub `v = p` receiving an arc from every even-indexed `x_i`.
    GpGraph { p: usize },
    #[serde(rename = "gnp_random")]
    Gnp { n: usize, p: f64, seed: u64 },
}

/// Output of [`generate`]: some families are born oriented.
#[derive(Clone, Debug, PartialEq)]
pub enum Generated {
    Undirected(Graph),
    Oriented(OrientedGraph),
}

impl Generated {
    pub fn graph(&self) -> &Graph {
        match self {
            Generated::Undirected(g) => g,
            Generated::Oriented(d) => d.graph(),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    use FamilySpec::*;
    Ok(match *spec {
        Path { n } => Generated::Undirected(path(n)?),
        Cycle { n } => Generated::Undirected(cycle(n)?),
        Star { leaves } => Generated::Undirected(star(leaves)?),
        CompleteBipartite { x, y } => Generated::Undirected(complete_bipartite(x, y)?),
        Complete { n } => Generated::Undirected(complete(n)?),
        GreedyTree { out_degree, layers } => Generated::Oriented(greedy_tree(out_degree, layers)?),
        GpGraph { p } => Generated::Oriented(gp_graph(p)?),
        Gnp { n, p, seed } => Generated::Undirected(gnp(n, p, seed)?),
    })
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Parameter("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::Parameter("star needs at least one leaf".into()));
    }
    Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l)))
}

pub fn complete_bipartite(x: usize, y: usize) -> Result<Graph> {
    if x == 0 || y == 0 {
        return Err(Error::Parameter("complete bipartite needs x, y >= 1".into()));
    }
    Graph::new(
        x + y,
        (0..x).flat_map(|a| (x..x + y).map(move |b| (a, b))),
    )
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Parameter("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Vertex count `1 + d + ... + d^r` of the complete out-tree.
pub fn greedy_tree_order(out_degree: usize, layers: usize) -> usize {
    (0..=layers).map(|i| out_degree.pow(i as u32)).sum()
}

pub fn greedy_tree(out_degree: usize, layers: usize) -> Result<OrientedGraph> {
    if out_degree == 0 || layers == 0 {
        return Err(Error::Parameter(
            "greedy tree needs out-degree >= 1 and layers >= 1".into(),
        ));
    }
    let n = greedy_tree_order(out_degree, layers);
    let internal = n - out_degree.pow(layers as u32);
    let arcs = (0..internal).flat_map(|u| (1..=out_degree).map(move |c| (u, out_degree * u + c)));
    OrientedGraph::from_arcs(n, arcs)
}

pub fn gp_graph(p: usize) -> Result<OrientedGraph> {
    if p < 6 || p % 2 == 1 {
        return Err(Error::Parameter(format!(
            "gp_graph needs an even p >= 6, got {p}"
        )));
    }
    let hub = p;
    let path = (1..p).map(|i| (i - 1, i));
    // x_2, x_4, ... are the odd 0-based indices
    let spokes = (1..p).step_by(2).map(|i| (i, hub));
    OrientedGraph::from_arcs(p + 1, path.chain(spokes))
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("edge probability {p} not in [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniformly random direction bits from a seeded ChaCha8 stream.
pub fn random_orientation(g: &Graph, seed: u64) -> OrientedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits = (0..g.m()).map(|_| rng.gen::<bool>()).collect();
    g.orient(bits).expect("length matches")
}

/// Preset orientations used by the command line and the demo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationPreset {
    /// Every arc from low to high index.
    Forward,
    Backward,
    /// Each edge `{u,v}` directed away from the endpoint with even index
    /// parity relative to its partner (`u -> v` iff `u` is even), which on a
    /// path gives `v0 -> v1 <- v2 -> v3 ...`.
    Alternating,
}

pub fn orient_preset(g: &Graph, preset: OrientationPreset) -> OrientedGraph {
    let bits = g
        .edges()
        .iter()
        .map(|&(u, _)| match preset {
            OrientationPreset::Forward => true,
            OrientationPreset::Backward => false,
            OrientationPreset::Alternating => u % 2 == 0,
        })
        .collect();
    g.orient(bits).expect("length matches")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_tree_3_2_has_13_vertices_and_full_out_degree() {
        let t = greedy_tree(3, 2).unwrap();
        assert_eq!(t.n(), 13);
        assert_eq!(greedy_tree_order(3, 2), 13);
        for v in 0..t.n() {
            let d = t.out_degree(v);
            assert!(d == 3 || d == 0);
            assert_eq!(d == 0, v >= 4);
        }
        assert_eq!(t.sources().to_vec(), vec![0]);
    }

    #[test]
    fn greedy_tree_unary_is_a_path() {
        let t = greedy_tree(1, 4).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn gp_graph_6_matches_d6() {
        let d = gp_graph(6).unwrap();
        assert_eq!((d.n(), d.m()), (7, 8));
        let mut arcs: Vec<_> = d.arcs().collect();
        arcs.sort();
        assert_eq!(
            arcs,
            vec![(0, 1), (1, 2), (1, 6), (2, 3), (3, 4), (3, 6), (4, 5), (5, 6)]
        );
        assert!(gp_graph(5).is_err());
        assert!(gp_graph(4).is_err());
    }

    #[test]
    fn trivial_path() {
        let g = path(1).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert!(path(0).is_err());
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = gnp(9, 0.4, 17).unwrap();
        let b = gnp(9, 0.4, 17).unwrap();
        assert_eq!(a, b);
        assert_eq!(gnp(6, 1.0, 3).unwrap().m(), 15);
        assert_eq!(gnp(6, 0.0, 3).unwrap().m(), 0);
    }

    #[test]
    fn alternating_path_orientation() {
        let d = orient_preset(&path(4).unwrap(), OrientationPreset::Alternating);
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 1), (2, 3)]);
    }

    #[test]
    fn generate_dispatches() {
        let g = generate(&FamilySpec::CompleteBipartite { x: 2, y: 3 }).unwrap();
        assert_eq!(g.graph().m(), 6);
        assert!(matches!(
            generate(&FamilySpec::GreedyTree { out_degree: 0, layers: 2 }),
            Err(Error::Parameter(_))
        ));
    }
}
