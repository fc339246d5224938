//! Instance universes shared by the checks, computed once and cached.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{check_limit, Error, Result};
use crate::families;
use crate::graph::{Graph, OrientedGraph, VertexSet};
use crate::kernel::MaskDigraph;
use crate::solver::{self, KExtremes};

/// Largest order of the exhaustive connected-graph universe with exact
/// `mof_k`/`MOF_k` for every k.
pub const GRAPH_UNIVERSE_LIMIT: usize = 6;
/// Largest order for which every orientation of every labeled graph is used.
pub const ORIENTATION_UNIVERSE_LIMIT: usize = 5;
pub const TREE_UNIVERSE_LIMIT: usize = 9;
pub const RANDOM_ORDER_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Connected labeled graphs with `1 <= n <= nmax`; every orientation of
    /// every labeled graph with `n <= min(nmax, 5)`.
    pub nmax: usize,
    /// Labeled trees with `n <= tree_nmax`.
    pub tree_nmax: usize,
    /// Seeded random orientations for `n` in `nmax+1 ..= random_nmax`
    /// (at least from 6).
    pub random_nmax: usize,
    pub random_per_order: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            nmax: 6,
            tree_nmax: 9,
            random_nmax: 10,
            random_per_order: 60,
            seed: 0,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nmax == 0 {
            return Err(Error::Parameter("nmax must be positive".into()));
        }
        check_limit("nmax for the exhaustive graph universe", self.nmax, GRAPH_UNIVERSE_LIMIT)?;
        check_limit("tree_nmax for the tree universe", self.tree_nmax, TREE_UNIVERSE_LIMIT)?;
        check_limit("random_nmax for random orientations", self.random_nmax, RANDOM_ORDER_LIMIT)?;
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!(
            "connected labeled graphs n<={}, all orientations n<={}, {} seeded orientations per n in {}..={} (seed {}), labeled trees n<={}",
            self.nmax,
            self.nmax.min(ORIENTATION_UNIVERSE_LIMIT),
            self.random_per_order,
            self.random_start(),
            self.random_nmax,
            self.seed,
            self.tree_nmax
        )
    }

    fn random_start(&self) -> usize {
        self.nmax.min(ORIENTATION_UNIVERSE_LIMIT) + 1
    }
}

/// A connected graph with its extremes for `k = 1..=max(Δ, 1)`.
#[derive(Clone, Debug)]
pub struct Profiled {
    pub g: Graph,
    pub profile: Vec<KExtremes>,
}

impl Profiled {
    /// Extremes at `k`; values are constant once `k` reaches `Δ`.
    pub fn at(&self, k: usize) -> &KExtremes {
        &self.profile[k.min(self.profile.len()) - 1]
    }

    pub fn mof(&self, k: usize) -> usize {
        self.at(k).min
    }

    #[allow(non_snake_case)]
    pub fn MOF(&self, k: usize) -> usize {
        self.at(k).max
    }

    pub fn kmax(&self) -> usize {
        self.profile.len()
    }
}

/// An oriented instance with `F_k` for `k = 1..=Δ⁺+1`.
#[derive(Clone, Debug)]
pub struct Tabled {
    pub d: OrientedGraph,
    /// `fk[k-1] = F_k(d)`.
    pub fk: Vec<usize>,
    pub random: bool,
}

impl Tabled {
    pub fn f(&self, k: usize) -> usize {
        self.fk[k.min(self.fk.len()) - 1]
    }
}

/// Position of `{u, v}` (u < v) among the pairs of an n-vertex graph.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn pair_key(g: &Graph) -> (usize, u64) {
    let n = g.n();
    let mask = g.edges().iter().fold(0u64, |acc, &(u, v)| acc | 1 << pair_index(n, u, v));
    (n, mask)
}

fn fk_table(d: &OrientedGraph) -> Vec<usize> {
    let md = MaskDigraph::new(d);
    (1..=d.max_out_degree() + 1)
        .map(|k| solver::forcing_number_masks(&md, k).0)
        .collect()
}

pub struct Universe {
    pub cfg: VerifyConfig,
    connected: OnceLock<Vec<Profiled>>,
    index: OnceLock<HashMap<(usize, u64), usize>>,
    oriented: OnceLock<Vec<Tabled>>,
    tree_cache: Mutex<HashMap<Vec<u8>, Vec<KExtremes>>>,
}

impl Universe {
    pub fn new(cfg: VerifyConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Universe {
            cfg,
            connected: OnceLock::new(),
            index: OnceLock::new(),
            oriented: OnceLock::new(),
            tree_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Every connected labeled graph with `1 <= n <= nmax`, in enumeration
    /// order, with its full extreme profile.
    pub fn connected(&self) -> &[Profiled] {
        self.connected.get_or_init(|| {
            let graphs: Vec<Graph> = (1..=self.cfg.nmax)
                .flat_map(|n| enumerate::labeled_graphs(n, true).expect("n within limits"))
                .collect();
            graphs
                .into_par_iter()
                .map(|g| {
                    let profile = solver::extreme_profile(&g, g.max_degree().max(1))
                        .expect("universe graphs are within limits");
                    Profiled { g, profile }
                })
                .collect()
        })
    }

    fn index(&self) -> &HashMap<(usize, u64), usize> {
        self.index.get_or_init(|| {
            self.connected()
                .iter()
                .enumerate()
                .map(|(i, p)| (pair_key(&p.g), i))
                .collect()
        })
    }

    /// Profile of a connected graph of order at most `nmax`.
    pub fn lookup(&self, g: &Graph) -> Option<&Profiled> {
        self.index().get(&pair_key(g)).map(|&i| &self.connected()[i])
    }

    /// `(mof_k, MOF_k)` of any graph whose components are in the universe,
    /// summed over components.
    pub fn extremes(&self, g: &Graph, k: usize) -> Option<(usize, usize)> {
        let mut total = (0, 0);
        for comp in g.components() {
            let set: VertexSet = comp.into_iter().collect();
            let (h, _) = g.induced_subgraph(&set).ok()?;
            let p = self.lookup(&h)?;
            total.0 += p.mof(k);
            total.1 += p.MOF(k);
        }
        Some(total)
    }

    /// Every orientation of every labeled graph with `n <= min(nmax, 5)`,
    /// then seeded random instances, each with its `F_k` table.
    pub fn oriented(&self) -> &[Tabled] {
        self.oriented.get_or_init(|| {
            let mut ds: Vec<(OrientedGraph, bool)> = Vec::new();
            for n in 1..=self.cfg.nmax.min(ORIENTATION_UNIVERSE_LIMIT) {
                for g in enumerate::labeled_graphs(n, false).expect("n within limits") {
                    ds.extend(enumerate::orientations(&g).expect("m <= 10").map(|d| (d, false)));
                }
            }
            for (n, i, seed) in random_plan(&self.cfg) {
                ds.push((random_instance(n, i, seed), true));
            }
            ds.into_par_iter()
                .map(|(d, random)| Tabled { fk: fk_table(&d), d, random })
                .collect()
        })
    }

    /// Profile of a tree, cached by isomorphism class.
    pub fn tree_profile(&self, t: &Graph) -> Vec<KExtremes> {
        let code = enumerate::tree_canonical_code(t).expect("a tree");
        if let Some(p) = self.tree_cache.lock().unwrap().get(&code) {
            return p.clone();
        }
        let p = solver::extreme_profile(t, t.max_degree().max(1)).expect("tree within limits");
        self.tree_cache.lock().unwrap().insert(code, p.clone());
        p
    }
}

fn random_plan(cfg: &VerifyConfig) -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    for n in cfg.random_start().max(2)..=cfg.random_nmax {
        for i in 0..cfg.random_per_order {
            out.push((n, i, cfg.seed));
        }
    }
    out
}

/// The `i`-th seeded random instance of order `n`: G(n, p) with `p` cycling
/// through 0.25, 0.5, 0.75, then a uniform orientation.
pub fn random_instance(n: usize, i: usize, seed: u64) -> OrientedGraph {
    let s = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((n as u64) << 32 | i as u64);
    let p = [0.25, 0.5, 0.75][i % 3];
    let g = families::gnp(n, p, s).expect("p in range");
    families::random_orientation(&g, s ^ 0xA5A5_A5A5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Universe {
        Universe::new(VerifyConfig {
            nmax: 4,
            tree_nmax: 6,
            random_nmax: 7,
            random_per_order: 5,
            seed: 3,
        })
        .unwrap()
    }

    #[test]
    fn connected_counts() {
        let u = small();
        // 1 + 1 + 4 + 38 connected labeled graphs
        assert_eq!(u.connected().len(), 44);
        let p4 = families::path(4).unwrap();
        let p = u.lookup(&p4).unwrap();
        assert_eq!((p.mof(1), p.MOF(1)), (1, 2));
        assert_eq!(u.extremes(&p4.disjoint_union(&p4), 1), Some((2, 4)));
    }

    #[test]
    fn oriented_counts_and_tables() {
        let u = small();
        // 3^C(n,2) orientations-with-graphs for n = 1..4, then 5 per order in 5..=7
        assert_eq!(u.oriented().len(), 1 + 3 + 27 + 729 + 15);
        for t in u.oriented().iter().step_by(17) {
            assert_eq!(t.f(1), solver::min_forcing_number(&t.d, 1).unwrap().value);
        }
        assert!(u.oriented().last().unwrap().random);
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let pairs = enumerate::vertex_pairs(6);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            assert_eq!(pair_index(6, u, v), i);
        }
    }

    #[test]
    fn limits_are_enforced() {
        let cfg = VerifyConfig { nmax: 7, ..VerifyConfig::default() };
        assert!(matches!(Universe::new(cfg), Err(Error::Limit { .. })));
    }
}
