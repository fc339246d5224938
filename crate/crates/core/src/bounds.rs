//! Greedy forcing sets with certificates, and closed-form bounds evaluated
//! as exact rationals.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::constructions::{self, min_reaching_set};
use crate::error::{Error, Result};
use crate::forcing;
use crate::graph::{Graph, OrientedGraph, VertexSet};
use crate::kernel::MaskDigraph;
use crate::solver::{self, Extreme, ExtremeOptions};

type Q = Ratio<i64>;

/// Exact rational serialized as `{num, den}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<Q> for Fraction {
    fn from(r: Q) -> Self {
        Fraction {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl Fraction {
    pub fn ratio(&self) -> Q {
        Q::new(self.num, self.den)
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> i64 {
        self.ratio().floor().to_integer()
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> i64 {
        self.ratio().ceil().to_integer()
    }
}

fn q(v: usize) -> Q {
    Q::from_integer(v as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootPolicy {
    /// Smallest vertex that reaches every vertex.
    First,
    /// Smallest vertex of minimum out-degree; needs a strongly reachable digraph.
    MinOutDegree,
    Given(usize),
    /// One root per source strong component.
    ReachingSet,
    /// `MinOutDegree` if strongly reachable, else `First` if reachable, else
    /// `ReachingSet`.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repair {
    /// Colored vertex with more than `k` non-colored out-neighbours at a stall.
    pub stalled: usize,
    /// Its smallest non-colored out-neighbours, colored so that it can force.
    pub colored: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyCertificate {
    pub k: usize,
    pub roots: Vec<usize>,
    /// Initial set plus every repair: a k-forcing set.
    pub set: VertexSet,
    pub initial: VertexSet,
    pub repairs: Vec<Repair>,
    /// Which closed form `bound` evaluates.
    pub bound_name: String,
    pub bound: Fraction,
}

/// `((Δ⁺ − k)n + rk) / Δ⁺`.
pub fn greedy_bound(n: usize, max_out: usize, k: usize, r: usize) -> Q {
    Q::new(((max_out - k) * n + r * k) as i64, max_out as i64)
}

/// `((Δ⁺ − k)n + max{k(δ⁺ − Δ⁺ + 1), δ⁺(k − Δ⁺) + k}) / Δ⁺`.
pub fn strongly_reachable_bound(n: usize, min_out: usize, max_out: usize, k: usize) -> Q {
    let (n, lo, hi, k) = (n as i64, min_out as i64, max_out as i64, k as i64);
    let extra = (k * (lo - hi + 1)).max(lo * (k - hi) + k);
    Q::new((hi - k) * n + extra, hi)
}

/// `1 + (Δ⁺ − k) Σ_{i<r} (Δ⁺)^i`, the forcing number of the complete out-tree.
pub fn complete_out_tree_forcing(out_degree: usize, layers: usize, k: usize) -> usize {
    1 + (out_degree - k) * (0..layers).map(|i| out_degree.pow(i as u32)).sum::<usize>()
}

fn reach_all(d: &OrientedGraph, v: usize) -> bool {
    d.reachable_from(v).len() == d.n()
}

/// Runs the greedy construction from `policy`'s roots: each root and all but
/// `k` of its non-colored out-neighbours are colored, then the process runs;
/// at every stall the smallest colored vertex with more than `k` non-colored
/// out-neighbours gets all but `k` of them colored (smallest first).
pub fn greedy_forcing_set(d: &OrientedGraph, k: usize, policy: RootPolicy) -> Result<GreedyCertificate> {
    if k == 0 {
        return Err(Error::Parameter("k must be a positive integer".into()));
    }
    let n = d.n();
    if n == 0 {
        return Err(Error::Parameter("the greedy construction needs n >= 1".into()));
    }
    let max_out = d.max_out_degree();
    if k > max_out {
        return Err(Error::Inapplicable(format!(
            "k = {k} exceeds the maximum out-degree {max_out}; a reaching set forces on its own"
        )));
    }
    let strong = constructions::is_strongly_reachable(d);
    let policy = match policy {
        RootPolicy::Auto if strong => RootPolicy::MinOutDegree,
        RootPolicy::Auto if constructions::is_reachable(d) => RootPolicy::First,
        RootPolicy::Auto => RootPolicy::ReachingSet,
        p => p,
    };
    let (roots, bound_name, bound) = match policy {
        RootPolicy::First => {
            let v = (0..n)
                .find(|&v| reach_all(d, v))
                .ok_or_else(|| Error::Inapplicable("the digraph is not reachable".into()))?;
            (vec![v], "single_root", greedy_bound(n, max_out, k, 1))
        }
        RootPolicy::Given(v) => {
            if v >= n {
                return Err(Error::Parameter(format!("root {v} is not a vertex")));
            }
            if !reach_all(d, v) {
                return Err(Error::Inapplicable(format!("vertex {v} does not reach every vertex")));
            }
            (vec![v], "single_root", greedy_bound(n, max_out, k, 1))
        }
        RootPolicy::MinOutDegree => {
            if !strong {
                return Err(Error::Inapplicable("the digraph is not strongly reachable".into()));
            }
            let lo = d.min_out_degree();
            let v = (0..n).find(|&v| d.out_degree(v) == lo).expect("n >= 1");
            (vec![v], "strongly_reachable", strongly_reachable_bound(n, lo, max_out, k))
        }
        RootPolicy::ReachingSet => {
            let roots = min_reaching_set(d).roots.to_vec();
            let r = roots.len();
            (roots, "reaching_set", greedy_bound(n, max_out, k, r))
        }
        RootPolicy::Auto => unreachable!(),
    };

    let mut colored = vec![false; n];
    let mut set = VertexSet::new();
    let mut initial = VertexSet::new();
    let mut repairs = Vec::new();
    // Roots are handled one reaching component at a time: everything earlier
    // roots reach is colored before the next root starts.
    for &r in &roots {
        let target = d.reachable_from(r);
        let open_of = |u: usize, colored: &[bool]| -> Vec<usize> {
            d.out_neighbors(u).iter().copied().filter(|&w| !colored[w]).collect()
        };
        let mut start = vec![r];
        let open = open_of(r, &colored);
        start.extend(open.iter().take(open.len().saturating_sub(k)));
        for v in start {
            colored[v] = true;
            set.insert(v);
            initial.insert(v);
        }
        loop {
            let reached = forcing::closure(d, &colored_set(&colored), k)?.final_set;
            for v in reached.iter() {
                colored[v] = true;
            }
            if target.iter().all(|v| colored[v]) {
                break;
            }
            let Some(u) = (0..n).find(|&u| colored[u] && open_of(u, &colored).len() > k) else {
                return Err(Error::Verification("stalled with no colored vertex to repair".into()));
            };
            let open = open_of(u, &colored);
            let chosen = open[..open.len() - k].to_vec();
            for &w in &chosen {
                colored[w] = true;
                set.insert(w);
            }
            repairs.push(Repair { stalled: u, colored: chosen });
        }
    }
    if !forcing::is_forcing_set(d, &set, k)? {
        return Err(Error::Verification("greedy set does not force the digraph".into()));
    }
    Ok(GreedyCertificate {
        k,
        roots,
        set,
        initial,
        repairs,
        bound_name: bound_name.into(),
        bound: bound.into(),
    })
}

fn colored_set(colored: &[bool]) -> VertexSet {
    (0..colored.len()).filter(|&v| colored[v]).collect()
}

/// Mask version of [`greedy_forcing_set`] for bulk checks. Returns the greedy
/// set, or `None` when the roots leave something unreached.
pub fn greedy_masks(md: &MaskDigraph, k: usize, roots: &[usize]) -> Option<u64> {
    let k32 = k.min(64) as u32;
    let mut set = 0u64;
    let mut colored = 0u64;
    for &r in roots {
        let target = md.closure(1 << r, 64);
        set |= 1 << r;
        let mut open = md.out(r) & !colored & !(1 << r);
        let extra = (open.count_ones() as usize).saturating_sub(k);
        for _ in 0..extra {
            set |= open & open.wrapping_neg();
            open &= open - 1;
        }
        loop {
            colored = md.closure(set, k32);
            if colored & target == target {
                break;
            }
            let mut it = colored;
            let u = loop {
                if it == 0 {
                    return None;
                }
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                if (md.out(u) & !colored).count_ones() > k32 {
                    break u;
                }
            };
            let mut open = md.out(u) & !colored;
            for _ in 0..open.count_ones() - k32 {
                set |= open & open.wrapping_neg();
                open &= open - 1;
            }
        }
    }
    (colored == md.full()).then_some(set)
}

/// Smallest vertex reaching every vertex.
pub fn first_reaching_root(md: &MaskDigraph) -> Option<usize> {
    (0..md.n()).find(|&v| md.closure(1 << v, 64) == md.full())
}

/// Induced subgraph with minimum degree at least half the average degree,
/// found by deleting a smallest-index minimum-degree vertex while its degree
/// is below that threshold.
pub fn dense_subgraph(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Inapplicable("the graph has no vertices".into()));
    }
    let m = g.m();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) else {
            unreachable!("the average degree argument keeps a vertex");
        };
        // deg < d/2 with d = 2m/n
        if deg[v] * n >= m {
            break;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    Ok(colored_set(&alive))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub side: Side,
    /// `F_k`, `mof_k`, `MOF_k` at the report's k, or `mof`, `MOF` at k = 1.
    pub target: String,
    pub value: Option<Fraction>,
    pub applicable: bool,
    /// The hypothesis, and when inapplicable the part that fails.
    pub reason: String,
    pub anchor: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    fn push(
        &mut self,
        name: &str,
        side: Side,
        target: &str,
        anchor: &str,
        hypothesis: &str,
        value: std::result::Result<Q, String>,
    ) {
        let (value, applicable, reason) = match value {
            Ok(v) => (Some(v.into()), true, hypothesis.to_string()),
            Err(why) => (None, false, format!("{hypothesis}; fails: {why}")),
        };
        self.entries.push(BoundEntry {
            name: name.into(),
            side,
            target: target.into(),
            value,
            applicable,
            reason,
            anchor: anchor.into(),
        });
    }

    pub fn applicable(&self, target: &str, side: Side) -> impl Iterator<Item = &BoundEntry> + '_ {
        let target = target.to_string();
        self.entries
            .iter()
            .filter(move |e| e.applicable && e.side == side && e.target == target)
    }

    /// Names of applicable entries for `target` that `exact` violates.
    pub fn violations(&self, target: &str, exact: usize) -> Vec<String> {
        let x = q(exact);
        let mut out = Vec::new();
        for e in self.applicable(target, Side::Lower) {
            if e.value.expect("applicable").ratio() > x {
                out.push(e.name.clone());
            }
        }
        for e in self.applicable(target, Side::Upper) {
            if e.value.expect("applicable").ratio() < x {
                out.push(e.name.clone());
            }
        }
        out
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn require(cond: bool, why: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why.into())
    }
}

/// Bounds on `F_k(d)` for one oriented graph.
pub fn lower_bound_report(d: &OrientedGraph, k: usize) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::Parameter("k must be a positive integer".into()));
    }
    let n = d.n();
    let mut rep = BoundReport::default();
    let lo = d.min_out_degree();
    let hi = d.max_out_degree();
    let nonempty = require(n > 0, "no vertices");
    rep.push(
        "min_out_degree",
        Side::Lower,
        "F_k",
        "max{δ⁺ − k + 1, 1}",
        "n >= 1",
        nonempty.clone().map(|_| q((lo + 1).saturating_sub(k).max(1))),
    );
    rep.push(
        "in_degree_zero",
        Side::Lower,
        "F_k",
        "|{v : d⁻(v) = 0}|",
        "any digraph",
        Ok(q(d.sources().len())),
    );
    rep.push(
        "kary_tree_cover",
        Side::Lower,
        "F_k",
        "F_k(D) ≥ IT_k(D)",
        "any digraph within the cover limit",
        match solver::induced_kary_cover_number(d, k) {
            Ok(v) => Ok(q(v.count())),
            Err(e) => Err(e.to_string()),
        },
    );

    let reachable = constructions::is_reachable(d);
    let strong = constructions::is_strongly_reachable(d);
    let k_small = require(k <= hi, format!("k = {k} > Δ⁺ = {hi}"));
    rep.push(
        "large_k",
        Side::Upper,
        "F_k",
        "F_k(D) = 1 for k ≥ Δ⁺",
        "reachable, k >= Δ⁺",
        require(reachable, "not reachable")
            .and(require(k >= hi, format!("k = {k} < Δ⁺ = {hi}")))
            .map(|_| q(1)),
    );
    rep.push(
        "greedy_single_root",
        Side::Upper,
        "F_k",
        "((Δ⁺ − k)n + k)/Δ⁺",
        "reachable, k <= Δ⁺",
        require(reachable, "not reachable")
            .and(k_small.clone())
            .map(|_| greedy_bound(n, hi, k, 1)),
    );
    let r = min_reaching_set(d).r();
    rep.push(
        "greedy_reaching_set",
        Side::Upper,
        "F_k",
        "((Δ⁺ − k)n + rk)/Δ⁺",
        "k <= Δ⁺, r = minimum reaching set order",
        k_small.clone().map(|_| greedy_bound(n, hi, k, r)),
    );
    rep.push(
        "greedy_reaching_set_alpha",
        Side::Upper,
        "F_k",
        "((Δ⁺ − 1)n + α(G)k)/Δ⁺",
        "k <= Δ⁺, α within the clique limit",
        k_small.clone().and_then(|_| {
            let a = solver::independence_number(d.graph()).map_err(|e| e.to_string())?;
            Ok(Q::new(((hi - 1) * n + a.count() * k) as i64, hi as i64))
        }),
    );
    rep.push(
        "greedy_strongly_reachable",
        Side::Upper,
        "F_k",
        "((Δ⁺ − k)n + max{k(δ⁺ − Δ⁺ + 1), δ⁺(k − Δ⁺) + k})/Δ⁺",
        "strongly reachable, k <= Δ⁺",
        require(strong, "not strongly reachable")
            .and(k_small)
            .map(|_| strongly_reachable_bound(n, lo, hi, k)),
    );
    let hi_in = d.max_in_degree();
    rep.push(
        "in_degree_reversal",
        Side::Upper,
        "F_k",
        "min{((Δ⁺ − 1)n + 1)/Δ⁺, ((Δ⁻ − 1)n + 1)/Δ⁻}",
        "strongly reachable, k = 1, Δ⁺ >= 1",
        require(strong, "not strongly reachable")
            .and(require(k == 1, "k != 1"))
            .and(require(hi >= 1, "no arcs"))
            .map(|_| {
                let a = Q::new(((hi - 1) * n + 1) as i64, hi as i64);
                let b = Q::new(((hi_in - 1) * n + 1) as i64, hi_in as i64);
                a.min(b)
            }),
    );
    Ok(rep)
}

/// Largest order of an induced subgraph swept by the `F(H) + n − |H|` entry.
pub const SWEEP_SUBGRAPH_LIMIT: usize = 5;
/// Largest graph order for which that sweep runs.
pub const SWEEP_ORDER_LIMIT: usize = 12;

/// Lower bound on log₂(x) on a 2⁻²⁰ grid.
fn log2_lower(x: usize) -> Q {
    const SCALE: i64 = 1 << 20;
    if x.is_power_of_two() {
        return Q::from_integer(x.trailing_zeros() as i64);
    }
    let approx = ((x as f64).log2() * SCALE as f64).floor() as i64 - 1;
    Q::new(approx, SCALE)
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn max_forcing(g: &Graph, k: usize) -> std::result::Result<usize, String> {
    solver::orientation_extreme(g, k, Extreme::Max, &ExtremeOptions::default())
        .map(|r| r.value)
        .map_err(|e| e.to_string())
}

/// Bounds on `mof_k`, `MOF_k`, `mof` and `MOF` of a graph.
pub fn extremal_bound_report(g: &Graph, k: usize) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::Parameter("k must be a positive integer".into()));
    }
    let n = g.n();
    let m = g.m();
    let mut rep = BoundReport::default();
    let delta = g.min_degree();
    let big = g.max_degree();
    let nonempty = require(m > 0, "no edges");
    let connected = require(g.is_connected(), "not connected");
    let min_deg2 = require(n > 0 && delta >= 2, format!("δ = {delta} < 2"));
    let alpha = solver::independence_number(g).map(|a| a.count()).map_err(|e| e.to_string());

    // minimum over orientations
    rep.push(
        "out_star",
        Side::Upper,
        "mof_k",
        "max{n − k, n − Δ}",
        "non-empty",
        nonempty.clone().map(|_| q(n - k.min(big))),
    );
    let tk = solver::tree_cover_number(g, k).map(|t| t.count()).map_err(|e| e.to_string());
    rep.push("tree_cover", Side::Lower, "mof_k", "mof_k(G) = T_k(G)", "any graph within the cover limit", tk.clone().map(q));
    rep.push("tree_cover", Side::Upper, "mof_k", "mof_k(G) = T_k(G)", "any graph within the cover limit", tk.map(q));
    rep.push(
        "chain_independence",
        Side::Upper,
        "mof_k",
        "mof_k(G) ≤ ρ(G) ≤ α(G)",
        "non-empty",
        nonempty.clone().and(alpha.clone()).map(q),
    );
    let half_up = big.div_ceil(2);
    rep.push(
        "balanced_reaching_set",
        Side::Upper,
        "mof",
        "((⌈Δ/2⌉ − 1)n + r)/⌈Δ/2⌉",
        "connected, δ >= 2; r witnessed by one balanced orientation, possibly non-minimal",
        connected.clone().and(min_deg2.clone()).map(|_| {
            let r = min_reaching_set(&constructions::balanced_orientation(g)).r();
            Q::new(((half_up - 1) * n + r) as i64, half_up as i64)
        }),
    );
    rep.push(
        "two_edge_connected",
        Side::Upper,
        "mof",
        "((⌈Δ/2⌉ − 1)n + 1)/⌈Δ/2⌉",
        "2-edge-connected, n >= 3",
        require(n >= 3 && g.is_two_edge_connected(), "not 2-edge-connected with n >= 3")
            .map(|_| Q::new(((half_up - 1) * n + 1) as i64, half_up as i64)),
    );

    // maximum over orientations
    rep.push(
        "half_min_degree",
        Side::Lower,
        "MOF_k",
        "max{⌊δ/2⌋ − k + 1, 1}",
        "n >= 1",
        require(n > 0, "no vertices").map(|_| q((delta / 2 + 1).saturating_sub(k).max(1))),
    );
    rep.push("independence", Side::Lower, "MOF_k", "MOF_k(G) ≥ α(G)", "any graph", alpha.clone().map(q));
    rep.push(
        "independence_large_k",
        Side::Upper,
        "MOF_k",
        "MOF_k(G) = α(G) for k ≥ Δ",
        "k >= Δ",
        require(k >= big, format!("k = {k} < Δ = {big}")).and(alpha.clone()).map(q),
    );
    rep.push(
        "order_minus_one",
        Side::Upper,
        "MOF_k",
        "MOF_k(G) ≤ MOF(G) ≤ n − 1",
        "non-empty",
        nonempty.clone().map(|_| q(n - 1)),
    );
    rep.push(
        "bridge_split",
        Side::Upper,
        "MOF_k",
        "MOF_k(G) ≤ MOF_k(G_1) + MOF_k(G_2)",
        "connected with a bridge; first bridge in edge order",
        connected.clone().and_then(|_| {
            let &e = g.bridges().first().ok_or("no bridge")?;
            let split = g.without_edge(e);
            let side: VertexSet = split
                .distances_from(g.edges()[e].0)
                .iter()
                .enumerate()
                .filter_map(|(v, dist)| dist.map(|_| v))
                .collect();
            let other = VertexSet::full(n).difference(&side);
            let mut total = 0;
            for part in [side, other] {
                let (h, _) = g.induced_subgraph(&part).map_err(|e| e.to_string())?;
                total += max_forcing(&h, k)?;
            }
            Ok(q(total))
        }),
    );

    rep.push(
        "half_min_degree_k1",
        Side::Lower,
        "MOF",
        "⌊δ/2⌋",
        "δ >= 2",
        min_deg2.clone().map(|_| q(delta / 2)),
    );
    rep.push(
        "average_degree",
        Side::Lower,
        "MOF",
        "⌊(d+1)/4⌋",
        "δ >= 2",
        min_deg2.map(|_| q((2 * m + n) / (4 * n))),
    );
    rep.push(
        "root_order",
        Side::Lower,
        "MOF",
        "⌊√n/2⌋",
        "any graph",
        Ok(q(isqrt(n) / 2)),
    );
    rep.push(
        "induced_subgraph_sweep",
        Side::Upper,
        "MOF",
        "MOF(G) ≤ MOF(H) + n − |H|",
        "minimum over proper induced H with |H| <= 5, n <= 12",
        require(
            (2..=SWEEP_ORDER_LIMIT).contains(&n),
            format!("n = {n} outside 2..={SWEEP_ORDER_LIMIT}"),
        )
        .and_then(|_| {
            let mut best = n;
            for mask in 1u64..(1 << n) - 1 {
                let size = mask.count_ones() as usize;
                if size > SWEEP_SUBGRAPH_LIMIT {
                    continue;
                }
                let (h, _) = g
                    .induced_subgraph(&VertexSet::from_mask(mask))
                    .map_err(|e| e.to_string())?;
                best = best.min(max_forcing(&h, 1)? + n - size);
            }
            Ok(q(best))
        }),
    );
    rep.push(
        "clique_log",
        Side::Upper,
        "MOF",
        "n − log₂(ω(G))/2",
        "n >= 1; log₂ rounded down so the bound rounds up",
        require(n > 0, "no vertices").and_then(|_| {
            let w = solver::clique_number(g).map_err(|e| e.to_string())?.count();
            Ok(q(n) - log2_lower(w) / 2)
        }),
    );
    rep.push(
        "induced_matching",
        Side::Upper,
        "MOF",
        "n − mim(G)",
        "any graph within the induced matching limit",
        solver::induced_matching_number(g)
            .map(|v| q(n - v.count()))
            .map_err(|e| e.to_string()),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn greedy_on_complete_out_tree_is_exact() {
        let t = families::greedy_tree(3, 2).unwrap();
        let c = greedy_forcing_set(&t, 1, RootPolicy::First).unwrap();
        assert_eq!(c.roots, vec![0]);
        assert_eq!(c.set.len(), 9);
        assert_eq!(c.bound.ratio(), q(9));
        assert_eq!(c.initial.to_vec(), vec![0, 1, 2]);
        assert_eq!(c.repairs.len(), 3);
        assert_eq!(c.repairs[0], Repair { stalled: 1, colored: vec![4, 5] });
    }

    #[test]
    fn greedy_tree_family() {
        for deg in 1..=4 {
            for layers in 1..=3 {
                let t = families::greedy_tree(deg, layers).unwrap();
                for k in 1..=deg {
                    let c = greedy_forcing_set(&t, k, RootPolicy::Given(0)).unwrap();
                    let want = complete_out_tree_forcing(deg, layers, k);
                    assert_eq!(c.set.len(), want, "deg {deg} layers {layers} k {k}");
                    assert_eq!(c.bound.ratio(), q(want));
                }
            }
        }
    }

    #[test]
    fn greedy_directed_path() {
        let d = families::path(7).unwrap().orient_bits(u64::MAX);
        let c = greedy_forcing_set(&d, 1, RootPolicy::Auto).unwrap();
        assert_eq!(c.set.len(), 1);
        assert!(c.repairs.is_empty());
        assert_eq!(c.bound.ratio(), q(1));
    }

    #[test]
    fn greedy_errors() {
        let d = families::path(3).unwrap().orient_bits(u64::MAX);
        assert!(matches!(greedy_forcing_set(&d, 2, RootPolicy::Auto), Err(Error::Inapplicable(_))));
        assert!(matches!(greedy_forcing_set(&d, 0, RootPolicy::Auto), Err(Error::Parameter(_))));
        assert!(matches!(greedy_forcing_set(&d, 1, RootPolicy::Given(2)), Err(Error::Inapplicable(_))));
        let alt = families::orient_preset(
            &families::path(4).unwrap(),
            families::OrientationPreset::Alternating,
        );
        assert!(matches!(greedy_forcing_set(&alt, 1, RootPolicy::First), Err(Error::Inapplicable(_))));
        let c = greedy_forcing_set(&alt, 1, RootPolicy::Auto).unwrap();
        assert_eq!(c.bound_name, "reaching_set");
        assert_eq!(c.roots, vec![0, 2]);
    }

    #[test]
    fn greedy_bounds_hold_on_small_orientations() {
        for g in crate::enumerate::labeled_graphs(5, true).unwrap().step_by(5) {
            for d in crate::enumerate::orientations(&g).unwrap() {
                let md = MaskDigraph::new(&d);
                for k in 1..=d.max_out_degree() {
                    let exact = solver::min_forcing_number(&d, k).unwrap().value;
                    for policy in [RootPolicy::Auto, RootPolicy::ReachingSet, RootPolicy::First] {
                        let Ok(c) = greedy_forcing_set(&d, k, policy) else {
                            assert!(!constructions::is_reachable(&d));
                            continue;
                        };
                        assert!(c.set.len() >= exact);
                        assert!(q(c.set.len()) <= c.bound.ratio(), "{d:?} {policy:?} k={k}");
                        let fast = greedy_masks(&md, k, &c.roots).unwrap();
                        assert_eq!(VertexSet::from_mask(fast), c.set);
                    }
                }
            }
        }
    }

    #[test]
    fn greedy_handles_more_than_64_vertices() {
        let t = families::greedy_tree(4, 3).unwrap();
        assert_eq!(t.n(), 85);
        let c = greedy_forcing_set(&t, 2, RootPolicy::Auto).unwrap();
        assert_eq!(c.set.len(), complete_out_tree_forcing(4, 3, 2));
    }

    #[test]
    fn dense_subgraph_examples() {
        let k4 = families::complete(4).unwrap();
        assert_eq!(dense_subgraph(&k4).unwrap().len(), 4);
        assert_eq!(dense_subgraph(&families::path(4).unwrap()).unwrap().len(), 4);
        // K4 plus a pendant path: threshold 9/7, the whole tail is peeled
        let g = Graph::new(7, k4.edges().iter().copied().chain([(3, 4), (4, 5), (5, 6)])).unwrap();
        let h = dense_subgraph(&g).unwrap();
        assert_eq!(h.to_vec(), vec![0, 1, 2, 3]);
        assert!(dense_subgraph(&Graph::empty(0)).is_err());
    }

    #[test]
    fn dense_subgraph_degree_property() {
        for n in 1..=6 {
            for g in crate::enumerate::labeled_graphs(n, false).unwrap() {
                let h = dense_subgraph(&g).unwrap();
                assert!(!h.is_empty());
                let (sub, _) = g.induced_subgraph(&h).unwrap();
                assert!(2 * sub.min_degree() * n >= 2 * g.m(), "{g:?}");
            }
        }
    }

    #[test]
    fn lower_report_examples() {
        let star = families::star(5).unwrap().orient_bits(u64::MAX);
        let r = lower_bound_report(&star, 1).unwrap();
        assert_eq!(r.get("in_degree_zero").unwrap().value.unwrap().ratio(), q(1));
        assert_eq!(r.get("min_out_degree").unwrap().value.unwrap().ratio(), q(1));
        assert!(r.violations("F_k", 5).is_empty());

        let alt = families::orient_preset(
            &families::path(4).unwrap(),
            families::OrientationPreset::Alternating,
        );
        let r = lower_bound_report(&alt, 1).unwrap();
        assert_eq!(r.get("in_degree_zero").unwrap().value.unwrap().ratio(), q(2));
        assert!(!r.get("greedy_single_root").unwrap().applicable);
        assert!(r.get("greedy_single_root").unwrap().reason.contains("not reachable"));
    }

    #[test]
    fn extremal_report_examples() {
        let k23 = families::complete_bipartite(2, 3).unwrap();
        let r = extremal_bound_report(&k23, 1).unwrap();
        assert_eq!(r.get("order_minus_one").unwrap().value.unwrap().ratio(), q(4));
        assert!(r.violations("MOF", 4).is_empty());
        assert!(r.violations("MOF_k", 4).is_empty());

        let p6 = families::path(6).unwrap();
        let r = extremal_bound_report(&p6, 1).unwrap();
        assert_eq!(r.get("independence").unwrap().value.unwrap().ratio(), q(3));
        assert!(r.violations("MOF_k", 3).is_empty());
        assert!(r.violations("mof_k", 1).is_empty());
        assert!(!r.get("average_degree").unwrap().applicable);
    }

    #[test]
    fn log_bound_rounds_outward() {
        for w in 1..200 {
            let l = log2_lower(w);
            let exact = (w as f64).log2();
            let approx = *l.numer() as f64 / *l.denom() as f64;
            assert!(approx <= exact && exact - approx < 1e-5, "w={w}");
        }
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
    }

    #[test]
    fn reports_hold_on_small_connected_graphs() {
        for g in crate::enumerate::labeled_graphs(5, true).unwrap().step_by(11) {
            let prof = solver::extreme_profile(&g, g.max_degree().max(1)).unwrap();
            for e in &prof {
                let r = extremal_bound_report(&g, e.k).unwrap();
                assert!(r.violations("mof_k", e.min).is_empty(), "{g:?} k={}", e.k);
                assert!(r.violations("MOF_k", e.max).is_empty(), "{g:?} k={}", e.k);
                assert!(r.violations("mof", prof[0].min).is_empty());
                assert!(r.violations("MOF", prof[0].max).is_empty());
            }
        }
    }
}
