//! `mof_k` and `MOF_k`: the extremes of `F_k` over all orientations.

use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::forcing_number::forcing_number_masks;
use super::{SolveResult, Witness};
use crate::error::{check_limit, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kernel::MaskDigraph;

pub const EXTREME_EDGE_LIMIT: usize = 20;

/// Orientations per parallel work unit.
const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Extreme {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeOptions {
    /// Stop as soon as the running value reaches `stop_at`.
    pub early_exit: bool,
    /// Target for the early exit. `None` picks the default: `n - 1` for the
    /// maximum of a graph with edges, and for the minimum `T_k(g)` when
    /// `n <= COVER_LIMIT`, otherwise the number of components.
    pub stop_at: Option<usize>,
    /// At `k = 1` score only one orientation of each reversal pair.
    pub reversal_dedup: bool,
    /// Maximum number of orientations to score before giving up.
    pub budget: Option<u64>,
    pub edge_limit: usize,
}

impl Default for ExtremeOptions {
    fn default() -> Self {
        ExtremeOptions {
            early_exit: true,
            stop_at: None,
            reversal_dedup: true,
            budget: None,
            edge_limit: EXTREME_EDGE_LIMIT,
        }
    }
}

impl ExtremeOptions {
    /// Full enumeration, no shortcuts that rely on the identities under test.
    pub fn exhaustive() -> Self {
        ExtremeOptions {
            early_exit: false,
            reversal_dedup: false,
            ..Default::default()
        }
    }
}

pub fn min_oriented_forcing(g: &Graph, k: usize) -> Result<SolveResult> {
    orientation_extreme(g, k, Extreme::Min, &ExtremeOptions::default())
}

pub fn max_oriented_forcing(g: &Graph, k: usize) -> Result<SolveResult> {
    orientation_extreme(g, k, Extreme::Max, &ExtremeOptions::default())
}

pub(crate) fn out_masks_for_bits(g: &Graph, bits: u64) -> Vec<u64> {
    let mut out = vec![0u64; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if bits >> i & 1 == 1 {
            out[u] |= 1 << v;
        } else {
            out[v] |= 1 << u;
        }
    }
    out
}

fn improves(ext: Extreme, value: usize, best: Option<usize>) -> bool {
    match (ext, best) {
        (_, None) => true,
        (Extreme::Min, Some(b)) => value < b,
        (Extreme::Max, Some(b)) => value > b,
    }
}

#[derive(Clone, Copy, Debug)]
struct ChunkOutcome {
    best: Option<(usize, u64)>,
    scored: u64,
    hit_target: bool,
}

fn scan(g: &Graph, k: usize, ext: Extreme, lo: u64, hi: u64, target: Option<usize>) -> ChunkOutcome {
    let mut best: Option<(usize, u64)> = None;
    let mut scored = 0;
    for bits in lo..hi {
        let md = MaskDigraph::from_out_masks(out_masks_for_bits(g, bits));
        let (value, _, _) = forcing_number_masks(&md, k);
        scored += 1;
        if improves(ext, value, best.map(|b| b.0)) {
            best = Some((value, bits));
            if target == Some(value) {
                return ChunkOutcome { best, scored, hit_target: true };
            }
        }
    }
    ChunkOutcome { best, scored, hit_target: false }
}

fn merge(ext: Extreme, a: Option<(usize, u64)>, b: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            let pick_y = improves(ext, y.0, Some(x.0)) || (x.0 == y.0 && y.1 < x.1);
            Some(if pick_y { y } else { x })
        }
    }
}

/// Exact `mof_k(g)` or `MOF_k(g)`; the witness is the orientation with the
/// smallest direction bits among the optimal ones, with its lexicographically
/// least minimum forcing set.
pub fn orientation_extreme(
    g: &Graph,
    k: usize,
    ext: Extreme,
    opts: &ExtremeOptions,
) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::Parameter("k must be a positive integer".into()));
    }
    if g.n() == 0 {
        return Err(Error::Parameter("orientation extremes need n >= 1".into()));
    }
    check_limit("edge count for orientation enumeration", g.m(), opts.edge_limit.min(40))?;
    check_limit("vertex count for subset search", g.n(), super::SUBSET_LIMIT)?;
    let m = g.m();
    let end: u64 = if opts.reversal_dedup && k == 1 && m > 0 {
        // the smaller member of each pair {bits, !bits} has its top bit clear
        1 << (m - 1)
    } else {
        1 << m
    };
    let target = if !opts.early_exit {
        None
    } else {
        Some(match (opts.stop_at, ext) {
            (Some(t), _) => t,
            (None, Extreme::Max) => g.n().saturating_sub(1).max(if m == 0 { g.n() } else { 1 }),
            (None, Extreme::Min) => {
                if g.n() <= super::COVER_LIMIT {
                    super::tree_cover_number(g, k)?.count()
                } else {
                    g.components().len()
                }
            }
        })
    };

    let (best, explored, limits_hit) = if let Some(budget) = opts.budget {
        let hi = end.min(budget);
        let out = scan(g, k, ext, 0, hi, target);
        (out.best, out.scored, !out.hit_target && hi < end)
    } else {
        let chunks = end.div_ceil(CHUNK);
        let first_hit = AtomicUsize::new(usize::MAX);
        let outcomes: Vec<Option<ChunkOutcome>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                if (c as usize) > first_hit.load(AtomicOrdering::Relaxed) {
                    return None;
                }
                let lo = c * CHUNK;
                let out = scan(g, k, ext, lo, (lo + CHUNK).min(end), target);
                if out.hit_target {
                    first_hit.fetch_min(c as usize, AtomicOrdering::Relaxed);
                }
                Some(out)
            })
            .collect();
        let stop = first_hit.load(AtomicOrdering::Relaxed);
        let mut best = None;
        let mut explored = 0;
        for (c, out) in outcomes.into_iter().enumerate() {
            if c > stop {
                break;
            }
            let out = out.expect("chunks up to the first hit always run");
            best = merge(ext, best, out.best);
            explored += out.scored;
        }
        (best, explored, false)
    };

    let (value, bits) = best.expect("at least one orientation");
    let md = MaskDigraph::from_out_masks(out_masks_for_bits(g, bits));
    let (_, set, _) = forcing_number_masks(&md, k);
    Ok(SolveResult {
        problem: match ext {
            Extreme::Min => "mof",
            Extreme::Max => "MOF",
        }
        .into(),
        parameters: json!({ "k": k, "n": g.n(), "m": m }),
        value,
        witness: Witness::Orientation {
            bits,
            orientation: g.orient_bits(bits),
            forcing_set: VertexSet::from_mask(set),
        },
        explored,
        limits_hit,
    })
}

/// Both extremes for one `k`, with the least optimal direction bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KExtremes {
    pub k: usize,
    pub min: usize,
    pub min_bits: u64,
    pub max: usize,
    pub max_bits: u64,
}

/// `mof_k` and `MOF_k` for every `k` in `1..=kmax` from one full pass over
/// the orientations, without early exits or reversal dedup.
pub fn extreme_profile(g: &Graph, kmax: usize) -> Result<Vec<KExtremes>> {
    if kmax == 0 {
        return Err(Error::Parameter("kmax must be positive".into()));
    }
    if g.n() == 0 {
        return Err(Error::Parameter("orientation extremes need n >= 1".into()));
    }
    check_limit("edge count for orientation enumeration", g.m(), EXTREME_EDGE_LIMIT)?;
    check_limit("vertex count for subset search", g.n(), super::SUBSET_LIMIT)?;
    let mut out: Vec<KExtremes> = (1..=kmax)
        .map(|k| KExtremes { k, min: usize::MAX, min_bits: 0, max: 0, max_bits: 0 })
        .collect();
    let mut values = vec![0usize; kmax];
    for bits in 0..1u64 << g.m() {
        let md = MaskDigraph::from_out_masks(out_masks_for_bits(g, bits));
        let max_out = (0..g.n()).map(|v| md.out(v).count_ones() as usize).max().unwrap_or(0);
        for k in 1..=kmax {
            values[k - 1] = if k > max_out.max(1) {
                // every k at or above the largest out-degree gives the same value
                values[k - 2]
            } else {
                forcing_number_masks(&md, k).0
            };
        }
        for (e, &v) in out.iter_mut().zip(&values) {
            if v < e.min {
                e.min = v;
                e.min_bits = bits;
            }
            if v > e.max {
                e.max = v;
                e.max_bits = bits;
            }
        }
    }
    Ok(out)
}
