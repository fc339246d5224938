//! The oriented k-color change rule.
//!
//! A colored vertex with between 1 and `k` non-colored out-neighbours colors
//! all of them. Every such vertex acts in the same round, against the colored
//! set as it stood when the round began; the process stops at the first round
//! in which nothing happens.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexSet};

pub type Force = (usize, usize);

/// Round-by-round record of a forcing process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    /// Each round lists `(forcer, forced)` pairs in increasing order.
    pub rounds: Vec<Vec<Force>>,
    #[serde(rename = "final")]
    pub final_set: VertexSet,
}

impl ForcingTrace {
    /// Distinct vertices forced; a vertex may have several forcers in its round.
    pub fn forced_count(&self) -> usize {
        self.final_set.len() - self.initial.len()
    }

    /// One line per round: `round i: u>v, u>v`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, round) in self.rounds.iter().enumerate() {
            let pairs: Vec<String> = round.iter().map(|(u, v)| format!("{u}>{v}")).collect();
            writeln!(s, "round {}: {}", i + 1, pairs.join(", ")).unwrap();
        }
        s
    }

    /// Array of rounds, each an array of `[forcer, forced]` pairs.
    pub fn rounds_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.rounds).expect("plain data")
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Parameter("k must be a positive integer".into()))
    } else {
        Ok(())
    }
}

fn check_set(d: &OrientedGraph, s: &VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Parameter("the initial colored set must be nonempty".into()));
    }
    match s.max() {
        Some(v) if v >= d.n() => Err(Error::Parameter(format!(
            "vertex {v} outside 0..{}",
            d.n()
        ))),
        _ => Ok(()),
    }
}

fn step_on(d: &OrientedGraph, colored: &[bool], k: usize) -> Vec<Force> {
    let mut pairs = Vec::new();
    for u in (0..d.n()).filter(|&u| colored[u]) {
        let unc: Vec<usize> = d
            .out_neighbors(u)
            .iter()
            .copied()
            .filter(|&w| !colored[w])
            .collect();
        if !unc.is_empty() && unc.len() <= k {
            pairs.extend(unc.into_iter().map(|w| (u, w)));
        }
    }
    pairs
}

/// One simultaneous round of the rule. Empty iff the process is stalled.
pub fn step(d: &OrientedGraph, colored: &VertexSet, k: usize) -> Result<Vec<Force>> {
    check_k(k)?;
    check_set(d, colored)?;
    let mask: Vec<bool> = (0..d.n()).map(|v| colored.contains(v)).collect();
    Ok(step_on(d, &mask, k))
}

/// Runs the process from `s` until it stalls.
pub fn closure(d: &OrientedGraph, s: &VertexSet, k: usize) -> Result<ForcingTrace> {
    check_k(k)?;
    check_set(d, s)?;
    let mut colored: Vec<bool> = (0..d.n()).map(|v| s.contains(v)).collect();
    let mut rounds = Vec::new();
    loop {
        let round = step_on(d, &colored, k);
        if round.is_empty() {
            break;
        }
        for &(_, w) in &round {
            colored[w] = true;
        }
        rounds.push(round);
    }
    let final_set = (0..d.n()).filter(|&v| colored[v]).collect();
    Ok(ForcingTrace {
        initial: s.clone(),
        rounds,
        final_set,
    })
}

pub fn is_forcing_set(d: &OrientedGraph, s: &VertexSet, k: usize) -> Result<bool> {
    Ok(closure(d, s, k)?.final_set.len() == d.n())
}

/// Parent assignment realising a set of forcing chains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainForest {
    /// `parent[v]` is the vertex that forced `v`; `None` exactly on the roots.
    pub parent: Vec<Option<usize>>,
    pub roots: VertexSet,
}

impl ChainForest {
    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&w| self.parent[w] == Some(v))
            .collect()
    }

    /// Root of the chain containing `v`.
    pub fn root_of(&self, mut v: usize) -> usize {
        let mut steps = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            steps += 1;
            assert!(steps <= self.parent.len(), "parent map has a cycle");
        }
        v
    }

    /// Number of weakly connected components of the forest.
    pub fn component_count(&self) -> usize {
        let roots: std::collections::BTreeSet<usize> =
            (0..self.parent.len()).map(|v| self.root_of(v)).collect();
        roots.len()
    }

    /// Chains as vertex lists, one per root in increasing root order; each list
    /// starts at its root and follows breadth-first order.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        self.roots
            .iter()
            .map(|r| {
                let mut chain = vec![r];
                let mut i = 0;
                while i < chain.len() {
                    let kids = self.children(chain[i]);
                    chain.extend(kids);
                    i += 1;
                }
                chain
            })
            .collect()
    }

    /// Checks every structural invariant against `d` and `k`.
    pub fn validate(&self, d: &OrientedGraph, k: usize) -> std::result::Result<(), String> {
        let n = d.n();
        if self.parent.len() != n {
            return Err("parent map has the wrong length".into());
        }
        for v in 0..n {
            match self.parent[v] {
                None if !self.roots.contains(v) => {
                    return Err(format!("vertex {v} has no parent but is not a root"))
                }
                Some(_) if self.roots.contains(v) => {
                    return Err(format!("root {v} has a parent"))
                }
                Some(p) if !d.has_arc(p, v) => {
                    return Err(format!("({p},{v}) is not an arc"))
                }
                _ => {}
            }
        }
        for v in 0..n {
            let mut w = v;
            for _ in 0..=n {
                match self.parent[w] {
                    Some(p) => w = p,
                    None => break,
                }
            }
            if self.parent[w].is_some() {
                return Err(format!("vertex {v} lies on a parent cycle"));
            }
        }
        if self.component_count() != self.roots.len() {
            return Err(format!(
                "{} components for {} roots",
                self.component_count(),
                self.roots.len()
            ));
        }
        if let Some(v) = (0..n).find(|&v| self.children(v).len() > k) {
            return Err(format!("vertex {v} has more than {k} children"));
        }
        Ok(())
    }
}

/// Forcing chains for a forcing set `s`: each forced vertex points at the
/// smallest-index vertex that forced it in its round.
pub fn forcing_chains(d: &OrientedGraph, s: &VertexSet, k: usize) -> Result<ChainForest> {
    let trace = closure(d, s, k)?;
    if trace.final_set.len() != d.n() {
        return Err(Error::Precondition(format!(
            "{:?} is not a {k}-forcing set",
            s
        )));
    }
    let mut parent = vec![None; d.n()];
    for round in &trace.rounds {
        // pairs are sorted by forcer, so the first pair naming w wins
        for &(u, w) in round {
            if parent[w].is_none() {
                parent[w] = Some(u);
            }
        }
    }
    Ok(ChainForest {
        parent,
        roots: s.clone(),
    })
}
