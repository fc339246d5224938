//! Executable check catalog and open-problem scanners.
//!
//! Every check runs a predicate over an instance universe and records each
//! violation with a replayable `.ug`/`.dg` serialization. Results are merged
//! in instance order, so reports do not depend on the thread count.

mod checks;
mod scan;
mod universe;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub use scan::{scan, ScanProblem, ScanRecord, ScanReport, NO_COUNTEREXAMPLE};
pub use universe::{
    random_instance, Profiled, Tabled, Universe, VerifyConfig, GRAPH_UNIVERSE_LIMIT,
    ORIENTATION_UNIVERSE_LIMIT, RANDOM_ORDER_LIMIT, TREE_UNIVERSE_LIMIT,
};

/// Violations kept verbatim per check; the rest are only counted.
pub const RECORDED_VIOLATIONS: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    MustHold,
    /// Must hold, and must also reproduce a known counterexample family.
    MustHoldWithExhibit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UniverseKind {
    /// Orientations: exhaustive for small n plus seeded random ones.
    Oriented,
    /// Connected labeled graphs with exact extremes.
    Connected,
    Trees,
    /// A named family listed in the check title.
    Family,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub universe: UniverseKind,
    pub expected: Expectation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// `.ug` or `.dg` text of the instance.
    pub instance: String,
    pub k: Option<usize>,
    pub observed: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exhibit {
    pub description: String,
    pub instance: String,
    pub values: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub universe: String,
    pub expected: Expectation,
    pub instances: u64,
    /// Instances outside the statement's hypothesis.
    pub skipped: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub exhibits: Vec<Exhibit>,
    pub notes: Vec<String>,
    pub passed: bool,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckResult>,
    /// Seconds.
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s += &format!(
                "{:<4} {:<4} instances={:<9} skipped={:<8} violations={:<4} exhibits={:<3} {:>7} ms  {}\n",
                c.id,
                if c.passed { "ok" } else { "FAIL" },
                c.instances,
                c.skipped,
                c.violation_count,
                c.exhibits.len(),
                c.runtime_ms,
                c.title
            );
            for v in c.violations.iter().take(3) {
                s += &format!(
                    "       k={:?} observed={} instance={:?}\n",
                    v.k, v.observed, v.instance
                );
            }
        }
        s += &format!(
            "{} of {} checks passed in {:.1} s\n",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.wall_time
        );
        s
    }
}

/// Accumulates the outcome of one check.
#[derive(Debug, Default)]
pub(crate) struct Rec {
    pub instances: u64,
    pub skipped: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub exhibits: Vec<Exhibit>,
    pub notes: Vec<String>,
}

impl Rec {
    pub fn fail(&mut self, instance: String, k: Option<usize>, observed: Value) {
        self.violation_count += 1;
        if self.violations.len() < RECORDED_VIOLATIONS {
            self.violations.push(Violation { instance, k, observed });
        }
    }

    /// Records a violation unless `ok`; the closures run only on failure.
    pub fn require(
        &mut self,
        ok: bool,
        instance: impl FnOnce() -> String,
        k: Option<usize>,
        observed: impl FnOnce() -> Value,
    ) {
        if !ok {
            self.fail(instance(), k, observed());
        }
    }

    pub fn merge(mut self, other: Rec) -> Rec {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.violation_count += other.violation_count;
        let room = RECORDED_VIOLATIONS - self.violations.len();
        self.violations.extend(other.violations.into_iter().take(room));
        self.exhibits.extend(other.exhibits);
        self.notes.extend(other.notes);
        self
    }

    /// Runs `f` over `items` in parallel, merging in item order.
    pub fn over<T: Sync>(items: &[T], f: impl Fn(&T, &mut Rec) + Sync + Send) -> Rec {
        items
            .par_iter()
            .fold(Rec::default, |mut r, x| {
                f(x, &mut r);
                r
            })
            .reduce(Rec::default, Rec::merge)
    }

    /// Like [`Rec::over`] for a stream, processed in fixed-size batches.
    pub fn over_stream<T: Send + Sync>(
        items: impl Iterator<Item = T>,
        f: impl Fn(&T, &mut Rec) + Sync + Send,
    ) -> Rec {
        const BATCH: usize = 1 << 14;
        let mut total = Rec::default();
        let mut items = items.peekable();
        while items.peek().is_some() {
            let batch: Vec<T> = items.by_ref().take(BATCH).collect();
            total = total.merge(Rec::over(&batch, &f));
        }
        total
    }
}

/// The full catalog in id order.
pub fn catalog() -> Vec<CheckSpec> {
    use Expectation::*;
    use UniverseKind::*;
    let c = |id: &str, title: &str, anchor: &str, universe, expected| CheckSpec {
        id: id.into(),
        title: title.into(),
        anchor: anchor.into(),
        universe,
        expected,
    };
    vec![
        c("C1", "forcing is monotone in the set and in k", "S ⊆ T ⇒ T forcing; F_k(D) ≥ F_{k+1}(D)", Oriented, MustHold),
        c("C2", "reachable digraphs need one vertex once k ≥ Δ⁺", "F_k(D) = 1 for reachable D, k ≥ Δ⁺", Oriented, MustHold),
        c("C3", "minimum out-degree lower bound", "F_k(D) ≥ max{δ⁺ − k + 1, 1}", Oriented, MustHold),
        c("C4", "forcing chains of a minimum set", "chains for S have |S| = F_k(D) components, ≤ k children each", Oriented, MustHold),
        c("C5", "k-ary out-tree cover lower bound", "F_k(D) ≥ IT_k(D)", Oriented, MustHold),
        c("C6", "reversal preserves F at k = 1, not at k ≥ 2 (out-stars)", "F(D) = F(D'); F_k(D) = n − k, F_k(D') = n − 1", Oriented, MustHoldWithExhibit),
        c("C7", "greedy forcing sets and their bounds", "((Δ⁺ − k)n + k)/Δ⁺; ((Δ⁺ − k)n + rk)/Δ⁺; k(δ⁺ − Δ⁺ + 1)", Oriented, MustHold),
        c("C8", "additivity over components", "F_k(D) = Σ F_k(D_i); mof_k, MOF_k additive", Oriented, MustHold),
        c("C9", "mof_k equals the (k+1)-tree cover number", "mof_k(G) = T_k(G); mof(G) = ρ(G); mof_k = 1 ⇔ spanning (k+1)-tree", Connected, MustHold),
        c("C10", "out-star upper bound on mof_k", "mof_k(G) ≤ max{n − k, n − Δ}", Connected, MustHold),
        c("C11", "balanced-orientation upper bounds on mof", "((⌈Δ/2⌉ − 1)n + r)/⌈Δ/2⌉; r = 1 when 2-edge-connected", Connected, MustHold),
        c("C12", "mof_k of stars K_{1,n−1}, n = 3..10", "mof_k(K_{1,n−1}) = n − k − 1 for k < n − 1", Family, MustHold),
        c("C13", "MOF_k is monotone on induced subgraphs; F is not", "MOF_k(G) ≥ MOF_k(H); F(H) < F(D_6) < F(K)", Connected, MustHoldWithExhibit),
        c("C14", "bridge subadditivity", "MOF_k(G) ≤ MOF_k(G_1) + MOF_k(G_2)", Connected, MustHold),
        c("C15", "half minimum degree lower bound", "MOF_k(G) ≥ max{⌊δ/2⌋ − k + 1, 1}; MOF(G) ≥ ⌊δ/2⌋ for δ ≥ 2", Connected, MustHold),
        c("C16", "independence lower bound, tight for k ≥ Δ", "MOF_k(G) ≥ α(G); MOF_k(G) = α(G) for k ≥ Δ", Connected, MustHold),
        c("C17", "average degree lower bound", "MOF(G) ≥ ⌊(d+1)/4⌋ for δ ≥ 2; δ(H) ≥ d/2", Connected, MustHold),
        c("C18", "order lower bound", "MOF(G) ≥ ⌊√n/2⌋", Connected, MustHold),
        c("C19", "induced subgraph upper bound", "MOF(G) ≤ F(H) + n − |H| ≤ MOF(H) + n − |H|", Connected, MustHold),
        c("C20", "induced matching upper bound", "MOF(G) ≤ n − mim(G)", Connected, MustHold),
        c("C21", "clique upper bound", "MOF(G) ≤ n − log₂(ω(G))/2", Connected, MustHold),
        c("C22", "trees: MOF_k equals independence number", "MOF_k(T) = α(T)", Trees, MustHold),
        c("C23", "the full chain between mof_k and MOF_k; K_{x,y} attains n − 1", "mof_Δ ≤ mof_k ≤ mof = ρ ≤ α = MOF_Δ ≤ MOF_k ≤ MOF ≤ n − 1", Connected, MustHoldWithExhibit),
        c("C24", "trees: stem neighbourhood of a diametric leaf", "N(w) − z are leaves; α(T*) ≤ α(T) − q", Trees, MustHold),
    ]
}

fn universe_text(kind: UniverseKind, cfg: &VerifyConfig) -> String {
    match kind {
        UniverseKind::Oriented => format!(
            "all orientations of labeled graphs n<={}, plus {} seeded per n up to {} (seed {})",
            cfg.nmax.min(ORIENTATION_UNIVERSE_LIMIT),
            cfg.random_per_order,
            cfg.random_nmax,
            cfg.seed
        ),
        UniverseKind::Connected => format!("connected labeled graphs n<={}", cfg.nmax),
        UniverseKind::Trees => format!("labeled trees n<={}", cfg.tree_nmax),
        UniverseKind::Family => "named family".into(),
    }
}

/// Runs one check against a shared universe.
pub fn run_check(id: &str, u: &Universe) -> Result<CheckResult> {
    let spec = catalog()
        .into_iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::Parameter(format!("unknown check id {id:?}")))?;
    let start = Instant::now();
    let rec = checks::run(&spec.id, u)?;
    let passed = rec.violation_count == 0
        && (spec.expected == Expectation::MustHold || !rec.exhibits.is_empty());
    Ok(CheckResult {
        universe: universe_text(spec.universe, &u.cfg),
        id: spec.id,
        title: spec.title,
        anchor: spec.anchor,
        expected: spec.expected,
        instances: rec.instances,
        skipped: rec.skipped,
        violation_count: rec.violation_count,
        violations: rec.violations,
        exhibits: rec.exhibits,
        notes: rec.notes,
        passed,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Parses `all` or a comma-separated id list such as `C1,C6,c22`.
pub fn parse_suite(suite: &str) -> Result<Vec<String>> {
    if suite.trim().eq_ignore_ascii_case("all") {
        return Ok(catalog().into_iter().map(|c| c.id).collect());
    }
    let known = catalog();
    suite
        .split(',')
        .map(|s| {
            let s = s.trim();
            known
                .iter()
                .find(|c| c.id.eq_ignore_ascii_case(s))
                .map(|c| c.id.clone())
                .ok_or_else(|| Error::Parameter(format!("unknown check id {s:?}")))
        })
        .collect()
}

pub fn run_suite(ids: &[String], cfg: VerifyConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let u = Universe::new(cfg)?;
    let checks = ids.iter().map(|id| run_check(id, &u)).collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        config: u.cfg.clone(),
        checks,
        wall_time: start.elapsed().as_secs_f64(),
    })
}
