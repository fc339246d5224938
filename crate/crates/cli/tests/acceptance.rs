//! Acceptance criteria, one printed PASS/FAIL line each.
//!
//! Run with `cargo test -p oriented-forcing-cli --test acceptance -- --nocapture`
//! to see the lines. Exact equality everywhere; time limits are pinned below.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use oriented_forcing::bounds::{self, RootPolicy};
use oriented_forcing::constructions::is_reachable;
use oriented_forcing::families;
use oriented_forcing::kernel::MaskDigraph;
use oriented_forcing::solver::{self, forcing_number_masks, Extreme, ExtremeOptions};
use oriented_forcing::verify::{self, random_instance, Universe, VerifyConfig};
use oriented_forcing::{closure, forcing_chains, is_forcing_set, OrientedGraph, VertexSet};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

const PATH_LIMIT: Duration = Duration::from_secs(5);
const TREE_LIMIT: Duration = Duration::from_secs(120);
const MOF_IDENTITY_LIMIT: Duration = Duration::from_secs(600);
const INDEPENDENCE_LIMIT: Duration = Duration::from_secs(600);
const REVERSAL_LIMIT: Duration = Duration::from_secs(60);
const GREEDY_LIMIT: Duration = Duration::from_secs(60);
const STAR_LIMIT: Duration = Duration::from_secs(10);
const SUITE_LIMIT: Duration = Duration::from_secs(900);
const ENGINE_LIMIT: Duration = Duration::from_secs(60);

const REVERSAL_SAMPLES: usize = 1000;
const REVERSAL_MAX_ORDER: usize = 12;
const REVERSAL_SEED: u64 = 0;
const ENGINE_CASES: u32 = 10_000;

type Outcome = Result<String, String>;

/// State shared between criteria: the connected-graph universe and every
/// oriented graph met along the way.
#[derive(Default)]
struct Ctx {
    universe: Option<Universe>,
    encountered: Vec<OrientedGraph>,
}

fn f(d: &OrientedGraph, k: usize) -> usize {
    forcing_number_masks(&MaskDigraph::new(d), k).0
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn paths(ctx: &mut Ctx) -> Outcome {
    for n in 2..=10 {
        let g = families::path(n).map_err(|e| e.to_string())?;
        let opts = ExtremeOptions::exhaustive();
        let lo = solver::orientation_extreme(&g, 1, Extreme::Min, &opts).map_err(|e| e.to_string())?.value;
        let hi = solver::orientation_extreme(&g, 1, Extreme::Max, &opts).map_err(|e| e.to_string())?.value;
        ensure(lo == 1 && hi == n.div_ceil(2), || format!("P_{n}: mof = {lo}, MOF = {hi}"))?;
        ctx.encountered.extend((0..1u64 << (n - 1)).map(|b| g.orient_bits(b)));
    }
    Ok("mof(P_n) = 1, MOF(P_n) = ⌈n/2⌉ for 2 ≤ n ≤ 10".into())
}

fn trees(_: &mut Ctx) -> Outcome {
    let u = Universe::new(VerifyConfig { tree_nmax: 9, ..VerifyConfig::default() }).map_err(|e| e.to_string())?;
    let r = verify::run_check("C22", &u).map_err(|e| e.to_string())?;
    ensure(r.passed, || format!("{} violations, first {:?}", r.violation_count, r.violations.first()))?;
    Ok(format!("MOF_k(T) = α(T) on {} labeled trees n ≤ 9", r.instances))
}

fn universe(ctx: &mut Ctx) -> &Universe {
    ctx.universe
        .get_or_insert_with(|| Universe::new(VerifyConfig { nmax: 6, ..VerifyConfig::default() }).unwrap())
}

fn mof_identities(ctx: &mut Ctx) -> Outcome {
    let graphs = universe(ctx).connected().to_vec();
    for p in &graphs {
        let g = &p.g;
        let rho = solver::path_cover_number(g).map_err(|e| e.to_string())?.count();
        ensure(p.mof(1) == rho, || format!("{:?}: mof = {}, ρ = {rho}", g.edges(), p.mof(1)))?;
        for k in [1, 2] {
            let tk = solver::tree_cover_number(g, k).map_err(|e| e.to_string())?.count();
            ensure(p.mof(k) == tk, || format!("{:?}: mof_{k} = {}, T_{k} = {tk}", g.edges(), p.mof(k)))?;
        }
        for e in &p.profile {
            ctx.encountered.push(g.orient_bits(e.min_bits));
            ctx.encountered.push(g.orient_bits(e.max_bits));
        }
    }
    Ok(format!("mof_k = T_k (k = 1, 2) and mof = ρ on {} connected graphs n ≤ 6", graphs.len()))
}

fn independence(ctx: &mut Ctx) -> Outcome {
    let u = universe(ctx);
    for p in u.connected() {
        let g = &p.g;
        let alpha = solver::independence_number(g).map_err(|e| e.to_string())?.count();
        let big = g.max_degree().max(1);
        for k in [1, 2, big] {
            ensure(p.MOF(k) >= alpha, || format!("{:?}: MOF_{k} = {} < α = {alpha}", g.edges(), p.MOF(k)))?;
        }
        ensure(p.MOF(big) == alpha, || format!("{:?}: MOF_Δ = {} ≠ α = {alpha}", g.edges(), p.MOF(big)))?;
    }
    Ok(format!("MOF_k ≥ α for k ∈ {{1, 2, Δ}}, equal at Δ, on {} graphs", u.connected().len()))
}

fn reversal(ctx: &mut Ctx) -> Outcome {
    for i in 0..REVERSAL_SAMPLES {
        let n = 2 + i % (REVERSAL_MAX_ORDER - 1);
        let d = random_instance(n, i, REVERSAL_SEED);
        let (a, b) = (f(&d, 1), f(&d.reversal(), 1));
        ensure(a == b, || format!("instance {i} (n = {n}): F = {a}, F(reversal) = {b}"))?;
        ctx.encountered.push(d.reversal());
        ctx.encountered.push(d);
    }
    for n in 3..=8 {
        let d = families::star(n - 1).map_err(|e| e.to_string())?.orient_bits(u64::MAX);
        for k in 2..n {
            let pair = (f(&d, k), f(&d.reversal(), k));
            ensure(pair == (n - k, n - 1), || format!("out-star order {n}, k = {k}: {pair:?}"))?;
        }
        ctx.encountered.push(d.reversal());
        ctx.encountered.push(d);
    }
    Ok(format!("F(D) = F(D') on {REVERSAL_SAMPLES} seeded orientations n ≤ {REVERSAL_MAX_ORDER}; out-stars give (n − k, n − 1)"))
}

fn greedy(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0usize;
    for d in ctx.encountered.iter().filter(|d| d.m() > 0 && is_reachable(d)) {
        let top = d.max_out_degree();
        for k in 1..=top {
            let c = bounds::greedy_forcing_set(d, k, RootPolicy::First).map_err(|e| e.to_string())?;
            let bound = bounds::greedy_bound(d.n(), top, k, 1).floor().to_integer() as usize;
            let forcing = is_forcing_set(d, &c.set, k).map_err(|e| e.to_string())?;
            ensure(forcing && c.set.len() <= bound, || {
                format!("{:?} k = {k}: greedy {:?} (forcing {forcing}) vs ⌊bound⌋ = {bound}", d.arcs().collect::<Vec<_>>(), c.set)
            })?;
            checked += 1;
        }
    }
    for deg in 1..=4 {
        for layers in 1..=3 {
            let t = families::greedy_tree(deg, layers).map_err(|e| e.to_string())?;
            for k in 1..=deg {
                let c = bounds::greedy_forcing_set(&t, k, RootPolicy::Given(0)).map_err(|e| e.to_string())?;
                let geometric: usize = (0..layers).map(|i| deg.pow(i as u32)).sum();
                let want = 1 + (deg - k) * geometric;
                ensure(c.set.len() == want, || format!("greedy_tree({deg}, {layers}), k = {k}: {} ≠ {want}", c.set.len()))?;
            }
        }
    }
    Ok(format!("{checked} (orientation, k) greedy certificates; complete out-trees exact"))
}

fn stars(_: &mut Ctx) -> Outcome {
    for n in 3..=10 {
        let g = families::star(n - 1).map_err(|e| e.to_string())?;
        for k in 1..n - 1 {
            let v = solver::orientation_extreme(&g, k, Extreme::Min, &ExtremeOptions::exhaustive())
                .map_err(|e| e.to_string())?
                .value;
            ensure(v == n - k - 1, || format!("K_1,{}: mof_{k} = {v}", n - 1))?;
        }
    }
    Ok("mof_k(K_{1,n−1}) = n − k − 1 for 3 ≤ n ≤ 10".into())
}

fn suite(_: &mut Ctx) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_ofk"))
        .args(["--json", "verify", "--suite", "all", "--nmax", "6"])
        .output()
        .map_err(|e| e.to_string())?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{e}; stderr {}", String::from_utf8_lossy(&out.stderr)))?;
    let checks = report["checks"].as_array().ok_or("no checks array")?;
    let failed: Vec<&str> = checks.iter().filter(|c| c["passed"] != true).filter_map(|c| c["id"].as_str()).collect();
    ensure(out.status.success() && failed.is_empty() && checks.len() == 24, || format!("failed checks {failed:?}"))?;
    let exhibits = |id: &str| checks.iter().find(|c| c["id"] == id).map(|c| c["exhibits"].clone()).unwrap_or_default();
    let star = exhibits("C6")
        .as_array()
        .into_iter()
        .flatten()
        .any(|e| e["values"]["order"] == 5 && e["values"]["k"] == 2 && e["values"]["f_k"] == 3 && e["values"]["f_k_reversal"] == 4);
    ensure(star, || "no out-star exhibit (order 5, k = 2) with (3, 4)".into())?;
    let triple = exhibits("C13")
        .as_array()
        .into_iter()
        .flatten()
        .any(|e| e["values"]["F(H)"] == 1 && e["values"]["F(D_6)"] == 2 && e["values"]["F(K)"] == 3);
    ensure(triple, || "no D_6 exhibit with 1 < 2 < 3".into())?;
    let must_hold_violations: u64 = checks.iter().filter_map(|c| c["violation_count"].as_u64()).sum();
    Ok(format!("24 checks, {must_hold_violations} violations, star (3, 4) and D_6 (1, 2, 3) exhibits"))
}

fn engine_invariants(_: &mut Ctx) -> Outcome {
    let config = Config { cases: ENGINE_CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = (1usize..=9, proptest::collection::vec(0u8..3, 36), any::<u64>(), any::<u64>(), 1usize..=3, 0usize..9);
    runner
        .run(&strategy, |(n, choice, a, b, k, cut)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let arcs: Vec<(usize, usize)> = pairs
                .zip(choice)
                .filter_map(|((u, v), c)| match c {
                    1 => Some((u, v)),
                    2 => Some((v, u)),
                    _ => None,
                })
                .collect();
            let d = OrientedGraph::from_arcs(n, arcs.iter().copied()).unwrap();
            let full = (1u64 << n) - 1;
            let s = (a & full) | 1;
            let t = s | (b & full);
            let fin = |s: u64, k: usize| closure(&d, &VertexSet::from_mask(s), k).unwrap().final_set.to_mask().unwrap();
            let cs = fin(s, k);
            prop_assert_eq!(cs & !fin(t, k), 0, "monotone in the set");
            prop_assert_eq!(cs & !fin(s, k + 1), 0, "monotone in k");
            prop_assert_eq!(fin(cs, k), cs, "idempotent");
            let sources = d.sources().to_mask().unwrap();
            prop_assert_eq!(cs & sources, s & sources, "sources are never forced");
            let forcing = s | (full & !cs);
            let set = VertexSet::from_mask(forcing);
            let forest = forcing_chains(&d, &set, k).unwrap();
            prop_assert_eq!(forest.component_count(), set.len(), "chain count");
            prop_assert!((0..n).all(|v| forest.children(v).len() <= k), "children per vertex");
            // additivity: split at `cut` into two vertex ranges with no arcs between
            let cut = cut % n;
            if cut > 0 {
                let left: Vec<(usize, usize)> = arcs.iter().copied().filter(|&(u, v)| u < cut && v < cut).collect();
                let right: Vec<(usize, usize)> = arcs.iter().copied().filter(|&(u, v)| u >= cut && v >= cut).map(|(u, v)| (u - cut, v - cut)).collect();
                let l = OrientedGraph::from_arcs(cut, left.iter().copied()).unwrap();
                let r = OrientedGraph::from_arcs(n - cut, right.iter().copied()).unwrap();
                let both = OrientedGraph::from_arcs(n, left.into_iter().chain(right.into_iter().map(|(u, v)| (u + cut, v + cut)))).unwrap();
                prop_assert_eq!(f(&both, k), f(&l, k) + f(&r, k), "additivity");
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{ENGINE_CASES} seeded cases: monotone, idempotent, chains, ≤ k children, sources, additivity"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Duration, fn(&mut Ctx) -> Outcome); 9] = [
        ("1 path family", PATH_LIMIT, paths),
        ("2 trees MOF = α", TREE_LIMIT, trees),
        ("3 mof identities", MOF_IDENTITY_LIMIT, mof_identities),
        ("4 independence equality", INDEPENDENCE_LIMIT, independence),
        ("5 reversal", REVERSAL_LIMIT, reversal),
        ("6 greedy certificates", GREEDY_LIMIT, greedy),
        ("7 star formula", STAR_LIMIT, stars),
        ("8 full check suite", SUITE_LIMIT, suite),
        ("9 engine invariants", ENGINE_LIMIT, engine_invariants),
    ];
    let mut ctx = Ctx::default();
    let mut failures = Vec::new();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut ctx);
        let elapsed = start.elapsed();
        let (verdict, detail) = match (&outcome, elapsed <= limit) {
            (Ok(msg), true) => ("PASS", msg.clone()),
            (Ok(msg), false) => ("FAIL", format!("over time limit: {msg}")),
            (Err(why), _) => ("FAIL", why.clone()),
        };
        // straight to the handle so the lines survive libtest's capture
        let _ = writeln!(
            std::io::stdout().lock(),
            "criterion {name:<24} {verdict}  {:>7.2}s / {:>4}s  {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if verdict == "FAIL" {
            failures.push(name);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
