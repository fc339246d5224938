use serde_json::json;

use super::universe::{Profiled, Tabled, Universe};
use super::{Exhibit, Rec};
use crate::bounds::{self, RootPolicy};
use crate::constructions;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::families;
use crate::forcing;
use crate::graph::{Graph, OrientedGraph, VertexSet};
use crate::io::{write_dg, write_ug};
use crate::kernel::MaskDigraph;
use crate::solver::{self, Extreme, ExtremeOptions, InvariantWitness, TreeCover};

pub(crate) fn run(id: &str, u: &Universe) -> Result<Rec> {
    Ok(match id {
        "C1" => c1(u),
        "C2" => c2(u),
        "C3" => c3(u),
        "C4" => c4(u),
        "C5" => c5(u),
        "C6" => c6(u)?,
        "C7" => c7(u)?,
        "C8" => c8(u)?,
        "C9" => c9(u),
        "C10" => c10(u),
        "C11" => c11(u),
        "C12" => c12()?,
        "C13" => c13(u)?,
        "C14" => c14(u),
        "C15" => c15(u),
        "C16" => c16(u),
        "C17" => c17(u),
        "C18" => c18(u),
        "C19" => c19(u),
        "C20" => c20(u),
        "C21" => c21(u),
        "C22" => c22(u)?,
        "C23" => c23(u)?,
        "C24" => c24(u)?,
        other => return Err(Error::Parameter(format!("unknown check id {other:?}"))),
    })
}

fn fmin(md: &MaskDigraph, k: usize) -> (usize, u64) {
    let (v, w, _) = solver::forcing_number_masks(md, k);
    (v, w)
}

fn alpha(g: &Graph) -> usize {
    solver::independence_number(g).expect("within limits").count()
}

fn isqrt(n: usize) -> usize {
    (0..=n).take_while(|r| r * r <= n).last().unwrap_or(0)
}

fn each_oriented(u: &Universe, f: impl Fn(&Tabled, &mut Rec) + Sync + Send) -> Rec {
    Rec::over(u.oriented(), f)
}

fn each_connected(u: &Universe, f: impl Fn(&Profiled, &mut Rec) + Sync + Send) -> Rec {
    Rec::over(u.connected(), f)
}

fn c1(u: &Universe) -> Rec {
    each_oriented(u, |t, r| {
        r.instances += 1;
        let d = &t.d;
        let md = MaskDigraph::new(d);
        for k in 1..t.fk.len() {
            r.require(t.f(k) >= t.f(k + 1), || write_dg(d), Some(k), || json!({ "fk": t.fk }));
        }
        // supersets of a minimum forcing set still force
        let (_, s) = fmin(&md, 1);
        for v in 0..d.n() {
            let sup = s | 1 << v;
            r.require(md.forces(sup, 1, md.full()), || write_dg(d), Some(1), || {
                json!({ "set": VertexSet::from_mask(s), "added": v })
            });
        }
    })
}

fn c2(u: &Universe) -> Rec {
    each_oriented(u, |t, r| {
        if !constructions::is_reachable(&t.d) {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let hi = t.d.max_out_degree().max(1);
        for k in [hi, hi + 1] {
            r.require(t.f(k) == 1, || write_dg(&t.d), Some(k), || json!({ "fk": t.f(k) }));
        }
    })
}

fn c3(u: &Universe) -> Rec {
    each_oriented(u, |t, r| {
        r.instances += 1;
        let lo = t.d.min_out_degree();
        for k in 1..=t.fk.len() {
            let bound = (lo + 1).saturating_sub(k).max(1);
            r.require(t.f(k) >= bound, || write_dg(&t.d), Some(k), || {
                json!({ "fk": t.f(k), "bound": bound })
            });
        }
    })
}

fn c4(u: &Universe) -> Rec {
    each_oriented(u, |t, r| {
        r.instances += 1;
        let d = &t.d;
        let md = MaskDigraph::new(d);
        for k in 1..=t.fk.len() {
            let (value, s) = fmin(&md, k);
            let set = VertexSet::from_mask(s);
            let outcome = forcing::forcing_chains(d, &set, k)
                .map_err(|e| e.to_string())
                .and_then(|forest| {
                    forest.validate(d, k)?;
                    if forest.component_count() != value {
                        return Err(format!("{} chains for |S| = {value}", forest.component_count()));
                    }
                    Ok(())
                });
            if let Err(why) = outcome {
                r.fail(write_dg(d), Some(k), json!({ "set": set, "error": why }));
            }
        }
    })
}

fn c5(u: &Universe) -> Rec {
    each_oriented(u, |t, r| {
        r.instances += 1;
        for k in 1..=t.fk.len() {
            let it = solver::induced_kary_cover_number(&t.d, k).expect("n within cover limit").count();
            r.require(t.f(k) >= it, || write_dg(&t.d), Some(k), || json!({ "fk": t.f(k), "itk": it }));
        }
    })
}

/// Out-star of order `n` (centre 0) and its reversal.
fn out_star(n: usize) -> Result<OrientedGraph> {
    Ok(families::star(n - 1)?.orient_bits(u64::MAX))
}

fn c6(u: &Universe) -> Result<Rec> {
    let mut rec = each_oriented(u, |t, r| {
        r.instances += 1;
        let rev = MaskDigraph::new(&t.d.reversal());
        let back = fmin(&rev, 1).0;
        r.require(back == t.f(1), || write_dg(&t.d), Some(1), || json!({ "f": t.f(1), "f_reversal": back }));
    });
    for n in 3..=8 {
        let d = out_star(n)?;
        let (md, rev) = (MaskDigraph::new(&d), MaskDigraph::new(&d.reversal()));
        for k in 2..n {
            let pair = (fmin(&md, k).0, fmin(&rev, k).0);
            rec.instances += 1;
            if pair != (n - k, n - 1) {
                rec.fail(write_dg(&d), Some(k), json!({ "observed": pair, "expected": (n - k, n - 1) }));
            } else if pair.0 != pair.1 {
                rec.exhibits.push(Exhibit {
                    description: format!("out-star of order {n}, k = {k}: F_k(D) = n − k differs from F_k(D') = n − 1"),
                    instance: write_dg(&d),
                    values: json!({ "order": n, "k": k, "f_k": pair.0, "f_k_reversal": pair.1 }),
                });
            }
        }
    }
    Ok(rec)
}

fn c7(u: &Universe) -> Result<Rec> {
    let mut rec = each_oriented(u, |t, r| {
        let d = &t.d;
        if d.m() == 0 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let reachable = constructions::is_reachable(d);
        let strong = constructions::is_strongly_reachable(d);
        for k in 1..=d.max_out_degree() {
            for (policy, applies) in [
                (RootPolicy::First, reachable),
                (RootPolicy::MinOutDegree, strong),
                (RootPolicy::ReachingSet, true),
            ] {
                match bounds::greedy_forcing_set(d, k, policy) {
                    Ok(c) => {
                        let size = c.set.len() as i64;
                        r.require(
                            applies && size <= c.bound.floor() && c.set.len() >= t.f(k),
                            || write_dg(d),
                            Some(k),
                            || json!({ "policy": format!("{policy:?}"), "size": size, "bound": c.bound, "fk": t.f(k) }),
                        );
                    }
                    Err(Error::Inapplicable(_)) if !applies => {}
                    Err(e) => r.fail(write_dg(d), Some(k), json!({ "policy": format!("{policy:?}"), "error": e.to_string() })),
                }
            }
            let report = bounds::lower_bound_report(d, k).expect("k >= 1");
            let broken: Vec<String> = report
                .violations("F_k", t.f(k))
                .into_iter()
                .filter(|name| report.get(name).is_some_and(|e| e.side == bounds::Side::Upper))
                .collect();
            r.require(broken.is_empty(), || write_dg(d), Some(k), || json!({ "fk": t.f(k), "violated": broken }));
        }
    });
    // complete out-trees: the greedy set, the bound and F_k coincide
    for deg in 1..=4 {
        for layers in 1..=3 {
            let tree = families::greedy_tree(deg, layers)?;
            for k in 1..=deg {
                rec.instances += 1;
                let want = bounds::complete_out_tree_forcing(deg, layers, k);
                let c = bounds::greedy_forcing_set(&tree, k, RootPolicy::Given(0))?;
                let exact = (tree.n() <= solver::SUBSET_LIMIT)
                    .then(|| solver::min_forcing_number(&tree, k).map(|s| s.value))
                    .transpose()?;
                let ok = c.set.len() == want
                    && c.bound.ratio() == num_rational::Ratio::from_integer(want as i64)
                    && exact.is_none_or(|e| e == want);
                rec.require(ok, || write_dg(&tree), Some(k), || {
                    json!({ "greedy": c.set.len(), "bound": c.bound, "exact": exact, "formula": want })
                });
            }
        }
    }
    Ok(rec)
}

fn c8(u: &Universe) -> Result<Rec> {
    let mut rec = each_oriented(u, |t, r| {
        let d = &t.d;
        let comps = d.graph().components();
        if comps.len() < 2 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let parts: Vec<MaskDigraph> = comps
            .into_iter()
            .map(|c| MaskDigraph::new(&d.induced_subgraph(&c.into_iter().collect()).expect("in range").0))
            .collect();
        for k in 1..=t.fk.len() {
            let sum: usize = parts.iter().map(|p| fmin(p, k).0).sum();
            r.require(sum == t.f(k), || write_dg(d), Some(k), || json!({ "fk": t.f(k), "sum": sum }));
        }
    });
    for n in 2..=u.cfg.nmax.min(super::ORIENTATION_UNIVERSE_LIMIT) {
        for g in enumerate::labeled_graphs(n, false)? {
            if g.is_connected() {
                continue;
            }
            rec.instances += 1;
            let kmax = g.max_degree().max(1);
            let direct = solver::extreme_profile(&g, kmax)?;
            for e in &direct {
                let summed = u.extremes(&g, e.k).expect("components are in the universe");
                rec.require(summed == (e.min, e.max), || write_ug(&g), Some(e.k), || {
                    json!({ "direct": (e.min, e.max), "summed": summed })
                });
            }
        }
    }
    Ok(rec)
}

/// Independent oracle: backtracking over edge subsets for a spanning tree with
/// maximum degree at most `cap`.
fn has_spanning_tree(g: &Graph, cap: usize) -> bool {
    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    fn go(g: &Graph, cap: usize, i: usize, need: usize, parent: &mut Vec<usize>, deg: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if g.m() - i < need {
            return false;
        }
        let (a, b) = g.edges()[i];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb && deg[a] < cap && deg[b] < cap {
            let saved = parent[ra];
            parent[ra] = rb;
            deg[a] += 1;
            deg[b] += 1;
            if go(g, cap, i + 1, need - 1, parent, deg) {
                return true;
            }
            deg[a] -= 1;
            deg[b] -= 1;
            parent[ra] = saved;
        }
        go(g, cap, i + 1, need, parent, deg)
    }
    let n = g.n();
    go(g, cap, 0, n.saturating_sub(1), &mut (0..n).collect(), &mut vec![0; n])
}

fn c9(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let g = &p.g;
        let rho = solver::path_cover_number(g).expect("within limit").count();
        r.require(p.mof(1) == rho, || write_ug(g), Some(1), || json!({ "mof": p.mof(1), "rho": rho }));
        for k in 1..=p.kmax() {
            let tk = solver::tree_cover_number(g, k).expect("within limit");
            let spanning = has_spanning_tree(g, k + 1);
            r.require(
                p.mof(k) == tk.count() && (p.mof(k) == 1) == spanning,
                || write_ug(g),
                Some(k),
                || json!({ "mof_k": p.mof(k), "t_k": tk.count(), "spanning_tree": spanning }),
            );
            let count = tk.count();
            let InvariantWitness::Trees(parts) = tk.witness else { unreachable!() };
            let built = constructions::tree_cover_orientation(g, &TreeCover { parts }, k);
            r.require(
                built.as_ref().is_ok_and(|b| b.roots.len() == count),
                || write_ug(g),
                Some(k),
                || json!({ "construction": built.err().map(|e| e.to_string()) }),
            );
        }
    })
}

fn c10(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        let g = &p.g;
        if g.m() == 0 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let (n, big) = (g.n(), g.max_degree());
        for k in 1..=big + 1 {
            let bound = n - k.min(big);
            r.require(p.mof(k) <= bound, || write_ug(g), Some(k), || json!({ "mof_k": p.mof(k), "bound": bound }));
        }
    })
}

fn is_balanced_and_reachable(g: &Graph, bits: u64) -> bool {
    let d = g.orient_bits(bits);
    constructions::is_balanced(&d) && constructions::is_reachable(&d)
}

fn c11(u: &Universe) -> Rec {
    let mut rec = each_connected(u, |p, r| {
        let g = &p.g;
        let (n, big) = (g.n(), g.max_degree());
        let d = constructions::balanced_orientation(g);
        let half = big.div_ceil(2);
        r.require(
            constructions::is_balanced(&d) && d.max_out_degree() <= half,
            || write_ug(g),
            None,
            || json!({ "balanced_orientation": write_dg(&d) }),
        );
        if g.min_degree() < 2 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let rr = constructions::min_reaching_set(&d).r();
        let mof = p.mof(1);
        r.require(
            mof * half <= (half - 1) * n + rr,
            || write_ug(g),
            Some(1),
            || json!({ "mof": mof, "r": rr, "ceil_half_delta": half }),
        );
        if g.is_two_edge_connected() {
            r.require(mof * half < (half - 1) * n + 1 + half, || write_ug(g), Some(1), || {
                json!({ "mof": mof, "ceil_half_delta": half, "r": 1 })
            });
            if !constructions::is_reachable(&d) {
                let found = (0..1u64 << g.m()).find(|&b| is_balanced_and_reachable(g, b));
                r.require(found.is_some(), || write_ug(g), None, || json!({ "balanced_reachable": null }));
                r.notes.push(format!(
                    "constructed balanced orientation of {:?} is not reachable; exhaustive search found bits {:?}",
                    g.edges(),
                    found
                ));
            }
        }
    });
    if rec.notes.len() > 10 {
        let extra = rec.notes.len() - 10;
        rec.notes.truncate(10);
        rec.notes.push(format!("… and {extra} more"));
    }
    rec
}

fn c12() -> Result<Rec> {
    let mut rec = Rec::default();
    for n in 3..=10 {
        let g = families::star(n - 1)?;
        for k in 1..n - 1 {
            rec.instances += 1;
            let v = solver::orientation_extreme(&g, k, Extreme::Min, &ExtremeOptions::exhaustive())?.value;
            rec.require(v == n - k - 1, || write_ug(&g), Some(k), || json!({ "mof_k": v, "formula": n - k - 1 }));
        }
    }
    Ok(rec)
}

fn c13(u: &Universe) -> Result<Rec> {
    let mut rec = each_connected(u, |p, r| {
        r.instances += 1;
        let g = &p.g;
        let n = g.n();
        for mask in 1..(1u64 << n) - 1 {
            let (h, _) = g.induced_subgraph(&VertexSet::from_mask(mask)).expect("in range");
            for k in 1..=p.kmax() {
                let (_, sub) = u.extremes(&h, k).expect("components are in the universe");
                r.require(p.MOF(k) >= sub, || write_ug(g), Some(k), || {
                    json!({ "MOF_k": p.MOF(k), "subset": VertexSet::from_mask(mask), "MOF_k_sub": sub })
                });
            }
        }
    });
    let d = families::gp_graph(6)?;
    let path: VertexSet = (0..6).collect();
    let star: VertexSet = [1, 3, 5, 6].into_iter().collect();
    let f = |d: &OrientedGraph| solver::min_forcing_number(d, 1).map(|s| s.value);
    let fh = f(&d.induced_subgraph(&path)?.0)?;
    let fd = f(&d)?;
    let fk = f(&d.induced_subgraph(&star)?.0)?;
    if (fh, fd, fk) == (1, 2, 3) {
        rec.exhibits.push(Exhibit {
            description: "D_6: induced path H and induced in-star K give F(H) < F(D_6) < F(K)".into(),
            instance: write_dg(&d),
            values: json!({ "F(H)": fh, "F(D_6)": fd, "F(K)": fk, "H": path, "K": star }),
        });
    } else {
        rec.fail(write_dg(&d), Some(1), json!({ "F(H)": fh, "F(D_6)": fd, "F(K)": fk }));
    }
    Ok(rec)
}

fn c14(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        let g = &p.g;
        let bridges = g.bridges();
        if bridges.is_empty() {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        for e in bridges {
            let split = g.without_edge(e);
            for k in 1..=p.kmax() {
                let (_, sum) = u.extremes(&split, k).expect("components are in the universe");
                r.require(p.MOF(k) <= sum, || write_ug(g), Some(k), || {
                    json!({ "bridge": g.edges()[e], "MOF_k": p.MOF(k), "sides": sum })
                });
            }
        }
    })
}

fn c15(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let g = &p.g;
        let delta = g.min_degree();
        for k in 1..=p.kmax() + 1 {
            let bound = (delta / 2 + 1).saturating_sub(k).max(1);
            r.require(p.MOF(k) >= bound, || write_ug(g), Some(k), || json!({ "MOF_k": p.MOF(k), "bound": bound }));
        }
        if delta >= 2 {
            r.require(p.MOF(1) >= delta / 2, || write_ug(g), Some(1), || json!({ "MOF": p.MOF(1), "delta": delta }));
        }
    })
}

fn c16(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let g = &p.g;
        let a = solver::independence_number(g).expect("within limit");
        let InvariantWitness::Set(ref i) = a.witness else { unreachable!() };
        let a = a.count();
        let away = constructions::orient_away_from(g, i).expect("independent");
        let md = MaskDigraph::new(&away);
        for k in 1..=p.kmax() + 1 {
            let ok = p.MOF(k) >= a && (k < g.max_degree() || p.MOF(k) == a) && fmin(&md, k).0 >= a;
            r.require(ok, || write_ug(g), Some(k), || {
                json!({ "MOF_k": p.MOF(k), "alpha": a, "f_away": fmin(&md, k).0 })
            });
        }
    })
}

fn c17(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        let g = &p.g;
        let (n, m) = (g.n(), g.m());
        let h = bounds::dense_subgraph(g).expect("n >= 1");
        let (sub, _) = g.induced_subgraph(&h).expect("in range");
        r.require(!h.is_empty() && sub.min_degree() * n >= m, || write_ug(g), None, || {
            json!({ "dense_subgraph": h, "min_degree": sub.min_degree() })
        });
        if g.min_degree() < 2 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let bound = (2 * m + n) / (4 * n);
        r.require(p.MOF(1) >= bound, || write_ug(g), Some(1), || json!({ "MOF": p.MOF(1), "bound": bound }));
    })
}

fn c18(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let bound = isqrt(p.g.n()) / 2;
        r.require(p.MOF(1) >= bound, || write_ug(&p.g), Some(1), || json!({ "MOF": p.MOF(1), "bound": bound }));
    })
}

fn c19(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let g = &p.g;
        let n = g.n();
        let best = p.MOF(1);
        // a realizing orientation, as the statement quantifies
        let out = g.orient_bits(p.at(1).max_bits).out_masks();
        for mask in 1..=crate::kernel::full_mask(n) {
            // H induced on `mask`; the other vertices become isolated, so
            // F of the masked digraph is F(H) + n − |H|
            let masked: Vec<u64> = (0..n).map(|v| if mask >> v & 1 == 1 { out[v] & mask } else { 0 }).collect();
            let bound = fmin(&MaskDigraph::from_out_masks(masked), 1).0;
            let size = mask.count_ones() as usize;
            let (h, _) = g.induced_subgraph(&VertexSet::from_mask(mask)).expect("in range");
            let (_, mof_h) = u.extremes(&h, 1).expect("components are in the universe");
            r.require(best <= bound && bound <= mof_h + n - size, || write_ug(g), Some(1), || {
                json!({ "MOF": best, "subset": VertexSet::from_mask(mask), "F(H)+n-|H|": bound, "MOF(H)+n-|H|": mof_h + n - size })
            });
        }
    })
}

fn c20(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let mim = solver::induced_matching_number(&p.g).expect("within limit").count();
        r.require(p.MOF(1) + mim <= p.g.n(), || write_ug(&p.g), Some(1), || json!({ "MOF": p.MOF(1), "mim": mim }));
    })
}

fn c21(u: &Universe) -> Rec {
    each_connected(u, |p, r| {
        r.instances += 1;
        let w = solver::clique_number(&p.g).expect("within limit").count();
        // MOF ≤ n − log₂(ω)/2  ⇔  ω ≤ 4^(n − MOF)
        let slack = p.g.n() - p.MOF(1);
        let ok = slack >= 32 || (w as u128) <= 1u128 << (2 * slack);
        r.require(ok, || write_ug(&p.g), Some(1), || json!({ "MOF": p.MOF(1), "omega": w }));
    })
}

fn trees(u: &Universe) -> Result<impl Iterator<Item = Graph>> {
    let mut all: Vec<Box<dyn Iterator<Item = Graph>>> = Vec::new();
    for n in 1..=u.cfg.tree_nmax {
        all.push(enumerate::labeled_trees(n)?);
    }
    Ok(all.into_iter().flatten())
}

fn c22(u: &Universe) -> Result<Rec> {
    Ok(Rec::over_stream(trees(u)?, |t, r| {
        r.instances += 1;
        let a = alpha(t);
        let profile = u.tree_profile(t);
        for e in &profile {
            r.require(e.max == a, || write_ug(t), Some(e.k), || json!({ "MOF_k": e.max, "alpha": a }));
        }
    }))
}

fn c23(u: &Universe) -> Result<Rec> {
    let mut rec = each_connected(u, |p, r| {
        let g = &p.g;
        if g.m() == 0 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let n = g.n();
        let big = g.max_degree();
        let rho = solver::path_cover_number(g).expect("within limit").count();
        let a = alpha(g);
        for k in 1..=big {
            let chain = [p.mof(big), p.mof(k), p.mof(1), rho, a, p.MOF(big), p.MOF(k), p.MOF(1), n - 1];
            let ok = chain.windows(2).all(|w| w[0] <= w[1]) && p.mof(1) == rho && a == p.MOF(big);
            r.require(ok, || write_ug(g), Some(k), || json!({ "chain": chain }));
        }
    });
    for x in 1..=3 {
        for y in x..=7 - x {
            let g = families::complete_bipartite(x, y)?;
            let n = x + y;
            rec.instances += 1;
            let best = solver::max_oriented_forcing(&g, 1)?.value;
            let one_way = g.orient_bits(u64::MAX);
            let f = solver::min_forcing_number(&one_way, 1)?.value;
            if best == n - 1 && f == n - 1 {
                rec.exhibits.push(Exhibit {
                    description: format!("K_{{{x},{y}}} with every edge from the first part attains MOF = n − 1"),
                    instance: write_dg(&one_way),
                    values: json!({ "x": x, "y": y, "MOF": best, "F": f }),
                });
            } else {
                rec.fail(write_ug(&g), Some(1), json!({ "MOF": best, "F_one_way": f, "n_minus_1": n - 1 }));
            }
        }
    }
    Ok(rec)
}

/// Path between `u` and `v` in a tree, from `u`.
fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let dist = t.distances_from(v);
    let mut path = vec![u];
    let mut at = u;
    while at != v {
        at = *t
            .neighbors(at)
            .iter()
            .find(|&&w| dist[w] == dist[at].map(|d| d - 1))
            .expect("a tree is connected");
        path.push(at);
    }
    path
}

/// Independence number of a forest by the include/exclude DP.
fn forest_alpha(f: &Graph) -> usize {
    let n = f.n();
    let mut seen = vec![false; n];
    let (mut with, mut without) = (vec![1usize; n], vec![0usize; n]);
    let mut total = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        // preorder with parents, then fold children into parents in reverse
        let mut order = vec![(root, usize::MAX)];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let (v, _) = order[i];
            for &w in f.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, v));
                }
            }
            i += 1;
        }
        for &(v, parent) in order.iter().rev() {
            if parent != usize::MAX {
                with[parent] += without[v];
                without[parent] += with[v].max(without[v]);
            }
        }
        total += with[root].max(without[root]);
    }
    total
}

/// Farthest vertex from `s` (smallest index among ties) and its distance.
fn farthest(t: &Graph, s: usize) -> (usize, usize) {
    t.distances_from(s)
        .into_iter()
        .enumerate()
        .fold((s, 0), |best, (v, d)| match d {
            Some(d) if d > best.1 => (v, d),
            _ => best,
        })
}

fn c24(u: &Universe) -> Result<Rec> {
    Ok(Rec::over_stream(trees(u)?, |t, r| {
        let n = t.n();
        // double sweep: u0 is an end of a longest path, v0 the other end
        let (u0, _) = farthest(t, 0);
        let (v0, diam) = farthest(t, u0);
        if diam < 3 {
            r.skipped += 1;
            return;
        }
        r.instances += 1;
        let a = forest_alpha(t);
        for (uu, vv) in [(u0, v0), (v0, u0)] {
            let path = tree_path(t, uu, vv);
            let (w, z) = (path[1], path[2]);
            let leaves: Vec<usize> = t.neighbors(w).iter().copied().filter(|&y| t.degree(y) == 1).collect();
            let others_are_leaves = t.neighbors(w).iter().all(|&y| y == z || t.degree(y) == 1);
            let q = leaves.len();
            let removed: VertexSet = leaves.iter().copied().chain([w]).collect();
            let keep = VertexSet::full(n).difference(&removed);
            let (star_free, _) = t.induced_subgraph(&keep).expect("in range");
            let a_star = forest_alpha(&star_free);
            let ok = others_are_leaves && t.degree(z) > 1 && star_free.is_tree() && a_star + q <= a;
            r.require(ok, || write_ug(t), None, || {
                json!({ "u": uu, "v": vv, "w": w, "z": z, "q": q, "alpha": a, "alpha_star": a_star })
            });
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_tree_oracle() {
        let star = families::star(4).unwrap();
        assert!(has_spanning_tree(&star, 4));
        assert!(!has_spanning_tree(&star, 3));
        assert!(has_spanning_tree(&families::cycle(5).unwrap(), 2));
        assert!(!has_spanning_tree(&Graph::empty(2), 5));
        assert!(has_spanning_tree(&Graph::empty(1), 1));
    }

    #[test]
    fn forest_alpha_matches_solver() {
        for n in 2..=8 {
            for t in enumerate::labeled_trees(n).unwrap().step_by(7) {
                assert_eq!(forest_alpha(&t), alpha(&t));
                let f = t.without_edge(0);
                assert_eq!(forest_alpha(&f), alpha(&f));
            }
        }
    }

    #[test]
    fn double_sweep_finds_diameter() {
        let p = families::path(6).unwrap();
        assert_eq!(farthest(&p, 2), (5, 3));
        assert_eq!(farthest(&p, 5), (0, 5));
    }

    #[test]
    fn tree_path_walks_the_tree() {
        let p = families::path(5).unwrap();
        assert_eq!(tree_path(&p, 4, 1), vec![4, 3, 2, 1]);
    }
}
