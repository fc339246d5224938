//! Browser front end: three operations on pasted `.ug`/`.dg` text, each
//! returning a JSON string. The plain functions are usable (and tested)
//! natively; the `#[wasm_bindgen]` wrappers only convert errors.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use oriented_forcing::bounds::{self, RootPolicy};
use oriented_forcing::io::{parse_dg, parse_ug};
use oriented_forcing::solver::{self, Witness};
use oriented_forcing::{closure, OrientedGraph, VertexSet};

/// Largest edge count the page will enumerate orientations for.
pub const DEMO_EDGE_LIMIT: usize = 16;

fn arcs(d: &OrientedGraph) -> Vec<(usize, usize)> {
    d.arcs().collect()
}

fn parse_set(csv: &str) -> Result<VertexSet, String> {
    csv.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("{t:?} is not a vertex index")))
        .collect()
}

/// Runs the rule from `set` and lists each round's `(forcer, forced)` pairs.
pub fn forcing_trace_json(dg: &str, set: &str, k: usize) -> Result<String, String> {
    let d = parse_dg(dg).map_err(|e| e.to_string())?;
    let s = parse_set(set)?;
    let t = closure(&d, &s, k).map_err(|e| e.to_string())?;
    let out = json!({
        "n": d.n(),
        "arcs": arcs(&d),
        "initial": t.initial,
        "rounds": t.rounds,
        "final": t.final_set,
        "forcing": t.final_set.len() == d.n(),
    });
    Ok(out.to_string())
}

fn orientation_value(w: &Witness) -> Value {
    match w {
        Witness::Orientation { orientation, forcing_set, .. } => {
            json!({ "arcs": arcs(orientation), "forcing_set": forcing_set })
        }
        Witness::ForcingSet { set } => json!({ "forcing_set": set }),
    }
}

/// `mof_k` and `MOF_k` of an undirected graph, with realizing orientations.
pub fn extremes_json(ug: &str, k: usize) -> Result<String, String> {
    let g = parse_ug(ug).map_err(|e| e.to_string())?;
    if g.m() > DEMO_EDGE_LIMIT {
        return Err(format!("{} edges; the page enumerates at most {DEMO_EDGE_LIMIT}", g.m()));
    }
    let lo = solver::min_oriented_forcing(&g, k).map_err(|e| e.to_string())?;
    let hi = solver::max_oriented_forcing(&g, k).map_err(|e| e.to_string())?;
    let out = json!({
        "n": g.n(),
        "edges": g.edges(),
        "k": k,
        "mof": lo.value,
        "MOF": hi.value,
        "min": orientation_value(&lo.witness),
        "max": orientation_value(&hi.witness),
    });
    Ok(out.to_string())
}

/// Greedy forcing set with its certificate and the applicable bound.
pub fn greedy_json(dg: &str, k: usize) -> Result<String, String> {
    let d = parse_dg(dg).map_err(|e| e.to_string())?;
    let c = bounds::greedy_forcing_set(&d, k, RootPolicy::Auto).map_err(|e| e.to_string())?;
    let exact = solver::min_forcing_number(&d, k).map(|r| r.value).ok();
    let mut out = serde_json::to_value(&c).map_err(|e| e.to_string())?;
    out["arcs"] = json!(arcs(&d));
    out["exact"] = json!(exact);
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn forcing_trace(dg: &str, set: &str, k: usize) -> Result<String, JsValue> {
    forcing_trace_json(dg, set, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn extremes(ug: &str, k: usize) -> Result<String, JsValue> {
    extremes_json(ug, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn greedy(dg: &str, k: usize) -> Result<String, JsValue> {
    greedy_json(dg, k).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P6_FORWARD: &str = "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n";

    #[test]
    fn trace_of_forward_path() {
        let v: Value = serde_json::from_str(&forcing_trace_json(P6_FORWARD, "0", 1).unwrap()).unwrap();
        assert_eq!(v["forcing"], true);
        assert_eq!(v["rounds"].as_array().unwrap().len(), 5);
        assert!(forcing_trace_json(P6_FORWARD, "0,x", 1).is_err());
    }

    #[test]
    fn path_extremes() {
        let v: Value = serde_json::from_str(&extremes_json(P6_FORWARD, 1).unwrap()).unwrap();
        assert_eq!((v["mof"].as_u64(), v["MOF"].as_u64()), (Some(1), Some(3)));
        assert_eq!(v["max"]["forcing_set"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn greedy_on_forward_path() {
        let v: Value = serde_json::from_str(&greedy_json(P6_FORWARD, 1).unwrap()).unwrap();
        assert_eq!(v["set"], json!([0]));
        assert_eq!(v["exact"], 1);
        assert!(greedy_json(P6_FORWARD, 0).is_err());
    }
}
