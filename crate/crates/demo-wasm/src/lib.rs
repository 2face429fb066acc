//! Browser bindings: three operations returning JSON strings for the page
//! in `www/`. The plain functions are what the tests call; the
//! `wasm_bindgen` wrappers turn errors into JS exceptions.

use std::sync::Arc;

use gencay_core::automorphism::involution_conjugacy_classes;
use gencay_core::catalog::build_str;
use gencay_core::criteria::{bipartite_algebraic, connected_algebraic};
use gencay_core::gcs::{alpha_partition, enumerate_gcs, validate_gcs};
use gencay_core::graph::{build_gc_graph, integral_spectrum, Bipartition};
use gencay_core::notation::{parse_alpha, parse_element_set};
use gencay_core::FiniteGroup;
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Larger groups make the automorphism search too slow for a page.
const DEMO_ORDER_LIMIT: usize = 32;

fn group(expr: &str) -> Result<Arc<FiniteGroup>, String> {
    let g = build_str(expr).map_err(|e| e.to_string())?;
    if g.order() > DEMO_ORDER_LIMIT {
        return Err(format!("the demo handles groups of order at most {DEMO_ORDER_LIMIT}"));
    }
    Ok(Arc::new(g))
}

fn to_json(v: impl Serialize) -> Result<String, String> {
    serde_json::to_string(&v).map_err(|e| e.to_string())
}

/// Involution classes of Aut(G) with their partition sizes.
pub fn involutions_json(expr: &str) -> Result<String, String> {
    let g = group(expr)?;
    let classes = involution_conjugacy_classes(&g).map_err(|e| e.to_string())?;
    let rows: Vec<_> = classes
        .iter()
        .map(|c| {
            let p = alpha_partition(&g, &c[0]).expect("involutions partition the group");
            json!({
                "alpha": c[0].describe(&g),
                "size": c.len(),
                "omega": g.set_names(&p.omega),
                "Omega": g.set_names(&p.big_omega),
            })
        })
        .collect();
    to_json(json!({ "group": g.name(), "order": g.order(), "classes": rows }))
}

/// Every valid subset of the given size.
pub fn enumerate_json(expr: &str, alpha: &str, size: usize) -> Result<String, String> {
    let g = group(expr)?;
    let a = parse_alpha(&g, alpha).map_err(|e| e.to_string())?;
    let subsets = enumerate_gcs(&g, &a, size).map_err(|e| e.to_string())?;
    to_json(json!({
        "alpha": a.describe(&g),
        "subsets": subsets.iter().map(|s| s.names()).collect::<Vec<_>>(),
    }))
}

/// Verdicts and the graph itself for one `(G, α, S)`.
pub fn analyze_json(expr: &str, alpha: &str, set: &str) -> Result<String, String> {
    let g = group(expr)?;
    let a = parse_alpha(&g, alpha).map_err(|e| e.to_string())?;
    let members = parse_element_set(&g, set).map_err(|e| e.to_string())?;
    let s = validate_gcs(&g, &a, &members).map_err(|e| e.to_string())?;
    let graph = build_gc_graph(&s).map_err(|e| e.to_string())?;
    let connectivity = connected_algebraic(&s);
    let witness = if g.is_abelian() {
        bipartite_algebraic(&s).map_err(|e| e.to_string())?.witness.map(|w| format!("{} = {}", w.text, w.product))
    } else {
        None
    };
    let (colouring, odd_cycle) = match graph.bipartition() {
        Bipartition::Coloring(c) => (Some(c), None),
        Bipartition::OddCycle(c) => (None, Some(c)),
    };
    let spectrum = integral_spectrum(&graph).map_err(|e| e.to_string())?;
    to_json(json!({
        "subset": s.names(),
        "connected": graph.is_connected(),
        "branch": connectivity.branch.to_string(),
        "bipartite": colouring.is_some(),
        "colouring": colouring,
        "odd_cycle": odd_cycle,
        "witness": witness,
        "integral": spectrum.integral,
        "eigenvalues": spectrum.roots,
        "remainder": (!spectrum.integral).then(|| spectrum.remainder.to_string()),
        "labels": graph.labels(),
        "edges": graph.edges(),
    }))
}

#[wasm_bindgen]
pub fn involutions(expr: &str) -> Result<String, JsError> {
    involutions_json(expr).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn enumerate(expr: &str, alpha: &str, size: usize) -> Result<String, JsError> {
    enumerate_json(expr, alpha, size).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(expr: &str, alpha: &str, set: &str) -> Result<String, JsError> {
    analyze_json(expr, alpha, set).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn analyze_product_example() {
        let v = parse(
            &analyze_json(
                "Z2^2 x Z6",
                "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)",
                "(1,0,0),(0,0,2),(0,0,4)",
            )
            .unwrap(),
        );
        assert_eq!(v["bipartite"], false);
        assert_eq!(v["witness"], "(0,0,2)^3 = (0,0,0)");
        assert_eq!(v["edges"].as_array().unwrap().len(), 36);
    }

    #[test]
    fn enumerate_and_involutions() {
        let v = parse(&enumerate_json("Q8", "a->a^-1, b->b", 3).unwrap());
        assert!(!v["subsets"].as_array().unwrap().is_empty());
        let v = parse(&involutions_json("D8").unwrap());
        assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn errors_are_messages() {
        assert!(analyze_json("D8", "a->a^-1, b->ab", "a").unwrap_err().contains("omega"));
        assert!(involutions_json("S5").is_err());
    }
}
