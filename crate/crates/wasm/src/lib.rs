//! Browser bindings: each exported function takes plain strings and returns
//! a JSON string, so the page needs no generated glue beyond wasm-bindgen.
//! Errors come back as `{"error": "..."}` objects.

use pis_core::graph::reduce_by_closed_neighborhoods;
use pis_core::report::{analyze_text, parse_range, run_sweep, AnalyzeOptions, Family};
use pis_core::sdim::SdimMethod;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Full analysis report for a ring spec, as the CLI's JSON plus witness
/// labels per method.
#[wasm_bindgen]
pub fn analyze(spec: &str, oracle: bool, oracle_cap: usize) -> String {
    match analyze_text(spec, AnalyzeOptions { oracle, oracle_cap }) {
        Ok(analysis) => {
            #[derive(Serialize)]
            struct MethodView {
                method: &'static str,
                value: Option<u64>,
                witness: Option<Vec<String>>,
                note: Option<String>,
            }
            let methods: Vec<MethodView> = analysis
                .detail
                .methods
                .iter()
                .map(|m| MethodView {
                    method: m.method.name(),
                    value: m.value,
                    witness: m.witness_labels.clone(),
                    note: m.note.clone(),
                })
                .collect();
            let report = serde_json::to_value(&analysis.report).expect("report serializes");
            let mut object = report;
            object["methods"] = serde_json::to_value(methods).expect("methods serialize");
            if let Some(note) = &analysis.detail.scope_note {
                object["scope_note"] = serde_json::Value::String(note.clone());
            }
            object.to_string()
        }
        Err(e) => error_json(&e.to_string()),
    }
}

/// Vertex/edge lists plus highlight sets for drawing: the maximum clique,
/// the canonical minimum strong resolving set, and the closed-neighborhood
/// class of each vertex.
#[wasm_bindgen]
pub fn graph_view(spec: &str) -> String {
    match graph_view_impl(spec) {
        Ok(json) => json,
        Err(e) => error_json(&e),
    }
}

fn graph_view_impl(spec: &str) -> Result<String, String> {
    let analysis =
        analyze_text(spec, AnalyzeOptions::default()).map_err(|e| e.to_string())?;
    let pis = &analysis.pis;
    let reduced = reduce_by_closed_neighborhoods(&pis.graph);
    let mut class_of = vec![0usize; pis.vertex_count()];
    for (c, members) in reduced.classes.iter().enumerate() {
        for &v in members {
            class_of[v] = c;
        }
    }
    let resolving: Vec<usize> = analysis
        .detail
        .methods
        .iter()
        .find(|m| m.method == SdimMethod::VertexCover)
        .and_then(|m| m.witness_labels.as_ref())
        .map(|labels| {
            labels
                .iter()
                .map(|l| pis.labels.iter().position(|x| x == l).expect("label exists"))
                .collect()
        })
        .unwrap_or_default();

    #[derive(Serialize)]
    struct View {
        spec: String,
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
        clique: Vec<usize>,
        resolving: Vec<usize>,
        class_of: Vec<usize>,
        sdim: u64,
        clique_size: u64,
        diameter: u32,
    }
    let view = View {
        spec: analysis.report.spec.clone(),
        vertices: pis.labels.clone(),
        edges: pis.graph.edges(),
        clique: analysis.detail.clique_witness_indices.clone(),
        resolving,
        class_of,
        sdim: analysis.report.sdim.vertex_cover,
        clique_size: analysis.report.clique.size,
        diameter: analysis.report.diameter,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

/// Family sweep rows comparing computed sdim against the closed forms.
#[wasm_bindgen]
pub fn verify_family(family: &str, range: &str) -> String {
    let family = match family {
        "fields" => Family::Fields,
        "unique" => Family::Unique,
        "chainpir" => Family::ChainPir,
        "mixed" => Family::Mixed,
        other => return error_json(&format!("unknown family `{other}`")),
    };
    let range = match parse_range(range) {
        Ok(r) => r,
        Err(e) => return error_json(&e.to_string()),
    };
    let rows = match run_sweep(family, &range) {
        Ok(rows) => rows,
        Err(e) => return error_json(&e.to_string()),
    };
    #[derive(Serialize)]
    struct Row {
        spec: String,
        class: String,
        vertices: u64,
        skipped: Option<String>,
        sdim: Option<u64>,
        predictions: Vec<(String, u64, String)>,
        ok: bool,
    }
    let rows: Vec<Row> = rows
        .into_iter()
        .map(|r| Row {
            spec: r.spec,
            class: r.class,
            vertices: r.vertices,
            skipped: r.skipped,
            sdim: r.sdim,
            predictions: r
                .predictions
                .into_iter()
                .map(|(id, v, s)| (id, v, s.to_string()))
                .collect(),
            ok: r.ok,
        })
        .collect();
    serde_json::to_string(&rows).expect("rows serialize")
}

/// DOT text for the spec's graph, for copy-paste into graphviz.
#[wasm_bindgen]
pub fn graph_dot(spec: &str) -> String {
    match analyze_text(spec, AnalyzeOptions::default()) {
        Ok(analysis) => analysis.pis.to_dot(),
        Err(e) => error_json(&e.to_string()),
    }
}

fn error_json(message: &str) -> String {
    serde_json::json!({ "error": message }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_returns_report_with_methods() {
        let out = analyze("Z(4) x Z(9)", true, 14);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"], 7);
        assert_eq!(v["sdim"]["vertex_cover"], 4);
        assert!(v["methods"].as_array().unwrap().len() >= 2);
    }

    #[test]
    fn analyze_error_shape() {
        let out = analyze("F x F", false, 14);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], "disconnected: product of two fields");
    }

    #[test]
    fn graph_view_highlights_are_consistent() {
        let out = graph_view("F x F x F");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
        assert_eq!(v["edges"].as_array().unwrap().len(), 9);
        assert_eq!(v["clique"].as_array().unwrap().len(), 3);
        assert_eq!(v["resolving"].as_array().unwrap().len(), 3);
        assert_eq!(v["sdim"], 3);
    }

    #[test]
    fn verify_family_rows() {
        let out = verify_family("fields", "n=3..4");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0]["sdim"], 3);
        assert_eq!(rows[1]["sdim"], 10);
        assert_eq!(verify_family("nope", "n=1"), error_json("unknown family `nope`"));
    }
}
