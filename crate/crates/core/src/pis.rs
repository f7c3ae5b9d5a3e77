//! Construction of the prime ideal sum graph of a ring spec.
//!
//! Vertices are the nonzero proper ideals in canonical (lexicographic)
//! order; two distinct ideals are adjacent exactly when their sum is a
//! prime ideal of the product ring.

use crate::graph::Graph;
use crate::ring::{IdealVector, RingSpec};
use thiserror::Error;

/// The prime ideal sum graph of a spec, with its vertex-to-ideal mapping.
#[derive(Debug, Clone)]
pub struct PisGraph {
    pub spec: RingSpec,
    pub graph: Graph,
    pub vertex_ideals: Vec<IdealVector>,
    pub labels: Vec<String>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("a field has no nonzero proper ideal, so its graph is empty")]
    EmptyGraph,
}

/// True exactly for the product of two fields, the one disconnected case.
pub fn is_disconnected_case(spec: &RingSpec) -> bool {
    spec.nilpotencies() == [1, 1]
}

pub fn build_pis(spec: &RingSpec) -> Result<PisGraph, BuildError> {
    let vertex_ideals = spec.vertices();
    if vertex_ideals.is_empty() {
        return Err(BuildError::EmptyGraph);
    }
    let n = vertex_ideals.len();
    let mut graph = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let sum = spec.ideal_sum(&vertex_ideals[i], &vertex_ideals[j]);
            if spec.is_prime_ideal(&sum) {
                graph.add_edge(i, j);
            }
        }
    }
    let labels = vertex_ideals.iter().map(|v| spec.label(v)).collect();
    Ok(PisGraph {
        spec: spec.clone(),
        graph,
        vertex_ideals,
        labels,
    })
}

impl PisGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Index of an ideal in the canonical vertex order.
    pub fn index_of(&self, ideal: &IdealVector) -> Option<usize> {
        self.vertex_ideals.binary_search(ideal).ok()
    }

    /// DOT export with quoted ideal labels as node names, vertices and edges
    /// in canonical order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph pis {\n");
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for (i, j) in self.graph.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.labels[i], self.labels[j]));
        }
        out.push_str("}\n");
        out
    }
}
