use serde::Serialize;

use crate::geometry::{PlanarGraph, WeightedTree};
use crate::length::Backend;

/// Size summary of one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceDigest {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
}

impl InstanceDigest {
    pub fn tree(name: &str, t: &WeightedTree) -> Self {
        InstanceDigest { name: name.into(), vertices: t.len(), edges: t.edges().len() }
    }

    pub fn graph(name: &str, g: &PlanarGraph) -> Self {
        InstanceDigest { name: name.into(), vertices: g.len(), edges: g.edges().len() }
    }
}

/// Machine-readable record of one CLI run. Everything except `duration_ms`
/// is a function of the command line and the inputs.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport<T: Serialize> {
    pub command: Vec<String>,
    pub seed: Option<u64>,
    pub backend: Backend,
    pub instances: Vec<InstanceDigest>,
    pub solution: T,
    pub duration_ms: f64,
}

impl<T: Serialize> RunReport<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
