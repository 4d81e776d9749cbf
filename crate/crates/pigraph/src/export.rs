//! DOT and JSON emission for lattices and graphs.

use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::InvariantReport;
use crate::lattice::Lattice;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct LatticeEntry {
    pub id: usize,
    pub order: usize,
    /// Membership bitset, hex encoded (little-endian bytes).
    pub members: String,
    pub is_normal: bool,
    pub generator_witness: Vec<usize>,
}

pub fn lattice_entries(lattice: &Lattice) -> Vec<LatticeEntry> {
    lattice
        .subgroups()
        .iter()
        .enumerate()
        .map(|(id, s)| LatticeEntry {
            id,
            order: s.order,
            members: s.members.to_hex(),
            is_normal: lattice.is_normal_id(id),
            generator_witness: s.witness.clone(),
        })
        .collect()
}

/// The lattice export is a JSON array, one entry per subgroup in canonical
/// order.
pub fn lattice_json(lattice: &Lattice) -> String {
    let mut out = serde_json::to_string_pretty(&lattice_entries(lattice)).unwrap();
    out.push('\n');
    out
}

/// DOT rendering of a lattice-indexed graph: vertices carry order and id,
/// normal subgroups are double-circled, labeled edges carry their prime.
pub fn graph_dot(lattice: &Lattice, graph: &Graph) -> String {
    let mut out = String::from("graph prime_index {\n");
    for (id, s) in lattice.subgroups().iter().enumerate() {
        let peripheries = if lattice.is_normal_id(id) {
            ", peripheries=2"
        } else {
            ""
        };
        out.push_str(&format!(
            "  n{id} [label=\"order={},id={id}\"{peripheries}];\n",
            s.order
        ));
    }
    for e in &graph.edges {
        match e.label {
            Some(p) => out.push_str(&format!("  n{} -- n{} [label=\"{p}\"];\n", e.a, e.b)),
            None => out.push_str(&format!("  n{} -- n{};\n", e.a, e.b)),
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
struct GraphJson<'a> {
    schema: u32,
    group: String,
    vertices: Vec<LatticeEntry>,
    edges: Vec<(usize, usize, usize)>,
    invariants: &'a InvariantReport,
}

pub fn graph_json(
    group_spec: &str,
    lattice: &Lattice,
    graph: &Graph,
    invariants: &InvariantReport,
) -> String {
    let doc = GraphJson {
        schema: SCHEMA_VERSION,
        group: group_spec.to_string(),
        vertices: lattice_entries(lattice),
        edges: graph
            .edges
            .iter()
            .map(|e| (e.a, e.b, e.label.unwrap_or(0)))
            .collect(),
        invariants,
    };
    let mut out = serde_json::to_string_pretty(&doc).unwrap();
    out.push('\n');
    out
}
