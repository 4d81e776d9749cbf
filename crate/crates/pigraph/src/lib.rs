//! Finite-group computation engine: builds permutation groups from a small
//! definition language, enumerates complete subgroup lattices with a
//! completeness certificate, derives the prime index graph and the
//! index-weighted digraph, and verifies a fixed suite of structural theorems
//! over a curated corpus.

pub mod arith;
pub mod bitset;
pub mod cli;
pub mod export;
pub mod graph;
pub mod group;
pub mod groupdef;
pub mod harness;
pub mod invariants;
pub mod lattice;
pub mod perm;

pub use graph::{Graph, WeightedDigraph};
pub use group::{Group, GroupError, Quotient, DEFAULT_CAP};
pub use groupdef::{parse_group_definition, parse_permutation, GroupSpec, ParseError};
pub use invariants::InvariantReport;
pub use lattice::{Lattice, Subgroup};
pub use perm::Permutation;
