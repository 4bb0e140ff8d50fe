//! Proof-search engine for Hadwiger's Conjecture restricted to graphs with
//! independence number two.
//!
//! The crate mechanically proves statements of the form "every minimal
//! counterexample to Hadwiger's Conjecture with no stable triple contains G
//! as an induced subgraph" by a deterministic DFS over one-vertex graph
//! extensions, with SAT-decided four-clique-cover pruning. It reproduces the
//! published proof forest's exact count/weight accounting and classifies
//! triangle-free Ramsey graphs by dominating structure.

pub mod catalog;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod ramsey;
pub mod search;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use graph::{EdgeKey, LabeledGraph, MatchClassification, NeighborhoodSet};
