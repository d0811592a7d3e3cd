//! Subgraph complementation to H-free graph classes.
//!
//! `G ⊕ S` flips every adjacency with both ends in `S`. This crate decides
//! whether some `S` puts `G ⊕ S` into a target class: exhaustively for any
//! pattern `H`, and in polynomial time for subclasses of `K_t`-free graphs.
//! It also builds the reduction gadgets that make the problem hard for
//! stars, paths and cycles, with the certificate maps between formula
//! assignments and vertex sets.

pub mod gadget;
pub mod graph;
pub mod sat;
pub mod solve;
pub mod split;
pub mod verify;

pub use graph::{Graph, GraphError, PatternSpec, VertexSet};
