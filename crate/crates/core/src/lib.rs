//! Convex and isometric domination on dominating pair graphs.
//!
//! The crate computes the convex domination number of chordal dominating
//! pair graphs from hulls of at most four seed vertices, the isometric
//! domination number of graphs with a known dominating pair, recognizes the
//! graph classes involved, and builds the split-graph reduction gadget. Every
//! polynomial solver has an exhaustive counterpart for cross-checking at
//! small sizes.

pub mod bitset;
pub mod convexity;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod recognition;
pub mod record;
pub mod reduction;

/// Vertex ids are dense indices `0..n`.
pub type Vertex = usize;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
