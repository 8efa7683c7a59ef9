//! Combinatorial invariants, regularity bounds and an exact Betti-table
//! oracle for binomial edge ideals `J_G` of simple graphs, with a focus on
//! generalized block graphs.

pub mod chordal;
pub mod cutset;
pub mod error;
pub mod gbg;
pub mod graph;
pub mod invariants;
pub mod oracle;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
