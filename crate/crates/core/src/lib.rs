//! Trees that maximize the Sombor index for a prescribed sequence of
//! internal-vertex degrees.
//!
//! [`construct`] builds the greedy candidate, [`verify`] holds the exhaustive
//! oracle and local probes, [`experiments`] sweeps whole families of degree
//! sequences, and [`cli`] wires everything to the `sombor` binary.

pub mod cli;
pub mod construct;
pub mod experiments;
pub mod graph;
pub mod verify;

pub use construct::construct_max_tree;
pub use graph::{sombor_index, DegreeSequence, Tree};
