//! A laboratory for the Mostar index of small connected graphs.
//!
//! The Mostar index of a graph G is the sum, over all edges uv, of
//! |n_u - n_v|, where n_u counts the vertices strictly closer to u than
//! to v and n_v counts those strictly closer to v. This crate computes
//! the index exactly, builds the extremal graph families that cut-edge
//! counting arguments single out, evaluates the associated closed-form
//! bounds, and exhaustively checks a catalogue of claimed inequalities
//! over every labeled connected graph of small order, reporting each
//! claim as held, partially held, or refuted with replayable
//! counterexamples.
//!
//! Everything is integer arithmetic on graphs of at most 64 vertices;
//! exhaustive enumeration is capped at 8 vertices.

pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod mostar;
pub mod report;
pub mod transforms;
pub mod verify;

pub use error::GraphError;
pub use graph::{Edge, Graph, INFINITE, MAX_ORDER};
