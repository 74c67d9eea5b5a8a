//! List 3-coloring for ordered graphs.
//!
//! The crate bundles an exact data model for ordered graphs, an exhaustive
//! reference solver, polynomial kernels (propagation, 2-SAT, chordal DP), two
//! polynomial algorithms for pattern-free inputs, a complexity classifier for
//! single forbidden patterns, and generators for hardness gadgets.

pub mod format;
pub mod hardness_forge;
pub mod j16_solver;
pub mod jw_solver;
pub mod ordered_core;
pub mod pattern_catalog;
pub mod poly_kernels;
pub mod reference_oracle;
pub mod sampling;

pub use ordered_core::{Color, ColorSet, Coloring, Instance, ListAssignment, OrderedGraph, Position, VertexId};
