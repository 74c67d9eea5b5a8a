//! Ordered graphs, list assignments and the structural primitives the solvers share.

mod error;
mod graph;
mod lists;
mod matching;
mod position;
mod sequence;
mod structure;

pub use error::GraphError;
pub use graph::{edge, Edge, OrderedGraph, VertexId};
pub use lists::{Color, ColorSet, Coloring, Instance, ListAssignment, Profile, Refinement};
pub use matching::{contains_pattern, is_free_of, is_isomorphic};
pub use position::{ExtendedPosition, Interval, Position};
pub use sequence::monotone_subsequence;
pub use structure::{dominates, maximal_edges, neighborhoods, pad, set_neighborhood, under_left, Neighborhoods};
