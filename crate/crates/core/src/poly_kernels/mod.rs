//! Polynomial subroutines shared by both pattern-free solvers.

mod chordal;
mod propagate;
mod small;
mod two_sat;

use thiserror::Error;

pub use chordal::{
    chordal_peo, has_k4, is_j16_free_structurally, is_perfect_elimination, solve_chordal, EliminationOrder,
};
pub use propagate::{drop_singletons, propagate_lists, propagate_singletons};
pub use small::{solve_few_wide, solve_small_class};
pub use two_sat::{solve_two_lists, TwoSat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("vertex #{0} has a list of size 3")]
    WideList(usize),
    #[error("{count} vertices have lists of size 3, above the limit {cap}")]
    TooManyWide { count: usize, cap: usize },
    #[error("graph is not chordal")]
    NotChordal,
}
