//! Polynomial-time list 3-coloring of `J₁₆(k,l)`-free ordered graphs.
//!
//! `J₁₆` is a vertex followed by two nonadjacent forward neighbors, and
//! `J₁₆(k,l)` pads it with `k` isolated vertices in front and `l` behind. The
//! algorithm guesses the first `k` and last `l` vertices of every color,
//! narrows lists until the undecided vertices have at most two forward
//! neighbors among themselves, pins a constant number of padding vertices and
//! finishes each resulting member on a chordal graph.

mod chordalize;
mod driver;
mod fwdnbr;
mod special;

use thiserror::Error;

pub use chordalize::{chordalize, finalize_small, pad_sets, PadSets};
pub use driver::{solve_j16, solve_neg_j16, J16Outcome, J16Stage};
pub use fwdnbr::{for_each_qtuple, narrow, profile_fwdnbr, QTuple};
pub use special::profile_fwdnbr_special;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum J16Error {
    #[error("graph contains J16({k},{l}); witness vertices {witness:?}")]
    NotFree { k: usize, l: usize, witness: Vec<usize> },
    #[error("vertex {vertex} has {count} forward neighbors among vertices with two or more colors")]
    ForwardDegree { vertex: usize, count: usize },
    #[error("{size} vertices have two or more colors; this step needs {relation} {bound}")]
    WideSetSize { size: usize, relation: &'static str, bound: usize },
    /// A structural fact the algorithm relies on did not hold. Only reachable
    /// when the freeness precondition is bypassed.
    #[error("structural claim failed at vertex {vertex}: {claim}")]
    ClaimFailed { vertex: usize, claim: &'static str },
}

/// Vertices of `G[X]` adjacent to `v` and after it, in index order.
pub(crate) fn forward_in(g: &crate::OrderedGraph, inside: &[bool], v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&u| u > v && inside[u]).collect()
}

/// `X = {v : |L(v)| ≥ 2}` as a membership mask.
pub(crate) fn wide_mask(lists: &crate::ListAssignment) -> Vec<bool> {
    lists.as_slice().iter().map(|l| l.len() >= 2).collect()
}
