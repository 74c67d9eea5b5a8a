//! Complexity verdicts for a single forbidden ordered pattern.

use std::fmt;

use super::patterns::{build_pattern, PatternId};
use crate::ordered_core::{contains_pattern, is_isomorphic, OrderedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexityStatus {
    Polynomial,
    NPComplete,
    Open,
}

impl fmt::Display for ComplexityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexityStatus::Polynomial => "polynomial",
            ComplexityStatus::NPComplete => "np-complete",
            ComplexityStatus::Open => "open",
        })
    }
}

/// Which rule of the decision table fired.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Justification {
    AtMostOneEdge,
    AtLeastThreeEdges,
    /// `H ≅ J16(k,l)`, or `H ≅ -J16(k,l)` when `reversed`.
    PaddedJ16 { k: usize, l: usize, reversed: bool },
    /// Two edges sharing an end; `H` contains the named pattern.
    SharedEndContains(PatternId),
    /// Two disjoint edges; `H` contains the named pattern.
    DisjointContains(PatternId),
    /// Isolated vertices removed, `H` is `M6`.
    OpenM6,
    OpenM7 { k: usize, l: usize },
    OpenM8 { k: usize, l: usize },
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::AtMostOneEdge => f.write_str("at-most-one-edge"),
            Justification::AtLeastThreeEdges => f.write_str("at-least-three-edges"),
            Justification::PaddedJ16 { k, l, reversed: false } => write!(f, "isomorphic:J16:{k},{l}"),
            Justification::PaddedJ16 { k, l, reversed: true } => write!(f, "isomorphic:neg:J16:{k},{l}"),
            Justification::SharedEndContains(p) => write!(f, "shared-end-contains:{p}"),
            Justification::DisjointContains(p) => write!(f, "disjoint-contains:{p}"),
            Justification::OpenM6 => f.write_str("open:M6-core"),
            Justification::OpenM7 { k, l } => write!(f, "open:M7:{k},{l}"),
            Justification::OpenM8 { k, l } => write!(f, "open:M8:{k},{l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexityVerdict {
    pub status: ComplexityStatus,
    pub justification: Justification,
}

impl ComplexityVerdict {
    fn new(status: ComplexityStatus, justification: Justification) -> Self {
        ComplexityVerdict { status, justification }
    }
}

/// The non-isolated part of `h`.
fn core(h: &OrderedGraph) -> OrderedGraph {
    let keep: Vec<usize> = (0..h.len()).filter(|&v| h.degree(v) > 0).collect();
    h.induced_indices(&keep)
}

/// `(k, l)` with `h ≅ P(k,l)` for the named pattern `P`: the span from the
/// first to the last non-isolated vertex must be `P` itself.
fn padded_match(h: &OrderedGraph, id: &PatternId) -> Option<(usize, usize)> {
    let first = (0..h.len()).find(|&v| h.degree(v) > 0)?;
    let last = (0..h.len()).rev().find(|&v| h.degree(v) > 0)?;
    let span: Vec<usize> = (first..=last).collect();
    let target = build_pattern(id).expect("catalog id");
    is_isomorphic(&h.induced_indices(&span), &target).then_some((first, h.len() - 1 - last))
}

fn first_contained(h: &OrderedGraph, ids: &[PatternId]) -> Option<PatternId> {
    ids.iter().find(|id| contains_pattern(h, &build_pattern(id).expect("catalog id")).is_some()).cloned()
}

/// Decides the complexity of list 3-coloring `H`-free ordered graphs.
pub fn classify(h: &OrderedGraph) -> ComplexityVerdict {
    use ComplexityStatus::*;
    use PatternId::*;
    let edges = h.edges();
    if edges.len() <= 1 {
        return ComplexityVerdict::new(Polynomial, Justification::AtMostOneEdge);
    }
    if edges.len() >= 3 {
        return ComplexityVerdict::new(NPComplete, Justification::AtLeastThreeEdges);
    }
    let (e, f) = (edges[0], edges[1]);
    let shares_end = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
    if shares_end {
        if let Some((k, l)) = padded_match(h, &J(16)) {
            return ComplexityVerdict::new(Polynomial, Justification::PaddedJ16 { k, l, reversed: false });
        }
        if let Some((before, after)) = padded_match(h, &J(16).neg()) {
            let just = Justification::PaddedJ16 { k: after, l: before, reversed: true };
            return ComplexityVerdict::new(Polynomial, just);
        }
        let witnesses = [J(10), J(10).neg(), J(11), J(11).neg(), J(15)];
        let found = first_contained(h, &witnesses).expect("a path on three vertices not padded J16 contains a witness");
        return ComplexityVerdict::new(NPComplete, Justification::SharedEndContains(found));
    }
    if let Some(found) = first_contained(h, &[J(9), M(1), M(5), M(5).neg()]) {
        return ComplexityVerdict::new(NPComplete, Justification::DisjointContains(found));
    }
    if is_isomorphic(&core(h), &build_pattern(&M(6)).expect("catalog id")) {
        return ComplexityVerdict::new(Open, Justification::OpenM6);
    }
    if let Some((k, l)) = padded_match(h, &M(7)) {
        return ComplexityVerdict::new(Open, Justification::OpenM7 { k, l });
    }
    if let Some((k, l)) = padded_match(h, &M(8)) {
        return ComplexityVerdict::new(Open, Justification::OpenM8 { k, l });
    }
    unreachable!("two disjoint edges avoiding J9, M1, M5, -M5 form M6, M7(k,l) or M8(k,l)")
}
