//! The full decision procedure and its reversed variant.

use std::ops::ControlFlow;

use super::chordalize::{for_each_chordal_member, for_each_small_member, pad_bound};
use super::fwdnbr::{for_each_qtuple, narrow};
use super::special::profile_fwdnbr_special;
use super::J16Error;
use crate::ordered_core::{contains_pattern, Coloring, Instance, ListAssignment};
use crate::pattern_catalog::{build_pattern, PatternId};
use crate::poly_kernels::{has_k4, solve_chordal, solve_two_lists};

/// The stage that settled the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum J16Stage {
    /// A coloring with some class smaller than `k+l` was found.
    SmallClass,
    /// `G` contains `K₄`.
    CliqueOnFour,
    /// Decided on the chordal members.
    Chordal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct J16Outcome {
    pub colorable: bool,
    pub stage: J16Stage,
    pub witness: Option<Coloring>,
    /// Chordal members solved before the answer was known.
    pub members: usize,
}

/// Solves one member: the vertices with two or more colors go to the chordal
/// kernel, every other vertex keeps its forced color.
fn solve_member(inst: &Instance, lists: &ListAssignment) -> Result<Option<Coloring>, J16Error> {
    if lists.has_empty() {
        return Ok(None);
    }
    let wide = lists.wide();
    let member = inst.with_lists(lists.clone()).expect("same length");
    let sub = member.induced_indices(&wide);
    let Some(f) = solve_chordal(&sub)
        .map_err(|_| J16Error::ClaimFailed { vertex: wide[0], claim: "the unpinned part is chordal" })?
    else {
        return Ok(None);
    };
    let mut c = Coloring::empty(inst.len());
    for v in 0..inst.len() {
        c.set(v, lists.get(v).only());
    }
    for (i, &v) in wide.iter().enumerate() {
        c.set(v, f.get(i));
    }
    if !c.is_list_coloring_of(inst) {
        return Err(J16Error::ClaimFailed { vertex: 0, claim: "forced colors agree across edges" });
    }
    Ok(Some(c))
}

/// Decides L-colorability of a `J₁₆(k,l)`-free instance and returns a
/// coloring when one exists.
///
/// `G` is checked for `J₁₆(k,l)` first and refused with an embedding.
pub fn solve_j16(inst: &Instance, k: usize, l: usize) -> Result<J16Outcome, J16Error> {
    let pattern = build_pattern(&PatternId::J16kl(k, l)).expect("any k, l");
    if let Some(witness) = contains_pattern(inst.graph(), &pattern) {
        return Err(J16Error::NotFree { k, l, witness });
    }
    let g = inst.graph();
    for m in profile_fwdnbr_special(inst, k, l).members {
        let member = inst.with_lists(m.lists).expect("same length");
        if let Some(c) = solve_two_lists(&member).expect("lists have at most two colors") {
            debug_assert!(c.is_list_coloring_of(inst));
            return Ok(J16Outcome { colorable: true, stage: J16Stage::SmallClass, witness: Some(c), members: 0 });
        }
    }
    if has_k4(g) {
        return Ok(J16Outcome { colorable: false, stage: J16Stage::CliqueOnFour, witness: None, members: 0 });
    }
    let mut solved = 0;
    let mut found = None;
    let mut failure = None;
    for_each_qtuple(inst, k, l, |_, l0| {
        let step = narrow(g, l0).and_then(|narrowed| {
            let member = inst.with_lists(narrowed).expect("same length");
            let mut finish = |lists: ListAssignment| {
                solved += 1;
                match solve_member(inst, &lists) {
                    Ok(Some(c)) => {
                        found = Some(c);
                        ControlFlow::Break(())
                    }
                    Ok(None) => ControlFlow::Continue(()),
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            };
            if member.lists().has_empty() {
                Ok(ControlFlow::Continue(()))
            } else if member.lists().wide().len() >= pad_bound(k, l) {
                for_each_chordal_member(&member, k, l, &mut finish)
            } else {
                for_each_small_member(&member, k, l, &mut finish)
            }
        });
        match step {
            Ok(flow) => flow,
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(J16Outcome { colorable: found.is_some(), stage: J16Stage::Chordal, witness: found, members: solved })
}

/// Decides a `−J₁₆(k,l)`-free instance by solving its reverse.
pub fn solve_neg_j16(inst: &Instance, k: usize, l: usize) -> Result<J16Outcome, J16Error> {
    let n = inst.len();
    match solve_j16(&inst.reverse(), k, l) {
        Ok(out) => Ok(J16Outcome { witness: out.witness.map(|c| c.reversed()), ..out }),
        Err(J16Error::NotFree { k, l, witness }) => {
            let mut back: Vec<usize> = witness.iter().map(|&v| n - 1 - v).collect();
            back.sort_unstable();
            Err(J16Error::NotFree { k, l, witness: back })
        }
        Err(e) => Err(e),
    }
}
