//! Pinning padding vertices so that the undecided part becomes chordal.

use std::ops::ControlFlow;

use super::{forward_in, wide_mask, J16Error};
use crate::ordered_core::{ColorSet, Instance, ListAssignment, Profile, Refinement};
use crate::poly_kernels::{chordal_peo, propagate_lists};
use crate::reference_oracle::{enumerate_colorings, OracleConfig};

/// Padding sets inside `X = {v : |L(v)| ≥ 2}`.
///
/// `c_prime` holds `k` vertices picked greedily from the left, `c` adds their
/// forward neighbors in `G[X]`, and `d` is the last `3l+6` vertices of `X ∖ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadSets {
    pub c: Vec<usize>,
    pub c_prime: Vec<usize>,
    pub d: Vec<usize>,
}

impl PadSets {
    /// `C ∪ D` in index order.
    pub fn pinned(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.c.iter().chain(&self.d).copied().collect();
        all.sort_unstable();
        all
    }
}

pub(crate) fn pad_bound(k: usize, l: usize) -> usize {
    3 * k + 3 * l + 6
}

fn check_forward_degree(inst: &Instance, inside: &[bool]) -> Result<(), J16Error> {
    let g = inst.graph();
    for v in (0..g.len()).filter(|&v| inside[v]) {
        let count = forward_in(g, inside, v).len();
        if count > 2 {
            return Err(J16Error::ForwardDegree { vertex: v, count });
        }
    }
    Ok(())
}

/// Builds `C′ ⊆ C` and `D`. Requires forward degree at most two in `G[X]`
/// and `|X| ≥ 3k+3l+6`.
pub fn pad_sets(inst: &Instance, k: usize, l: usize) -> Result<PadSets, J16Error> {
    let inside = wide_mask(inst.lists());
    check_forward_degree(inst, &inside)?;
    let size = inside.iter().filter(|&&b| b).count();
    if size < pad_bound(k, l) {
        return Err(J16Error::WideSetSize { size, relation: "at least", bound: pad_bound(k, l) });
    }
    let g = inst.graph();
    let mut in_c = vec![false; g.len()];
    let mut c_prime = Vec::with_capacity(k);
    for _ in 0..k {
        let v = (0..g.len()).find(|&v| inside[v] && !in_c[v]).expect("|X| ≥ 3k leaves a vertex");
        in_c[v] = true;
        c_prime.push(v);
        for u in forward_in(g, &inside, v) {
            in_c[u] = true;
        }
    }
    let c: Vec<usize> = (0..g.len()).filter(|&v| in_c[v]).collect();
    let rest: Vec<usize> = (0..g.len()).filter(|&v| inside[v] && !in_c[v]).collect();
    let d = rest[rest.len() - (3 * l + 6)..].to_vec();
    Ok(PadSets { c, c_prime, d })
}

/// Forces each proper L-coloring of `G[pinned]` in turn and propagates.
fn for_each_pinning(
    inst: &Instance,
    pinned: &[usize],
    visit: &mut dyn FnMut(ListAssignment) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let sub = inst.induced_indices(pinned);
    let cfg = OracleConfig { max_vertices: pinned.len(), max_enumeration_vertices: pinned.len() };
    let mut flow = ControlFlow::Continue(());
    enumerate_colorings(&sub, &cfg, |f| {
        let mut lists = inst.lists().clone();
        for (i, &v) in pinned.iter().enumerate() {
            lists.set(v, ColorSet::single(f.get(i).expect("total")));
        }
        flow = visit(propagate_lists(inst.graph(), &lists));
        flow
    })
    .expect("cap equals the pinned size");
    flow
}

pub(crate) fn for_each_chordal_member(
    inst: &Instance,
    k: usize,
    l: usize,
    visit: &mut dyn FnMut(ListAssignment) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, J16Error> {
    let pads = pad_sets(inst, k, l)?;
    let g = inst.graph();
    let mut failure = None;
    let flow = for_each_pinning(inst, &pads.pinned(), &mut |lists| {
        let wide = lists.wide();
        if chordal_peo(&g.induced_indices(&wide)).is_none() {
            let vertex = wide.first().copied().unwrap_or(0);
            failure = Some(J16Error::ClaimFailed { vertex, claim: "the unpinned part is chordal" });
            return ControlFlow::Break(());
        }
        visit(lists)
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(flow),
    }
}

/// The profile `𝓛₁`: one propagated member per proper L-coloring of `G[C ∪ D]`.
///
/// Every member is checked to leave a chordal graph on its vertices with two
/// or more colors.
pub fn chordalize(inst: &Instance, k: usize, l: usize) -> Result<Profile, J16Error> {
    let mut members = Vec::new();
    let _ = for_each_chordal_member(inst, k, l, &mut |lists| {
        members.push(Refinement::spanning(lists));
        ControlFlow::Continue(())
    })?;
    Ok(Profile::new(members))
}

pub(crate) fn for_each_small_member(
    inst: &Instance,
    k: usize,
    l: usize,
    visit: &mut dyn FnMut(ListAssignment) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, J16Error> {
    let wide = inst.lists().wide();
    if wide.len() >= pad_bound(k, l) {
        return Err(J16Error::WideSetSize { size: wide.len(), relation: "fewer than", bound: pad_bound(k, l) });
    }
    Ok(for_each_pinning(inst, &wide, visit))
}

/// The profile `𝓛₂`: one member per proper L-coloring of `G[X]`, all lists of
/// size at most one. Requires `|X| < 3k+3l+6`.
pub fn finalize_small(inst: &Instance, k: usize, l: usize) -> Result<Profile, J16Error> {
    let mut members = Vec::new();
    let _ = for_each_small_member(inst, k, l, &mut |lists| {
        members.push(Refinement::spanning(lists));
        ControlFlow::Continue(())
    })?;
    Ok(Profile::new(members))
}
