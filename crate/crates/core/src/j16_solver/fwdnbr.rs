//! Guessing the first `k` and last `l` vertices of each color, then narrowing.

use std::ops::ControlFlow;

use super::{forward_in, wide_mask, J16Error};
use crate::ordered_core::{Color, ColorSet, Instance, ListAssignment, OrderedGraph, Profile, Refinement};
use crate::poly_kernels::{has_k4, propagate_lists};

/// Six disjoint vertex sets: `a[i]` (size `k`) and `b[i]` (size `l`) for color `i+1`.
///
/// Each `a[i] ∪ b[i]` is stable and every vertex in it has color `i+1` in its list.
/// Sets are sorted by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTuple {
    pub a: [Vec<usize>; 3],
    pub b: [Vec<usize>; 3],
}

impl QTuple {
    /// `m_i`: the last vertex of `a[i]`.
    pub fn m(&self, c: Color) -> Option<usize> {
        self.a[c.index()].last().copied()
    }

    /// `n_i`: the first vertex of `b[i]`.
    pub fn n(&self, c: Color) -> Option<usize> {
        self.b[c.index()].first().copied()
    }
}

/// Forces color `c` on `a ∪ b` and strikes it from every other vertex at or
/// before `max a` and at or after `min b`.
fn force_color(lists: &mut ListAssignment, c: Color, a: &[usize], b: &[usize]) {
    let n = lists.len();
    if let Some(&m) = a.last() {
        for v in 0..=m {
            lists.set(v, lists.get(v).without(c));
        }
    }
    if let Some(&first) = b.first() {
        for v in first..n {
            lists.set(v, lists.get(v).without(c));
        }
    }
    for &v in a.iter().chain(b) {
        lists.set(v, ColorSet::single(c));
    }
}

fn combinations(pool: &[usize], size: usize, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
    fn rec(
        pool: &[usize],
        start: usize,
        size: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if cur.len() == size {
            return visit(cur);
        }
        let need = size - cur.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            cur.push(pool[i]);
            rec(pool, i + 1, size, cur, visit)?;
            cur.pop();
        }
        ControlFlow::Continue(())
    }
    rec(pool, 0, size, &mut Vec::with_capacity(size), visit)
}

fn stable(g: &OrderedGraph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
}

/// Visits every `Q` together with its propagated list `L₀^Q`.
///
/// Colors are chosen in order 1, 2, 3; for each, `A` ranges over `k`-subsets
/// in lexicographic order and then `B` over `l`-subsets after `max A`. Only
/// tuples whose first vertices of a class precede the last ones are produced,
/// which is all the completeness argument uses. A tuple whose forcing already
/// empties a list under propagation is skipped together with its extensions.
pub fn for_each_qtuple(
    inst: &Instance,
    k: usize,
    l: usize,
    mut visit: impl FnMut(&QTuple, &ListAssignment) -> ControlFlow<()>,
) {
    let g = inst.graph();
    let start = propagate_lists(g, inst.lists());
    if start.has_empty() {
        return;
    }
    let mut q = QTuple { a: Default::default(), b: Default::default() };
    let mut used = vec![false; inst.len()];
    let _ = color_step(g, k, l, 0, &start, &mut q, &mut used, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn color_step(
    g: &OrderedGraph,
    k: usize,
    l: usize,
    ci: usize,
    lists: &ListAssignment,
    q: &mut QTuple,
    used: &mut Vec<bool>,
    visit: &mut dyn FnMut(&QTuple, &ListAssignment) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if ci == 3 {
        return visit(q, lists);
    }
    let c = Color::ALL[ci];
    let pool: Vec<usize> = (0..g.len()).filter(|&v| !used[v] && lists.get(v).contains(c)).collect();
    combinations(&pool, k, &mut |a| {
        if !stable(g, a) {
            return ControlFlow::Continue(());
        }
        let after: Vec<usize> = pool.iter().copied().filter(|&v| a.last().is_none_or(|&m| v > m)).collect();
        combinations(&after, l, &mut |b| {
            let mut both = a.to_vec();
            both.extend_from_slice(b);
            if !stable(g, &both) {
                return ControlFlow::Continue(());
            }
            let mut next = lists.clone();
            force_color(&mut next, c, a, b);
            let next = propagate_lists(g, &next);
            if next.has_empty() {
                return ControlFlow::Continue(());
            }
            q.a[ci] = a.to_vec();
            q.b[ci] = b.to_vec();
            for &v in &both {
                used[v] = true;
            }
            let flow = color_step(g, k, l, ci + 1, &next, q, used, visit);
            for &v in &both {
                used[v] = false;
            }
            flow
        })
    })
}

/// Runs the narrowing loop until every vertex with two or more colors has at
/// most two such forward neighbors, or some list is empty.
///
/// The vertex with the smallest index is treated first; its first nonadjacent
/// pair of forward neighbors `(u, w)` and then its first other forward
/// neighbor `x` decide the step. Every structural fact used along the way is
/// checked and reported as `ClaimFailed` if it does not hold, which can only
/// happen when `G` contains `K₄` or `J₁₆(k,l)` for the tuple in use.
pub fn narrow(g: &OrderedGraph, lists: &ListAssignment) -> Result<ListAssignment, J16Error> {
    let mut lists = propagate_lists(g, lists);
    loop {
        if lists.has_empty() {
            return Ok(lists);
        }
        let inside = wide_mask(&lists);
        let Some((v, fw)) =
            (0..g.len()).filter(|&v| inside[v]).map(|v| (v, forward_in(g, &inside, v))).find(|(_, fw)| fw.len() >= 3)
        else {
            return Ok(lists);
        };
        let claim = |claim| J16Error::ClaimFailed { vertex: v, claim };
        let lv = lists.get(v);
        if lv.len() == 3 {
            return Err(claim("a full list with three forward neighbors needs K4 or J16(k,l)"));
        }
        let (u, w) = fw
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| fw[i + 1..].iter().map(move |&w| (u, w)))
            .find(|&(u, w)| !g.adjacent(u, w))
            .ok_or(claim("three pairwise adjacent forward neighbors form K4"))?;
        let (lu, lw) = (lists.get(u), lists.get(w));
        if !lv.intersect(lu).intersect(lw).is_empty() {
            return Err(claim("nonadjacent forward neighbors sharing a color give J16(k,l)"));
        }
        let m = ColorSet::from_bits(!lv.bits()).only().expect("two-color list");
        let (Some(i), Some(j)) = (lu.without(m).only(), lw.without(m).only()) else {
            return Err(claim("both nonadjacent forward neighbors carry the third color"));
        };
        let x = *fw.iter().find(|&&x| x != u && x != w).expect("three forward neighbors");
        let lx = lists.get(x);
        let ij = ColorSet::single(i).union(ColorSet::single(j));
        if ij.is_subset(lx) {
            if !g.adjacent(u, x) || !g.adjacent(w, x) {
                return Err(claim("x must see both u and w"));
            }
            lists.set(u, ColorSet::single(m));
            lists.set(w, ColorSet::single(m));
        } else if lx == lu {
            if !g.adjacent(u, x) {
                return Err(claim("x must see u"));
            }
            lists.set(v, ColorSet::single(j));
        } else if lx == lw {
            if !g.adjacent(w, x) {
                return Err(claim("x must see w"));
            }
            lists.set(v, ColorSet::single(i));
        } else {
            return Err(claim("x has no two-color list covering a subcase"));
        }
        lists = propagate_lists(g, &lists);
    }
}

/// The profile `𝓛′₁`: one narrowed member per admissible `Q`.
///
/// Empty when `G` contains `K₄`. The caller is responsible for `G` being
/// `J₁₆(k,l)`-free; otherwise a `ClaimFailed` error may surface.
pub fn profile_fwdnbr(inst: &Instance, k: usize, l: usize) -> Result<Profile, J16Error> {
    let mut members = Vec::new();
    let mut failure = None;
    if !has_k4(inst.graph()) {
        for_each_qtuple(inst, k, l, |_, l0| match narrow(inst.graph(), l0) {
            Ok(lists) => {
                members.push(Refinement::spanning(lists));
                ControlFlow::Continue(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        });
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(Profile::new(members)),
    }
}
