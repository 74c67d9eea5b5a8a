//! The profile `Σ(G,L)` built from first and last members of each color class.

use std::ops::ControlFlow;

use crate::ordered_core::{Color, ColorSet, Instance, ListAssignment, Profile, Refinement};
use crate::poly_kernels::drop_singletons;

/// `(X1, X2, X3, Y1, Y2, Y3)`: pairwise disjoint stable sets of size `w`,
/// each inside `L^(i)`, with all of `X_i` before all of `Y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaTuple {
    pub x: [Vec<usize>; 3],
    pub y: [Vec<usize>; 3],
}

/// Visits every alpha tuple: `X1, Y1, X2, Y2, X3, Y3` chosen in that order,
/// each as a lexicographically ordered subset.
pub fn for_each_alpha(inst: &Instance, w: usize, mut visit: impl FnMut(&AlphaTuple) -> ControlFlow<()>) {
    let mut used = vec![false; inst.len()];
    let mut slots: Vec<Vec<usize>> = Vec::with_capacity(6);
    let _ = alpha_rec(inst, w, &mut used, &mut slots, &mut visit);
}

fn alpha_rec(
    inst: &Instance,
    w: usize,
    used: &mut Vec<bool>,
    slots: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&AlphaTuple) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let k = slots.len();
    if k == 6 {
        let t = AlphaTuple {
            x: [slots[0].clone(), slots[2].clone(), slots[4].clone()],
            y: [slots[1].clone(), slots[3].clone(), slots[5].clone()],
        };
        return visit(&t);
    }
    let color = Color::ALL[k / 2];
    let after = if k % 2 == 1 { slots[k - 1].last().copied() } else { None };
    let pool: Vec<usize> = inst
        .lists()
        .view(color)
        .into_iter()
        .filter(|&v| !used[v] && after.is_none_or(|a| v > a))
        .collect();
    let mut chosen = Vec::with_capacity(w);
    subsets(inst, &pool, w, 0, &mut chosen, &mut |set| {
        for &v in set {
            used[v] = true;
        }
        slots.push(set.to_vec());
        let r = alpha_rec(inst, w, used, slots, visit);
        slots.pop();
        for &v in set {
            used[v] = false;
        }
        r
    })
}

fn subsets(
    inst: &Instance,
    pool: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if chosen.len() == size {
        return f(chosen);
    }
    for k in from..pool.len() {
        if pool.len() - k < size - chosen.len() {
            break;
        }
        let v = pool[k];
        if chosen.iter().any(|&u| inst.graph().adjacent(u, v)) {
            continue;
        }
        chosen.push(v);
        let r = subsets(inst, pool, size, k + 1, chosen, f);
        chosen.pop();
        r?;
    }
    ControlFlow::Continue(())
}

pub fn alpha_tuples(inst: &Instance, w: usize) -> Vec<AlphaTuple> {
    let mut out = Vec::new();
    for_each_alpha(inst, w, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    });
    out
}

/// `L_α`: `{i}` on `X_i ∪ Y_i`; elsewhere color `i` survives only strictly
/// between `X_i` and `Y_i` and away from their neighborhoods.
pub fn l_alpha(inst: &Instance, alpha: &AlphaTuple) -> ListAssignment {
    let g = inst.graph();
    let mut out = Vec::with_capacity(inst.len());
    for v in 0..inst.len() {
        let forced = Color::ALL.iter().find(|c| alpha.x[c.index()].contains(&v) || alpha.y[c.index()].contains(&v));
        if let Some(&c) = forced {
            out.push(ColorSet::single(c));
            continue;
        }
        let mut l = inst.list(v);
        for c in Color::ALL {
            let (xs, ys) = (&alpha.x[c.index()], &alpha.y[c.index()]);
            let between = xs.iter().all(|&x| x < v) && ys.iter().all(|&y| v < y);
            let touches = xs.iter().chain(ys).any(|&u| g.adjacent(u, v));
            if !between || touches {
                l = l.without(c);
            }
        }
        out.push(l);
    }
    ListAssignment::new(out)
}

/// One member of `Σ(G,L)` with the tuple it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMember {
    pub alpha: AlphaTuple,
    /// `L_α` on all of `G`.
    pub spanning: ListAssignment,
    /// `(Ĝ, L̂_α)` after singleton removal.
    pub reduced: Refinement,
}

pub(crate) fn member(inst: &Instance, alpha: &AlphaTuple) -> SigmaMember {
    let spanning = l_alpha(inst, alpha);
    let reduced = drop_singletons(&inst.with_lists(spanning.clone()).expect("same length"));
    SigmaMember { alpha: alpha.clone(), spanning, reduced }
}

pub fn sigma_members(inst: &Instance, w: usize) -> Vec<SigmaMember> {
    alpha_tuples(inst, w).iter().map(|a| member(inst, a)).collect()
}

pub fn build_sigma_profile(inst: &Instance, w: usize) -> Profile {
    Profile::new(sigma_members(inst, w).into_iter().map(|m| m.reduced).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::OrderedGraph;

    #[test]
    fn too_small_for_tuples() {
        let inst = Instance::full(OrderedGraph::on_line(5, &[]).unwrap());
        assert!(alpha_tuples(&inst, 1).is_empty());
    }

    #[test]
    fn forced_lists() {
        let inst = Instance::full(OrderedGraph::on_line(7, &[(0, 3)]).unwrap());
        let tuples = alpha_tuples(&inst, 1);
        assert!(!tuples.is_empty());
        for t in &tuples {
            let l = l_alpha(&inst, t);
            for &v in &t.x[1] {
                assert_eq!(l.get(v), ColorSet::of(&[2]));
            }
            for i in 0..3 {
                assert!(t.x[i][0] < t.y[i][0]);
            }
        }
        let first = &tuples[0];
        assert_eq!(first.x, [vec![0], vec![2], vec![4]]);
        assert_eq!(first.y, [vec![1], vec![3], vec![5]]);
    }
}
