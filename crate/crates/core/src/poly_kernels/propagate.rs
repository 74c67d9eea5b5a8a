//! Singleton propagation and singleton removal.

use std::collections::VecDeque;

use crate::ordered_core::{Instance, ListAssignment, OrderedGraph, Refinement};

/// Fixpoint of `L(u) ← L(u) ∖ L(v)` over edges `uv` with `|L(v)| = 1`.
///
/// Singletons are processed first-in first-out, seeded in index order.
pub fn propagate_lists(g: &OrderedGraph, lists: &ListAssignment) -> ListAssignment {
    let mut out = lists.clone();
    let mut queue: VecDeque<usize> = (0..g.len()).filter(|&v| out.get(v).len() == 1).collect();
    while let Some(v) = queue.pop_front() {
        let Some(c) = out.get(v).only() else { continue };
        for &u in g.neighbors(v) {
            let lu = out.get(u);
            if lu.contains(c) {
                let reduced = lu.without(c);
                out.set(u, reduced);
                if reduced.len() == 1 {
                    queue.push_back(u);
                }
            }
        }
    }
    out
}

pub fn propagate_singletons(inst: &Instance) -> Instance {
    let lists = propagate_lists(inst.graph(), inst.lists());
    inst.with_lists(lists).expect("same length")
}

/// Propagates, then deletes every vertex whose list became a singleton.
///
/// At the propagation fixpoint a singleton's color is already missing from
/// all its neighbors, so one deletion round leaves no singleton behind.
pub fn drop_singletons(inst: &Instance) -> Refinement {
    let lists = propagate_lists(inst.graph(), inst.lists());
    let kept: Vec<usize> = (0..inst.len()).filter(|&v| lists.get(v).len() != 1).collect();
    let sub = ListAssignment::new(kept.iter().map(|&v| lists.get(v)).collect());
    Refinement { kept, lists: sub }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::ColorSet;

    fn inst(n: usize, e: &[(usize, usize)], lists: &[&[u8]]) -> Instance {
        let g = OrderedGraph::on_line(n, e).unwrap();
        Instance::new(g, ListAssignment::new(lists.iter().map(|l| ColorSet::of(l)).collect())).unwrap()
    }

    #[test]
    fn propagation_examples() {
        let p = propagate_singletons(&inst(2, &[(0, 1)], &[&[1], &[1, 2]]));
        assert_eq!(p.list(1), ColorSet::of(&[2]));
        let path = propagate_singletons(&inst(3, &[(0, 1), (1, 2)], &[&[1], &[1, 2], &[2, 3]]));
        assert_eq!(path.list(1), ColorSet::of(&[2]));
        assert_eq!(path.list(2), ColorSet::of(&[3]));
        let full = Instance::full(OrderedGraph::on_line(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(propagate_singletons(&full), full);
    }

    #[test]
    fn dropping() {
        let full = Instance::full(OrderedGraph::on_line(3, &[(0, 1)]).unwrap());
        assert_eq!(drop_singletons(&full), Refinement::identity(&full));
        let one = drop_singletons(&inst(1, &[], &[&[1]]));
        assert!(one.kept.is_empty());
        let tri = drop_singletons(&inst(3, &[(0, 1), (1, 2), (0, 2)], &[&[1], &[1, 2], &[1, 2, 3]]));
        assert!(tri.kept.is_empty());
    }
}
