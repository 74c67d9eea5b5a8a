//! Reductions to 2-SAT: few wide lists, or a small color class.

use super::propagate::propagate_lists;
use super::two_sat::solve_two_lists;
use super::KernelError;
use crate::ordered_core::{Color, ColorSet, Coloring, Instance, ListAssignment};

/// Decides an instance with at most `c` lists of size three.
///
/// Wide vertices are colored in index order with ascending colors; each
/// complete choice is handed to the 2-SAT kernel and the first success wins.
/// Choices that empty a list under propagation are skipped, which does not
/// change which choice succeeds first.
pub fn solve_few_wide(inst: &Instance, c: usize) -> Result<Option<Coloring>, KernelError> {
    let wide = inst.lists().triples();
    if wide.len() > c {
        return Err(KernelError::TooManyWide { count: wide.len(), cap: c });
    }
    if inst.lists().has_empty() {
        return Ok(None);
    }
    Ok(wide_rec(inst, &wide, inst.lists().clone()))
}

fn wide_rec(inst: &Instance, wide: &[usize], lists: ListAssignment) -> Option<Coloring> {
    let Some((&v, rest)) = wide.split_first() else {
        let narrowed = inst.with_lists(lists).expect("same length");
        return solve_two_lists(&narrowed).expect("no wide list remains");
    };
    for col in lists.get(v).iter() {
        let mut next = lists.clone();
        next.set(v, ColorSet::single(col));
        let next = propagate_lists(inst.graph(), &next);
        if next.has_empty() {
            continue;
        }
        if let Some(found) = wide_rec(inst, rest, next) {
            return Some(found);
        }
    }
    None
}

/// Looks for an L-coloring with some color class of size below `c`.
///
/// Color `i` is tried first, then the class size, then candidate classes in
/// lexicographic order. The class is fixed and the rest solved by 2-SAT.
pub fn solve_small_class(inst: &Instance, c: usize) -> Option<Coloring> {
    if c == 0 || inst.lists().has_empty() {
        return None;
    }
    for col in Color::ALL {
        let pool = inst.lists().view(col);
        for size in 0..c.min(pool.len() + 1) {
            let mut chosen = Vec::with_capacity(size);
            if let Some(found) = subsets(inst, col, &pool, size, 0, &mut chosen) {
                return Some(found);
            }
        }
    }
    None
}

fn subsets(
    inst: &Instance,
    col: Color,
    pool: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> Option<Coloring> {
    if chosen.len() == size {
        let mut lists = inst.lists().clone();
        for v in 0..inst.len() {
            lists.set(v, lists.get(v).without(col));
        }
        for &v in chosen.iter() {
            lists.set(v, ColorSet::single(col));
        }
        return solve_two_lists(&inst.with_lists(lists).expect("same length")).expect("lists have size at most two");
    }
    let g = inst.graph();
    for k in from..pool.len() {
        if pool.len() - k < size - chosen.len() {
            break;
        }
        let v = pool[k];
        if chosen.iter().any(|&u| g.adjacent(u, v)) {
            continue;
        }
        chosen.push(v);
        let found = subsets(inst, col, pool, size, k + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::OrderedGraph;

    #[test]
    fn few_wide_examples() {
        let g = OrderedGraph::on_line(3, &[(0, 2), (1, 2)]).unwrap();
        let lists = ListAssignment::new(vec![ColorSet::of(&[1]), ColorSet::of(&[2]), ColorSet::FULL]);
        let inst = Instance::new(g, lists).unwrap();
        let c = solve_few_wide(&inst, 1).unwrap().unwrap();
        assert_eq!(c.get(2), Color::new(3));
        assert!(solve_few_wide(&Instance::full(OrderedGraph::on_line(2, &[]).unwrap()), 1).is_err());
    }

    #[test]
    fn small_class_examples() {
        let g = OrderedGraph::on_line(3, &[]).unwrap();
        let ones = Instance::new(g, ListAssignment::new(vec![ColorSet::of(&[1]); 3])).unwrap();
        assert_eq!(solve_small_class(&ones, 0), None);
        let c = solve_small_class(&ones, 4).unwrap();
        assert_eq!(c.class(Color::new(1).unwrap()).len(), 3);
    }
}
