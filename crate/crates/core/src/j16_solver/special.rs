//! The profile `𝓛′₂` for colorings with a small class.

use crate::ordered_core::{Color, ColorSet, Instance, ListAssignment, Profile, Refinement};

/// One member per color `i` and stable set `A` of fewer than `k+l` vertices
/// whose lists contain `i`: `A` is forced to `i` and `i` is struck everywhere
/// else, so every other list is a subset of the same pair.
///
/// Members come color by color, then by size, then lexicographically.
pub fn profile_fwdnbr_special(inst: &Instance, k: usize, l: usize) -> Profile {
    let g = inst.graph();
    let mut members = Vec::new();
    for c in Color::ALL {
        let pool = inst.lists().view(c);
        for size in 0..(k + l).min(pool.len() + 1) {
            let mut chosen = Vec::with_capacity(size);
            subsets(&pool, 0, size, &mut chosen, &mut |a| {
                if a.iter().enumerate().any(|(i, &x)| a[i + 1..].iter().any(|&y| g.adjacent(x, y))) {
                    return;
                }
                let lists = (0..inst.len())
                    .map(|v| if a.binary_search(&v).is_ok() { ColorSet::single(c) } else { inst.list(v).without(c) })
                    .collect();
                members.push(Refinement::spanning(ListAssignment::new(lists)));
            });
        }
    }
    Profile::new(members)
}

fn subsets(pool: &[usize], start: usize, size: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if cur.len() == size {
        visit(cur);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < size - cur.len() {
            break;
        }
        cur.push(pool[i]);
        subsets(pool, i + 1, size, cur, visit);
        cur.pop();
    }
}
