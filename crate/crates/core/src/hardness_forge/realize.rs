use std::collections::{BTreeMap, HashSet};

use super::{ForgeError, PathRegistry};
use crate::ordered_core::{edge, ColorSet, ListAssignment, OrderedGraph};

fn color(c: usize) -> u8 {
    ((c - 1) % 3 + 1) as u8
}

/// Lists making `H` L-colorable exactly when the source graph is 3-colorable.
///
/// Vertices off every path interior get `{1,2,3}`. On branch `i` with `t`
/// interior vertices (colors read mod 3): `t` even gives `{i,i+1}` throughout;
/// `t` odd gives `{i,i+1}, {i+1,i+2}, {i+2,i+3}` and then `{i,i+1}`.
///
/// The registry must give each source edge three branches with at least two
/// interior vertices each, the paths may share only their ends, and every
/// edge of `H` must lie on a path.
pub fn realize_lists(h: &OrderedGraph, registry: &PathRegistry) -> Result<ListAssignment, ForgeError> {
    let bad = |msg: String| Err(ForgeError::Registry(msg));
    let ends: HashSet<usize> = registry.paths.iter().flat_map(|p| [p.ends.0, p.ends.1]).collect();
    let mut owner: Vec<Option<usize>> = vec![None; h.len()];
    let mut covered = HashSet::new();
    let mut branches: BTreeMap<(usize, usize), Vec<u8>> = BTreeMap::new();
    for (idx, p) in registry.paths.iter().enumerate() {
        let vs = &p.vertices;
        if !(1..=3).contains(&p.branch) {
            return bad(format!("path {idx} has branch {}", p.branch));
        }
        if vs.len() < 4 {
            return bad(format!("path {idx} has {} interior vertices, need at least 2", vs.len().saturating_sub(2)));
        }
        if vs[0] != p.ends.0 || vs[vs.len() - 1] != p.ends.1 || p.ends.0 == p.ends.1 {
            return bad(format!("path {idx} does not run between its two distinct ends"));
        }
        if let Some(&v) = vs.iter().find(|&&v| v >= h.len()) {
            return bad(format!("path {idx} names vertex {v} outside the graph"));
        }
        for w in vs.windows(2) {
            if !h.adjacent(w[0], w[1]) {
                return bad(format!("path {idx}: {}-{} is not an edge", h.id(w[0]), h.id(w[1])));
            }
            covered.insert(edge(w[0], w[1]));
        }
        for &v in p.interior() {
            if ends.contains(&v) {
                return bad(format!("interior vertex {} of path {idx} is a path end", h.id(v)));
            }
            if let Some(other) = owner[v].replace(idx) {
                return bad(format!("vertex {} lies on paths {other} and {idx}", h.id(v)));
            }
        }
        branches.entry(edge(p.ends.0, p.ends.1)).or_default().push(p.branch);
    }
    for ((a, b), mut bs) in branches {
        bs.sort_unstable();
        if bs != [1, 2, 3] {
            return bad(format!("edge {}-{} has branches {bs:?}, need 1, 2, 3", h.id(a), h.id(b)));
        }
    }
    if let Some((a, b)) = h.edges().into_iter().find(|e| !covered.contains(e)) {
        return bad(format!("edge {}-{} lies on no path", h.id(a), h.id(b)));
    }
    let mut lists = vec![ColorSet::FULL; h.len()];
    for p in &registry.paths {
        let i = p.branch as usize;
        let interior = p.interior();
        let odd = interior.len() % 2 == 1;
        for (j0, &w) in interior.iter().enumerate() {
            let shift = if odd && j0 < 3 { j0 } else { 0 };
            lists[w] = ColorSet::of(&[color(i + shift), color(i + shift + 1)]);
        }
    }
    Ok(ListAssignment::new(lists))
}
