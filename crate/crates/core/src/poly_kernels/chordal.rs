//! Clique-4 detection, perfect elimination orders and chordal list coloring.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::KernelError;
use crate::ordered_core::{Color, Coloring, Instance, OrderedGraph, VertexId};

/// True iff four vertices are pairwise adjacent.
pub fn has_k4(g: &OrderedGraph) -> bool {
    for a in 0..g.len() {
        let up: Vec<usize> = g.neighbors(a).iter().copied().filter(|&b| b > a).collect();
        for (i, &b) in up.iter().enumerate() {
            for (j, &c) in up.iter().enumerate().skip(i + 1) {
                if !g.adjacent(b, c) {
                    continue;
                }
                if up[j + 1..].iter().any(|&d| g.adjacent(b, d) && g.adjacent(c, d)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Vertex indices in elimination order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

impl EliminationOrder {
    pub fn ids(&self, g: &OrderedGraph) -> Vec<VertexId> {
        g.ids_of(&self.order)
    }
}

/// True iff every vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination(g: &OrderedGraph, order: &[usize]) -> bool {
    let n = g.len();
    if order.len() != n {
        return false;
    }
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return false;
        }
        rank[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| rank[u] > rank[v]).collect();
        later.iter().enumerate().all(|(i, &a)| later[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    })
}

/// A perfect elimination order by maximum cardinality search, if `g` is chordal.
///
/// Ties in the search go to the smaller index.
pub fn chordal_peo(g: &OrderedGraph) -> Option<EliminationOrder> {
    let n = g.len();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut queue: BTreeSet<(usize, Reverse<usize>)> = (0..n).map(|v| (0, Reverse(v))).collect();
    let mut visit = Vec::with_capacity(n);
    while let Some((_, Reverse(v))) = queue.pop_last() {
        done[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !done[u] {
                queue.remove(&(weight[u], Reverse(u)));
                weight[u] += 1;
                queue.insert((weight[u], Reverse(u)));
            }
        }
    }
    visit.reverse();
    is_perfect_elimination(g, &visit).then_some(EliminationOrder { order: visit })
}

/// True iff the forward neighbors of every vertex are pairwise adjacent.
///
/// Equivalently, the position order is itself a perfect elimination order.
pub fn is_j16_free_structurally(g: &OrderedGraph) -> bool {
    let identity: Vec<usize> = (0..g.len()).collect();
    is_perfect_elimination(g, &identity)
}

/// Constraint over at most two vertices; `allowed[3a+b]` for colors of `scope`.
#[derive(Clone, Debug)]
struct Factor {
    scope: Vec<usize>,
    allowed: [bool; 9],
}

impl Factor {
    fn admits(&self, colors: &[Option<Color>]) -> bool {
        let idx = self.scope.iter().fold(0, |acc, &v| acc * 3 + colors[v].expect("scope colored").index());
        self.allowed[idx]
    }
}

/// Decides a chordal instance by variable elimination along a perfect elimination order.
///
/// Each eliminated vertex leaves a factor on its later neighbors, a clique of
/// size at most two once `K₄` is excluded. A backward pass recovers the
/// witness with the smallest admissible color at each step.
pub fn solve_chordal(inst: &Instance) -> Result<Option<Coloring>, KernelError> {
    let g = inst.graph();
    let peo = chordal_peo(g).ok_or(KernelError::NotChordal)?;
    if inst.lists().has_empty() {
        return Ok(None);
    }
    let n = g.len();
    let mut rank = vec![0; n];
    for (i, &v) in peo.order.iter().enumerate() {
        rank[v] = i;
    }
    let later = |v: usize| -> Vec<usize> {
        let mut l: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| rank[u] > rank[v]).collect();
        l.sort_by_key(|&u| rank[u]);
        l
    };
    if peo.order.iter().any(|&v| later(v).len() >= 3) {
        return Ok(None);
    }
    let mut buckets: Vec<Vec<Factor>> = vec![Vec::new(); n];
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for &v in &peo.order {
        let sep = later(v);
        let own = std::mem::take(&mut buckets[v]);
        let mut allowed = [false; 9];
        let combos = 3usize.pow(sep.len() as u32);
        for idx in 0..combos {
            let mut rest = idx;
            for &u in sep.iter().rev() {
                colors[u] = Color::new((rest % 3) as u8 + 1);
                rest /= 3;
            }
            if sep.iter().any(|&u| !inst.list(u).contains(colors[u].unwrap())) {
                continue;
            }
            allowed[idx] = inst.list(v).iter().any(|c| {
                colors[v] = Some(c);
                sep.iter().all(|&u| colors[u] != Some(c)) && own.iter().all(|f| f.admits(&colors))
            });
            colors[v] = None;
        }
        for &u in &sep {
            colors[u] = None;
        }
        if !allowed[..combos].iter().any(|&a| a) {
            return Ok(None);
        }
        buckets[v] = own;
        if let Some(&first) = sep.first() {
            buckets[first].push(Factor { scope: sep, allowed });
        }
    }
    for &v in peo.order.iter().rev() {
        let sep = later(v);
        let pick = inst.list(v).iter().find(|&c| {
            colors[v] = Some(c);
            sep.iter().all(|&u| colors[u] != Some(c)) && buckets[v].iter().all(|f| f.admits(&colors))
        });
        colors[v] = pick;
        if pick.is_none() {
            return Ok(None);
        }
    }
    let out = Coloring::from_options(colors);
    debug_assert!(out.is_list_coloring_of(inst));
    Ok(Some(out))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: usize, e: &[(usize, usize)]) -> OrderedGraph {
        OrderedGraph::on_line(n, e).unwrap()
    }

    fn k4() -> OrderedGraph {
        line(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn k4_detection() {
        assert!(has_k4(&k4()));
        assert!(!has_k4(&line(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])));
    }

    #[test]
    fn peo_examples() {
        let tree = line(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        let peo = chordal_peo(&tree).unwrap();
        assert!(is_perfect_elimination(&tree, &peo.order));
        assert!(chordal_peo(&line(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])).is_none());
        assert!(is_j16_free_structurally(&line(3, &[(0, 2), (1, 2)])));
        assert!(!is_j16_free_structurally(&line(3, &[(0, 1), (0, 2)])));
    }

    #[test]
    fn chordal_coloring() {
        let tri = Instance::full(line(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(solve_chordal(&tri).unwrap().unwrap().is_list_coloring_of(&tri));
        assert_eq!(solve_chordal(&Instance::full(k4())).unwrap(), None);
        let c4 = Instance::full(line(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
        assert_eq!(solve_chordal(&c4), Err(KernelError::NotChordal));
    }
}
