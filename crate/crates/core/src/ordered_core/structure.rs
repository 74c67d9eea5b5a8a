//! Maximal edges, `und`/`lft` splits, padding and neighborhoods.

use std::collections::VecDeque;

use super::error::GraphError;
use super::graph::{Edge, OrderedGraph, VertexId};
use super::position::Position;

/// `mx(G)` sorted by left endpoint.
///
/// An edge `ab` is maximal when no other edge `a'b'` has `a' <= a` and `b <= b'`.
/// Left and right endpoints of the result are both strictly increasing.
pub fn maximal_edges(g: &OrderedGraph) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut reach: Option<usize> = None;
    for a in 0..g.len() {
        let Some(&b) = g.neighbors(a).last() else { continue };
        if b <= a {
            continue;
        }
        if reach.is_none_or(|r| b > r) {
            out.push((a, b));
            reach = Some(b);
        }
    }
    out
}

/// True iff `f` dominates `e` (`f` spans at least as far on both sides, `f != e`).
pub fn dominates(f: Edge, e: Edge) -> bool {
    f != e && f.0 <= e.0 && e.1 <= f.1
}

/// `(und(e), lft(e))` as sorted index lists.
pub fn under_left(g: &OrderedGraph, e: Edge) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
    let (a, b) = if e.0 < e.1 { e } else { (e.1, e.0) };
    if b >= g.len() || !g.adjacent(a, b) {
        return Err(GraphError::NotAnEdge(format!("#{}", e.0), format!("#{}", e.1)));
    }
    Ok(((a..=b).collect(), (0..a).collect()))
}

fn fresh_id(g: &OrderedGraph, base: String) -> VertexId {
    let mut name = base;
    loop {
        let id = VertexId::new(name.clone()).expect("generated ids are well formed");
        if g.index_of(&id).is_none() {
            return id;
        }
        name.push('\'');
    }
}

/// `G(k,l)`: `k` isolated vertices before and `l` after, at unit gaps.
///
/// The new vertices are `a_i` at `min - (k+1-i)` and `b_i` at `max + i`.
pub fn pad(g: &OrderedGraph, k: usize, l: usize) -> OrderedGraph {
    if k == 0 && l == 0 {
        return g.clone();
    }
    let zero = Position::from_int(0);
    let min = g.min_position().cloned().unwrap_or_else(|| zero.clone());
    let max = g.max_position().cloned().unwrap_or(zero);
    let mut vertices: Vec<(VertexId, Position)> =
        g.ids().iter().cloned().zip(g.positions().iter().cloned()).collect();
    for i in 1..=k {
        vertices.push((fresh_id(g, format!("a{i}")), min.plus_int(-((k + 1 - i) as i64))));
    }
    for i in 1..=l {
        vertices.push((fresh_id(g, format!("b{i}")), max.plus_int(i as i64)));
    }
    let edges = g.edges().into_iter().map(|(a, b)| (g.id(a).clone(), g.id(b).clone())).collect();
    OrderedGraph::new(vertices, edges).expect("padding keeps positions distinct")
}

/// Distance-based and direction-based neighborhoods of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhoods {
    /// `N^ρ(v)`: vertices at distance exactly ρ.
    pub at_distance: Vec<usize>,
    /// `N^ρ[v]`: vertices at distance at most ρ, including `v`.
    pub within: Vec<usize>,
    /// `N⁺(v)`
    pub forward: Vec<usize>,
    /// `N⁻(v)`
    pub backward: Vec<usize>,
}

fn distances(g: &OrderedGraph, sources: &[usize], limit: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.len()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        if d == limit {
            continue;
        }
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

pub fn neighborhoods(g: &OrderedGraph, v: usize, rho: usize) -> Neighborhoods {
    let dist = distances(g, &[v], rho);
    let at_distance = (0..g.len()).filter(|&u| dist[u] == Some(rho)).collect();
    let within = (0..g.len()).filter(|&u| dist[u].is_some()).collect();
    let forward = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
    let backward = g.neighbors(v).iter().copied().filter(|&u| u < v).collect();
    Neighborhoods { at_distance, within, forward, backward }
}

/// `(N^ρ[X], N^ρ(X))` for a vertex set.
pub fn set_neighborhood(g: &OrderedGraph, set: &[usize], rho: usize) -> (Vec<usize>, Vec<usize>) {
    let dist = distances(g, set, rho);
    let closed: Vec<usize> = (0..g.len()).filter(|&u| dist[u].is_some()).collect();
    let open = closed.iter().copied().filter(|u| !set.contains(u)).collect();
    (closed, open)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: usize, e: &[(usize, usize)]) -> OrderedGraph {
        OrderedGraph::on_line(n, e).unwrap()
    }

    #[test]
    fn maximal_edge_examples() {
        assert!(maximal_edges(&line(3, &[])).is_empty());
        assert_eq!(maximal_edges(&line(4, &[(0, 3), (1, 2)])), vec![(0, 3)]);
        assert_eq!(maximal_edges(&line(4, &[(0, 1), (1, 2), (2, 3)])), vec![(0, 1), (1, 2), (2, 3)]);
        // shared left end: only the longer one
        assert_eq!(maximal_edges(&line(3, &[(0, 1), (0, 2)])), vec![(0, 2)]);
        // shared right end: only the one starting earlier
        assert_eq!(maximal_edges(&line(3, &[(0, 2), (1, 2)])), vec![(0, 2)]);
    }

    #[test]
    fn under_and_left() {
        let g = line(5, &[(1, 3)]);
        let (und, lft) = under_left(&g, (1, 3)).unwrap();
        assert_eq!(und, vec![1, 2, 3]);
        assert_eq!(lft, vec![0]);
        assert!(under_left(&g, (0, 1)).is_err());
        let single = line(2, &[(0, 1)]);
        assert_eq!(under_left(&single, (0, 1)).unwrap(), (vec![0, 1], vec![]));
    }

    #[test]
    fn padding() {
        let j16 = line(3, &[(0, 1), (0, 2)]);
        let p = pad(&j16, 1, 1);
        assert_eq!(p.len(), 5);
        assert_eq!(p.degree(0), 0);
        assert_eq!(p.degree(4), 0);
        assert_eq!(p.position(0), &Position::from_int(-1).plus_int(1));
        assert_eq!(p.position(4), &Position::from_int(4));
        assert_eq!(pad(&j16, 0, 0), j16);
        let p2 = pad(&j16, 2, 0);
        assert_eq!(p2.position(0), &Position::from_int(-1));
        assert_eq!(p2.position(1), &Position::from_int(0));
    }

    #[test]
    fn neighborhood_sets() {
        let g = line(3, &[(0, 1), (1, 2)]);
        let n = neighborhoods(&g, 0, 2);
        assert_eq!(n.at_distance, vec![2]);
        assert_eq!(n.within, vec![0, 1, 2]);
        assert_eq!(n.forward, vec![1]);
        assert!(n.backward.is_empty());
        let iso = neighborhoods(&line(2, &[]), 0, 1);
        assert!(iso.at_distance.is_empty() && iso.forward.is_empty() && iso.backward.is_empty());
        let (closed, open) = set_neighborhood(&g, &[0], 1);
        assert_eq!(closed, vec![0, 1]);
        assert_eq!(open, vec![1]);
    }
}
