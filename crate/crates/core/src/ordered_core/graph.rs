//! The ordered graph type.
//!
//! Vertices are stored sorted by position, so a vertex index doubles as its
//! rank in the order. Every index-based API relies on that.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::error::GraphError;
use super::position::{Interval, Position};

/// An opaque vertex name: non-empty, no whitespace.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) || name.starts_with('#') {
            return Err(GraphError::BadVertexId(name));
        }
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An edge as a pair of vertex indices with `.0 < .1`.
pub type Edge = (usize, usize);

/// Orders an index pair so the smaller index comes first.
pub fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A simple graph whose vertices carry pairwise distinct exact positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph {
    ids: Vec<VertexId>,
    positions: Vec<Position>,
    adj: Vec<Vec<usize>>,
    index: HashMap<VertexId, usize>,
    edge_count: usize,
}

impl OrderedGraph {
    /// Validates and builds a graph; vertices may be listed in any order.
    pub fn new(
        vertices: Vec<(VertexId, Position)>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut vertices = vertices;
        vertices.sort_by(|a, b| a.1.cmp(&b.1));
        for w in vertices.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(GraphError::DuplicatePosition(w[0].0.to_string(), w[1].0.to_string()));
            }
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, (id, _)) in vertices.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(id.to_string()));
            }
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in &edges {
            let ia = *index.get(a).ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            pairs.push((edge(ia, ib), a, b));
        }
        pairs.sort_by_key(|p| p.0);
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GraphError::DuplicateEdge(w[1].1.to_string(), w[1].2.to_string()));
            }
        }
        let (ids, positions): (Vec<_>, Vec<_>) = vertices.into_iter().unzip();
        Ok(Self::assemble(ids, positions, index, pairs.into_iter().map(|p| p.0)))
    }

    /// Vertices `v1..vn` at positions `1..n`; edges given by 0-based index.
    pub fn on_line(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let positions = (1..=n as i64).map(Position::from_int).collect();
        Self::from_positions(positions, edges)
    }

    /// Vertices `v1..vn` at the given positions (in that order); edges by index into `positions`.
    pub fn from_positions(positions: Vec<Position>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let vertices: Vec<(VertexId, Position)> = positions
            .into_iter()
            .enumerate()
            .map(|(i, p)| (VertexId(format!("v{}", i + 1)), p))
            .collect();
        let names: Vec<VertexId> = vertices.iter().map(|v| v.0.clone()).collect();
        let mut named = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let na = names.get(a).ok_or_else(|| GraphError::UnknownVertex(format!("#{a}")))?;
            let nb = names.get(b).ok_or_else(|| GraphError::UnknownVertex(format!("#{b}")))?;
            named.push((na.clone(), nb.clone()));
        }
        Self::new(vertices, named)
    }

    /// Trusted constructor: `positions` strictly increasing, edges deduplicated.
    fn assemble(
        ids: Vec<VertexId>,
        positions: Vec<Position>,
        index: HashMap<VertexId, usize>,
        edges: impl Iterator<Item = Edge>,
    ) -> Self {
        let mut adj = vec![Vec::new(); ids.len()];
        let mut edge_count = 0;
        for (a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        OrderedGraph { ids, positions, adj, index, edge_count }
    }

    pub fn empty() -> Self {
        Self::assemble(Vec::new(), Vec::new(), HashMap::new(), std::iter::empty())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn id(&self, v: usize) -> &VertexId {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn position(&self, v: usize) -> &Position {
        &self.positions[v]
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn index_of(&self, id: &VertexId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn index_of_str(&self, name: &str) -> Option<usize> {
        VertexId::new(name).ok().and_then(|id| self.index_of(&id))
    }

    /// Looks up a vertex, failing with an input error when absent.
    pub fn require(&self, id: &VertexId) -> Result<usize, GraphError> {
        self.index_of(id).ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    /// Neighbors in increasing position order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn ids_of(&self, vertices: &[usize]) -> Vec<VertexId> {
        vertices.iter().map(|&v| self.ids[v].clone()).collect()
    }

    /// The ordered subgraph induced by the given indices (duplicates ignored).
    pub fn induced_indices(&self, keep: &[usize]) -> OrderedGraph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut local = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let ids: Vec<VertexId> = keep.iter().map(|&v| self.ids[v].clone()).collect();
        let positions = keep.iter().map(|&v| self.positions[v].clone()).collect();
        let index = ids.iter().cloned().enumerate().map(|(i, id)| (id, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = local[u];
                if j != usize::MAX && j > i {
                    edges.push((i, j));
                }
            }
        }
        Self::assemble(ids, positions, index, edges.into_iter())
    }

    /// `G[X]` for a set of vertex ids.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<OrderedGraph, GraphError> {
        let idx = keep.iter().map(|id| self.require(id)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced_indices(&idx))
    }

    /// `-G`: every position negated; index `i` becomes `n-1-i`.
    pub fn reverse(&self) -> OrderedGraph {
        let n = self.len();
        let ids: Vec<VertexId> = self.ids.iter().rev().cloned().collect();
        let positions = self.positions.iter().rev().map(Position::negated).collect();
        let index = ids.iter().cloned().enumerate().map(|(i, id)| (id, i)).collect();
        let edges = self.edges().into_iter().map(|(a, b)| (n - 1 - b, n - 1 - a));
        Self::assemble(ids, positions, index, edges)
    }

    /// Same vertices and edges with positions replaced by ranks `1..n`.
    pub fn rank_normalized(&self) -> OrderedGraph {
        let positions = (1..=self.len() as i64).map(Position::from_int).collect();
        Self::assemble(self.ids.clone(), positions, self.index.clone(), self.edges().into_iter())
    }

    /// Replaces positions; the new positions must induce the same order.
    pub fn with_positions(&self, positions: Vec<Position>) -> Result<OrderedGraph, GraphError> {
        let vertices = self.ids.iter().cloned().zip(positions).collect();
        let edges = self
            .edges()
            .into_iter()
            .map(|(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
            .collect();
        OrderedGraph::new(vertices, edges)
    }

    /// Indices of the vertices whose position lies in `range`.
    pub fn interval(&self, range: &Interval) -> Vec<usize> {
        (0..self.len()).filter(|&v| range.contains(&self.positions[v])).collect()
    }

    pub fn min_position(&self) -> Option<&Position> {
        self.positions.first()
    }

    pub fn max_position(&self) -> Option<&Position> {
        self.positions.last()
    }

    /// True iff `keep` (sorted indices) is a stable set.
    pub fn is_stable(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.adjacent(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = Position::from_int;
        let dup_pos = OrderedGraph::new(vec![(vid("a"), p(1)), (vid("b"), p(1))], vec![]);
        assert!(matches!(dup_pos, Err(GraphError::DuplicatePosition(..))));
        let dup_id = OrderedGraph::new(vec![(vid("a"), p(1)), (vid("a"), p(2))], vec![]);
        assert!(matches!(dup_id, Err(GraphError::DuplicateVertex(_))));
        let vs = vec![(vid("a"), p(1)), (vid("b"), p(2))];
        let dup_edge = OrderedGraph::new(vs.clone(), vec![(vid("a"), vid("b")), (vid("b"), vid("a"))]);
        assert!(matches!(dup_edge, Err(GraphError::DuplicateEdge(..))));
        let loop_edge = OrderedGraph::new(vs.clone(), vec![(vid("a"), vid("a"))]);
        assert!(matches!(loop_edge, Err(GraphError::SelfLoop(_))));
        let unknown = OrderedGraph::new(vs, vec![(vid("a"), vid("c"))]);
        assert!(matches!(unknown, Err(GraphError::UnknownVertex(_))));
        assert!(VertexId::new("a b").is_err());
        assert!(VertexId::new("").is_err());
    }

    #[test]
    fn sorted_by_position() {
        let p = Position::from_int;
        let g = OrderedGraph::new(
            vec![(vid("c"), p(9)), (vid("a"), p(-4)), (vid("b"), p(0))],
            vec![(vid("c"), vid("a"))],
        )
        .unwrap();
        assert_eq!(g.id(0).as_str(), "a");
        assert_eq!(g.id(2).as_str(), "c");
        assert_eq!(g.edges(), vec![(0, 2)]);
    }

    #[test]
    fn induced_path_endpoints() {
        let g = OrderedGraph::on_line(3, &[(0, 1), (1, 2)]).unwrap();
        let keep: BTreeSet<VertexId> = [vid("v1"), vid("v3")].into_iter().collect();
        let h = g.induced(&keep).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.position(0), &Position::from_int(1));
        assert_eq!(h.position(1), &Position::from_int(3));
        assert_eq!(g.induced(&g.ids().iter().cloned().collect()).unwrap(), g);
        assert!(g.induced(&BTreeSet::new()).unwrap().is_empty());
        let missing: BTreeSet<VertexId> = [vid("zz")].into_iter().collect();
        assert!(g.induced(&missing).is_err());
    }

    #[test]
    fn reverse_is_an_involution() {
        let g = OrderedGraph::on_line(4, &[(0, 2), (1, 3), (2, 3)]).unwrap();
        let r = g.reverse();
        assert_eq!(r.position(0), &Position::from_int(-4));
        assert_eq!(r.id(0).as_str(), "v4");
        assert!(r.adjacent(0, 1));
        assert_eq!(r.reverse(), g);
        let single = OrderedGraph::from_positions(vec![Position::from_int(5)], &[]).unwrap();
        assert_eq!(single.reverse().position(0), &Position::from_int(-5));
    }

    #[test]
    fn intervals() {
        use super::super::position::ExtendedPosition as E;
        let g = OrderedGraph::on_line(3, &[]).unwrap();
        let p = |k| E::Finite(Position::from_int(k));
        assert_eq!(g.interval(&Interval::all()), vec![0, 1, 2]);
        assert_eq!(g.interval(&Interval::new(p(1), p(3), false, true)), vec![1, 2]);
        assert_eq!(g.interval(&Interval::new(p(2), p(2), true, true)), vec![1]);
    }
}
