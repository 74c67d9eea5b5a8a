//! Colors, list assignments, instances, colorings, refinements and profiles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::error::GraphError;
use super::graph::{OrderedGraph, VertexId};

/// One of the colors 1, 2, 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const ALL: [Color; 3] = [Color(1), Color(2), Color(3)];

    pub fn new(c: u8) -> Option<Color> {
        (1..=3).contains(&c).then_some(Color(c))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based index, handy for arrays of length 3.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    fn bit(self) -> u8 {
        1 << (self.0 - 1)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of {1,2,3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b111);

    pub fn from_bits(bits: u8) -> ColorSet {
        ColorSet(bits & 0b111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn single(c: Color) -> ColorSet {
        ColorSet(c.bit())
    }

    pub fn of(colors: &[u8]) -> ColorSet {
        colors.iter().filter_map(|&c| Color::new(c)).fold(ColorSet::EMPTY, |s, c| s.with(c))
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn with(self, c: Color) -> ColorSet {
        ColorSet(self.0 | c.bit())
    }

    pub fn without(self, c: Color) -> ColorSet {
        ColorSet(self.0 & !c.bit())
    }

    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn minus(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The unique member of a singleton.
    pub fn only(self) -> Option<Color> {
        if self.len() == 1 {
            Color::new(self.0.trailing_zeros() as u8 + 1)
        } else {
            None
        }
    }

    /// Smallest member.
    pub fn first(self) -> Option<Color> {
        (self.0 != 0).then(|| Color(self.0.trailing_zeros() as u8 + 1))
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for c in self.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ColorSet {
    type Err = GraphError;

    /// Digits from "123" in strictly increasing order, or "0" for the empty list.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "0" {
            return Ok(ColorSet::EMPTY);
        }
        let mut set = ColorSet::EMPTY;
        let mut last = 0u8;
        for ch in s.chars() {
            let d = ch.to_digit(10).map(|d| d as u8).filter(|d| (1..=3).contains(d));
            match d {
                Some(d) if d > last => {
                    set = set.with(Color(d));
                    last = d;
                }
                _ => return Err(GraphError::BadList(s.to_string())),
            }
        }
        if set.is_empty() {
            return Err(GraphError::BadList(s.to_string()));
        }
        Ok(set)
    }
}

/// One list per vertex index of the paired graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment(Vec<ColorSet>);

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Self {
        ListAssignment(lists)
    }

    pub fn full(n: usize) -> Self {
        ListAssignment(vec![ColorSet::FULL; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, list: ColorSet) {
        self.0[v] = list;
    }

    pub fn as_slice(&self) -> &[ColorSet] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ColorSet> {
        self.0
    }

    /// `L^(i)`: the vertices whose list contains `c`.
    pub fn view(&self, c: Color) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v].contains(c)).collect()
    }

    pub fn has_empty(&self) -> bool {
        self.0.iter().any(|l| l.is_empty())
    }

    /// Vertices whose list has at least two colors.
    /// Vertices whose list has at least two colors.
    pub fn wide(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v].len() >= 2).collect()
    }

    /// Vertices whose list is all of `{1,2,3}`.
    pub fn triples(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v].len() == 3).collect()
    }

    pub fn is_refined_by(&self, other: &ListAssignment) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| b.is_subset(*a))
    }
}

/// A graph with a list per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: OrderedGraph,
    lists: ListAssignment,
}

impl Instance {
    pub fn new(graph: OrderedGraph, lists: ListAssignment) -> Result<Self, GraphError> {
        if graph.len() != lists.len() {
            return Err(GraphError::ListLength { expected: graph.len(), got: lists.len() });
        }
        Ok(Instance { graph, lists })
    }

    /// Every vertex gets {1,2,3}.
    pub fn full(graph: OrderedGraph) -> Self {
        let lists = ListAssignment::full(graph.len());
        Instance { graph, lists }
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub fn list(&self, v: usize) -> ColorSet {
        self.lists.get(v)
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn into_parts(self) -> (OrderedGraph, ListAssignment) {
        (self.graph, self.lists)
    }

    /// Same graph, different lists.
    pub fn with_lists(&self, lists: ListAssignment) -> Result<Instance, GraphError> {
        Instance::new(self.graph.clone(), lists)
    }

    /// The instance induced on sorted indices `keep`.
    pub fn induced_indices(&self, keep: &[usize]) -> Instance {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let lists = ListAssignment::new(keep.iter().map(|&v| self.lists.get(v)).collect());
        Instance { graph: self.graph.induced_indices(&keep), lists }
    }

    /// `(-G, L)`; the list of index `i` moves to index `n-1-i`.
    pub fn reverse(&self) -> Instance {
        let lists = ListAssignment::new(self.lists.as_slice().iter().rev().copied().collect());
        Instance { graph: self.graph.reverse(), lists }
    }
}

/// A possibly partial map from vertex indices to colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Option<Color>>);

impl Coloring {
    /// The coloring with empty domain over `n` vertices.
    pub fn empty(n: usize) -> Self {
        Coloring(vec![None; n])
    }

    pub fn from_colors(colors: Vec<Color>) -> Self {
        Coloring(colors.into_iter().map(Some).collect())
    }

    pub fn from_options(colors: Vec<Option<Color>>) -> Self {
        Coloring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, c: Option<Color>) {
        self.0[v] = c;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.0
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v].is_some()).collect()
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    /// `φ^{-1}(c)`
    pub fn class(&self, c: Color) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == Some(c)).collect()
    }

    /// No edge inside the domain is monochromatic.
    pub fn is_proper(&self, g: &OrderedGraph) -> bool {
        self.0.len() == g.len()
            && g.edges().into_iter().all(|(a, b)| match (self.0[a], self.0[b]) {
                (Some(x), Some(y)) => x != y,
                _ => true,
            })
    }

    /// Every colored vertex uses a color from its list.
    pub fn respects(&self, lists: &ListAssignment) -> bool {
        self.0.len() == lists.len()
            && self.0.iter().enumerate().all(|(v, c)| c.is_none_or(|c| lists.get(v).contains(c)))
    }

    /// A total, proper, list-respecting coloring of the instance.
    pub fn is_list_coloring_of(&self, inst: &Instance) -> bool {
        self.is_total() && self.is_proper(inst.graph()) && self.respects(inst.lists())
    }

    /// The coloring keyed by vertex id.
    pub fn by_id(&self, g: &OrderedGraph) -> BTreeMap<VertexId, Color> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (g.id(v).clone(), c)))
            .collect()
    }

    /// Reindexes a coloring of `(-G)` back onto `G`.
    pub fn reversed(&self) -> Coloring {
        Coloring(self.0.iter().rev().copied().collect())
    }
}

/// An induced sub-instance of a base instance with possibly shrunken lists.
///
/// `kept` holds base indices in increasing order; `lists` is aligned with it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Refinement {
    pub kept: Vec<usize>,
    pub lists: ListAssignment,
}

impl Refinement {
    /// A spanning refinement over all `lists.len()` base vertices.
    pub fn spanning(lists: ListAssignment) -> Self {
        Refinement { kept: (0..lists.len()).collect(), lists }
    }

    pub fn identity(base: &Instance) -> Self {
        Refinement::spanning(base.lists().clone())
    }

    pub fn is_spanning(&self, base: &Instance) -> bool {
        self.kept.len() == base.len()
    }

    /// Checks the refinement conditions against `base`.
    pub fn is_valid_for(&self, base: &Instance) -> bool {
        self.kept.len() == self.lists.len()
            && self.kept.windows(2).all(|w| w[0] < w[1])
            && self.kept.last().is_none_or(|&v| v < base.len())
            && self.kept.iter().enumerate().all(|(i, &v)| self.lists.get(i).is_subset(base.list(v)))
    }

    pub fn has_empty_list(&self) -> bool {
        self.lists.has_empty()
    }

    pub fn materialize(&self, base: &Instance) -> Instance {
        let graph = base.graph().induced_indices(&self.kept);
        Instance::new(graph, self.lists.clone()).expect("refinement lists aligned with kept vertices")
    }

    /// Places a coloring of the sub-instance onto the base vertex indices.
    pub fn lift(&self, sub: &Coloring, base_len: usize) -> Coloring {
        let mut out = Coloring::empty(base_len);
        for (i, &v) in self.kept.iter().enumerate() {
            out.set(v, sub.get(i));
        }
        out
    }
}

/// A set of refinements of one base instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Profile {
    pub members: Vec<Refinement>,
}

impl Profile {
    pub fn new(members: Vec<Refinement>) -> Self {
        Profile { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_spanning(&self, base: &Instance) -> bool {
        self.members.iter().all(|m| m.is_spanning(base))
    }
}
