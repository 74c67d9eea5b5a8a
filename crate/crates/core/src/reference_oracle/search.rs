//! Exhaustive list-coloring search with propagation and component splitting.

use std::ops::ControlFlow;

use super::OracleError;
use crate::ordered_core::{Color, ColorSet, Coloring, Instance, OrderedGraph};

/// Size limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest instance `solve_bruteforce` accepts.
    pub max_vertices: usize,
    /// Largest instance the counting and enumeration routines accept.
    pub max_enumeration_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vertices: 64, max_enumeration_vertices: 24 }
    }
}

impl OracleConfig {
    /// Limits suited to verifying generated gadgets.
    pub fn gadget_scale() -> Self {
        OracleConfig { max_vertices: 50_000, max_enumeration_vertices: 24 }
    }
}

/// Finds an L-coloring or proves none exists, with the default size cap.
pub fn solve_bruteforce(inst: &Instance) -> Result<Option<Coloring>, OracleError> {
    solve_bruteforce_with(inst, &OracleConfig::default())
}

/// Finds an L-coloring or proves none exists.
///
/// The search propagates forced colors, splits the undecided vertices into
/// connected components that are solved independently, and branches on the
/// undecided vertex of largest undecided degree (then smaller list, then
/// smaller position), trying colors in ascending order. The result is
/// deterministic.
pub fn solve_bruteforce_with(inst: &Instance, cfg: &OracleConfig) -> Result<Option<Coloring>, OracleError> {
    let n = inst.len();
    if n > cfg.max_vertices {
        return Err(OracleError::TooLarge { vertices: n, cap: cfg.max_vertices });
    }
    if inst.lists().has_empty() {
        return Ok(None);
    }
    let mut s = Search {
        g: inst.graph(),
        lists: inst.lists().as_slice().to_vec(),
        trail: Vec::new(),
        stamp: vec![0; n],
        epoch: 0,
    };
    let singles: Vec<usize> = (0..n).filter(|&v| s.lists[v].len() == 1).collect();
    if !s.propagate(singles) {
        return Ok(None);
    }
    let all: Vec<usize> = (0..n).collect();
    if !s.solve_set(&all) {
        return Ok(None);
    }
    let colors = s.lists.iter().map(|l| l.only().expect("search ends with singletons")).collect();
    Ok(Some(Coloring::from_colors(colors)))
}

struct Search<'a> {
    g: &'a OrderedGraph,
    lists: Vec<ColorSet>,
    trail: Vec<(usize, ColorSet)>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, list: ColorSet) {
        self.trail.push((v, self.lists[v]));
        self.lists[v] = list;
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, l) = self.trail.pop().unwrap();
            self.lists[v] = l;
        }
    }

    /// Strikes each singleton's color from its neighbors until nothing changes.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            let Some(c) = self.lists[v].only() else { continue };
            for i in 0..self.g.degree(v) {
                let u = self.g.neighbors(v)[i];
                let lu = self.lists[u];
                if lu.contains(c) {
                    let reduced = lu.without(c);
                    self.assign(u, reduced);
                    match reduced.len() {
                        0 => return false,
                        1 => queue.push(u),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn components(&mut self, open: &[usize]) -> Vec<Vec<usize>> {
        self.epoch += 1;
        let inside = self.epoch;
        for &v in open {
            self.stamp[v] = inside;
        }
        self.epoch += 1;
        let done = self.epoch;
        let mut comps = Vec::new();
        for &root in open {
            if self.stamp[root] != inside {
                continue;
            }
            self.stamp[root] = done;
            let mut comp = vec![root];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in self.g.neighbors(v) {
                    if self.stamp[u] == inside {
                        self.stamp[u] = done;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    fn solve_set(&mut self, verts: &[usize]) -> bool {
        let open: Vec<usize> = verts.iter().copied().filter(|&v| self.lists[v].len() >= 2).collect();
        if open.is_empty() {
            return true;
        }
        for comp in self.components(&open) {
            if !self.solve_component(&comp) {
                return false;
            }
        }
        true
    }

    fn branch_vertex(&self, comp: &[usize]) -> usize {
        let open_degree = |v: usize| self.g.neighbors(v).iter().filter(|&&u| self.lists[u].len() >= 2).count();
        *comp
            .iter()
            .min_by_key(|&&v| (std::cmp::Reverse(open_degree(v)), self.lists[v].len(), v))
            .expect("components are non-empty")
    }

    fn solve_component(&mut self, comp: &[usize]) -> bool {
        let v = self.branch_vertex(comp);
        let options: Vec<Color> = self.lists[v].iter().collect();
        for c in options {
            let mark = self.trail.len();
            self.assign(v, ColorSet::single(c));
            if self.propagate(vec![v]) && self.solve_set(comp) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Visits every L-coloring in lexicographic order (vertices by position, colors ascending).
pub fn enumerate_colorings(
    inst: &Instance,
    cfg: &OracleConfig,
    mut visit: impl FnMut(&Coloring) -> ControlFlow<()>,
) -> Result<(), OracleError> {
    let n = inst.len();
    if n > cfg.max_enumeration_vertices {
        return Err(OracleError::TooLarge { vertices: n, cap: cfg.max_enumeration_vertices });
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    fn rec(
        inst: &Instance,
        v: usize,
        colors: &mut Vec<Option<Color>>,
        visit: &mut dyn FnMut(&Coloring) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if v == inst.len() {
            return visit(&Coloring::from_options(colors.clone()));
        }
        for c in inst.list(v).iter() {
            let clash = inst.graph().neighbors(v).iter().any(|&u| u < v && colors[u] == Some(c));
            if clash {
                continue;
            }
            colors[v] = Some(c);
            rec(inst, v + 1, colors, visit)?;
        }
        colors[v] = None;
        ControlFlow::Continue(())
    }
    let _ = rec(inst, 0, &mut colors, &mut visit);
    Ok(())
}

/// Every L-coloring, in lexicographic order.
pub fn all_colorings(inst: &Instance) -> Result<Vec<Coloring>, OracleError> {
    let mut out = Vec::new();
    enumerate_colorings(inst, &OracleConfig::default(), |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The exact number of L-colorings.
pub fn count_colorings(inst: &Instance) -> Result<u128, OracleError> {
    count_colorings_with(inst, &OracleConfig::default())
}

pub fn count_colorings_with(inst: &Instance, cfg: &OracleConfig) -> Result<u128, OracleError> {
    let n = inst.len();
    if n > cfg.max_enumeration_vertices {
        return Err(OracleError::TooLarge { vertices: n, cap: cfg.max_enumeration_vertices });
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    fn rec(inst: &Instance, v: usize, colors: &mut Vec<Option<Color>>) -> u128 {
        if v == inst.len() {
            return 1;
        }
        let mut total = 0u128;
        for c in inst.list(v).iter() {
            if inst.graph().neighbors(v).iter().any(|&u| u < v && colors[u] == Some(c)) {
                continue;
            }
            colors[v] = Some(c);
            total += rec(inst, v + 1, colors);
        }
        colors[v] = None;
        total
    }
    Ok(rec(inst, 0, &mut colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::{ListAssignment, OrderedGraph};

    fn full(n: usize, e: &[(usize, usize)]) -> Instance {
        Instance::full(OrderedGraph::on_line(n, e).unwrap())
    }

    #[test]
    fn small_cases() {
        assert_eq!(solve_bruteforce(&full(0, &[])).unwrap(), Some(Coloring::from_colors(vec![])));
        let tri = full(3, &[(0, 1), (1, 2), (0, 2)]);
        let c = solve_bruteforce(&tri).unwrap().unwrap();
        assert!(c.is_list_coloring_of(&tri));
        let k4 = full(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(solve_bruteforce(&k4).unwrap(), None);
    }

    #[test]
    fn counts() {
        let one = Instance::new(
            OrderedGraph::on_line(1, &[]).unwrap(),
            ListAssignment::new(vec![ColorSet::of(&[1, 2])]),
        )
        .unwrap();
        assert_eq!(count_colorings(&one).unwrap(), 2);
        let edge = Instance::new(
            OrderedGraph::on_line(2, &[(0, 1)]).unwrap(),
            ListAssignment::new(vec![ColorSet::of(&[1, 2]); 2]),
        )
        .unwrap();
        assert_eq!(count_colorings(&edge).unwrap(), 2);
        assert_eq!(count_colorings(&full(3, &[(0, 1), (1, 2), (0, 2)])).unwrap(), 6);
    }

    #[test]
    fn cap_is_a_refusal() {
        let big = full(70, &[]);
        assert!(matches!(solve_bruteforce(&big), Err(OracleError::TooLarge { .. })));
        let cfg = OracleConfig { max_vertices: 100, max_enumeration_vertices: 5 };
        assert!(solve_bruteforce_with(&big, &cfg).unwrap().is_some());
        assert!(count_colorings_with(&full(6, &[]), &cfg).is_err());
    }
}
