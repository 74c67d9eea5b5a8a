//! 2-SAT and list coloring with lists of size at most two.

use super::KernelError;
use crate::ordered_core::{Color, Coloring, Instance};

/// A 2-SAT formula over variables `0..n`. Literal `2x` is `x`, `2x+1` is `¬x`.
#[derive(Clone, Debug)]
pub struct TwoSat {
    n: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(n: usize) -> Self {
        TwoSat { n, implications: vec![Vec::new(); 2 * n] }
    }

    pub fn lit(var: usize, value: bool) -> usize {
        2 * var + usize::from(!value)
    }

    /// Adds the clause `a ∨ b`.
    pub fn either(&mut self, a: usize, b: usize) {
        self.implications[a ^ 1].push(b);
        self.implications[b ^ 1].push(a);
    }

    /// A satisfying assignment, or `None`.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = self.components();
        let mut out = Vec::with_capacity(self.n);
        for x in 0..self.n {
            let (t, f) = (comp[2 * x], comp[2 * x + 1]);
            if t == f {
                return None;
            }
            // Tarjan numbers components sinks first.
            out.push(t < f);
        }
        Some(out)
    }

    /// Iterative Tarjan; component ids come out in reverse topological order.
    fn components(&self) -> Vec<usize> {
        let m = 2 * self.n;
        let mut index = vec![usize::MAX; m];
        let mut low = vec![0; m];
        let mut on_stack = vec![false; m];
        let mut comp = vec![usize::MAX; m];
        let mut stack = Vec::new();
        let mut frames: Vec<(usize, usize)> = Vec::new();
        let (mut next, mut comps) = (0, 0);
        for root in 0..m {
            if index[root] != usize::MAX {
                continue;
            }
            frames.push((root, 0));
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut i)) = frames.last_mut() {
                if let Some(&u) = self.implications[v].get(*i) {
                    *i += 1;
                    if index[u] == usize::MAX {
                        index[u] = next;
                        low[u] = next;
                        next += 1;
                        stack.push(u);
                        on_stack[u] = true;
                        frames.push((u, 0));
                    } else if on_stack[u] {
                        low[v] = low[v].min(index[u]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let u = stack.pop().unwrap();
                        on_stack[u] = false;
                        comp[u] = comps;
                        if u == v {
                            break;
                        }
                    }
                    comps += 1;
                }
            }
        }
        comp
    }
}

/// Decides an instance whose lists all have size at most two.
///
/// Each vertex gets one boolean: true means it takes the smaller color of its
/// list. Singletons are forced true and an empty list answers `None`.
pub fn solve_two_lists(inst: &Instance) -> Result<Option<Coloring>, KernelError> {
    let n = inst.len();
    if let Some(v) = (0..n).find(|&v| inst.list(v).len() > 2) {
        return Err(KernelError::WideList(v));
    }
    if inst.lists().has_empty() {
        return Ok(None);
    }
    let literal = |v: usize, c: Color| -> Option<usize> {
        let l = inst.list(v);
        if !l.contains(c) {
            None
        } else {
            Some(TwoSat::lit(v, l.first() == Some(c)))
        }
    };
    let mut sat = TwoSat::new(n);
    for v in 0..n {
        if inst.list(v).len() == 1 {
            let t = TwoSat::lit(v, true);
            sat.either(t, t);
        }
    }
    for (u, v) in inst.graph().edges() {
        for c in inst.list(u).intersect(inst.list(v)).iter() {
            let (a, b) = (literal(u, c).unwrap(), literal(v, c).unwrap());
            sat.either(a ^ 1, b ^ 1);
        }
    }
    let Some(values) = sat.solve() else { return Ok(None) };
    let colors = (0..n)
        .map(|v| {
            let l = inst.list(v);
            let first = l.first().unwrap();
            if values[v] {
                first
            } else {
                l.without(first).first().unwrap()
            }
        })
        .collect();
    Ok(Some(Coloring::from_colors(colors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::{ColorSet, ListAssignment, OrderedGraph};

    fn two(n: usize, e: &[(usize, usize)]) -> Instance {
        let g = OrderedGraph::on_line(n, e).unwrap();
        Instance::new(g, ListAssignment::new(vec![ColorSet::of(&[1, 2]); n])).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(solve_two_lists(&two(3, &[(0, 1), (1, 2), (0, 2)])).unwrap(), None);
        let c4 = two(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let c = solve_two_lists(&c4).unwrap().unwrap();
        assert!(c.is_list_coloring_of(&c4));
        assert_eq!(c.get(0), c.get(2));
        assert!(solve_two_lists(&Instance::full(OrderedGraph::on_line(1, &[]).unwrap())).is_err());
    }

    #[test]
    fn raw_formula() {
        let mut s = TwoSat::new(2);
        s.either(TwoSat::lit(0, true), TwoSat::lit(1, true));
        s.either(TwoSat::lit(0, false), TwoSat::lit(1, true));
        s.either(TwoSat::lit(1, false), TwoSat::lit(0, false));
        assert_eq!(s.solve(), Some(vec![false, true]));
        s.either(TwoSat::lit(1, false), TwoSat::lit(1, false));
        assert_eq!(s.solve(), None);
    }
}
