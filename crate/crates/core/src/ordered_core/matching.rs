//! Order-type isomorphism and ordered induced-subgraph search.

use super::graph::OrderedGraph;

/// True iff the rank-preserving bijection maps edges onto edges exactly.
pub fn is_isomorphic(g: &OrderedGraph, h: &OrderedGraph) -> bool {
    g.len() == h.len() && g.edge_count() == h.edge_count() && g.edges() == h.edges()
}

/// Finds `X` (sorted indices of `g`) with `g[X]` order-isomorphic to `h`.
///
/// Pattern vertices are placed one at a time: connected pieces first, each
/// grown outward from its leftmost vertex so that every newly placed vertex
/// draws its candidates from a neighbor list, then isolated pattern vertices.
/// Each candidate is confined to the gap left by the already placed pattern
/// vertices on either side of it in the pattern order.
pub fn contains_pattern(g: &OrderedGraph, h: &OrderedGraph) -> Option<Vec<usize>> {
    let k = h.len();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > g.len() || h.edge_count() > g.edge_count() {
        return None;
    }
    let plan = Plan::new(h);
    let mut search = Search { g, h, plan: &plan, image: vec![usize::MAX; k] };
    if search.place(0) {
        let mut x = search.image;
        x.sort_unstable();
        Some(x)
    } else {
        None
    }
}

/// True iff `g` has no induced copy of `h`.
pub fn is_free_of(g: &OrderedGraph, h: &OrderedGraph) -> bool {
    contains_pattern(g, h).is_none()
}

struct Plan {
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
}

impl Plan {
    fn new(h: &OrderedGraph) -> Self {
        let k = h.len();
        let mut order = Vec::with_capacity(k);
        let mut anchor = Vec::with_capacity(k);
        let mut seen = vec![false; k];
        for root in 0..k {
            if seen[root] || h.degree(root) == 0 {
                continue;
            }
            seen[root] = true;
            order.push(root);
            anchor.push(None);
            let mut head = order.len() - 1;
            while head < order.len() {
                let p = order[head];
                head += 1;
                for &q in h.neighbors(p) {
                    if !seen[q] {
                        seen[q] = true;
                        order.push(q);
                        anchor.push(Some(p));
                    }
                }
            }
        }
        for p in 0..k {
            if !seen[p] {
                order.push(p);
                anchor.push(None);
            }
        }
        Plan { order, anchor }
    }
}

struct Search<'a> {
    g: &'a OrderedGraph,
    h: &'a OrderedGraph,
    plan: &'a Plan,
    image: Vec<usize>,
}

impl Search<'_> {
    fn place(&mut self, step: usize) -> bool {
        if step == self.plan.order.len() {
            return true;
        }
        let p = self.plan.order[step];
        let k = self.h.len();
        let n = self.g.len();
        // Nearest placed pattern vertices on each side of p.
        let (mut left_p, mut left_img) = (None::<usize>, None::<usize>);
        let (mut right_p, mut right_img) = (None::<usize>, None::<usize>);
        for (q, &img) in self.image.iter().enumerate() {
            if img == usize::MAX {
                continue;
            }
            if q < p && left_p.is_none_or(|lp| q > lp) {
                left_p = Some(q);
                left_img = Some(img);
            }
            if q > p && right_p.is_none_or(|rp| q < rp) {
                right_p = Some(q);
                right_img = Some(img);
            }
        }
        // Room for the unplaced pattern vertices between the neighbors and p.
        let below = p - left_p.map_or(0, |lp| lp + 1);
        let above = right_p.unwrap_or(k) - p - 1;
        let lo = left_img.map_or(0, |i| i + 1) + below;
        let hi_excl = right_img.unwrap_or(n);
        if hi_excl < above + 1 || lo >= hi_excl - above {
            return false;
        }
        let hi = hi_excl - above;
        let need = self.h.degree(p);
        let candidates: Vec<usize> = match self.plan.anchor[step] {
            Some(a) => {
                let nb = self.g.neighbors(self.image[a]);
                let start = nb.partition_point(|&c| c < lo);
                nb[start..].iter().copied().take_while(|&c| c < hi).collect()
            }
            None => (lo..hi).collect(),
        };
        for c in candidates {
            if self.g.degree(c) < need || !self.consistent(p, c) {
                continue;
            }
            self.image[p] = c;
            if self.place(step + 1) {
                return true;
            }
            self.image[p] = usize::MAX;
        }
        false
    }

    fn consistent(&self, p: usize, c: usize) -> bool {
        self.image.iter().enumerate().all(|(q, &img)| {
            img == usize::MAX || self.h.adjacent(p, q) == self.g.adjacent(c, img)
        })
    }
}
