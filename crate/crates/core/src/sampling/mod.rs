//! Reproducible random instances.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! names the same corpus on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ordered_core::{contains_pattern, ColorSet, Instance, ListAssignment, OrderedGraph};
use crate::reference_oracle::NaeInstance;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// `G(n, p)` on positions `1..n`.
    pub fn graph(&mut self, n: usize, p: f64) -> OrderedGraph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        OrderedGraph::on_line(n, &edges).expect("valid by construction")
    }

    /// A full list with probability `full`, otherwise a uniform nonempty subset.
    pub fn list(&mut self, full: f64) -> ColorSet {
        if self.rng.gen_bool(full) {
            ColorSet::FULL
        } else {
            ColorSet::from_bits(self.rng.gen_range(1..8))
        }
    }

    pub fn lists(&mut self, n: usize, full: f64) -> ListAssignment {
        ListAssignment::new((0..n).map(|_| self.list(full)).collect())
    }

    /// Uniform nonempty lists of size at most two.
    pub fn narrow_lists(&mut self, n: usize) -> ListAssignment {
        const NARROW: [u8; 6] = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110];
        ListAssignment::new((0..n).map(|_| ColorSet::from_bits(*NARROW.choose(&mut self.rng).unwrap())).collect())
    }

    pub fn instance(&mut self, n: usize, p: f64, full: f64) -> Instance {
        let g = self.graph(n, p);
        let l = self.lists(n, full);
        Instance::new(g, l).expect("aligned")
    }

    /// Deletes a random edge inside each embedding of `h` until none is left.
    ///
    /// `h` must have an edge, otherwise no deletion can help.
    pub fn repair_free_of(&mut self, g: &OrderedGraph, h: &OrderedGraph) -> OrderedGraph {
        assert!(h.edge_count() > 0, "patterns without edges cannot be repaired away");
        let mut edges = g.edges();
        let mut cur = g.clone();
        while let Some(w) = contains_pattern(&cur, h) {
            let inside: Vec<usize> =
                (0..edges.len()).filter(|&k| w.contains(&edges[k].0) && w.contains(&edges[k].1)).collect();
            let k = *inside.choose(&mut self.rng).expect("an embedding of a pattern with edges uses an edge");
            edges.swap_remove(k);
            edges.sort_unstable();
            cur = OrderedGraph::on_line(g.len(), &edges).expect("subset of valid edges");
        }
        cur
    }

    /// Rejection sampling for an `h`-free `G(n, p)`; `None` after `tries` misses.
    pub fn free_of(&mut self, n: usize, p: f64, h: &OrderedGraph, tries: usize) -> Option<OrderedGraph> {
        (0..tries).map(|_| self.graph(n, p)).find(|g| contains_pattern(g, h).is_none())
    }

    /// A chordal graph grown by adding simplicial vertices; vertex order is shuffled.
    pub fn chordal(&mut self, n: usize, max_clique: usize) -> OrderedGraph {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 1..n {
            let anchor = self.rng.gen_range(0..v);
            let mut clique = vec![anchor];
            let mut candidates: Vec<usize> = adj[anchor].iter().copied().filter(|&u| u < v).collect();
            candidates.shuffle(&mut self.rng);
            for u in candidates {
                if clique.len() + 1 >= max_clique {
                    break;
                }
                if clique.iter().all(|&c| adj[c].contains(&u)) && self.rng.gen_bool(0.6) {
                    clique.push(u);
                }
            }
            if self.rng.gen_bool(0.15) {
                continue;
            }
            for &u in &clique {
                edges.push((u, v));
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let relabeled: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        OrderedGraph::on_line(n, &relabeled).expect("valid by construction")
    }

    /// Monotone NAE instance with `clauses` random 3-sets of distinct variables.
    pub fn nae(&mut self, vars: usize, clauses: usize) -> NaeInstance {
        assert!(vars >= 3 || clauses == 0);
        let all: Vec<usize> = (0..vars).collect();
        let cls = (0..clauses)
            .map(|_| {
                let mut pick: Vec<usize> = all.choose_multiple(&mut self.rng, 3).copied().collect();
                pick.sort_unstable();
                [pick[0], pick[1], pick[2]]
            })
            .collect();
        NaeInstance::new(vars, cls).expect("distinct variables")
    }
}
