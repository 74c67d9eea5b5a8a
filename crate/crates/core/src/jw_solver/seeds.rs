//! Colored seeds `(S, σ)` and properties X and Y.

use std::rc::Rc;

use super::bits::{bits, BitGraph};
use super::JwError;
use crate::ordered_core::{edge, Color, Coloring, Edge, Instance};

/// `27w² + 3`, the largest color class a seed of width `w` may have.
pub fn class_bound(w: usize) -> usize {
    27 * w * w + 3
}

/// A member of `Γ_w(G,L,e)`: a support inside `und(e)` holding both ends of
/// `e`, and a proper list coloring of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredSeed {
    pub edge: Edge,
    /// Sorted vertex indices.
    pub support: Vec<usize>,
    /// `colors[k]` colors `support[k]`.
    pub colors: Vec<Color>,
    pub(crate) mask: u64,
    pub(crate) class: [u64; 3],
}

impl ColoredSeed {
    /// Builds a seed from parallel support/color vectors; `support` is sorted here.
    pub fn new(e: Edge, pairs: Vec<(usize, Color)>) -> Self {
        let mut pairs = pairs;
        pairs.sort_by_key(|p| p.0);
        let mut class = [0u64; 3];
        let mut mask = 0u64;
        for &(v, c) in &pairs {
            mask |= 1 << v;
            class[c.index()] |= 1 << v;
        }
        let (support, colors) = pairs.into_iter().unzip();
        ColoredSeed { edge: edge(e.0, e.1), support, colors, mask, class }
    }

    pub fn color_of(&self, v: usize) -> Option<Color> {
        self.support.binary_search(&v).ok().map(|k| self.colors[k])
    }

    pub fn class_size(&self, c: Color) -> usize {
        self.class[c.index()].count_ones() as usize
    }

    /// Checks the defining conditions against `inst` and width `w`.
    pub fn is_valid(&self, inst: &Instance, w: usize) -> bool {
        let (a, b) = self.edge;
        let g = inst.graph();
        b < g.len()
            && g.adjacent(a, b)
            && self.support.iter().all(|&v| a <= v && v <= b)
            && self.support.contains(&a)
            && self.support.contains(&b)
            && self.support.iter().zip(&self.colors).all(|(&v, &c)| inst.list(v).contains(c))
            && self.support.iter().enumerate().all(|(i, &v)| {
                self.support[i + 1..]
                    .iter()
                    .enumerate()
                    .all(|(j, &u)| !g.adjacent(u, v) || self.colors[i] != self.colors[i + 1 + j])
            })
            && Color::ALL.iter().all(|&c| self.class_size(c) <= class_bound(w))
    }
}

/// Lazily enumerates `Γ_w(G,L,e)`.
///
/// Supports come in ascending bitmask order over `und(e)`; the colorings of
/// one support come in lexicographic order (positions, then colors).
pub fn gamma(inst: &Instance, e: Edge, w: usize) -> Result<impl Iterator<Item = ColoredSeed>, JwError> {
    let (a, b) = edge(e.0, e.1);
    if b >= inst.len() || !inst.graph().adjacent(a, b) {
        return Err(JwError::NotAnEdge(e.0, e.1));
    }
    let bg = Rc::new(BitGraph::new(inst)?);
    let inner = b - a - 1;
    let cap = class_bound(w);
    Ok((0..1u64 << inner).flat_map(move |m| {
        let support: Vec<usize> =
            std::iter::once(a).chain(bits(m).map(|i| a + 1 + i)).chain(std::iter::once(b)).collect();
        colorings(&bg, &support, cap).into_iter().map(move |cols| {
            ColoredSeed::new((a, b), support.iter().copied().zip(cols).collect())
        })
    }))
}

fn colorings(bg: &BitGraph, support: &[usize], cap: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(support.len());
    let mut class = [0u64; 3];
    fn rec(
        bg: &BitGraph,
        support: &[usize],
        cap: usize,
        cur: &mut Vec<Color>,
        class: &mut [u64; 3],
        out: &mut Vec<Vec<Color>>,
    ) {
        let k = cur.len();
        if k == support.len() {
            out.push(cur.clone());
            return;
        }
        let v = support[k];
        for c in bg.lists[v].iter() {
            let ci = c.index();
            if bg.adj[v] & class[ci] != 0 || class[ci].count_ones() as usize >= cap {
                continue;
            }
            class[ci] |= 1 << v;
            cur.push(c);
            rec(bg, support, cap, cur, class, out);
            cur.pop();
            class[ci] &= !(1 << v);
        }
    }
    rec(bg, support, cap, &mut cur, &mut class, &mut out);
    out
}

/// Property X: `φ` agrees with `σ` on shared vertices and `σ ∪ φ` is a list
/// coloring of `G[S ∪ dom φ]`.
pub fn property_x(inst: &Instance, phi: &Coloring, seed: &ColoredSeed) -> bool {
    let g = inst.graph();
    let combined = |v: usize| phi.get(v).or_else(|| seed.color_of(v));
    for v in phi.domain() {
        let c = phi.get(v).unwrap();
        if seed.color_of(v).is_some_and(|s| s != c) || !inst.list(v).contains(c) {
            return false;
        }
    }
    let mut members = phi.domain();
    members.extend(seed.support.iter().copied());
    members.sort_unstable();
    members.dedup();
    members.iter().all(|&v| {
        let c = combined(v);
        g.neighbors(v).iter().all(|&u| u <= v || combined(u).is_none() || combined(u) != c)
    })
}

/// Property Y: compatibility, and every `x ∈ lft(e)` seeing `φ⁻¹(i) ∩ und(e)`
/// also sees `σ⁻¹(i)`.
pub fn property_y(inst: &Instance, phi: &Coloring, seed: &ColoredSeed) -> bool {
    let g = inst.graph();
    let (a, b) = seed.edge;
    let compatible = phi.domain().into_iter().all(|v| seed.color_of(v).is_none_or(|s| phi.get(v) == Some(s)));
    if !compatible {
        return false;
    }
    (0..a).all(|x| {
        g.neighbors(x).iter().filter(|&&y| a <= y && y <= b).all(|&y| match phi.get(y) {
            None => true,
            Some(i) => g.neighbors(x).iter().any(|&z| seed.color_of(z) == Some(i)),
        })
    })
}
