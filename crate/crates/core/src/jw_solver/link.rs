//! Condition (S): does some `ψ` on `und(e')` give both seeds properties X and Y?

use std::ops::ControlFlow;

use super::bits::{below, bits, range, BitGraph};
use super::seeds::{property_x, property_y, ColoredSeed};
use super::{JwConfig, JwError};
use crate::ordered_core::{Color, ColorSet, Coloring, Edge, Instance, ListAssignment};
use crate::poly_kernels::solve_few_wide;
use crate::reference_oracle::{enumerate_colorings, OracleConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkBackend {
    /// Reduce to a list instance on `und(e')` and solve it with few wide lists.
    Reduction,
    /// Try every `ψ` directly.
    Enumeration,
}

/// The vertex sets one link decision looks at.
pub(crate) struct Frame {
    /// `und(e')` in position order.
    pub und_prev: Vec<usize>,
    pub lft_prev: u64,
    pub und_cur: u64,
    pub lft_cur: u64,
    /// `G[und(e')]` with its original lists.
    pub sub: Instance,
}

impl Frame {
    pub fn new(inst: &Instance, e: Edge, e_prev: Edge) -> Self {
        let und_prev: Vec<usize> = (e_prev.0..=e_prev.1).collect();
        Frame {
            sub: inst.induced_indices(&und_prev),
            und_prev,
            lft_prev: below(e_prev.0),
            und_cur: range(e.0, e.1),
            lft_cur: below(e.0),
        }
    }
}

/// Colors `x` may take as far as one seed is concerned: its own color if
/// it is in the support, minus the colors of support neighbors, minus every
/// `i` for which a neighbor in `lft` sees no vertex of class `i`.
fn restriction(bg: &BitGraph, x: usize, seed: &ColoredSeed, lft: u64) -> ColorSet {
    let mut allowed = seed.color_of(x).map_or(ColorSet::FULL, ColorSet::single);
    for c in Color::ALL {
        let class = seed.class[c.index()];
        if bg.adj[x] & class != 0 {
            allowed = allowed.without(c);
        }
        if bits(bg.adj[x] & lft).any(|y| bg.adj[y] & class == 0) {
            allowed = allowed.without(c);
        }
    }
    allowed
}

/// `R^σ` over `und(e')` for a seed of the current edge.
pub(crate) fn current_signature(bg: &BitGraph, f: &Frame, g: &ColoredSeed) -> Vec<ColorSet> {
    f.und_prev
        .iter()
        .map(|&x| {
            let lft = if f.und_cur >> x & 1 == 1 { f.lft_cur } else { 0 };
            restriction(bg, x, g, lft)
        })
        .collect()
}

/// `R^τ` over `und(e')` for a seed of the previous edge.
pub(crate) fn previous_signature(bg: &BitGraph, f: &Frame, g_prev: &ColoredSeed) -> Vec<ColorSet> {
    f.und_prev.iter().map(|&x| restriction(bg, x, g_prev, f.lft_prev)).collect()
}

/// Decides the reduced instance `L ∩ R^σ ∩ R^τ` on `G[und(e')]`.
pub(crate) fn decide_reduced(f: &Frame, cur: &[ColorSet], prev: &[ColorSet], cap: usize) -> Result<bool, JwError> {
    let lists: Vec<ColorSet> =
        (0..f.und_prev.len()).map(|k| f.sub.list(k).intersect(cur[k]).intersect(prev[k])).collect();
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(false);
    }
    let wide = lists.iter().filter(|l| l.len() == 3).count();
    if wide > cap {
        return Err(JwError::WideCapExceeded { count: wide, cap });
    }
    let reduced = f.sub.with_lists(ListAssignment::new(lists)).expect("same length");
    Ok(solve_few_wide(&reduced, wide).expect("wide count within bound").is_some())
}

/// Every proper list coloring of `G[und(e')]`, as partial colorings of `G`.
pub(crate) fn all_psi(inst: &Instance, f: &Frame) -> Vec<Coloring> {
    let mut out = Vec::new();
    let cfg = OracleConfig { max_vertices: 64, max_enumeration_vertices: 64 };
    enumerate_colorings(&f.sub, &cfg, |local| {
        let mut psi = Coloring::empty(inst.len());
        for (k, &v) in f.und_prev.iter().enumerate() {
            psi.set(v, local.get(k));
        }
        out.push(psi);
        ControlFlow::Continue(())
    })
    .expect("cap raised to the seed limit");
    out
}

pub(crate) fn psi_links(inst: &Instance, psi: &Coloring, g: &ColoredSeed) -> bool {
    property_x(inst, psi, g) && property_y(inst, psi, g)
}

/// Condition (S) for seeds `g` of `e` and `g_prev` of `e_prev`, where `e_prev`
/// is the maximal edge immediately before `e`.
pub fn check_link(
    inst: &Instance,
    e: Edge,
    e_prev: Edge,
    g: &ColoredSeed,
    g_prev: &ColoredSeed,
    cfg: &JwConfig,
) -> Result<bool, JwError> {
    let f = Frame::new(inst, e, e_prev);
    match cfg.backend {
        LinkBackend::Reduction => {
            let bg = BitGraph::new(inst)?;
            let cur = current_signature(&bg, &f, g);
            let prev = previous_signature(&bg, &f, g_prev);
            decide_reduced(&f, &cur, &prev, cfg.wide_cap)
        }
        LinkBackend::Enumeration => {
            Ok(all_psi(inst, &f).iter().any(|psi| psi_links(inst, psi, g) && psi_links(inst, psi, g_prev)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::OrderedGraph;

    fn c(x: u8) -> Color {
        Color::new(x).unwrap()
    }

    fn both(inst: &Instance, e: Edge, ep: Edge, g: &ColoredSeed, gp: &ColoredSeed) -> bool {
        let red = check_link(inst, e, ep, g, gp, &JwConfig::default()).unwrap();
        let cfg = JwConfig { backend: LinkBackend::Enumeration, ..JwConfig::default() };
        let en = check_link(inst, e, ep, g, gp, &cfg).unwrap();
        assert_eq!(red, en);
        red
    }

    #[test]
    fn shared_endpoint() {
        // path 0-1-2: e' = 01, e = 12
        let inst = Instance::full(OrderedGraph::on_line(3, &[(0, 1), (1, 2)]).unwrap());
        let gp = ColoredSeed::new((0, 1), vec![(0, c(1)), (1, c(2))]);
        let same = ColoredSeed::new((1, 2), vec![(1, c(2)), (2, c(3))]);
        let clash = ColoredSeed::new((1, 2), vec![(1, c(3)), (2, c(1))]);
        assert!(both(&inst, (1, 2), (0, 1), &same, &gp));
        assert!(!both(&inst, (1, 2), (0, 1), &clash, &gp));
    }
}
