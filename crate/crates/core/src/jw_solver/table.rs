//! The successful-seed recursion over maximal edges, and `(G*, L*)`.

use std::collections::{BTreeSet, HashMap};

use super::bits::BitGraph;
use super::link::{all_psi, current_signature, decide_reduced, previous_signature, psi_links, Frame, LinkBackend};
use super::seeds::{gamma, ColoredSeed};
use super::{JwConfig, JwError};
use crate::ordered_core::{maximal_edges, ColorSet, Edge, Instance, ListAssignment, OrderedGraph, Position, VertexId};

/// `(G*, L*)`: two new vertices `q1 q2` after everything, adjacent, with lists `{1}` and `{2}`.
pub fn augment_star(inst: &Instance) -> Instance {
    let g = inst.graph();
    let top = g.max_position().cloned().unwrap_or_else(|| Position::from_int(0));
    let fresh = |base: &str| {
        let mut name = base.to_string();
        while g.index_of_str(&name).is_some() {
            name.push('\'');
        }
        VertexId::new(name).expect("well formed")
    };
    let (q1, q2) = (fresh("q1"), fresh("q2"));
    let mut vertices: Vec<(VertexId, Position)> = g.ids().iter().cloned().zip(g.positions().iter().cloned()).collect();
    vertices.push((q1.clone(), top.plus_int(1)));
    vertices.push((q2.clone(), top.plus_int(2)));
    let mut edges: Vec<(VertexId, VertexId)> =
        g.edges().into_iter().map(|(a, b)| (g.id(a).clone(), g.id(b).clone())).collect();
    edges.push((q1, q2));
    let graph = OrderedGraph::new(vertices, edges).expect("new vertices sit past the maximum");
    let mut lists = inst.lists().as_slice().to_vec();
    lists.push(ColorSet::of(&[1]));
    lists.push(ColorSet::of(&[2]));
    Instance::new(graph, ListAssignment::new(lists)).expect("aligned")
}

/// Successful seeds for every maximal edge, in maximal-edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessTable {
    pub edges: Vec<Edge>,
    pub successful: Vec<Vec<ColoredSeed>>,
}

impl SuccessTable {
    /// Successful seeds of the last maximal edge.
    pub fn last(&self) -> &[ColoredSeed] {
        self.successful.last().map_or(&[], |v| v.as_slice())
    }
}

/// Computes which seeds of `Γ_w` are successful, edge by edge.
///
/// Every seed of the first maximal edge is successful. A later seed is
/// successful when it links to some successful seed of the edge just before.
pub fn success_table(inst: &Instance, w: usize, cfg: &JwConfig) -> Result<SuccessTable, JwError> {
    let bg = BitGraph::new(inst)?;
    let edges = maximal_edges(inst.graph());
    let mut successful: Vec<Vec<ColoredSeed>> = Vec::with_capacity(edges.len());
    for (t, &e) in edges.iter().enumerate() {
        if t == 0 {
            successful.push(gamma(inst, e, w)?.collect());
            continue;
        }
        let prev = &successful[t - 1];
        if prev.is_empty() {
            successful.push(Vec::new());
            continue;
        }
        let f = Frame::new(inst, e, edges[t - 1]);
        let next = match cfg.backend {
            LinkBackend::Reduction => {
                let prev_sigs: BTreeSet<Vec<ColorSet>> =
                    prev.iter().map(|gp| previous_signature(&bg, &f, gp)).collect();
                let mut memo: HashMap<Vec<ColorSet>, bool> = HashMap::new();
                let mut out = Vec::new();
                for g in gamma(inst, e, w)? {
                    let sig = current_signature(&bg, &f, &g);
                    let ok = match memo.get(&sig) {
                        Some(&ok) => ok,
                        None => {
                            let mut ok = false;
                            for ps in &prev_sigs {
                                if decide_reduced(&f, &sig, ps, cfg.wide_cap)? {
                                    ok = true;
                                    break;
                                }
                            }
                            memo.insert(sig, ok);
                            ok
                        }
                    };
                    if ok {
                        out.push(g);
                    }
                }
                out
            }
            LinkBackend::Enumeration => {
                let linked: Vec<_> = all_psi(inst, &f)
                    .into_iter()
                    .filter(|psi| prev.iter().any(|gp| psi_links(inst, psi, gp)))
                    .collect();
                gamma(inst, e, w)?.filter(|g| linked.iter().any(|psi| psi_links(inst, psi, g))).collect()
            }
        };
        successful.push(next);
    }
    Ok(SuccessTable { edges, successful })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_augmentation() {
        let empty = augment_star(&Instance::full(OrderedGraph::empty()));
        assert_eq!(empty.len(), 2);
        assert_eq!(empty.graph().edges(), vec![(0, 1)]);
        let path = Instance::full(OrderedGraph::on_line(3, &[(0, 1), (1, 2)]).unwrap());
        let star = augment_star(&path);
        assert_eq!(star.len(), 5);
        let mut mx = maximal_edges(path.graph());
        mx.push((3, 4));
        assert_eq!(maximal_edges(star.graph()), mx);
        assert_eq!(star.list(4), ColorSet::of(&[2]));
    }

    #[test]
    fn base_cases() {
        let single = Instance::full(OrderedGraph::on_line(2, &[(0, 1)]).unwrap());
        let t = success_table(&single, 1, &JwConfig::default()).unwrap();
        assert_eq!(t.last().len(), 6);
        let nested = Instance::full(OrderedGraph::on_line(4, &[(0, 3), (1, 2)]).unwrap());
        let t = success_table(&nested, 1, &JwConfig::default()).unwrap();
        assert_eq!(t.edges, vec![(0, 3)]);
        assert_eq!(t.successful.len(), 1);
    }
}
