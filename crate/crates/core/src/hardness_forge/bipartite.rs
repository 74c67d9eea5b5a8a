use std::collections::VecDeque;

use super::{advertised, Builder, ForgeError, GadgetKind, GadgetOutput, PathRegistry, Role, Source};
use crate::ordered_core::{Instance, Position};

/// Reorders a bipartite instance so one side precedes the other.
///
/// Sides come from a breadth-first 2-coloring, each component rooted at its
/// first vertex, which goes to `X`. Both sides keep their relative order.
pub fn gen_bipartite(inst: &Instance) -> Result<GadgetOutput, ForgeError> {
    let g = inst.graph();
    let n = g.len();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are placed");
            for &u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!sv);
                        queue.push_back(u);
                    }
                    Some(su) if su == sv => return Err(ForgeError::NotBipartite(v.min(u), v.max(u))),
                    Some(_) => {}
                }
            }
        }
    }
    let xs: Vec<usize> = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let ys: Vec<usize> = (0..n).filter(|&v| side[v] == Some(true)).collect();
    let mut b = Builder::default();
    for (rank, &v) in xs.iter().chain(&ys).enumerate() {
        let y = side[v] == Some(true);
        let index = if y { rank + 1 - xs.len() } else { rank + 1 };
        b.vertex(g.id(v).as_str(), Position::from_int(rank as i64 + 1), Role::Side { y, index });
    }
    for (a, c) in g.edges() {
        b.edge(g.id(a).as_str(), g.id(c).as_str());
    }
    let (h, roles) = b.finish()?;
    let lists = crate::ordered_core::ListAssignment::new(
        h.ids().iter().map(|id| inst.list(g.index_of(id).expect("same ids"))).collect(),
    );
    let kind = GadgetKind::Bip;
    Ok(GadgetOutput {
        kind,
        order: kind.default_order(),
        reversed: false,
        instance: Instance::new(h, lists)?,
        roles,
        advertised_free: advertised(kind, kind.default_order()),
        registry: PathRegistry::default(),
        source: Some(Source::Lists(inst.clone())),
    })
}
