use std::collections::{BTreeMap, BTreeSet};

use super::levels::registry_from_roles;
use super::{advertised, ForgeError, GadgetKind, GadgetOutput, Order, PathRegistry, Role, Source};
use crate::format::ProvFile;
use crate::ordered_core::{Instance, OrderedGraph, VertexId};
use crate::reference_oracle::NaeInstance;

fn prov_err<T>(msg: impl Into<String>) -> Result<T, ForgeError> {
    Err(ForgeError::Prov(msg.into()))
}

/// Rebuilds a gadget from its instance and provenance sidecar, recovering
/// the source, the advertised patterns and the path registry from the roles.
pub fn from_prov(inst: &Instance, prov: &ProvFile) -> Result<GadgetOutput, ForgeError> {
    let Some((kind_tok, order_tok)) = &prov.gadget else {
        return prov_err("no `gadget` line");
    };
    let (reversed, kind_tok) = match kind_tok.strip_prefix("neg:") {
        Some(rest) => (true, rest),
        None => (false, kind_tok.as_str()),
    };
    let kind: GadgetKind = kind_tok.parse().map_err(ForgeError::Prov)?;
    let order: Order = order_tok.parse().map_err(ForgeError::Prov)?;
    kind.check(order)?;
    let g = inst.graph();
    let mut roles: Vec<Option<Role>> = vec![None; g.len()];
    for (id, text) in &prov.roles {
        let Some(v) = g.index_of(id) else {
            return prov_err(format!("role for unknown vertex {id}"));
        };
        roles[v] = Some(text.parse().map_err(ForgeError::Prov)?);
    }
    let mut roles: Vec<Role> = match roles.iter().position(Option::is_none) {
        Some(v) => return prov_err(format!("vertex {} has no role", g.id(v))),
        None => roles.into_iter().map(Option::unwrap).collect(),
    };
    let mut instance = inst.clone();
    if reversed {
        instance = instance.reverse();
        roles.reverse();
    }
    let h = instance.graph();
    let (source, registry) = match kind {
        GadgetKind::Bip => (None, PathRegistry::default()),
        GadgetKind::H1 | GadgetKind::H2 => (Some(Source::Nae(nae_source(kind, h, &roles)?)), PathRegistry::default()),
        _ => (Some(Source::Graph(graph_source(h, &roles)?)), registry_from_roles(kind, h, &roles)?),
    };
    let out = GadgetOutput {
        kind,
        order,
        reversed: false,
        advertised_free: advertised(kind, order),
        instance,
        roles,
        registry,
        source,
    };
    Ok(if reversed { out.reversed() } else { out })
}

fn nae_source(kind: GadgetKind, h: &OrderedGraph, roles: &[Role]) -> Result<NaeInstance, ForgeError> {
    let mut var_of = BTreeMap::new();
    let mut slots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, r) in roles.iter().enumerate() {
        match *r {
            Role::M(i) => {
                var_of.insert(v, i);
            }
            Role::T(j, _) => slots.entry(j).or_default().push(v),
            _ => {}
        }
    }
    let n = var_of.len();
    if var_of.values().copied().collect::<BTreeSet<_>>() != (1..=n).collect() {
        return prov_err("variable roles are not m(1)..m(n)");
    }
    if slots.keys().copied().ne(1..=slots.len()) {
        return prov_err("clause roles are not numbered 1..m");
    }
    let mut clauses = Vec::with_capacity(slots.len());
    for (j, ts) in slots {
        let mut vars: Vec<(usize, usize)> = Vec::new();
        for t in ts {
            let Role::T(_, k) = roles[t] else { unreachable!() };
            let var = match kind {
                GadgetKind::H1 => {
                    let ms: Vec<usize> = h.neighbors(t).iter().filter_map(|u| var_of.get(u).copied()).collect();
                    match ms.as_slice() {
                        [i] => *i,
                        _ => return prov_err(format!("t({j},{k}) should see exactly one variable")),
                    }
                }
                _ => k,
            };
            vars.push((k, var - 1));
        }
        vars.sort_unstable();
        match vars.as_slice() {
            [a, b, c] => clauses.push([a.1, b.1, c.1]),
            _ => return prov_err(format!("clause {j} has {} vertices", vars.len())),
        }
    }
    NaeInstance::new(n, clauses).map_err(|e| ForgeError::Prov(e.to_string()))
}

fn graph_source(h: &OrderedGraph, roles: &[Role]) -> Result<OrderedGraph, ForgeError> {
    let mut originals = BTreeMap::new();
    let mut edges = BTreeSet::new();
    for (v, r) in roles.iter().enumerate() {
        match *r {
            Role::Orig(g) => {
                originals.insert(g, v);
            }
            Role::W { level: 1, u, v: w, .. } if u < w => {
                edges.insert((u, w));
            }
            _ => {}
        }
    }
    if originals.keys().copied().ne(1..=originals.len()) {
        return prov_err("source roles are not g(1)..g(n)");
    }
    let vertices: Vec<(VertexId, _)> = originals.values().map(|&v| (h.id(v).clone(), h.position(v).clone())).collect();
    let mut named = Vec::with_capacity(edges.len());
    for (u, w) in edges {
        match (originals.get(&u), originals.get(&w)) {
            (Some(&a), Some(&b)) => named.push((h.id(a).clone(), h.id(b).clone())),
            _ => return prov_err(format!("column names missing source vertex g({u}) or g({w})")),
        }
    }
    Ok(OrderedGraph::new(vertices, named)?)
}
