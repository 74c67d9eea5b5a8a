use super::{advertised, Builder, ForgeError, GadgetKind, GadgetOutput, Order, PathRegistry, Role, Source};
use crate::ordered_core::{Instance, Position};
use crate::reference_oracle::NaeInstance;

fn pos(p: usize) -> Position {
    Position::from_int(p as i64)
}

/// For each clause and slot, the rank of that occurrence among all
/// occurrences grouped by variable, then by clause (0-based).
fn occurrence_ranks(inst: &NaeInstance) -> Vec<[usize; 3]> {
    let mut occ = vec![0usize; inst.num_vars()];
    for c in inst.clauses() {
        for &x in c {
            occ[x] += 1;
        }
    }
    let mut start = vec![0usize; inst.num_vars()];
    for i in 1..inst.num_vars() {
        start[i] = start[i - 1] + occ[i - 1];
    }
    inst.clauses()
        .iter()
        .map(|c| {
            c.map(|x| {
                start[x] += 1;
                start[x] - 1
            })
        })
        .collect()
}

fn nae_output(kind: GadgetKind, order: Order, inst: &NaeInstance, b: Builder) -> Result<GadgetOutput, ForgeError> {
    let (h, roles) = b.finish()?;
    Ok(GadgetOutput {
        kind,
        order,
        reversed: false,
        instance: Instance::full(h),
        roles,
        advertised_free: advertised(kind, order),
        registry: PathRegistry::default(),
        source: Some(Source::Nae(inst.clone())),
    })
}

/// `x` joined to one vertex per variable, plus a triangle per clause whose
/// k-th vertex is joined to the clause's k-th variable. 3-colorable iff the
/// instance is NAE-satisfiable.
pub fn gen_h1(inst: &NaeInstance, order: Order) -> Result<GadgetOutput, ForgeError> {
    GadgetKind::H1.check(order)?;
    let n = inst.num_vars();
    let mut b = Builder::default();
    let (x_at, m_at) = match order {
        Order::T2 => (n + 1, 0),
        _ => (1, 1),
    };
    b.vertex("x", pos(x_at), Role::X);
    for i in 1..=n {
        b.vertex(format!("m{i}"), pos(i + m_at), Role::M(i));
        b.edge("x", format!("m{i}"));
    }
    let ranks = occurrence_ranks(inst);
    for (j0, c) in inst.clauses().iter().enumerate() {
        let j = j0 + 1;
        for k in 1..=3 {
            let p = match order {
                Order::T3 => n + 2 + ranks[j0][k - 1],
                _ => n + 3 * j + k - 2,
            };
            b.vertex(format!("t{j}_{k}"), pos(p), Role::T(j, k));
            b.edge(format!("t{j}_{k}"), format!("m{}", c[k - 1] + 1));
        }
        for (k1, k2) in [(1, 2), (1, 3), (2, 3)] {
            b.edge(format!("t{j}_{k1}"), format!("t{j}_{k2}"));
        }
    }
    nae_output(GadgetKind::H1, order, inst, b)
}

/// H1 with each variable-to-clause edge subdivided by a vertex `s` that is
/// also joined to `x`.
pub fn gen_h2(inst: &NaeInstance) -> Result<GadgetOutput, ForgeError> {
    let n = inst.num_vars();
    let m = inst.clauses().len();
    let mut b = Builder::default();
    b.vertex("x", pos(1), Role::X);
    for i in 1..=n {
        b.vertex(format!("m{i}"), pos(i + 1), Role::M(i));
        b.edge("x", format!("m{i}"));
    }
    let ranks = occurrence_ranks(inst);
    for (j0, c) in inst.clauses().iter().enumerate() {
        let j = j0 + 1;
        for (slot, &x0) in c.iter().enumerate() {
            let i = x0 + 1;
            let s_at = n + 2 + ranks[j0][slot];
            let (s, t) = (format!("s{i}_{j}"), format!("t{j}_{i}"));
            b.vertex(s.clone(), pos(s_at), Role::S(i, j));
            b.vertex(t.clone(), pos(s_at + 3 * m), Role::T(j, i));
            b.edge("x", s.clone());
            b.edge(format!("m{i}"), s.clone());
            b.edge(s, t);
        }
        for (k1, k2) in [(0, 1), (0, 2), (1, 2)] {
            b.edge(format!("t{j}_{}", c[k1] + 1), format!("t{j}_{}", c[k2] + 1));
        }
    }
    nae_output(GadgetKind::H2, Order::T4, inst, b)
}
