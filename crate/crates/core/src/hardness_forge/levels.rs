//! Edge-to-path expanders built on the level ladder.
//!
//! Source edge number `f` (edges sorted by their end indices) owns columns
//! `(u,v,j)` and `(v,u,j)` for `j` in `3f-2..=3f`. Level `i` holds the
//! columns with `j >= i`, ranked by `(u, v, j)`. Column `(u,v,j)` and its
//! twin `(v,u,j)` are joined at level `j`, closing branch `j - 3f + 3` of the
//! edge. Source vertices keep positions `1..n`.

use std::collections::HashMap;

use super::{advertised, Builder, BranchPath, ForgeError, GadgetKind, GadgetOutput, Order, PathRegistry, Role, Source};
use crate::hardness_forge::realize_lists;
use crate::ordered_core::{Instance, OrderedGraph, Position};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Col {
    u: usize,
    v: usize,
    j: usize,
}

struct Ladder {
    n: usize,
    m: usize,
    /// `levels[i - 1]` is `W_i` in rank order.
    levels: Vec<Vec<Col>>,
    /// `offset[i - 1] = n + |W_1| + ... + |W_{i-1}|`.
    offset: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Ladder {
    fn new(g: &OrderedGraph) -> Ladder {
        let edges = g.edges();
        let m = edges.len();
        let mut cols = Vec::with_capacity(6 * m);
        for (f0, &(a, b)) in edges.iter().enumerate() {
            for j in 3 * f0 + 1..=3 * f0 + 3 {
                cols.push(Col { u: a, v: b, j });
                cols.push(Col { u: b, v: a, j });
            }
        }
        cols.sort_unstable();
        let levels: Vec<Vec<Col>> = (1..=3 * m).map(|i| cols.iter().copied().filter(|c| c.j >= i).collect()).collect();
        let mut offset = Vec::with_capacity(levels.len());
        let mut acc = g.len();
        for w in &levels {
            offset.push(acc);
            acc += w.len();
        }
        Ladder { n: g.len(), m, levels, offset, edges }
    }

    fn width(&self, i: usize) -> usize {
        self.levels[i - 1].len()
    }

    /// 1-based ranks of the two closing columns of level `i`.
    fn closers(&self, i: usize) -> (usize, usize) {
        let (a, b) = self.edges[(i - 1) / 3];
        let rank = |c: Col| self.levels[i - 1].binary_search(&c).expect("closing columns are alive") + 1;
        (rank(Col { u: a, v: b, j: i }), rank(Col { u: b, v: a, j: i }))
    }

    fn gap(&self, i: usize) -> Result<usize, ForgeError> {
        let (r1, r2) = self.closers(i);
        let gap = r2 as i64 - r1 as i64;
        if gap < 1 {
            return Err(ForgeError::GapNotPositive { level: i, gap });
        }
        Ok(gap as usize)
    }

    fn w_id(&self, i: usize, c: Col) -> String {
        format!("w{i}_{}_{}_{}", c.u + 1, c.v + 1, c.j)
    }

    fn w_role(i: usize, c: Col) -> Role {
        Role::W { level: i, u: c.u + 1, v: c.v + 1, j: c.j }
    }

    /// Source vertices, every `w` vertex at `place(level, rank)`, and the edges
    /// from each source vertex to the first level.
    fn skeleton(&self, g: &OrderedGraph, place: impl Fn(usize, usize) -> Position) -> Builder {
        let mut b = Builder::default();
        for v in 0..self.n {
            b.vertex(g.id(v).as_str(), Position::from_int(v as i64 + 1), Role::Orig(v + 1));
        }
        for i in 1..=3 * self.m {
            for (r0, &c) in self.levels[i - 1].iter().enumerate() {
                b.vertex(self.w_id(i, c), place(i, r0 + 1), Self::w_role(i, c));
            }
        }
        if let Some(first) = self.levels.first() {
            for &c in first {
                b.edge(g.id(c.u).as_str(), self.w_id(1, c));
            }
        }
        b
    }

    /// Column edges `w_{i-1}(c) - w_i(c)`.
    fn rails(&self, b: &mut Builder) {
        for i in 2..=3 * self.m {
            for &c in &self.levels[i - 1] {
                b.edge(self.w_id(i - 1, c), self.w_id(i, c));
            }
        }
    }
}

fn int(p: usize) -> Position {
    Position::from_int(p as i64)
}

fn finish(kind: GadgetKind, order: Order, g: &OrderedGraph, b: Builder) -> Result<GadgetOutput, ForgeError> {
    let (h, roles) = b.finish()?;
    let registry = registry_from_roles(kind, &h, &roles)?;
    let lists = realize_lists(&h, &registry)?;
    Ok(GadgetOutput {
        kind,
        order,
        reversed: false,
        instance: Instance::new(h, lists)?,
        roles,
        advertised_free: advertised(kind, order),
        registry,
        source: Some(Source::Graph(g.clone())),
    })
}

/// Closes each level by a row of `z` vertices copying the columns strictly
/// between the two closing columns, each half a step from its column.
///
/// `t5` keeps column order on every level; `t6` reverses odd levels.
pub fn gen_h3(g: &OrderedGraph, order: Order) -> Result<GadgetOutput, ForgeError> {
    GadgetKind::H3.check(order)?;
    let lad = Ladder::new(g);
    let reversed_level = |i: usize| order == Order::T6 && i % 2 == 1;
    let place = |i: usize, r: usize| {
        let rank = if reversed_level(i) { lad.width(i) + 1 - r } else { r };
        int(lad.offset[i - 1] + rank)
    };
    let mut b = lad.skeleton(g, place);
    lad.rails(&mut b);
    for i in 1..=3 * lad.m {
        let (r1, r2) = lad.closers(i);
        lad.gap(i)?;
        let level = &lad.levels[i - 1];
        let half = if order == Order::T6 && i % 2 == 0 { Position::half().negated() } else { Position::half() };
        let mut prev = lad.w_id(i, level[r1 - 1]);
        for r in r1 + 1..r2 {
            let c = level[r - 1];
            let id = format!("z{i}_{}_{}_{}", c.u + 1, c.v + 1, c.j);
            b.vertex(id.clone(), place(i, r).plus(&half), Role::Z { level: i, u: c.u + 1, v: c.v + 1, j: c.j });
            b.edge(prev, id.clone());
            prev = id;
        }
        b.edge(prev, lad.w_id(i, level[r2 - 1]));
    }
    finish(GadgetKind::H3, order, g, b)
}

/// Closes each level by one vertex `z_i` joined to both closing columns;
/// the `z` vertices follow all levels, last level first.
pub fn gen_h4(g: &OrderedGraph) -> Result<GadgetOutput, ForgeError> {
    let lad = Ladder::new(g);
    let mut b = lad.skeleton(g, |i, r| int(lad.offset[i - 1] + r));
    lad.rails(&mut b);
    let m3 = 3 * lad.m;
    for i in 1..=m3 {
        let (r1, r2) = lad.closers(i);
        let level = &lad.levels[i - 1];
        let id = format!("z{i}");
        b.vertex(id.clone(), int(lad.n + m3 * (m3 + 1) + (m3 - i + 1)), Role::ZLevel(i));
        b.edge(lad.w_id(i, level[r1 - 1]), id.clone());
        b.edge(id, lad.w_id(i, level[r2 - 1]));
    }
    finish(GadgetKind::H4, Order::T7, g, b)
}

/// Spreads levels `36m^2` apart and routes every column through switching
/// rows, `a_i - 1` of them (at least one), `a_i` being the rank gap between
/// the closing columns. The later closing column's copies drift left by one
/// row per step and it stops one row early; the closing edge joins its top
/// copy to the earlier closing column's top copy one row up.
pub fn gen_h5(g: &OrderedGraph) -> Result<GadgetOutput, ForgeError> {
    let lad = Ladder::new(g);
    let m = lad.m;
    let base = |i: usize, r: usize| 36 * m * m * (i - 1) + lad.offset[i - 1] + r;
    let mut b = lad.skeleton(g, |i, r| int(base(i, r)));
    for i in 1..=3 * m {
        let (r1, r2) = lad.closers(i);
        let rows = lad.gap(i)?.saturating_sub(1).max(1);
        let level = &lad.levels[i - 1];
        let row_id = |k: usize, c: Col| {
            if k == 0 {
                lad.w_id(i, c)
            } else {
                format!("x{k}_{i}_{}_{}_{}", c.u + 1, c.v + 1, c.j)
            }
        };
        for (r0, &c) in level.iter().enumerate() {
            let r = r0 + 1;
            let top = if r == r2 { rows - 1 } else { rows };
            for k in 1..=top {
                let p = if r == r2 {
                    int(base(i, r) + 6 * m * k - k).minus(&Position::half())
                } else {
                    int(base(i, r) + 6 * m * k)
                };
                let role = Role::Switch { k, level: i, u: c.u + 1, v: c.v + 1, j: c.j };
                b.vertex(row_id(k, c), p, role);
                b.edge(row_id(k - 1, c), row_id(k, c));
            }
            if c.j > i {
                b.edge(row_id(rows, c), lad.w_id(i + 1, c));
            }
        }
        b.edge(row_id(rows, level[r1 - 1]), row_id(rows - 1, level[r2 - 1]));
    }
    finish(GadgetKind::H5, Order::T8, g, b)
}

/// `(u, v, j)` in source ranks.
type Column = (usize, usize, usize);

/// Reads the three branch paths of every source edge off the vertex roles.
pub(crate) fn registry_from_roles(kind: GadgetKind, h: &OrderedGraph, roles: &[Role]) -> Result<PathRegistry, ForgeError> {
    let at: HashMap<&Role, usize> = roles.iter().enumerate().map(|(v, r)| (r, v)).collect();
    let find = |r: &Role| at.get(r).copied().ok_or_else(|| ForgeError::Prov(format!("missing vertex with role {r}")));
    let mut z_rows: HashMap<usize, Vec<(Column, usize)>> = HashMap::new();
    let mut firsts = Vec::new();
    for (v, r) in roles.iter().enumerate() {
        match *r {
            Role::Z { level, u, v: w, j } => z_rows.entry(level).or_default().push(((u, w, j), v)),
            Role::W { level: 1, u, v: w, j } if u < w => firsts.push((u, w, j)),
            _ => {}
        }
    }
    for row in z_rows.values_mut() {
        row.sort_unstable();
    }
    firsts.sort_unstable();
    // Column vertices from the source end up to the closing level.
    let climb = |u: usize, w: usize, jj: usize| -> Result<Vec<usize>, ForgeError> {
        let mut out = Vec::new();
        for i in 1..=jj {
            out.push(find(&Role::W { level: i, u, v: w, j: jj })?);
            if kind == GadgetKind::H5 {
                let mut k = 1;
                while let Some(&x) = at.get(&Role::Switch { k, level: i, u, v: w, j: jj }) {
                    out.push(x);
                    k += 1;
                }
            }
        }
        Ok(out)
    };
    let mut paths = Vec::with_capacity(firsts.len());
    for (u, w, jj) in firsts {
        let f = jj.div_ceil(3);
        let (pu, pw) = (find(&Role::Orig(u))?, find(&Role::Orig(w))?);
        let mut vertices = vec![pu];
        vertices.extend(climb(u, w, jj)?);
        match kind {
            GadgetKind::H3 => vertices.extend(z_rows.get(&jj).into_iter().flatten().map(|&(_, z)| z)),
            GadgetKind::H4 => vertices.push(find(&Role::ZLevel(jj))?),
            _ => {}
        }
        let mut back = climb(w, u, jj)?;
        back.reverse();
        vertices.extend(back);
        vertices.push(pw);
        paths.push(BranchPath { ends: (pu, pw), branch: (jj + 3 - 3 * f) as u8, vertices });
    }
    if paths.is_empty() && h.edge_count() > 0 {
        return Err(ForgeError::Prov("edges present but no first-level columns".into()));
    }
    Ok(PathRegistry { paths })
}
