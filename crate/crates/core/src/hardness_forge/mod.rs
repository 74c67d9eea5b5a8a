//! Hardness gadgets: reductions from monotone NAE3SAT and from 3-coloring
//! into ordered list 3-coloring, with machine-checked pattern freeness.
//!
//! Generators return a [`GadgetOutput`] carrying the instance, a role per
//! vertex, the patterns the ordering is claimed to avoid, and for the level
//! gadgets the three branch paths replacing each source edge.

mod bipartite;
mod levels;
mod nae;
mod realize;
mod rebuild;
mod role;
mod verify;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use bipartite::gen_bipartite;
pub use levels::{gen_h3, gen_h4, gen_h5};
pub use nae::{gen_h1, gen_h2};
pub use realize::realize_lists;
pub use rebuild::from_prov;
pub use role::Role;
pub use verify::{verify_gadget, Check, VerifyReport};

use crate::format::ProvFile;
use crate::ordered_core::{GraphError, Instance, OrderedGraph, Position, VertexId};
use crate::pattern_catalog::PatternId;
use crate::reference_oracle::NaeInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForgeError {
    #[error("graph is not bipartite: odd cycle through edge {0}-{1}")]
    NotBipartite(usize, usize),
    #[error("gadget {gadget} has no ordering {order}")]
    BadOrder { gadget: GadgetKind, order: Order },
    #[error("level {level}: closing columns are not in increasing order (gap {gap})")]
    GapNotPositive { level: usize, gap: i64 },
    #[error("path registry: {0}")]
    Registry(String),
    #[error("provenance: {0}")]
    Prov(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    Bip,
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 6] =
        [GadgetKind::Bip, GadgetKind::H1, GadgetKind::H2, GadgetKind::H3, GadgetKind::H4, GadgetKind::H5];

    /// Orderings the gadget supports; the first is the default.
    pub fn orders(self) -> &'static [Order] {
        match self {
            GadgetKind::Bip => &[Order::T5],
            GadgetKind::H1 => &[Order::T1, Order::T2, Order::T3],
            GadgetKind::H2 => &[Order::T4],
            GadgetKind::H3 => &[Order::T5, Order::T6],
            GadgetKind::H4 => &[Order::T7],
            GadgetKind::H5 => &[Order::T8],
        }
    }

    pub fn default_order(self) -> Order {
        self.orders()[0]
    }

    /// Level gadgets replace each source edge by three paths.
    pub fn is_realization(self) -> bool {
        matches!(self, GadgetKind::H3 | GadgetKind::H4 | GadgetKind::H5)
    }

    pub(crate) fn check(self, order: Order) -> Result<(), ForgeError> {
        if self.orders().contains(&order) {
            Ok(())
        } else {
            Err(ForgeError::BadOrder { gadget: self, order })
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GadgetKind::Bip => "bip",
            GadgetKind::H1 => "h1",
            GadgetKind::H2 => "h2",
            GadgetKind::H3 => "h3",
            GadgetKind::H4 => "h4",
            GadgetKind::H5 => "h5",
        };
        f.write_str(s)
    }
}

impl FromStr for GadgetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GadgetKind::ALL.into_iter().find(|k| k.to_string() == s).ok_or_else(|| format!("unknown gadget {s:?}"))
    }
}

/// The vertex orderings `t1..t8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", *self as u8 + 1)
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        const ALL: [Order; 8] = [Order::T1, Order::T2, Order::T3, Order::T4, Order::T5, Order::T6, Order::T7, Order::T8];
        ALL.into_iter().find(|o| o.to_string() == s).ok_or_else(|| format!("unknown ordering {s:?}"))
    }
}

/// What a gadget was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Nae(NaeInstance),
    /// A graph to be 3-colored; its order plays no role.
    Graph(OrderedGraph),
    /// A list instance whose ordering was replaced.
    Lists(Instance),
}

/// One branch path `u = p_0, p_1, ..., p_t, p_{t+1} = v` replacing source edge `uv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPath {
    /// Source edge as gadget indices of its ends, in path order.
    pub ends: (usize, usize),
    /// 1, 2 or 3.
    pub branch: u8,
    /// Gadget indices from `ends.0` to `ends.1`, inclusive.
    pub vertices: Vec<usize>,
}

impl BranchPath {
    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathRegistry {
    pub paths: Vec<BranchPath>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub kind: GadgetKind,
    pub order: Order,
    /// Set when the whole gadget has been mirrored.
    pub reversed: bool,
    pub instance: Instance,
    /// Role of each vertex, by index.
    pub roles: Vec<Role>,
    pub advertised_free: Vec<PatternId>,
    pub registry: PathRegistry,
    pub source: Option<Source>,
}

/// `-H` for a pattern id, without stacking negations.
pub fn mirror_pattern(p: &PatternId) -> PatternId {
    match p {
        PatternId::Neg(inner) => (**inner).clone(),
        other => other.clone().neg(),
    }
}

pub(crate) fn advertised(kind: GadgetKind, order: Order) -> Vec<PatternId> {
    use PatternId::{J, M};
    match (kind, order) {
        (GadgetKind::Bip, _) => [1, 2, 4, 6, 7, 9, 12, 13, 15].into_iter().map(J).collect(),
        (GadgetKind::H1, Order::T1) => vec![J(3), J(11).neg()],
        (GadgetKind::H1, Order::T2) => vec![J(5), J(8)],
        (GadgetKind::H1, _) => vec![J(10), J(14)],
        (GadgetKind::H2, _) => vec![J(7), J(13), J(14)],
        (GadgetKind::H3, Order::T5) => vec![M(1), M(2)],
        (GadgetKind::H3, _) => vec![M(3)],
        (GadgetKind::H4, _) => vec![M(4)],
        (GadgetKind::H5, _) => vec![M(5)],
    }
}

impl GadgetOutput {
    /// The mirrored gadget `-H`, advertising the mirrored patterns.
    pub fn reversed(&self) -> GadgetOutput {
        let n = self.instance.len();
        let flip = |v: usize| n - 1 - v;
        let registry = PathRegistry {
            paths: self
                .registry
                .paths
                .iter()
                .map(|p| BranchPath {
                    ends: (flip(p.ends.0), flip(p.ends.1)),
                    branch: p.branch,
                    vertices: p.vertices.iter().map(|&v| flip(v)).collect(),
                })
                .collect(),
        };
        GadgetOutput {
            kind: self.kind,
            order: self.order,
            reversed: !self.reversed,
            instance: self.instance.reverse(),
            roles: self.roles.iter().rev().cloned().collect(),
            advertised_free: self.advertised_free.iter().map(mirror_pattern).collect(),
            registry,
            source: self.source.clone(),
        }
    }

    /// Sidecar provenance: the gadget line and one role per vertex.
    pub fn prov(&self) -> ProvFile {
        let kind = if self.reversed { format!("neg:{}", self.kind) } else { self.kind.to_string() };
        ProvFile {
            gadget: Some((kind, self.order.to_string())),
            roles: self.instance.graph().ids().iter().cloned().zip(self.roles.iter().map(Role::to_string)).collect(),
        }
    }
}

/// Collects named vertices with roles and edges, then orders them.
#[derive(Default)]
pub(crate) struct Builder {
    verts: Vec<(String, Position, Role)>,
    edges: Vec<(String, String)>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, id: impl Into<String>, pos: Position, role: Role) {
        self.verts.push((id.into(), pos, role));
    }

    pub(crate) fn edge(&mut self, a: impl Into<String>, b: impl Into<String>) {
        self.edges.push((a.into(), b.into()));
    }

    /// Fails on repeated ids or positions, so every ordering is checked to be injective.
    pub(crate) fn finish(self) -> Result<(OrderedGraph, Vec<Role>), ForgeError> {
        let mut roles_by_id = Vec::with_capacity(self.verts.len());
        let mut vs = Vec::with_capacity(self.verts.len());
        for (id, pos, role) in self.verts {
            let id = VertexId::new(id)?;
            roles_by_id.push((id.clone(), role));
            vs.push((id, pos));
        }
        let es = self
            .edges
            .into_iter()
            .map(|(a, b)| Ok((VertexId::new(a)?, VertexId::new(b)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        let g = OrderedGraph::new(vs, es)?;
        let mut roles = vec![Role::X; g.len()];
        for (id, role) in roles_by_id {
            roles[g.index_of(&id).expect("built from these ids")] = role;
        }
        Ok((g, roles))
    }
}
