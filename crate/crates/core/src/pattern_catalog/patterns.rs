//! Pattern identifiers and their ordered graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ordered_core::{pad, OrderedGraph, Position, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unrecognized pattern id {0:?}")]
    BadId(String),
    #[error("invalid pattern parameter: {0}")]
    BadParameter(String),
}

/// A named pattern. `Neg` is the reversal `-H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternId {
    J(u8),
    M(u8),
    Jw(usize),
    J16kl(usize, usize),
    Neg(Box<PatternId>),
}

impl PatternId {
    pub fn neg(self) -> PatternId {
        PatternId::Neg(Box::new(self))
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::J(i) => write!(f, "J{i}"),
            PatternId::M(i) => write!(f, "M{i}"),
            PatternId::Jw(w) => write!(f, "Jw:{w}"),
            PatternId::J16kl(k, l) => write!(f, "J16:{k},{l}"),
            PatternId::Neg(inner) => write!(f, "neg:{inner}"),
        }
    }
}

fn number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for PatternId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::BadId(s.to_string());
        if let Some(rest) = s.strip_prefix("neg:") {
            return Ok(rest.parse::<PatternId>()?.neg());
        }
        if let Some(rest) = s.strip_prefix("Jw:") {
            let w = number(rest).ok_or_else(bad)?;
            return if w >= 1 { Ok(PatternId::Jw(w)) } else { Err(CatalogError::BadParameter("w must be at least 1".into())) };
        }
        if let Some(rest) = s.strip_prefix("J16:") {
            let (k, l) = rest.split_once(',').ok_or_else(bad)?;
            return Ok(PatternId::J16kl(number(k).ok_or_else(bad)?, number(l).ok_or_else(bad)?));
        }
        if let Some(rest) = s.strip_prefix('J') {
            let i = number(rest).ok_or_else(bad)?;
            return if (1..=16).contains(&i) { Ok(PatternId::J(i as u8)) } else { Err(bad()) };
        }
        if let Some(rest) = s.strip_prefix('M') {
            let i = number(rest).ok_or_else(bad)?;
            return if (1..=8).contains(&i) { Ok(PatternId::M(i as u8)) } else { Err(bad()) };
        }
        Err(bad())
    }
}

/// Vertices `{prefix}1..{prefix}n` at positions `1..n`; edges are 1-based pairs.
fn named(prefix: char, n: usize, edges: &[(usize, usize)]) -> OrderedGraph {
    let vertices = (1..=n)
        .map(|i| (VertexId::new(format!("{prefix}{i}")).unwrap(), Position::from_int(i as i64)))
        .collect();
    let edges = edges
        .iter()
        .map(|&(a, b)| {
            (VertexId::new(format!("{prefix}{a}")).unwrap(), VertexId::new(format!("{prefix}{b}")).unwrap())
        })
        .collect();
    OrderedGraph::new(vertices, edges).expect("catalog patterns are well formed")
}

fn j(i: u8) -> OrderedGraph {
    match i {
        1 => named('u', 4, &[(1, 2), (2, 3), (3, 4)]),
        2 => named('u', 4, &[(1, 2), (2, 4), (3, 4)]),
        3 => named('u', 4, &[(1, 3), (2, 3), (2, 4)]),
        4 => named('u', 4, &[(1, 3), (2, 4), (3, 4)]),
        5 => named('u', 4, &[(1, 4), (2, 3), (2, 4)]),
        6 => named('u', 4, &[(1, 4), (2, 3), (3, 4)]),
        7 => named('u', 4, &[(1, 2), (1, 4), (3, 4)]),
        8 => named('u', 4, &[(1, 3), (1, 4), (2, 4)]),
        9 => named('u', 4, &[(1, 2), (3, 4)]),
        10 => named('u', 4, &[(1, 2), (1, 4)]),
        11 => named('u', 4, &[(1, 3), (1, 4)]),
        12 => named('u', 4, &[(1, 2), (2, 4)]),
        13 => named('u', 5, &[(1, 5), (2, 3), (3, 4)]),
        14 => named('u', 5, &[(1, 5), (2, 3), (2, 4)]),
        15 => named('u', 3, &[(1, 2), (2, 3)]),
        16 => named('u', 3, &[(1, 2), (1, 3)]),
        _ => unreachable!("J index checked by caller"),
    }
}

fn m(i: u8) -> OrderedGraph {
    match i {
        1 => named('v', 6, &[(1, 6), (2, 5)]),
        2 => named('v', 6, &[(1, 6), (2, 5), (3, 4)]),
        3 => named('v', 6, &[(1, 4), (2, 5), (3, 6)]),
        4 => named('v', 6, &[(1, 5), (2, 4), (3, 6)]),
        5 => named('v', 5, &[(1, 5), (2, 3)]),
        6 => named('v', 4, &[(1, 3), (2, 4)]),
        7 => named('v', 4, &[(1, 4), (2, 3)]),
        8 => named('v', 5, &[(1, 5), (2, 4)]),
        _ => unreachable!("M index checked by caller"),
    }
}

/// The ordered graph named by `id`, at positions `1..n` (padding may extend below 1).
pub fn build_pattern(id: &PatternId) -> Result<OrderedGraph, CatalogError> {
    match id {
        PatternId::J(i) if (1..=16).contains(i) => Ok(j(*i)),
        PatternId::M(i) if (1..=8).contains(i) => Ok(m(*i)),
        PatternId::J(_) | PatternId::M(_) => Err(CatalogError::BadId(id.to_string())),
        PatternId::Jw(0) => Err(CatalogError::BadParameter("w must be at least 1".into())),
        PatternId::Jw(w) => Ok(named('v', 3 * w + 2, &[(w + 1, 2 * w + 2)])),
        PatternId::J16kl(k, l) => Ok(pad(&j(16), *k, *l)),
        PatternId::Neg(inner) => Ok(build_pattern(inner)?.reverse().rank_normalized()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::is_isomorphic;

    #[test]
    fn parse_and_print() {
        for s in ["J9", "J16", "M5", "Jw:3", "J16:2,1", "neg:M5", "neg:neg:J1"] {
            assert_eq!(s.parse::<PatternId>().unwrap().to_string(), s);
        }
        for s in ["J0", "J17", "M9", "Jw:0", "J16:1", "neg:", "K4", "J09", "Jw:-1"] {
            assert!(s.parse::<PatternId>().is_err(), "{s}");
        }
    }

    #[test]
    fn shapes() {
        let j9 = build_pattern(&PatternId::J(9)).unwrap();
        assert_eq!(j9.len(), 4);
        assert_eq!(j9.edges(), vec![(0, 1), (2, 3)]);
        let jw1 = build_pattern(&PatternId::Jw(1)).unwrap();
        assert_eq!(jw1.len(), 5);
        assert_eq!(jw1.edges(), vec![(1, 3)]);
        assert_eq!(build_pattern(&PatternId::M(7)).unwrap().edges(), vec![(0, 3), (1, 2)]);
        let neg = build_pattern(&PatternId::M(5).neg()).unwrap();
        assert_eq!(neg.edges(), vec![(0, 4), (2, 3)]);
        assert!(is_isomorphic(&neg, &build_pattern(&PatternId::M(5)).unwrap().reverse()));
    }

    #[test]
    fn padded_j16() {
        let p = build_pattern(&PatternId::J16kl(2, 1)).unwrap();
        assert_eq!(p, pad(&build_pattern(&PatternId::J(16)).unwrap(), 2, 1));
        assert_eq!(p.len(), 6);
        assert_eq!(p.edges(), vec![(2, 3), (2, 4)]);
    }
}
