use std::collections::{HashMap, HashSet};

use super::{records, FormatError};
use crate::ordered_core::{edge, ColorSet, Instance, ListAssignment, OrderedGraph, Position, VertexId};

/// A parsed ordered-graph file: `ograph`, `vtx`, `edg` and `lst` records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub name: String,
    pub instance: Instance,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, FormatError> {
    let mut name = None;
    let mut vertices: Vec<(VertexId, Position)> = Vec::new();
    let mut seen_ids: HashMap<VertexId, usize> = HashMap::new();
    let mut seen_pos: HashMap<Position, usize> = HashMap::new();
    let mut edges: Vec<(usize, VertexId, VertexId)> = Vec::new();
    let mut lists: Vec<(usize, VertexId, ColorSet)> = Vec::new();
    for (line, tok) in records(text) {
        let arity = |n: usize| {
            if tok.len() == n + 1 {
                Ok(())
            } else {
                Err(FormatError::at(line, format!("`{}` takes {n} argument(s), got {}", tok[0], tok.len() - 1)))
            }
        };
        let id = |s: &str| VertexId::new(s).map_err(|e| FormatError::at(line, e.to_string()));
        match tok[0] {
            "ograph" => {
                arity(1)?;
                if name.is_some() {
                    return Err(FormatError::at(line, "second `ograph` header"));
                }
                if !vertices.is_empty() || !edges.is_empty() || !lists.is_empty() {
                    return Err(FormatError::at(line, "`ograph` header must come first"));
                }
                name = Some(tok[1].to_string());
            }
            _ if name.is_none() => return Err(FormatError::at(line, "expected `ograph <name>` header")),
            "vtx" => {
                arity(2)?;
                let v = id(tok[1])?;
                let p: Position =
                    tok[2].parse().map_err(|_| FormatError::at(line, format!("bad position {:?}", tok[2])))?;
                if let Some(prev) = seen_ids.insert(v.clone(), line) {
                    return Err(FormatError::at(line, format!("vertex {v} already declared on line {prev}")));
                }
                if let Some(prev) = seen_pos.insert(p.clone(), line) {
                    return Err(FormatError::at(line, format!("position {p} already used on line {prev}")));
                }
                vertices.push((v, p));
            }
            "edg" => {
                arity(2)?;
                edges.push((line, id(tok[1])?, id(tok[2])?));
            }
            "lst" => {
                arity(2)?;
                let l: ColorSet =
                    tok[2].parse().map_err(|_| FormatError::at(line, format!("bad list {:?}", tok[2])))?;
                lists.push((line, id(tok[1])?, l));
            }
            other => return Err(FormatError::at(line, format!("unknown record `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| FormatError::at(0, "missing `ograph <name>` header"))?;
    let mut pairs = HashSet::new();
    let mut named_edges = Vec::with_capacity(edges.len());
    for (line, a, b) in edges {
        for v in [&a, &b] {
            if !seen_ids.contains_key(v) {
                return Err(FormatError::at(line, format!("unknown vertex {v}")));
            }
        }
        if a == b {
            return Err(FormatError::at(line, format!("self-loop at {a}")));
        }
        let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if !pairs.insert(key) {
            return Err(FormatError::at(line, format!("duplicate edge {a} {b}")));
        }
        named_edges.push((a, b));
    }
    let graph = OrderedGraph::new(vertices, named_edges).map_err(|e| FormatError::at(0, e.to_string()))?;
    let mut assignment = ListAssignment::full(graph.len());
    let mut listed = HashSet::new();
    for (line, v, l) in lists {
        let Some(i) = graph.index_of(&v) else {
            return Err(FormatError::at(line, format!("unknown vertex {v}")));
        };
        if !listed.insert(i) {
            return Err(FormatError::at(line, format!("second list for {v}")));
        }
        assignment.set(i, l);
    }
    let instance = Instance::new(graph, assignment).expect("one list per vertex");
    Ok(GraphFile { name, instance })
}

/// Serializes in position order; `lst` lines only for lists other than `123`.
pub fn write_graph(name: &str, inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = format!("ograph {name}\n");
    for v in 0..g.len() {
        out.push_str(&format!("vtx {} {}\n", g.id(v), g.position(v)));
    }
    for (a, b) in g.edges() {
        let (a, b) = edge(a, b);
        out.push_str(&format!("edg {} {}\n", g.id(a), g.id(b)));
    }
    for v in 0..g.len() {
        if inst.list(v) != ColorSet::FULL {
            out.push_str(&format!("lst {} {}\n", g.id(v), inst.list(v)));
        }
    }
    out
}
