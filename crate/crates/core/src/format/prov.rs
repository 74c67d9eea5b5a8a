use std::collections::HashSet;

use super::{records, FormatError};
use crate::ordered_core::VertexId;

/// Provenance sidecar: an optional `gadget <kind> <order>` line and one
/// `prov <vertex-id> <role>` line per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProvFile {
    pub gadget: Option<(String, String)>,
    pub roles: Vec<(VertexId, String)>,
}

pub fn parse_prov(text: &str) -> Result<ProvFile, FormatError> {
    let mut out = ProvFile::default();
    let mut seen = HashSet::new();
    for (line, tok) in records(text) {
        match tok[0] {
            "gadget" if tok.len() == 3 => {
                if out.gadget.is_some() {
                    return Err(FormatError::at(line, "second `gadget` line"));
                }
                out.gadget = Some((tok[1].to_string(), tok[2].to_string()));
            }
            "prov" if tok.len() == 3 => {
                let v = VertexId::new(tok[1]).map_err(|e| FormatError::at(line, e.to_string()))?;
                if !seen.insert(v.clone()) {
                    return Err(FormatError::at(line, format!("second role for {v}")));
                }
                out.roles.push((v, tok[2].to_string()));
            }
            "gadget" | "prov" => return Err(FormatError::at(line, format!("`{}` takes two arguments", tok[0]))),
            other => return Err(FormatError::at(line, format!("unknown record `{other}`"))),
        }
    }
    Ok(out)
}

pub fn write_prov(p: &ProvFile) -> String {
    let mut out = String::new();
    if let Some((kind, order)) = &p.gadget {
        out.push_str(&format!("gadget {kind} {order}\n"));
    }
    for (v, role) in &p.roles {
        out.push_str(&format!("prov {v} {role}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "gadget h1 t1\nprov x x\nprov m1 m(1)\n";
        let p = parse_prov(text).unwrap();
        assert_eq!(write_prov(&p), text);
        assert_eq!(parse_prov("prov a r\nprov a s\n").unwrap_err().line, 2);
        assert_eq!(parse_prov("prov a\n").unwrap_err().line, 1);
    }
}
