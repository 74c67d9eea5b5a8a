use super::{records, FormatError};
use crate::reference_oracle::NaeInstance;

/// `nae <num_vars>` followed by `cls <a> <b> <c>` lines with 1-based variables.
pub fn parse_nae(text: &str) -> Result<NaeInstance, FormatError> {
    let mut num_vars = None;
    let mut clauses = Vec::new();
    for (line, tok) in records(text) {
        let int = |s: &str| s.parse::<usize>().map_err(|_| FormatError::at(line, format!("bad number {s:?}")));
        match (tok[0], num_vars) {
            ("nae", None) if tok.len() == 2 => num_vars = Some(int(tok[1])?),
            ("nae", _) => return Err(FormatError::at(line, "expected a single `nae <num_vars>` header")),
            (_, None) => return Err(FormatError::at(line, "expected `nae <num_vars>` header")),
            ("cls", Some(n)) if tok.len() == 4 => {
                let mut c = [0; 3];
                for k in 0..3 {
                    let v = int(tok[k + 1])?;
                    if v == 0 || v > n {
                        return Err(FormatError::at(line, format!("variable {v} outside 1..={n}")));
                    }
                    c[k] = v - 1;
                }
                if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                    return Err(FormatError::at(line, "clause needs three distinct variables"));
                }
                clauses.push(c);
            }
            ("cls", _) => return Err(FormatError::at(line, "`cls` takes three variables")),
            (other, _) => return Err(FormatError::at(line, format!("unknown record `{other}`"))),
        }
    }
    let n = num_vars.ok_or_else(|| FormatError::at(0, "missing `nae <num_vars>` header"))?;
    NaeInstance::new(n, clauses).map_err(|e| FormatError::at(0, e.to_string()))
}

pub fn write_nae(inst: &NaeInstance) -> String {
    let mut out = format!("nae {}\n", inst.num_vars());
    for c in inst.clauses() {
        out.push_str(&format!("cls {} {} {}\n", c[0] + 1, c[1] + 1, c[2] + 1));
    }
    out
}
