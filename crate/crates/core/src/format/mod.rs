//! Line-oriented text formats for graphs, NAE instances and provenance sidecars.
//!
//! Every format allows blank lines and `#` comments. Errors carry 1-based line numbers.

mod graph;
mod nae;
mod prov;

use std::fmt;

pub use graph::{parse_graph, write_graph, GraphFile};
pub use nae::{parse_nae, write_nae};
pub use prov::{parse_prov, write_prov, ProvFile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    /// 1-based; 0 when the problem is not tied to one line.
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError { line, message: message.into() }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

/// Non-empty records as `(line number, tokens)`, comments stripped.
pub(crate) fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().take_while(|t| !t.starts_with('#')).collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}
