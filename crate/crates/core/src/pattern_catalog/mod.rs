//! Named forbidden patterns and the single-pattern complexity classifier.

mod classify;
mod patterns;

pub use classify::{classify, ComplexityStatus, ComplexityVerdict, Justification};
pub use patterns::{build_pattern, CatalogError, PatternId};
