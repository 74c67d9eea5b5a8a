//! Exponential-time ground truth for list colorings and NAE3SAT.

mod nae;
mod search;

use thiserror::Error;

pub use nae::{nae_bruteforce, NaeInstance, NAE_VAR_CAP};
pub use search::{
    all_colorings, count_colorings, count_colorings_with, enumerate_colorings, solve_bruteforce,
    solve_bruteforce_with, OracleConfig,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {vertices} vertices, above the oracle cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("NAE instance has {vars} variables, above the cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("clause {clause} {vars:?} needs three distinct variables below {num_vars}")]
    BadClause { clause: usize, vars: [usize; 3], num_vars: usize },
}
