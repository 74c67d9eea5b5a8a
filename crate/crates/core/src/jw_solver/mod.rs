//! Polynomial-time list 3-coloring of `J_w`-free ordered graphs.
//!
//! The pieces are the colored seeds `Γ_w(G,L,e)`, properties X and Y, the
//! successful-seed recursion over maximal edges, the `(G*,L*)` augmentation,
//! the `Σ(G,L)` profile and the five-step driver.

mod bits;
mod driver;
mod link;
mod seeds;
mod sigma;
mod table;

use thiserror::Error;

pub use driver::{solve_jw, JwOutcome, JwStep, WitnessSource};
pub use link::{check_link, LinkBackend};
pub use seeds::{class_bound, gamma, property_x, property_y, ColoredSeed};
pub use sigma::{alpha_tuples, for_each_alpha, build_sigma_profile, l_alpha, sigma_members, AlphaTuple, SigmaMember};
pub use table::{augment_star, success_table, SuccessTable};

/// Tuning for the seed recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JwConfig {
    pub backend: LinkBackend,
    /// Most size-3 lists a reduced link instance may keep.
    pub wide_cap: usize,
}

impl Default for JwConfig {
    fn default() -> Self {
        JwConfig { backend: LinkBackend::Reduction, wide_cap: 12 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JwError {
    #[error("width must be at least 1")]
    ZeroWidth,
    #[error("graph contains J_{w}; witness vertices {witness:?}")]
    NotFree { w: usize, witness: Vec<usize> },
    #[error("{vertices} vertices exceed the seed representation limit of 64")]
    TooLarge { vertices: usize },
    #[error("{count} vertices keep a list of size 3 in a link instance, above the cap {cap}")]
    WideCapExceeded { count: usize, cap: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
}
