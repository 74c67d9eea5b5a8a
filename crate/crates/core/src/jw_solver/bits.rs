//! Bitmask view of a small instance.

use super::JwError;
use crate::ordered_core::{ColorSet, Instance};

pub(crate) struct BitGraph {
    pub adj: Vec<u64>,
    pub lists: Vec<ColorSet>,
}

impl BitGraph {
    pub fn new(inst: &Instance) -> Result<Self, JwError> {
        let n = inst.len();
        if n > 64 {
            return Err(JwError::TooLarge { vertices: n });
        }
        let g = inst.graph();
        let adj = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
        Ok(BitGraph { adj, lists: inst.lists().as_slice().to_vec() })
    }
}

/// Bits `lo..=hi`.
pub(crate) fn range(lo: usize, hi: usize) -> u64 {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 63 { u64::MAX } else { (1u64 << (hi + 1)) - 1 };
    upper & !((1u64 << lo) - 1)
}

/// Bits `0..k`.
pub(crate) fn below(k: usize) -> u64 {
    if k == 0 {
        0
    } else {
        range(0, k - 1)
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}
