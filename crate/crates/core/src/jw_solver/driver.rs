//! The five-step decision procedure.

use std::ops::ControlFlow;

use super::sigma::{for_each_alpha, member};
use super::table::{augment_star, success_table};
use super::{JwConfig, JwError};
use crate::ordered_core::{contains_pattern, Coloring, Instance};
use crate::pattern_catalog::{build_pattern, PatternId};
use crate::poly_kernels::{has_k4, solve_small_class};
use crate::reference_oracle::{solve_bruteforce_with, OracleConfig};

/// The step that settled the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JwStep {
    CliqueOnFour,
    SmallClass,
    EmptyProfile,
    SuccessTable,
}

/// Where a returned coloring came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessSource {
    /// Produced by the small-class kernel.
    SmallClassKernel,
    /// The procedure only decides; the coloring was recovered by running the
    /// exhaustive oracle on the accepting profile member.
    OracleRerun,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JwOutcome {
    pub colorable: bool,
    pub step: JwStep,
    pub witness: Option<(Coloring, WitnessSource)>,
    /// Profile members examined, counting those discarded for an empty list.
    pub members_seen: usize,
}

/// Decides L-colorability of a `J_w`-free instance.
///
/// Returns `NotFree` with an embedding when `G` contains `J_w`.
pub fn solve_jw(inst: &Instance, w: usize, cfg: &JwConfig) -> Result<JwOutcome, JwError> {
    if w == 0 {
        return Err(JwError::ZeroWidth);
    }
    let pattern = build_pattern(&PatternId::Jw(w)).expect("w >= 1");
    if let Some(witness) = contains_pattern(inst.graph(), &pattern) {
        return Err(JwError::NotFree { w, witness });
    }
    let done = |colorable, step, witness| JwOutcome { colorable, step, witness, members_seen: 0 };
    if has_k4(inst.graph()) {
        return Ok(done(false, JwStep::CliqueOnFour, None));
    }
    if let Some(c) = solve_small_class(inst, 2 * w) {
        return Ok(done(true, JwStep::SmallClass, Some((c, WitnessSource::SmallClassKernel))));
    }
    let mut seen = 0;
    let mut nonempty = 0;
    let mut accepted = None;
    let mut failure = None;
    for_each_alpha(inst, w, |alpha| {
        seen += 1;
        let m = member(inst, alpha);
        if m.reduced.has_empty_list() {
            return ControlFlow::Continue(());
        }
        nonempty += 1;
        let star = augment_star(&m.reduced.materialize(inst));
        match success_table(&star, w + 1, cfg) {
            Ok(t) if !t.last().is_empty() => {
                accepted = Some(m.spanning);
                ControlFlow::Break(())
            }
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let step = if nonempty == 0 { JwStep::EmptyProfile } else { JwStep::SuccessTable };
    let witness = accepted.as_ref().and_then(|lists| {
        let member = inst.with_lists(lists.clone()).expect("same length");
        let cfg = OracleConfig { max_vertices: 64, ..OracleConfig::default() };
        solve_bruteforce_with(&member, &cfg).ok().flatten().map(|c| (c, WitnessSource::OracleRerun))
    });
    Ok(JwOutcome { colorable: accepted.is_some(), step, witness, members_seen: seen })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_core::{ColorSet, ListAssignment, OrderedGraph};

    #[test]
    fn clique_on_four_far_from_everything() {
        let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let inst = Instance::full(OrderedGraph::on_line(4, &e).unwrap());
        let out = solve_jw(&inst, 1, &JwConfig::default()).unwrap();
        assert!(!out.colorable);
        assert_eq!(out.step, JwStep::CliqueOnFour);
    }

    #[test]
    fn edgeless_with_one_color() {
        let g = OrderedGraph::on_line(4, &[]).unwrap();
        let inst = Instance::new(g, ListAssignment::new(vec![ColorSet::of(&[1]); 4])).unwrap();
        let out = solve_jw(&inst, 1, &JwConfig::default()).unwrap();
        assert!(out.colorable);
        assert_eq!(out.step, JwStep::SmallClass);
        assert!(out.witness.unwrap().0.is_list_coloring_of(&inst));
    }

    #[test]
    fn refuses_when_pattern_present() {
        let inst = Instance::full(OrderedGraph::on_line(5, &[(1, 3)]).unwrap());
        assert!(matches!(solve_jw(&inst, 1, &JwConfig::default()), Err(JwError::NotFree { .. })));
        assert_eq!(solve_jw(&inst, 0, &JwConfig::default()), Err(JwError::ZeroWidth));
    }
}
