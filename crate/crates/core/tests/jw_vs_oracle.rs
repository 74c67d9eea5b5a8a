use std::collections::BTreeSet;

use ordcolor::jw_solver::{augment_star, solve_jw, success_table, JwConfig, JwStep, LinkBackend};
use ordcolor::pattern_catalog::{build_pattern, PatternId};
use ordcolor::poly_kernels::drop_singletons;
use ordcolor::reference_oracle::solve_bruteforce;
use ordcolor::sampling::Sampler;
use ordcolor::Instance;

struct Regime {
    w: usize,
    n: (usize, usize),
    p: f64,
    full: f64,
}

fn free_instance(s: &mut Sampler, r: &Regime) -> Instance {
    let jw = build_pattern(&PatternId::Jw(r.w)).unwrap();
    let n = s.between(r.n.0, r.n.1);
    let g = s.graph(n, r.p);
    let g = s.repair_free_of(&g, &jw);
    let lists = s.lists(n, r.full);
    Instance::new(g, lists).unwrap()
}

fn agree(r: Regime, count: usize, seed: u64, backend: LinkBackend) -> BTreeSet<(String, bool)> {
    let mut s = Sampler::new(seed);
    let cfg = JwConfig { backend, ..JwConfig::default() };
    let mut steps = BTreeSet::new();
    for _ in 0..count {
        let inst = free_instance(&mut s, &r);
        let truth = solve_bruteforce(&inst).unwrap().is_some();
        let out = solve_jw(&inst, r.w, &cfg).unwrap();
        assert_eq!(out.colorable, truth, "{inst:?}");
        assert_eq!(out.witness.is_some(), truth);
        if let Some((c, _)) = &out.witness {
            assert!(c.is_list_coloring_of(&inst));
        }
        steps.insert((format!("{:?}", out.step), out.colorable));
    }
    steps
}

#[test]
fn small_j1_free_both_backends() {
    let r = |full| Regime { w: 1, n: (3, 8), p: 0.5, full };
    agree(r(0.4), 300, 1, LinkBackend::Reduction);
    agree(r(0.4), 150, 2, LinkBackend::Enumeration);
}

#[test]
fn j1_free_reaches_the_success_table() {
    let steps = agree(Regime { w: 1, n: (9, 12), p: 0.35, full: 0.5 }, 150, 5, LinkBackend::Reduction);
    assert!(steps.contains(&(format!("{:?}", JwStep::SuccessTable), true)), "{steps:?}");
    assert!(steps.contains(&(format!("{:?}", JwStep::EmptyProfile), false)), "{steps:?}");
}

#[test]
fn j1_free_success_table_enumeration_backend() {
    agree(Regime { w: 1, n: (9, 11), p: 0.35, full: 0.5 }, 40, 6, LinkBackend::Enumeration);
}

#[test]
fn j2_free_reduction_backend() {
    agree(Regime { w: 2, n: (5, 11), p: 0.3, full: 0.6 }, 100, 3, LinkBackend::Reduction);
}

#[test]
fn last_table_matches_colorability_after_singleton_removal() {
    for w in 1..=2 {
        let mut s = Sampler::new(9);
        let r = Regime { w, n: (5, 11), p: 0.35, full: 0.5 };
        for _ in 0..200 {
            let inst = free_instance(&mut s, &r);
            let kept = drop_singletons(&inst);
            if kept.has_empty_list() {
                continue;
            }
            let reduced = kept.materialize(&inst);
            let truth = solve_bruteforce(&reduced).unwrap().is_some();
            let table = success_table(&augment_star(&reduced), w + 1, &JwConfig::default()).unwrap();
            assert_eq!(!table.last().is_empty(), truth, "{reduced:?}");
        }
    }
}
