use proptest::prelude::*;

use ordcolor::format::{parse_graph, parse_nae, parse_prov, write_graph, write_nae, write_prov};
use ordcolor::hardness_forge::{from_prov, gen_h1, gen_h3, Order, Role};
use ordcolor::jw_solver::{gamma, property_x, property_y};
use ordcolor::ordered_core::{
    contains_pattern, dominates, is_free_of, is_isomorphic, maximal_edges, monotone_subsequence, Position, VertexId,
};
use ordcolor::pattern_catalog::{build_pattern, PatternId};
use ordcolor::poly_kernels::{propagate_lists, solve_two_lists};
use ordcolor::reference_oracle::{all_colorings, solve_bruteforce, solve_bruteforce_with, OracleConfig};
use ordcolor::sampling::Sampler;
use ordcolor::{Coloring, Instance, OrderedGraph};

fn catalog() -> Vec<PatternId> {
    (1..=16).map(PatternId::J).chain((1..=8).map(PatternId::M)).chain([PatternId::Jw(1), PatternId::J16kl(1, 0)]).collect()
}

/// A random instance whose vertices sit at distinct rational positions.
fn rational_instance(seed: u64, n: usize) -> Instance {
    let mut s = Sampler::new(seed);
    let inst = s.instance(n, 0.4, 0.5);
    let g = inst.graph();
    let mut dens: Vec<i64> = (0..n).map(|_| 1 + s.below(5) as i64).collect();
    dens.sort_unstable();
    let vertices = (0..n)
        .map(|v| {
            let d = dens[v];
            (VertexId::new(format!("x{v}")).unwrap(), Position::new(d * (2 * v as i64 + 1) - 7 * d, 2 * d).unwrap())
        })
        .collect();
    let edges = g.edges().into_iter().map(|(a, b)| (VertexId::new(format!("x{a}")).unwrap(), VertexId::new(format!("x{b}")).unwrap())).collect();
    Instance::new(OrderedGraph::new(vertices, edges).unwrap(), inst.lists().clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_file_round_trip(seed in any::<u64>(), n in 0usize..12) {
        let inst = rational_instance(seed, n);
        let text = write_graph("g", &inst);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.name, "g");
        prop_assert_eq!(&back.instance, &inst);
        prop_assert_eq!(write_graph("g", &back.instance), text);
    }

    #[test]
    fn nae_file_round_trip(seed in any::<u64>(), vars in 3usize..8, clauses in 0usize..6) {
        let nae = Sampler::new(seed).nae(vars, clauses);
        prop_assert_eq!(parse_nae(&write_nae(&nae)).unwrap(), nae);
    }

    #[test]
    fn provenance_round_trip(seed in any::<u64>(), clauses in 1usize..4, reversed in any::<bool>()) {
        let nae = Sampler::new(seed).nae(4, clauses);
        let mut out = gen_h1(&nae, Order::T1).unwrap();
        if reversed {
            out = out.reversed();
        }
        let prov = out.prov();
        let parsed = parse_prov(&write_prov(&prov)).unwrap();
        prop_assert_eq!(&parsed, &prov);
        let back = from_prov(&out.instance, &parsed).unwrap();
        prop_assert_eq!(back.roles, out.roles);
    }

    #[test]
    fn role_strings_round_trip(level in 1usize..20, u in 1usize..9, v in 1usize..9, j in 1usize..20, k in 1usize..5) {
        for role in [
            Role::Orig(u),
            Role::M(u),
            Role::T(j, k),
            Role::W { level, u, v, j },
            Role::Z { level, u, v, j },
            Role::ZLevel(level),
            Role::Switch { k, level, u, v, j },
        ] {
            prop_assert_eq!(role.to_string().parse::<Role>().unwrap(), role);
        }
    }

    #[test]
    fn maximal_edges_are_a_monotone_antichain(seed in any::<u64>(), n in 0usize..14) {
        let g = Sampler::new(seed).graph(n, 0.35);
        let mx = maximal_edges(&g);
        prop_assert!(mx.windows(2).all(|p| p[0].0 < p[1].0 && p[0].1 < p[1].1));
        for e in g.edges() {
            let covered = mx.contains(&e) || mx.iter().any(|&f| dominates(f, e));
            prop_assert!(covered);
            prop_assert!(!mx.contains(&e) || !mx.iter().any(|&f| dominates(f, e)));
        }
        for v in (0..n).filter(|&v| g.degree(v) > 0) {
            prop_assert!(mx.iter().any(|&(a, b)| a <= v && v <= b));
        }
    }

    #[test]
    fn long_sequences_have_monotone_runs(k in 1usize..6, seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let mut seq: Vec<usize> = (0..k * k + 1).collect();
        rand::seq::SliceRandom::shuffle(seq.as_mut_slice(), s.rng());
        let idx = monotone_subsequence(&seq, k).unwrap();
        prop_assert_eq!(idx.len(), k + 1);
        let vals: Vec<usize> = idx.iter().map(|&i| seq[i]).collect();
        prop_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(vals.windows(2).all(|w| w[0] < w[1]) || vals.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn freeness_is_mirror_symmetric(seed in any::<u64>(), n in 0usize..9, pick in 0usize..26) {
        let g = Sampler::new(seed).graph(n, 0.45);
        let id = catalog()[pick % catalog().len()].clone();
        let h = build_pattern(&id).unwrap();
        let neg = build_pattern(&id.neg()).unwrap();
        prop_assert_eq!(is_free_of(&g, &h), is_free_of(&g.reverse(), &neg));
        if let Some(w) = contains_pattern(&g, &h) {
            prop_assert!(w.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(is_isomorphic(&g.induced_indices(&w), &h));
        }
    }

    #[test]
    fn reversal_preserves_colorability(seed in any::<u64>(), n in 0usize..9) {
        let inst = Sampler::new(seed).instance(n, 0.45, 0.5);
        let a = solve_bruteforce(&inst).unwrap();
        let b = solve_bruteforce(&inst.reverse()).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        if let Some(c) = a {
            prop_assert!(c.reversed().is_list_coloring_of(&inst.reverse()));
        }
        prop_assert_eq!(inst.reverse().reverse(), inst);
    }

    #[test]
    fn propagation_keeps_every_coloring(seed in any::<u64>(), n in 0usize..8) {
        let inst = Sampler::new(seed).instance(n, 0.5, 0.4);
        let narrowed = inst.with_lists(propagate_lists(inst.graph(), inst.lists())).unwrap();
        let before = all_colorings(&inst).unwrap();
        let after = all_colorings(&narrowed).unwrap();
        prop_assert_eq!(before, after);
        for v in 0..n {
            prop_assert!(narrowed.list(v).is_subset(inst.list(v)));
        }
    }

    #[test]
    fn two_list_kernel_matches_oracle(seed in any::<u64>(), n in 0usize..11) {
        let mut s = Sampler::new(seed);
        let g = s.graph(n, 0.4);
        let inst = Instance::new(g, s.narrow_lists(n)).unwrap();
        let got = solve_two_lists(&inst).unwrap();
        prop_assert_eq!(got.is_some(), solve_bruteforce(&inst).unwrap().is_some());
        if let Some(c) = got {
            prop_assert!(c.is_list_coloring_of(&inst));
        }
    }

    /// Properties X and Y survive restricting the partial coloring.
    #[test]
    fn seed_properties_are_monotone(seed in any::<u64>(), n in 2usize..7, mask in any::<u32>()) {
        let mut s = Sampler::new(seed);
        let inst = Instance::full(s.graph(n, 0.5));
        let Some(phi) = solve_bruteforce(&inst).unwrap() else { return Ok(()) };
        for e in inst.graph().edges() {
            for g in gamma(&inst, e, 1).unwrap().take(40) {
                let restricted = Coloring::from_options(
                    (0..n).map(|v| if mask >> v & 1 == 1 { phi.get(v) } else { None }).collect(),
                );
                if property_x(&inst, &phi, &g) {
                    prop_assert!(property_x(&inst, &restricted, &g));
                }
                if property_y(&inst, &phi, &g) {
                    prop_assert!(property_y(&inst, &restricted, &g));
                }
            }
        }
    }

    #[test]
    fn level_gadget_keeps_source_colorability(seed in any::<u64>(), n in 2usize..5) {
        let g = Sampler::new(seed).graph(n, 0.6);
        prop_assume!(g.edge_count() > 0);
        let out = gen_h3(&g, Order::T5).unwrap();
        let truth = solve_bruteforce(&Instance::full(g)).unwrap().is_some();
        let got = solve_bruteforce_with(&out.instance, &OracleConfig::gadget_scale()).unwrap().is_some();
        prop_assert_eq!(got, truth);
    }
}
