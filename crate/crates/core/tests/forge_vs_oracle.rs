use std::ops::ControlFlow;

use ordcolor::format::{parse_prov, write_prov};
use ordcolor::hardness_forge::{
    from_prov, gen_bipartite, gen_h1, gen_h2, gen_h3, gen_h4, gen_h5, realize_lists, verify_gadget, GadgetOutput,
    Order, Role,
};
use ordcolor::ordered_core::{edge, ColorSet, Instance, ListAssignment, OrderedGraph, VertexId};
use ordcolor::reference_oracle::{enumerate_colorings, solve_bruteforce_with, NaeInstance, OracleConfig};
use ordcolor::sampling::Sampler;

/// Every NAE instance on 3 or 4 variables with up to three clauses, clauses
/// drawn with repetition from all triples.
fn small_nae() -> Vec<NaeInstance> {
    let mut out = Vec::new();
    for n in 3..=4usize {
        let triples: Vec<[usize; 3]> = (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
            .collect();
        let t = triples.len();
        for count in 0..=3usize {
            let mut idx = vec![0usize; count];
            loop {
                out.push(NaeInstance::new(n, idx.iter().map(|&i| triples[i]).collect()).unwrap());
                let Some(p) = (0..count).rev().find(|&p| idx[p] + 1 < t) else { break };
                idx[p] += 1;
                for q in p + 1..count {
                    idx[q] = idx[p];
                }
            }
        }
    }
    out
}

fn fano() -> NaeInstance {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    NaeInstance::new(7, lines.to_vec()).unwrap()
}

fn k4() -> OrderedGraph {
    OrderedGraph::on_line(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

fn assert_verified(out: &GadgetOutput) {
    let report = verify_gadget(out);
    assert!(report.passed(), "{} {}:\n{report}", out.kind, out.order);
    let mirrored = verify_gadget(&out.reversed());
    assert!(mirrored.passed(), "reversed {} {}:\n{mirrored}", out.kind, out.order);
}

fn colorable(inst: &Instance) -> bool {
    solve_bruteforce_with(inst, &OracleConfig::gadget_scale()).unwrap().is_some()
}

#[test]
fn nae_gadgets_verify_on_every_small_instance() {
    let mut instances = small_nae();
    assert_eq!(instances.len(), 4 + 35);
    instances.push(fano());
    let mut verdicts = [false; 2];
    for nae in &instances {
        for order in [Order::T1, Order::T2, Order::T3] {
            assert_verified(&gen_h1(nae, order).unwrap());
        }
        let h2 = gen_h2(nae).unwrap();
        assert_verified(&h2);
        verdicts[colorable(&h2.instance) as usize] = true;
    }
    assert_eq!(verdicts, [true, true], "both answers must occur");
}

#[test]
fn distinct_clauses_give_disjoint_triangles() {
    let nae = NaeInstance::new(4, vec![[0, 1, 2], [1, 2, 3]]).unwrap();
    let out = gen_h1(&nae, Order::T1).unwrap();
    let g = out.instance.graph();
    let ts: Vec<usize> = (0..g.len()).filter(|&v| matches!(out.roles[v], Role::T(..))).collect();
    let sub = g.induced_indices(&ts);
    assert_eq!(sub.edge_count(), 6);
    assert!((0..sub.len()).all(|v| sub.degree(v) == 2));
}

fn small_graphs(max_edges: usize, count: usize, seed: u64) -> Vec<OrderedGraph> {
    let mut s = Sampler::new(seed);
    let mut out = vec![OrderedGraph::on_line(2, &[(0, 1)]).unwrap(), OrderedGraph::on_line(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()];
    while out.len() < count {
        let n = s.between(2, 5);
        let g = s.graph(n, 0.5);
        if (1..=max_edges).contains(&g.edge_count()) {
            out.push(g);
        }
    }
    out
}

#[test]
fn level_gadgets_verify_on_small_graphs() {
    for g in small_graphs(4, 14, 11) {
        assert_verified(&gen_h3(&g, Order::T5).unwrap());
        assert_verified(&gen_h3(&g, Order::T6).unwrap());
        assert_verified(&gen_h4(&g).unwrap());
    }
    for g in small_graphs(3, 10, 12) {
        assert_verified(&gen_h5(&g).unwrap());
    }
}

#[test]
fn clique_on_four_stays_uncolorable() {
    let g = k4();
    for out in [gen_h3(&g, Order::T5).unwrap(), gen_h3(&g, Order::T6).unwrap(), gen_h4(&g).unwrap(), gen_h5(&g).unwrap()] {
        let report = verify_gadget(&out);
        assert!(report.passed(), "{}:\n{report}", out.kind);
        assert!(!colorable(&out.instance));
    }
}

/// Each 3-coloring of the source, pinned on the source vertices, extends to
/// the whole gadget.
#[test]
fn source_colorings_extend() {
    let cfg = OracleConfig::gadget_scale();
    for g in small_graphs(3, 8, 13) {
        for out in [gen_h3(&g, Order::T6).unwrap(), gen_h4(&g).unwrap(), gen_h5(&g).unwrap()] {
            let at: Vec<usize> = (1..=g.len())
                .map(|i| out.roles.iter().position(|r| *r == Role::Orig(i)).unwrap())
                .collect();
            enumerate_colorings(&Instance::full(g.clone()), &OracleConfig::default(), |c| {
                let mut lists = out.instance.lists().clone();
                for (v, &h) in at.iter().enumerate() {
                    lists.set(h, ColorSet::single(c.get(v).unwrap()));
                }
                let pinned = out.instance.with_lists(lists).unwrap();
                assert!(solve_bruteforce_with(&pinned, &cfg).unwrap().is_some(), "{} fails to extend {c:?}", out.kind);
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }
}

#[test]
fn bipartite_embedding_keeps_colorability() {
    let mut s = Sampler::new(21);
    let mut seen = 0;
    while seen < 60 {
        let n = s.between(2, 8);
        let inst = s.instance(n, 0.4, 0.3);
        let Ok(out) = gen_bipartite(&inst) else { continue };
        assert_verified(&out);
        seen += 1;
    }
}

fn with_extra_edge(inst: &Instance, a: &str, b: &str) -> Instance {
    let g = inst.graph();
    let vertices = g.ids().iter().cloned().zip(g.positions().iter().cloned()).collect();
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().into_iter().map(|(x, y)| (g.id(x).clone(), g.id(y).clone())).collect();
    edges.push((VertexId::new(a).unwrap(), VertexId::new(b).unwrap()));
    Instance::new(OrderedGraph::new(vertices, edges).unwrap(), inst.lists().clone()).unwrap()
}

#[test]
fn tampering_is_caught() {
    let nae = NaeInstance::new(4, vec![[0, 1, 2], [1, 2, 3]]).unwrap();
    // An edge inside M only breaks the grouped ordering; the other two need
    // an edge reaching the clause triangles.
    let tampers = [(Order::T1, "m1", "t2_3"), (Order::T2, "t1_1", "t2_1"), (Order::T3, "m1", "m2")];
    for (order, a, b) in tampers {
        let mut out = gen_h1(&nae, order).unwrap();
        assert!(verify_gadget(&out).passed());
        out.instance = with_extra_edge(&out.instance, a, b);
        let report = verify_gadget(&out);
        assert!(report.checks.iter().any(|c| c.name.starts_with("free:") && !c.passed), "{order}:\n{report}");
    }
    let mut out = gen_h4(&OrderedGraph::on_line(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
    let (p, q) = (out.registry.paths[0].vertices[1], out.registry.paths[1].vertices[1]);
    out.registry.paths[1].vertices[2] = p;
    let report = verify_gadget(&out);
    let registry = report.checks.iter().find(|c| c.name == "registry").unwrap();
    assert!(!registry.passed, "{report}");
    assert_ne!(p, q);
    assert!(realize_lists(out.instance.graph(), &out.registry).is_err());
}

#[test]
fn provenance_round_trips() {
    let nae = NaeInstance::new(4, vec![[0, 1, 2], [3, 1, 0]]).unwrap();
    let g = OrderedGraph::on_line(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
    let outs = [
        gen_h1(&nae, Order::T1).unwrap(),
        gen_h1(&nae, Order::T3).unwrap(),
        gen_h2(&nae).unwrap(),
        gen_h3(&g, Order::T5).unwrap(),
        gen_h3(&g, Order::T6).unwrap(),
        gen_h4(&g).unwrap(),
        gen_h5(&g).unwrap(),
    ];
    for out in outs {
        for o in [out.clone(), out.reversed()] {
            let text = write_prov(&o.prov());
            let back = from_prov(&o.instance, &parse_prov(&text).unwrap()).unwrap();
            assert_eq!(back.roles, o.roles);
            assert_eq!(back.registry, o.registry);
            assert_eq!(back.advertised_free, o.advertised_free);
            assert_eq!(back.reversed, o.reversed);
            let report = verify_gadget(&back);
            assert!(report.passed(), "{} {} reversed={}:\n{report}", o.kind, o.order, o.reversed);
        }
    }
}

#[test]
fn level_lists_follow_branch_parity() {
    let out = gen_h3(&OrderedGraph::on_line(2, &[(0, 1)]).unwrap(), Order::T5).unwrap();
    let lists: &ListAssignment = out.instance.lists();
    for p in &out.registry.paths {
        let i = p.branch;
        let first = lists.get(p.interior()[0]);
        let want = ColorSet::of(&[i, i % 3 + 1]);
        assert_eq!(first, want, "branch {i}");
        let e = edge(p.ends.0, p.ends.1);
        assert!(!out.instance.graph().adjacent(e.0, e.1));
    }
}
