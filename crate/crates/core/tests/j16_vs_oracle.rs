use std::collections::BTreeMap;
use std::ops::ControlFlow;

use ordcolor::j16_solver::{
    chordalize, finalize_small, for_each_qtuple, narrow, profile_fwdnbr, profile_fwdnbr_special, solve_j16,
    solve_neg_j16,
};
use ordcolor::ordered_core::Profile;
use ordcolor::pattern_catalog::{build_pattern, PatternId};
use ordcolor::poly_kernels::chordal_peo;
use ordcolor::reference_oracle::{all_colorings, solve_bruteforce};
use ordcolor::sampling::Sampler;
use ordcolor::{Color, ColorSet, Coloring, Instance, OrderedGraph};

fn free_instance(s: &mut Sampler, k: usize, l: usize, n: (usize, usize), p: f64, full: f64) -> Instance {
    let h = build_pattern(&PatternId::J16kl(k, l)).unwrap();
    let n = s.between(n.0, n.1);
    let g = s.graph(n, p);
    let g = s.repair_free_of(&g, &h);
    Instance::new(g, s.lists(n, full)).unwrap()
}

fn covered(p: &Profile, c: &Coloring) -> bool {
    p.members.iter().any(|m| c.respects(&m.lists))
}

fn fwd_degree_ok(inst: &Instance, lists: &ordcolor::ListAssignment) -> bool {
    let g = inst.graph();
    let wide = lists.wide();
    wide.iter().all(|&v| g.neighbors(v).iter().filter(|&&u| u > v && lists.get(u).len() >= 2).count() <= 2)
}

#[test]
fn verdicts_match_the_oracle() {
    let mut stages = BTreeMap::new();
    for (k, l, p, full, seed) in
        [(0, 0, 0.5, 0.5, 1), (1, 0, 0.5, 0.6, 2), (0, 1, 0.5, 0.6, 3), (1, 1, 0.5, 0.6, 4), (1, 1, 0.35, 0.9, 5)]
    {
        let mut s = Sampler::new(seed);
        for _ in 0..100 {
            let inst = free_instance(&mut s, k, l, (3, 10), p, full);
            let truth = solve_bruteforce(&inst).unwrap().is_some();
            let out = solve_j16(&inst, k, l).unwrap();
            assert_eq!(out.colorable, truth, "k={k} l={l} {inst:?}");
            assert_eq!(out.witness.is_some(), truth);
            if let Some(c) = &out.witness {
                assert!(c.is_list_coloring_of(&inst));
            }
            let rev = solve_neg_j16(&inst.reverse(), k, l).unwrap();
            assert_eq!(rev.colorable, truth);
            if let Some(c) = &rev.witness {
                assert!(c.is_list_coloring_of(&inst.reverse()));
            }
            *stages.entry((format!("{:?}", out.stage), out.colorable)).or_insert(0) += 1;
        }
    }
    for key in [("SmallClass", true), ("CliqueOnFour", false), ("Chordal", true), ("Chordal", false)] {
        assert!(stages.contains_key(&(key.0.to_string(), key.1)), "{stages:?}");
    }
}

#[test]
fn profiles_cover_every_coloring() {
    let mut s = Sampler::new(21);
    let (k, l) = (1, 1);
    for _ in 0..80 {
        let inst = free_instance(&mut s, k, l, (3, 9), 0.45, 0.6);
        let first = profile_fwdnbr(&inst, k, l).unwrap();
        let special = profile_fwdnbr_special(&inst, k, l);
        assert!(first.is_spanning(&inst) && special.is_spanning(&inst));
        for m in &first.members {
            assert!(fwd_degree_ok(&inst, &m.lists));
        }
        for m in &special.members {
            let wide: Vec<_> = m.lists.as_slice().iter().filter(|s| s.len() >= 2).collect();
            assert!(wide.iter().all(|&&s| s.len() == 2 && s == *wide[0]));
        }
        for c in all_colorings(&inst).unwrap() {
            let smallest = Color::ALL.iter().map(|&i| c.class(i).len()).min().unwrap();
            if smallest >= k + l {
                assert!(covered(&first, &c), "{inst:?} {c:?}");
            } else {
                assert!(covered(&special, &c), "{inst:?} {c:?}");
            }
        }
    }
}

#[test]
fn pinned_members_are_chordal_and_cover() {
    let mut s = Sampler::new(33);
    let mut chordal_runs = 0;
    for (k, l) in [(0, 0), (1, 0), (0, 1)] {
        for _ in 0..60 {
            let inst = free_instance(&mut s, k, l, (6, 10), 0.4, 0.8);
            for m in profile_fwdnbr(&inst, k, l).unwrap().members {
                let member = inst.with_lists(m.lists.clone()).unwrap();
                let wide = member.lists().wide().len();
                let p = if wide >= 3 * k + 3 * l + 6 {
                    chordal_runs += 1;
                    let p = chordalize(&member, k, l).unwrap();
                    for q in &p.members {
                        assert!(chordal_peo(&inst.graph().induced_indices(&q.lists.wide())).is_some());
                    }
                    p
                } else {
                    let p = finalize_small(&member, k, l).unwrap();
                    assert!(p.members.iter().all(|q| q.lists.as_slice().iter().all(|s| s.len() <= 1)));
                    p
                };
                for c in all_colorings(&member).unwrap() {
                    assert!(covered(&p, &c));
                }
            }
        }
    }
    assert!(chordal_runs > 0);
}

#[test]
fn narrowing_forces_the_shared_third_color() {
    // p1 p2 p3 v u w x: p1-w, p2-u, p3-v, v-{u,w,x}, x-{u,w}
    let e = [(0, 5), (1, 4), (2, 3), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6)];
    let inst = Instance::full(OrderedGraph::on_line(7, &e).unwrap());
    let h = build_pattern(&PatternId::J16kl(1, 0)).unwrap();
    assert!(ordcolor::ordered_core::contains_pattern(inst.graph(), &h).is_none());
    let mut seen = false;
    for_each_qtuple(&inst, 1, 0, |q, l0| {
        if q.a == [vec![0], vec![1], vec![2]] {
            assert_eq!(l0.get(3), ColorSet::of(&[1, 2]));
            assert_eq!(l0.get(4), ColorSet::of(&[1, 3]));
            assert_eq!(l0.get(5), ColorSet::of(&[2, 3]));
            let narrowed = narrow(inst.graph(), l0).unwrap();
            assert_eq!(narrowed.get(4), ColorSet::of(&[3]));
            assert_eq!(narrowed.get(5), ColorSet::of(&[3]));
            assert_eq!(narrowed.get(6), ColorSet::of(&[1, 2]));
            seen = true;
        }
        ControlFlow::Continue(())
    });
    assert!(seen);
    let out = solve_j16(&inst, 1, 0).unwrap();
    assert_eq!(out.colorable, solve_bruteforce(&inst).unwrap().is_some());
}

#[test]
fn narrowing_forces_the_center() {
    // p2 also sees x, so x keeps u's pair {1,3} and v must take 2
    let e = [(0, 5), (1, 4), (1, 6), (2, 3), (3, 4), (3, 5), (3, 6), (4, 6)];
    let inst = Instance::full(OrderedGraph::on_line(7, &e).unwrap());
    let h = build_pattern(&PatternId::J16kl(1, 0)).unwrap();
    assert!(ordcolor::ordered_core::contains_pattern(inst.graph(), &h).is_none());
    let mut seen = false;
    for_each_qtuple(&inst, 1, 0, |q, l0| {
        if q.a == [vec![0], vec![1], vec![2]] {
            assert_eq!(l0.get(6), ColorSet::of(&[1, 3]));
            let narrowed = narrow(inst.graph(), l0).unwrap();
            assert_eq!(narrowed.get(3), ColorSet::of(&[2]));
            assert_eq!(narrowed.get(5), ColorSet::of(&[3]));
            seen = true;
        }
        ControlFlow::Continue(())
    });
    assert!(seen);
    let out = solve_j16(&inst, 1, 0).unwrap();
    assert_eq!(out.colorable, solve_bruteforce(&inst).unwrap().is_some());
}
