use std::fmt;

use super::{realize_lists, GadgetOutput, Role, Source};
use crate::ordered_core::{contains_pattern, ColorSet, Instance};
use crate::pattern_catalog::build_pattern;
use crate::reference_oracle::{nae_bruteforce, solve_bruteforce_with, OracleConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks advertised freeness, the path registry and, when a source is
/// attached, equi-satisfiability against the exhaustive oracle.
///
/// Pattern checks run on separate threads; the report order is fixed.
pub fn verify_gadget(out: &GadgetOutput) -> VerifyReport {
    let mut report = VerifyReport::default();
    let h = out.instance.graph();
    let found: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = out
            .advertised_free
            .iter()
            .map(|p| s.spawn(move || build_pattern(p).map(|pat| contains_pattern(h, &pat))))
            .collect();
        handles.into_iter().map(|t| t.join().expect("pattern check panicked")).collect()
    });
    for (p, res) in out.advertised_free.iter().zip(found) {
        match res {
            Ok(None) => report.push(format!("free:{p}"), true, "absent"),
            Ok(Some(w)) => report.push(format!("free:{p}"), false, format!("embedding at {:?}", h.ids_of(&w))),
            Err(e) => report.push(format!("free:{p}"), false, e.to_string()),
        }
    }
    if out.kind.is_realization() {
        match realize_lists(h, &out.registry) {
            Ok(l) if &l == out.instance.lists() => {
                report.push("registry", true, format!("{} branch paths", out.registry.paths.len()))
            }
            Ok(_) => report.push("registry", false, "lists differ from the realization lists"),
            Err(e) => report.push("registry", false, e.to_string()),
        }
    }
    match &out.source {
        None => {}
        Some(Source::Nae(nae)) => {
            let full = out.instance.lists().as_slice().iter().all(|&l| l == ColorSet::FULL);
            report.push("lists", full, if full { "all {1,2,3}" } else { "a list is not {1,2,3}" });
            match (nae_bruteforce(nae), solve_bruteforce_with(&out.instance, &OracleConfig::gadget_scale())) {
                (Ok(a), Ok(c)) => report.push(
                    "equisat",
                    a.is_some() == c.is_some(),
                    format!("satisfiable={} colorable={}", a.is_some(), c.is_some()),
                ),
                (Err(e), _) | (_, Err(e)) => report.push("equisat", false, e.to_string()),
            }
        }
        Some(Source::Graph(g)) => {
            let src = Instance::full(g.clone());
            let cfg = OracleConfig::gadget_scale();
            match (solve_bruteforce_with(&src, &cfg), solve_bruteforce_with(&out.instance, &cfg)) {
                (Ok(a), Ok(c)) => {
                    report.push(
                        "equisat",
                        a.is_some() == c.is_some(),
                        format!("source colorable={} gadget colorable={}", a.is_some(), c.is_some()),
                    );
                    if let Some(c) = c {
                        let ok = restriction_is_proper(out, g, &c);
                        report.push("restriction", ok, if ok { "proper on the source" } else { "not proper on the source" });
                    }
                }
                (Err(e), _) | (_, Err(e)) => report.push("equisat", false, e.to_string()),
            }
        }
        Some(Source::Lists(src)) => {
            let cfg = OracleConfig::gadget_scale();
            match (solve_bruteforce_with(src, &cfg), solve_bruteforce_with(&out.instance, &cfg)) {
                (Ok(a), Ok(c)) => report.push(
                    "equisat",
                    a.is_some() == c.is_some(),
                    format!("source colorable={} gadget colorable={}", a.is_some(), c.is_some()),
                ),
                (Err(e), _) | (_, Err(e)) => report.push("equisat", false, e.to_string()),
            }
        }
    }
    report
}

fn restriction_is_proper(out: &GadgetOutput, g: &crate::ordered_core::OrderedGraph, c: &crate::Coloring) -> bool {
    let mut at = vec![None; g.len()];
    for (v, r) in out.roles.iter().enumerate() {
        if let Role::Orig(i) = *r {
            if let Some(slot) = at.get_mut(i - 1) {
                *slot = c.get(v);
            }
        }
    }
    at.iter().all(Option::is_some) && g.edges().into_iter().all(|(a, b)| at[a] != at[b])
}
