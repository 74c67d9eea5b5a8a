use std::fs;
use std::path::{Path, PathBuf};

use ordcolor::format::{parse_graph, parse_nae, parse_prov, write_graph, write_nae, write_prov};
use ordcolor::hardness_forge::{
    from_prov, gen_bipartite, gen_h1, gen_h2, gen_h3, gen_h4, gen_h5, verify_gadget, GadgetKind, Order,
};
use ordcolor::jw_solver::{solve_jw, JwConfig, JwError, LinkBackend};
use ordcolor::j16_solver::{solve_j16, solve_neg_j16, J16Error};
use ordcolor::ordered_core::{contains_pattern, Coloring, Instance, OrderedGraph};
use ordcolor::pattern_catalog::{build_pattern, classify as classify_pattern, PatternId};
use ordcolor::poly_kernels::{solve_chordal, solve_two_lists, KernelError};
use ordcolor::reference_oracle::{solve_bruteforce_with, OracleConfig};
use ordcolor::sampling::Sampler;

use crate::report::{RunReport, Verdict};
use crate::{Alg, Backend, CmdResult, InputError};

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<Instance, InputError> {
    let text = read(path)?;
    parse_graph(&text).map(|f| f.instance).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// A catalog id, or failing that a graph file holding the pattern.
fn read_pattern(spec: &str) -> Result<(String, OrderedGraph), InputError> {
    match spec.parse::<PatternId>() {
        Ok(id) => Ok((id.to_string(), build_pattern(&id)?)),
        Err(_) if Path::new(spec).exists() => Ok((spec.to_string(), read_instance(Path::new(spec))?.into_parts().0)),
        Err(e) => Err(InputError(format!("{e}, and no file named {spec:?}"))),
    }
}

fn ids(g: &OrderedGraph, vs: &[usize]) -> String {
    g.ids_of(vs).iter().map(|v| v.as_str()).collect::<Vec<_>>().join(",")
}

fn coloring_text(g: &OrderedGraph, c: &Coloring) -> String {
    (0..g.len())
        .map(|v| format!("{}:{}", g.id(v), c.get(v).map_or("-".to_string(), |x| x.to_string())))
        .collect::<Vec<_>>()
        .join(",")
}

fn refused(alg: &str, reason: impl std::fmt::Display) -> RunReport {
    RunReport::new("solve", Verdict::Refused).with("alg", alg).with("reason", reason)
}

#[allow(clippy::too_many_arguments)]
pub fn solve(path: &Path, alg: Alg, w: usize, k: usize, l: usize, reversed: bool, backend: Backend, cap: usize) -> CmdResult {
    let inst = read_instance(path)?;
    let g = inst.graph();
    let (name, answer): (&str, Result<(bool, Option<Coloring>), RunReport>) = match alg {
        Alg::Oracle => {
            let cfg = OracleConfig { max_vertices: cap, ..OracleConfig::default() };
            ("oracle", solve_bruteforce_with(&inst, &cfg).map(|c| (c.is_some(), c)).map_err(|e| refused("oracle", e)))
        }
        Alg::TwoSat => ("2sat", kernel("2sat", solve_two_lists(&inst))),
        Alg::Chordal => ("chordal", kernel("chordal", solve_chordal(&inst))),
        Alg::Jw => {
            let backend = match backend {
                Backend::Reduction => LinkBackend::Reduction,
                Backend::Enumeration => LinkBackend::Enumeration,
            };
            let cfg = JwConfig { backend, ..JwConfig::default() };
            let res = solve_jw(&inst, w, &cfg).map(|o| (o.colorable, o.witness.map(|(c, _)| c)));
            ("jw", res.map_err(|e| match e {
                JwError::NotFree { witness, .. } => refused("jw", format!("contains Jw:{w}")).with("witness", ids(g, &witness)),
                other => refused("jw", other),
            }))
        }
        Alg::J16 => {
            let run = if reversed { solve_neg_j16 } else { solve_j16 };
            let res = run(&inst, k, l).map(|o| (o.colorable, o.witness));
            let pat = if reversed { format!("neg:J16:{k},{l}") } else { format!("J16:{k},{l}") };
            ("j16", res.map_err(|e| match e {
                J16Error::NotFree { witness, .. } => refused("j16", format!("contains {pat}")).with("witness", ids(g, &witness)),
                other => refused("j16", other),
            }))
        }
    };
    let (colorable, witness) = match answer {
        Ok(a) => a,
        Err(report) => return Ok(Some(report)),
    };
    if let Some(c) = &witness {
        if !colorable || !c.is_list_coloring_of(&inst) {
            return Err(InputError(format!("{name} returned a coloring that does not validate")));
        }
    }
    let verdict = if colorable { Verdict::Colorable } else { Verdict::NotColorable };
    let mut report = RunReport::new("solve", verdict).with("alg", name).with("vertices", g.len()).with("edges", g.edge_count());
    if let Some(c) = witness {
        report = report.with("witness", coloring_text(g, &c));
    }
    Ok(Some(report))
}

fn kernel(alg: &str, r: Result<Option<Coloring>, KernelError>) -> Result<(bool, Option<Coloring>), RunReport> {
    r.map(|c| (c.is_some(), c)).map_err(|e| refused(alg, e))
}

pub fn check_free(path: &Path, pattern: &str) -> CmdResult {
    let g = read_instance(path)?.into_parts().0;
    let (name, h) = read_pattern(pattern)?;
    let report = match contains_pattern(&g, &h) {
        None => RunReport::new("check-free", Verdict::Free).with("pattern", name),
        Some(w) => RunReport::new("check-free", Verdict::Contains).with("pattern", name).with("witness", ids(&g, &w)),
    };
    Ok(Some(report))
}

pub fn classify(pattern: &str) -> CmdResult {
    let (name, h) = read_pattern(pattern)?;
    let v = classify_pattern(&h);
    Ok(Some(
        RunReport::new("classify", Verdict::Classified)
            .with("pattern", name)
            .with("status", v.status)
            .with("justification", v.justification),
    ))
}

pub fn gen(
    input: &Path,
    gadget: &str,
    order: Option<&str>,
    reversed: bool,
    out: Option<&Path>,
    prov: Option<&Path>,
) -> CmdResult {
    let kind: GadgetKind = gadget.parse().map_err(InputError)?;
    let order: Order = match order {
        Some(o) => o.parse().map_err(InputError)?,
        None => kind.default_order(),
    };
    let text = read(input)?;
    let in_err = |e: ordcolor::format::FormatError| InputError(format!("{}: {e}", input.display()));
    let mut output = match kind {
        GadgetKind::H1 => gen_h1(&parse_nae(&text).map_err(in_err)?, order)?,
        GadgetKind::H2 => {
            kind_order(kind, order)?;
            gen_h2(&parse_nae(&text).map_err(in_err)?)?
        }
        _ => {
            let inst = parse_graph(&text).map_err(in_err)?.instance;
            match kind {
                GadgetKind::Bip => {
                    kind_order(kind, order)?;
                    gen_bipartite(&inst)?
                }
                GadgetKind::H3 => gen_h3(inst.graph(), order)?,
                GadgetKind::H4 => {
                    kind_order(kind, order)?;
                    gen_h4(inst.graph())?
                }
                _ => {
                    kind_order(kind, order)?;
                    gen_h5(inst.graph())?
                }
            }
        }
    };
    if reversed {
        output = output.reversed();
    }
    let name = format!("{kind}_{order}{}", if reversed { "_rev" } else { "" });
    let graph_text = write_graph(&name, &output.instance);
    let prov_text = write_prov(&output.prov());
    let Some(out) = out else {
        print!("{graph_text}");
        if let Some(p) = prov {
            fs::write(p, prov_text).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
        }
        return Ok(None);
    };
    let prov_path: PathBuf = prov.map(Path::to_path_buf).unwrap_or_else(|| {
        let mut p = out.as_os_str().to_owned();
        p.push(".prov");
        p.into()
    });
    fs::write(out, graph_text).map_err(|e| InputError(format!("{}: {e}", out.display())))?;
    fs::write(&prov_path, prov_text).map_err(|e| InputError(format!("{}: {e}", prov_path.display())))?;
    let advertised: Vec<String> = output.advertised_free.iter().map(ToString::to_string).collect();
    Ok(Some(
        RunReport::new("gen", Verdict::Generated)
            .with("gadget", kind)
            .with("order", order)
            .with("vertices", output.instance.len())
            .with("edges", output.instance.graph().edge_count())
            .with("advertised_free", advertised.join(","))
            .with("graph", out.display())
            .with("prov", prov_path.display()),
    ))
}

fn kind_order(kind: GadgetKind, order: Order) -> Result<(), InputError> {
    if kind.orders().contains(&order) {
        Ok(())
    } else {
        Err(InputError(format!("gadget {kind} has no ordering {order}")))
    }
}

pub fn verify(path: &Path, prov: &Path) -> CmdResult {
    let inst = read_instance(path)?;
    let prov_file = parse_prov(&read(prov)?).map_err(|e| InputError(format!("{}: {e}", prov.display())))?;
    let gadget = from_prov(&inst, &prov_file)?;
    let report = verify_gadget(&gadget);
    let verdict = if report.passed() { Verdict::Verified } else { Verdict::Failed };
    let mut out = RunReport::new("verify", verdict).with("gadget", gadget.kind).with("order", gadget.order);
    for c in &report.checks {
        out = out.with(&format!("check.{}", c.name), format!("{} {}", if c.passed { "pass" } else { "fail" }, c.detail));
    }
    Ok(Some(out))
}

#[allow(clippy::too_many_arguments)]
pub fn random(
    seed: u64,
    n: usize,
    p: f64,
    full: f64,
    free_of: Option<&str>,
    tries: usize,
    nae_clauses: Option<usize>,
    out: Option<&Path>,
) -> CmdResult {
    if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&full) {
        return Err(InputError("probabilities must lie in [0, 1]".into()));
    }
    let mut s = Sampler::new(seed);
    let text = match nae_clauses {
        Some(m) => {
            if n < 3 && m > 0 {
                return Err(InputError("clauses need at least 3 variables".into()));
            }
            write_nae(&s.nae(n, m))
        }
        None => {
            let g = match free_of {
                None => s.graph(n, p),
                Some(spec) => {
                    let (name, h) = read_pattern(spec)?;
                    match s.free_of(n, p, &h, tries) {
                        Some(g) => g,
                        None => {
                            return Ok(Some(
                                RunReport::new("random", Verdict::Refused)
                                    .with("reason", format!("no {name}-free sample in {tries} tries")),
                            ))
                        }
                    }
                }
            };
            let lists = s.lists(n, full);
            write_graph(&format!("random_s{seed}_n{n}"), &Instance::new(g, lists)?)
        }
    };
    match out {
        None => {
            print!("{text}");
            Ok(None)
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            Ok(Some(RunReport::new("random", Verdict::Generated).with("seed", seed).with("file", path.display())))
        }
    }
}
