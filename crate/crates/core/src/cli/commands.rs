use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::model::{
    one_forest, parse_instance, parse_orientation, serialize_instance, serialize_orientation, verify_efx, Instance,
    Orientation, Value,
};
use crate::preprocess::{make_cores, preprocess_basic, preprocess_full, reduce_zero_degrees};
use crate::reductions::{
    extract as decode, from_mis, from_mis_big_cores, from_monotone_3sat, gen_random, reduce_3sat_low_degree,
    Extracted, GadgetChoice, GenKind, Mapping, MisInstance, MonotoneCnf,
};
use crate::rooting::enumerate_states;
use crate::solvers::{detect_min_uncut_le1, solve_with, Decision, Route, SolveConfig};
use crate::structure::{
    max_induced_matching_bf, max_leafed_split_orientation, pendant_path, subdivided_star, SimpleGraph,
};

type CliResult = Result<i32, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, CliError> {
    parse_instance(&read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_orientation(inst: &Instance, path: &Path) -> Result<Orientation, CliError> {
    parse_orientation(inst, &read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::failure(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::failure(e.to_string())),
    }
}

fn say(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|e| CliError::failure(e.to_string()))
}

/// Files as given; directories contribute their `*.efx` files in name order.
fn expand(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let entries = std::fs::read_dir(p).map_err(|e| CliError::input(format!("{}: {e}", p.display())))?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "efx"))
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(p.clone());
        }
    }
    Ok(files)
}

/// Maps `f` over `items` on `jobs` threads, keeping input order.
fn parallel<T: Sync, R: Send>(jobs: u16, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Result<Vec<R>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(usize::from(jobs))
        .build()
        .map_err(|e| CliError::failure(e.to_string()))?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

fn decision_code(d: Decision) -> i32 {
    match d {
        Decision::Yes => EXIT_YES,
        Decision::No => EXIT_NO,
        Decision::Indeterminate => EXIT_INDETERMINATE,
    }
}

pub(super) fn solve(a: &SolveArgs, out: &mut dyn Write) -> CliResult {
    let files = expand(&a.inputs)?;
    let batch = files.len() != 1 || a.inputs[0].is_dir();
    if batch && a.emit_orientation.is_some() {
        return Err(CliError::usage("--emit-orientation needs exactly one input file"));
    }
    let cfg = SolveConfig {
        tau: a.tau,
        node_budget: a.node_budget,
        max_bruteforce_edges: a.max_bf_edges,
        route: match a.strategy {
            StrategyArg::Auto => Route::Auto,
            StrategyArg::TwoSat => Route::TwoSat,
            StrategyArg::Param => Route::Parameterized,
            StrategyArg::Bforce => Route::BruteForce,
        },
    };
    let results = parallel(a.jobs, &files, |f| {
        let inst = load_instance(f)?;
        let start = Instant::now();
        let sol = solve_with(&inst, &cfg).map_err(|e| CliError::failure(format!("{}: {e}", f.display())))?;
        Ok::<_, CliError>((inst, sol, start.elapsed().as_millis()))
    })?;
    if !batch {
        let (inst, sol, ms) = results.into_iter().next().expect("one input")?;
        let line = format!("RESULT {} strategy={} time_ms={ms}", sol.decision.as_str(), sol.strategy.as_str());
        say(out, &line)?;
        if let (Some(path), Some(o)) = (&a.emit_orientation, &sol.orientation) {
            write_file(path, &serialize_orientation(&inst, o))?;
        }
        return Ok(decision_code(sol.decision));
    }
    let mut code = EXIT_YES;
    for (f, r) in files.iter().zip(results) {
        match r {
            Ok((_, sol, ms)) => {
                let line = format!(
                    "RESULT {} strategy={} time_ms={ms} file={}",
                    sol.decision.as_str(),
                    sol.strategy.as_str(),
                    f.display()
                );
                say(out, &line)?;
                if sol.decision == Decision::Indeterminate {
                    code = code.max(EXIT_INDETERMINATE);
                }
            }
            Err(e) => {
                say(out, &format!("ERROR {} file={}", e.message, f.display()))?;
                code = code.max(e.code);
            }
        }
    }
    Ok(code)
}

pub(super) fn verify(instance: &Path, orientation: &Path, out: &mut dyn Write) -> CliResult {
    let inst = load_instance(instance)?;
    let o = load_orientation(&inst, orientation)?;
    let report = verify_efx(&inst, &o).map_err(|e| CliError::input(e.to_string()))?;
    if report.ok {
        say(out, "EFX ok")?;
        return Ok(EXIT_YES);
    }
    say(out, &format!("not EFX: {} strong envies", report.witnesses.len()))?;
    for w in &report.witnesses {
        say(out, &format!("{} envies {} dropping edge {}", w.envier, w.envied, w.dropped))?;
    }
    Ok(EXIT_NO)
}

pub(super) fn preprocess(a: &PreprocessArgs, out: &mut dyn Write) -> CliResult {
    let inst = load_instance(&a.input)?;
    let reduce = match a.mode {
        ReductionArg::Basic => preprocess_basic,
        ReductionArg::Zero => reduce_zero_degrees,
        ReductionArg::Cores => make_cores,
        ReductionArg::Full => preprocess_full,
    };
    let (reduced, trace) = reduce(&inst).map_err(|e| CliError::failure(e.to_string()))?;
    if let Some(p) = &a.emit_trace {
        write_file(p, &trace.to_text())?;
    }
    emit(a.output.as_deref(), &serialize_instance(&reduced), out)?;
    Ok(EXIT_YES)
}

pub(super) fn gen(g: &GenCommand, out: &mut dyn Write) -> CliResult {
    let failure = |e: crate::reductions::ReductionError| CliError::failure(e.to_string());
    match g {
        GenCommand::Sat { cnf, allow_mixed, low_degree, out: target } => {
            let f = MonotoneCnf::parse_dimacs(&read(cnf)?, *allow_mixed)
                .map_err(|e| CliError::input(format!("{}: {e}", cnf.display())))?;
            if *low_degree {
                let (inst, _, _) = reduce_3sat_low_degree(&f).map_err(failure)?;
                emit(target.output.as_deref(), &serialize_instance(&inst), out)?;
            } else {
                let (inst, map) = from_monotone_3sat(&f).map_err(failure)?;
                write_generated(&inst, Mapping::Sat(map), target, out)?;
            }
        }
        GenCommand::Mis { graph, colors, gadget, core, out: target } => {
            let mis = parse_mis(&read(graph)?, &read(colors)?)?;
            let (inst, map) = if gadget == "cores" {
                let core = parse_core(core)?;
                from_mis_big_cores(&mis, &vec![core; mis.k()]).map_err(failure)?
            } else {
                from_mis(&mis, &parse_gadget(gadget)?).map_err(failure)?
            };
            write_generated(&inst, Mapping::Mis(map), target, out)?;
        }
        GenCommand::Random { kind, seed, n, m, p_one, uncut, size, zero_edges, output } => {
            let kind = match kind {
                KindArg::Uniform => GenKind::Uniform { n: *n, m: *m, p_one: *p_one },
                KindArg::BipartitePlusEdges => GenKind::BipartitePlusEdges { n: *n, m: *m, uncut: *uncut },
                KindArg::TreeCore => GenKind::TreeCore { size: *size, zero_edges: *zero_edges },
            };
            let inst = gen_random(&kind, *seed).map_err(|e| CliError::usage(e.to_string()))?;
            emit(output.as_deref(), &serialize_instance(&inst), out)?;
        }
    }
    Ok(EXIT_YES)
}

fn write_generated(inst: &Instance, map: Mapping, target: &GenOutput, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(p) = &target.mapping {
        write_file(p, &map.to_text())?;
    }
    emit(target.output.as_deref(), &serialize_instance(inst), out)
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: &str, at: usize) -> Result<Vec<usize>, CliError> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| CliError::input(format!("line {at}: bad number `{t}`"))))
        .collect()
}

fn parse_mis(graph: &str, colors: &str) -> Result<MisInstance, CliError> {
    let mut lines = data_lines(graph);
    let (at, head) = lines.next().ok_or_else(|| CliError::input("graph file is empty"))?;
    let n = match numbers(head, at)?.as_slice() {
        [n] => *n,
        _ => return Err(CliError::input(format!("line {at}: expected the vertex count"))),
    };
    let mut edges = Vec::new();
    for (at, l) in lines {
        match numbers(l, at)?.as_slice() {
            [u, v] => edges.push((*u, *v)),
            _ => return Err(CliError::input(format!("line {at}: expected `u v`"))),
        }
    }
    let g = SimpleGraph::new(n, &edges).map_err(|e| CliError::input(e.to_string()))?;
    let classes = data_lines(colors).map(|(at, l)| numbers(l, at)).collect::<Result<Vec<_>, _>>()?;
    MisInstance::new(g, classes).map_err(|e| CliError::input(e.to_string()))
}

fn parse_gadget(s: &str) -> Result<GadgetChoice, CliError> {
    match s {
        "1" => Ok(GadgetChoice::TwoOneEdges),
        "2" => Ok(GadgetChoice::CrossedOneEdgesWithZeros),
        _ => {
            let frac = s.strip_prefix("frac:").ok_or_else(|| CliError::usage(format!("unknown gadget `{s}`")))?;
            let v: Value = frac.parse().map_err(|_| CliError::usage(format!("bad fraction `{frac}`")))?;
            Ok(GadgetChoice::FractionalEdge(v))
        }
    }
}

fn parse_core(s: &str) -> Result<SimpleGraph, CliError> {
    let bad = || CliError::usage(format!("bad core `{s}`: use path:N, star:K or pendant:M"));
    let (kind, k) = s.split_once(':').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    match kind {
        "path" if k >= 2 => Ok(SimpleGraph::path(k)),
        "star" if k >= 1 => Ok(subdivided_star(k)),
        "pendant" if k >= 1 => Ok(pendant_path(k)),
        _ => Err(bad()),
    }
}

pub(super) fn extract(a: &ExtractArgs, out: &mut dyn Write) -> CliResult {
    let inst = load_instance(&a.instance)?;
    let map = Mapping::from_text(&read(&a.mapping)?).map_err(|e| CliError::input(e.to_string()))?;
    let o = load_orientation(&inst, &a.orientation)?;
    match decode(&inst, &map, &o).map_err(|e| CliError::failure(e.to_string()))? {
        Extracted::Assignment(values) => {
            let lits: Vec<String> =
                values.iter().enumerate().map(|(i, &t)| if t { format!("{}", i + 1) } else { format!("-{}", i + 1) }).collect();
            say(out, &format!("v {} 0", lits.join(" ")))?;
        }
        Extracted::IndependentSet(set) => {
            let ids: Vec<String> = set.iter().map(ToString::to_string).collect();
            say(out, &format!("mis {}", ids.join(" ")))?;
        }
    }
    Ok(EXIT_YES)
}

#[derive(Serialize)]
struct InstanceStats {
    file: String,
    n: usize,
    m: usize,
    ones: usize,
    zeros: usize,
    binary: bool,
    components: usize,
    core_sizes: Option<Vec<usize>>,
    states_per_tree: Option<Vec<usize>>,
    uncut_class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure: Option<Vec<CoreStats>>,
}

#[derive(Serialize)]
struct CoreStats {
    size: usize,
    mim: Option<usize>,
    leafed_split: Option<usize>,
    /// `2m+1 <= size <= 5m-1` for induced matching number `m >= 2`.
    mim_bounds: &'static str,
    /// `|A|+1 <= size <= 5|A|-1` for leafed split size `|A| >= 3`.
    split_bounds: &'static str,
}

fn bound_check(k: Option<usize>, min_k: usize, size: usize, lo: impl Fn(usize) -> usize) -> &'static str {
    match k {
        Some(k) if k >= min_k => {
            if lo(k) <= size && size < 5 * k {
                "ok"
            } else {
                "violated"
            }
        }
        _ => "n/a",
    }
}

fn core_stats(inst: &Instance) -> Option<Vec<CoreStats>> {
    let (cores, _) = make_cores(inst).ok()?;
    let forest = one_forest(&cores);
    let stats = forest
        .trees()
        .map(|c| {
            let t = SimpleGraph::from_one_component(&cores, &c.vertices);
            let mim = max_induced_matching_bf(&t).ok().map(|r| r.0);
            let leafed_split = max_leafed_split_orientation(&t).ok().map(|s| s.len());
            CoreStats {
                size: t.n(),
                mim,
                leafed_split,
                mim_bounds: bound_check(mim, 2, t.n(), |k| 2 * k + 1),
                split_bounds: bound_check(leafed_split, 3, t.n(), |k| k + 1),
            }
        })
        .collect();
    Some(stats)
}

fn instance_stats(file: &Path, inst: &Instance, structure: bool) -> InstanceStats {
    let forest = one_forest(inst);
    let cores = make_cores(inst).ok().map(|(c, _)| one_forest(&c).trees().map(|t| t.vertices.len()).collect());
    InstanceStats {
        file: file.display().to_string(),
        n: inst.n(),
        m: inst.m(),
        ones: inst.ones(),
        zeros: inst.zeros(),
        binary: inst.is_binary(),
        components: forest.components.len(),
        core_sizes: cores,
        states_per_tree: enumerate_states(inst).ok().map(|t| t.state_counts()),
        uncut_class: detect_min_uncut_le1(inst).label(),
        structure: if structure { Some(core_stats(inst).unwrap_or_default()) } else { None },
    }
}

pub(super) fn stats(a: &StatsArgs, out: &mut dyn Write) -> CliResult {
    let files = expand(&a.inputs)?;
    let results = parallel(a.jobs, &files, |f| {
        let inst = load_instance(f)?;
        let s = instance_stats(f, &inst, a.structure);
        Ok::<_, CliError>(serde_json::to_string(&s).expect("stats serialize"))
    })?;
    let mut code = EXIT_YES;
    for r in results {
        match r {
            Ok(line) => say(out, &line)?,
            Err(e) => {
                say(out, &format!("ERROR {}", e.message))?;
                code = code.max(e.code);
            }
        }
    }
    Ok(code)
}

pub(super) fn export(instance: &Path, orientation: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let inst = load_instance(instance)?;
    let o = orientation.map(|p| load_orientation(&inst, p)).transpose()?;
    let text = export_dot(&inst, o.as_ref()).map_err(|e| CliError::input(e.to_string()))?;
    emit(None, &text, out)?;
    Ok(EXIT_YES)
}
