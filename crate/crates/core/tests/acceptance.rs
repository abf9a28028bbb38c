//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use efx_orient::model::{one_forest, verify_efx};
use efx_orient::preprocess::preprocess_full;
use efx_orient::reductions::*;
use efx_orient::rooting::{rooting_feasible, Rooting};
use efx_orient::solvers::*;
use efx_orient::structure::*;
use efx_orient::Instance;
use rand::Rng;

/// Wall-clock limit for the oracle-equivalence suite.
const AC1_TIME_LIMIT: Duration = Duration::from_secs(60);
/// Edge cap for deciding fractional-gadget instances by orientation search.
const FRACTIONAL_EDGE_CAP: usize = 44;
/// Rooting brute force over all vertices gives up beyond this many combinations.
const ROOTING_CAP: u128 = 1 << 24;
/// Cross-color edge sets are enumerated exhaustively up to this many pairs.
const MIS_EXHAUSTIVE_PAIRS: usize = 10;
/// Seeded edge sets per color profile above that threshold.
const MIS_SAMPLES: usize = 60;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Seeded random binary instances plus every labeled binary graph on up to four vertices.
fn suite_one() -> Vec<Instance> {
    let mut r = rng(2024);
    let mut out: Vec<Instance> = (0..500).map(|_| random_binary(&mut r, 7, 12)).collect();
    for n in 1..=4 {
        out.extend(all_labeled(n));
    }
    out
}

fn ac1(suite: &[Instance]) -> Outcome {
    let start = Instant::now();
    let mut bad = 0;
    for inst in suite {
        let got = solve(inst).map(|s| s.decision);
        let want = if oracle_decision(inst) { Decision::Yes } else { Decision::No };
        if got != Ok(want) {
            bad += 1;
        }
    }
    let took = start.elapsed();
    let detail = format!("{}/{} agree in {:.1}s", suite.len() - bad, suite.len(), took.as_secs_f64());
    outcome(bad == 0 && took < AC1_TIME_LIMIT, detail)
}

fn ac2() -> Outcome {
    let mut good = 0;
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=12);
        let extra = r.gen_range(0..=n);
        let m = (n - 1 + 1 + extra).min(n * n / 4 + 1);
        let Ok(inst) = gen_random(&GenKind::BipartitePlusEdges { n, m, uncut: 1 }, seed) else {
            continue;
        };
        let one_edge = matches!(detect_min_uncut_le1(&inst), UncutClassification::OneEdge(..));
        let sol = solve(&inst);
        let verified = sol.as_ref().ok().and_then(|s| s.orientation.as_ref()).is_some_and(|o| verify_efx(&inst, o).unwrap().ok);
        if one_edge && verified {
            good += 1;
        }
    }
    outcome(good == 200, format!("{good}/200 yes with verified orientation"))
}

fn ac3(suite: &[Instance]) -> Outcome {
    let mut bad = 0;
    let mut skipped = 0;
    for inst in suite {
        let (reduced, _) = preprocess_full(inst).expect("binary");
        let by_orientation = solve_bruteforce_orientations(&reduced, 40).expect("small").is_some();
        match solve_bruteforce_rootings_all(&reduced, ROOTING_CAP) {
            Ok(r) if r.is_some() != by_orientation => bad += 1,
            Ok(_) => {}
            Err(_) => skipped += 1,
        }
    }
    outcome(bad == 0 && skipped == 0, format!("{} agree, {bad} disagree, {skipped} over cap", suite.len() - bad - skipped))
}

fn ac4() -> Outcome {
    let mut r = rng(4);
    let mut formulas: Vec<MonotoneCnf> = (0..200).map(|_| random_cnf(&mut r, 6, 6)).collect();
    formulas.push(figure_formula());
    let mut bad = 0;
    for f in &formulas {
        let (inst, map) = from_monotone_3sat(f).unwrap();
        let sol = solve(&inst).unwrap();
        let truth = cnf_satisfiable(f).is_some();
        let decoded_ok = match &sol.orientation {
            Some(o) => assignment_from_orientation(&inst, &map, o).is_ok_and(|a| f.satisfied_by(&a)),
            None => true,
        };
        if (sol.decision == Decision::Yes) != truth || !decoded_ok {
            bad += 1;
        }
    }
    let (fig, _) = from_monotone_3sat(&figure_formula()).unwrap();
    let fig_yes = solve(&fig).unwrap().decision == Decision::Yes;
    let shape = (fig.n(), fig.ones(), fig.zeros()) == (23, 16, 15);
    let detail = format!("{}/{} agree; example formula yes={fig_yes}, 23/16/15 shape={shape}", formulas.len() - bad, formulas.len());
    outcome(bad == 0 && fig_yes && shape, detail)
}

fn ac5() -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    for sizes in mis_profiles() {
        let seed = sizes.iter().fold(0u64, |a, &s| a * 4 + s as u64);
        for mis in mis_family(&sizes, MIS_EXHAUSTIVE_PAIRS, MIS_SAMPLES, seed) {
            let truth = mis_bruteforce(&mis).unwrap().is_some();
            let p5: Vec<_> = sizes.iter().map(|_| SimpleGraph::path(5)).collect();
            let built = [
                from_mis(&mis, &GadgetChoice::TwoOneEdges),
                from_mis(&mis, &GadgetChoice::CrossedOneEdgesWithZeros),
                from_mis_big_cores(&mis, &p5),
            ];
            for b in built {
                total += 1;
                let (inst, _) = b.unwrap();
                if solve(&inst).map(|s| s.decision) != Ok(if truth { Decision::Yes } else { Decision::No }) {
                    bad += 1;
                }
            }
        }
    }
    let mut frac_total = 0;
    let mut frac_bad = 0;
    for sizes in mis_profiles().into_iter().filter(|s| s.iter().sum::<usize>() <= 3) {
        for mis in mis_family(&sizes, MIS_EXHAUSTIVE_PAIRS, 0, 0) {
            let (inst, _) = from_mis(&mis, &GadgetChoice::fractional_default()).unwrap();
            if inst.m() > FRACTIONAL_EDGE_CAP {
                continue;
            }
            frac_total += 1;
            let truth = mis_bruteforce(&mis).unwrap().is_some();
            if solve_bruteforce_orientations(&inst, FRACTIONAL_EDGE_CAP).map(|o| o.is_some()) != Ok(truth) {
                frac_bad += 1;
            }
        }
    }
    let detail = format!(
        "gadgets 1, 2 and P5 cores: {}/{total} agree; fractional 1/2: {}/{frac_total} agree",
        total - bad,
        frac_total - frac_bad
    );
    outcome(bad == 0 && frac_bad == 0 && frac_total > 0, detail)
}

fn ac6() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    let mut seed = 0;
    while checked < 200 {
        seed += 1;
        let size = 4 + (seed as usize * 7) % 22;
        let inst = gen_random(&GenKind::TreeCore { size, zero_edges: 0 }, seed).unwrap();
        let t = SimpleGraph::from_one_component(&inst, &one_forest(&inst).components[0].vertices);
        let (m, _) = max_induced_matching_bf(&t).unwrap();
        if m < 2 {
            continue;
        }
        checked += 1;
        if !(t.is_core() && 2 * m < t.n() && t.n() < 5 * m) {
            bad += 1;
        }
    }
    let star = subdivided_star(5);
    let star_ok = star.n() == 11 && star.is_core() && max_induced_matching_bf(&star).unwrap().0 == 5;
    let pend = pendant_path(5);
    let pend_ok = pend.n() == 24 && pend.is_core() && max_induced_matching_bf(&pend).unwrap().0 == 5;
    let detail = format!("{}/200 random cores within bounds; 11-vertex star m=5: {star_ok}; 24-vertex witness m=5: {pend_ok}", 200 - bad);
    outcome(bad == 0 && star_ok && pend_ok, detail)
}

fn tree_suite() -> Vec<SimpleGraph> {
    let mut out: Vec<SimpleGraph> = (2..=6).flat_map(labeled_trees).collect();
    let mut r = rng(77);
    for _ in 0..150 {
        let n = r.gen_range(2..=12);
        out.push(SimpleGraph::new(n, &random_tree(&mut r, n)).unwrap());
    }
    out
}

fn ac7() -> Outcome {
    let trees = tree_suite();
    let (mut a_bad, mut b_bad, mut c_bad, mut cores) = (0, 0, 0, 0);
    for t in &trees {
        let Ok((mim, matching)) = max_induced_matching_bf(&product_with_edge(t)) else {
            a_bad += 1;
            continue;
        };
        let mapped = matching_to_split_orientation(t, &matching);
        let direct = direct_max_split(t, false);
        if !mapped.is_ok_and(|so| is_split(t, &so.arcs) && so.len() == mim) || direct != Some(mim) {
            a_bad += 1;
        }
        if t.is_core() {
            cores += 1;
            match max_leafed_split_orientation(t) {
                Ok(so) => {
                    if !(is_split(t, &so.arcs) && is_leafed(t, &so.arcs)) || direct_max_split(t, true) != Some(so.len()) {
                        b_bad += 1;
                    }
                    let k = so.len();
                    if k >= 3 && !(k < t.n() && t.n() < 5 * k) {
                        c_bad += 1;
                    }
                }
                Err(_) => b_bad += 1,
            }
        }
    }
    let gap = find_leafed_gap(8);
    let detail = format!(
        "{} trees ({cores} cores): bijection/max mismatches {a_bad}, leafed mismatches {b_bad}, size-bound violations {c_bad}; gap tree found: {}",
        trees.len(),
        gap.as_ref().map_or("none".to_string(), |(g, l, u)| format!("n={} leafed {l} < {u}", g.n()))
    );
    outcome(a_bad == 0 && b_bad == 0 && c_bad == 0 && gap.is_some(), detail)
}

fn ac8() -> Outcome {
    let mut r = rng(8);
    let mut sat_bad = 0;
    for _ in 0..300 {
        let vars = r.gen_range(1..=12);
        let mut f = TwoSatFormula::new(vars);
        for _ in 0..r.gen_range(0..=3 * vars) {
            let mut lit = || Lit { var: r.gen_range(0..vars), positive: r.gen_bool(0.5) };
            let (a, b) = (lit(), lit());
            f.add_clause(a, b);
        }
        let truth = (0u32..1 << vars).any(|mask| f.satisfied_by(&(0..vars).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()));
        match twosat_solve(&f) {
            Some(a) if truth && f.satisfied_by(&a) => {}
            None if !truth => {}
            _ => sat_bad += 1,
        }
    }
    let mut root_bad = 0;
    let mut cases = 0;
    for t in tree_suite().into_iter().filter(SimpleGraph::is_core) {
        let arcs = canonical_arcs(&t).unwrap();
        for k in t.leaves().len().max(1)..=arcs.len() {
            let g = gadgetize_core(&t, k).unwrap();
            let inst = gadget_instance(&t, &g);
            let feasible: Vec<usize> =
                (0..t.n()).filter(|&v| rooting_feasible(&inst, &Rooting { roots: vec![v] }).unwrap().is_feasible()).collect();
            let mut want = g.roots.clone();
            want.sort_unstable();
            cases += 1;
            if feasible != want {
                root_bad += 1;
            }
        }
    }
    let detail = format!("2-SAT {}/300 agree; gadget root sets {}/{cases} exact", 300 - sat_bad, cases - root_bad);
    outcome(sat_bad == 0 && root_bad == 0, detail)
}

fn efxo(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_efxo")).args(args).output().expect("run efxo");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn mask_time(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes)
        .lines()
        .map(|l| match l.split_once(" time_ms=") {
            Some((head, rest)) => format!("{head} time_ms=*{}", rest.split_once(' ').map_or(String::new(), |x| format!(" {}", x.1))),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn ac9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let at = |name: &str| d.join(name).display().to_string();
    let files = |p: &Path| std::fs::read(p).unwrap_or_default();
    std::fs::write(at("f.cnf"), "p cnf 4 3\n1 2 -3 0\n3 -4 3 0\n-2 -3 4 0\n").unwrap();
    std::fs::write(at("g.txt"), "4\n0 2\n1 3\n0 3\n").unwrap();
    std::fs::write(at("c.txt"), "0 1\n2 3\n").unwrap();
    let batch = at("batch");
    std::fs::create_dir(&batch).unwrap();
    for seed in 0..16 {
        let (_, text) = efxo(&["gen", "random", "--kind", "uniform", "--n", "7", "--m", "12", "--seed", &seed.to_string()]);
        std::fs::write(Path::new(&batch).join(format!("u{seed:02}.efx")), text).unwrap();
    }
    let commands: Vec<Vec<String>> = [
        vec!["gen", "random", "--kind", "tree-core", "--size", "9", "--seed", "7", "-o", &at("t.efx")],
        vec!["gen", "random", "--kind", "bipartite-plus-edges", "--n", "9", "--m", "12", "--seed", "3"],
        vec!["gen", "sat", "--cnf", &at("f.cnf"), "--allow-mixed", "-o", &at("s.efx"), "--mapping", &at("s.map")],
        vec!["gen", "sat", "--cnf", &at("f.cnf"), "--allow-mixed", "--low-degree"],
        vec!["gen", "mis", "--graph", &at("g.txt"), "--colors", &at("c.txt"), "--gadget", "2", "-o", &at("m.efx"), "--mapping", &at("m.map")],
        vec!["gen", "mis", "--graph", &at("g.txt"), "--colors", &at("c.txt"), "--gadget", "cores", "--core", "pendant:2"],
        vec!["solve", &at("s.efx"), "--emit-orientation", &at("s.orient")],
        vec!["solve", &at("m.efx"), "--emit-orientation", &at("m.orient")],
        vec!["verify", &at("s.efx"), &at("s.orient")],
        vec!["extract", "--instance", &at("s.efx"), "--mapping", &at("s.map"), "--orientation", &at("s.orient")],
        vec!["extract", "--instance", &at("m.efx"), "--mapping", &at("m.map"), "--orientation", &at("m.orient")],
        vec!["preprocess", &at("s.efx"), "--emit-trace", &at("s.trace")],
        vec!["stats", "--structure", &at("s.efx"), &at("t.efx"), &at("m.efx")],
        vec!["export-dot", &at("s.efx"), "--orientation", &at("s.orient")],
    ]
    .iter()
    .map(|c| c.iter().map(|s| s.to_string()).collect())
    .collect();
    let side_files = ["t.efx", "s.efx", "s.map", "m.efx", "m.map", "s.orient", "m.orient", "s.trace"];
    let mut runs = Vec::new();
    for _ in 0..2 {
        let mut record = Vec::new();
        for c in &commands {
            let args: Vec<&str> = c.iter().map(String::as_str).collect();
            let (code, out) = efxo(&args);
            record.push((code, mask_time(&out)));
        }
        let side: Vec<Vec<u8>> = side_files.iter().map(|f| files(&d.join(f))).collect();
        runs.push((record, side));
    }
    let mut mismatches: Vec<String> = Vec::new();
    for (i, c) in commands.iter().enumerate() {
        if runs[0].0[i] != runs[1].0[i] {
            mismatches.push(c[..2].join(" "));
        }
    }
    if runs[0].1 != runs[1].1 {
        mismatches.push("written files".into());
    }
    let failed_cmds = runs[0].0.iter().filter(|(code, _)| *code != 0).count();
    for cmd in ["solve", "stats"] {
        let (c1, o1) = efxo(&[cmd, &batch, "--jobs", "1"]);
        let (c4, o4) = efxo(&[cmd, &batch, "--jobs", "4"]);
        if c1 != c4 || mask_time(&o1) != mask_time(&o4) || o1.is_empty() {
            mismatches.push(format!("{cmd} --jobs 1 vs 4"));
        }
    }
    let detail = format!(
        "{} commands run twice, {failed_cmds} non-zero exits, mismatches: [{}] (time_ms masked)",
        commands.len(),
        mismatches.join(", ")
    );
    outcome(mismatches.is_empty() && failed_cmds == 0, detail)
}

fn main() {
    let suite = suite_one();
    let criteria: Vec<(&str, &str, Box<dyn Fn() -> Outcome>)> = vec![
        ("AC1", "oracle equivalence", Box::new(|| ac1(&suite))),
        ("AC2", "min-uncut <= 1 totality", Box::new(ac2)),
        ("AC3", "nice-orientation completeness", Box::new(|| ac3(&suite))),
        ("AC4", "SAT reduction faithfulness", Box::new(ac4)),
        ("AC5", "MIS reduction faithfulness", Box::new(ac5)),
        ("AC6", "core size bounds", Box::new(ac6)),
        ("AC7", "split-orientation machinery", Box::new(ac7)),
        ("AC8", "2-SAT and gadget roots", Box::new(ac8)),
        ("AC9", "CLI determinism", Box::new(ac9)),
    ];
    let mut failed = 0;
    for (id, name, check) in &criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| outcome(false, "panicked"));
        let verdict = if result.ok { "PASS" } else { "FAIL" };
        if !result.ok {
            failed += 1;
        }
        println!("{id} {verdict} {name}: {} [{:.1}s]", result.detail, start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
