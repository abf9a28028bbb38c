use std::path::Path;

use efx_orient::cli::run;

fn efxo(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("efxo").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

#[test]
fn solve_and_verify_tiny() {
    let dir = tempfile::tempdir().unwrap();
    let tiny = p(dir.path(), "tiny.efx");
    let orient = p(dir.path(), "tiny.orient");
    std::fs::write(&tiny, "p efx 2 1\n0 1 1\n").unwrap();
    let (code, out, _) = efxo(&["solve", &tiny, "--emit-orientation", &orient]);
    assert_eq!(code, 0);
    assert!(out.starts_with("RESULT yes strategy="));
    assert_eq!(efxo(&["verify", &tiny, &orient]).0, 0);
    std::fs::write(&orient, "0 1 -> 1\n").unwrap();
    assert_eq!(efxo(&["verify", &tiny, &orient]).0, 0);
}

#[test]
fn verify_reports_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let inst = p(dir.path(), "p3.efx");
    let orient = p(dir.path(), "p3.orient");
    std::fs::write(&inst, "p efx 3 2\n0 1 1\n1 2 1\n").unwrap();
    std::fs::write(&orient, "0 1 -> 1\n1 2 -> 1\n").unwrap();
    let (code, out, _) = efxo(&["verify", &inst, &orient]);
    assert_eq!(code, 1);
    assert!(out.contains("0 envies 1"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let no = p(dir.path(), "no.efx");
    // two 1-edges joined by all four 0-edges: no feasible rooting
    std::fs::write(&no, "p efx 4 6\n0 1 1\n2 3 1\n0 2 0\n0 3 0\n1 2 0\n1 3 0\n").unwrap();
    assert_eq!(efxo(&["solve", &no]).0, 1);
    assert_eq!(efxo(&["solve", &no, "--strategy", "bforce", "--max-bf-edges", "3"]).0, 2);
    assert_eq!(efxo(&["solve", &p(dir.path(), "missing.efx")]).0, 11);
    assert_eq!(efxo(&["solve"]).0, 10);
    assert_eq!(efxo(&["solve", &no, "--jobs", "0"]).0, 10);
    let frac = p(dir.path(), "frac.efx");
    std::fs::write(&frac, "p efx 3 2\n0 1 1\n1 2 1/2\n").unwrap();
    assert_eq!(efxo(&["solve", &frac]).0, 12);
    assert_eq!(efxo(&["solve", &frac, "--strategy", "bforce"]).0, 0);
    let (code, out, _) = efxo(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("export-dot"));
}

#[test]
fn generators_are_deterministic_and_decodable() {
    let dir = tempfile::tempdir().unwrap();
    let a = efxo(&["gen", "random", "--kind", "tree-core", "--size", "9", "--seed", "7"]);
    let b = efxo(&["gen", "random", "--kind", "tree-core", "--size", "9", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);

    let cnf = p(dir.path(), "f.cnf");
    std::fs::write(&cnf, "p cnf 3 2\n1 2 3 0\n-1 -2 0\n").unwrap();
    let (inst, map, orient) = (p(dir.path(), "f.efx"), p(dir.path(), "f.map"), p(dir.path(), "f.orient"));
    assert_eq!(efxo(&["gen", "sat", "--cnf", &cnf, "-o", &inst, "--mapping", &map]).0, 0);
    assert_eq!(efxo(&["solve", &inst, "--emit-orientation", &orient]).0, 0);
    let (code, out, _) = efxo(&["extract", "--instance", &inst, "--mapping", &map, "--orientation", &orient]);
    assert_eq!(code, 0);
    assert!(out.starts_with("v ") && out.trim_end().ends_with(" 0"));

    let graph = p(dir.path(), "g.txt");
    let colors = p(dir.path(), "c.txt");
    std::fs::write(&graph, "# path on three vertices\n3\n0 1\n1 2\n").unwrap();
    std::fs::write(&colors, "0 1\n2\n").unwrap();
    for gadget in ["1", "2", "cores"] {
        let (inst, map, orient) = (p(dir.path(), "m.efx"), p(dir.path(), "m.map"), p(dir.path(), "m.orient"));
        let args = ["gen", "mis", "--graph", &graph, "--colors", &colors, "--gadget", gadget, "-o", &inst, "--mapping", &map];
        assert_eq!(efxo(&args).0, 0);
        assert_eq!(efxo(&["solve", &inst, "--emit-orientation", &orient]).0, 0);
        let (_, out, _) = efxo(&["extract", "--instance", &inst, "--mapping", &map, "--orientation", &orient]);
        assert_eq!(out, "mis 0 2\n");
    }
    assert_eq!(efxo(&["gen", "mis", "--graph", &graph, "--colors", &colors, "--gadget", "frac:3/2"]).0, 12);
    assert_eq!(efxo(&["gen", "mis", "--graph", &graph, "--colors", &colors, "--gadget", "frac:1/3"]).0, 0);
}

#[test]
fn preprocess_stats_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let inst = p(dir.path(), "t.efx");
    let trace = p(dir.path(), "t.trace");
    std::fs::write(&inst, "p efx 6 6\n0 1 1\n1 2 1\n2 0 1\n3 4 1\n4 5 1\n0 3 0\n").unwrap();
    let (code, out, _) = efxo(&["preprocess", &inst, "--emit-trace", &trace]);
    assert_eq!(code, 0);
    assert!(out.starts_with("p efx "));
    assert!(std::fs::read_to_string(&trace).unwrap().contains("drop_cyclic_component"));
    let (code, out, _) = efxo(&["stats", &inst]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    for key in ["n", "m", "ones", "zeros", "components", "core_sizes", "states_per_tree", "uncut_class"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let (_, dot, _) = efxo(&["export-dot", &inst]);
    assert!(dot.starts_with("graph efx {") && dot.contains("style=dashed"));
}

#[test]
fn batch_order_is_stable_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..12 {
        let (_, text, _) = efxo(&["gen", "random", "--kind", "uniform", "--n", "7", "--m", "11", "--seed", &seed.to_string()]);
        std::fs::write(dir.path().join(format!("r{seed:02}.efx")), text).unwrap();
    }
    let d = dir.path().display().to_string();
    let strip = |s: String| s.lines().map(|l| l.split(" time_ms=").next().unwrap().to_string() + l.split_once(" file=").map_or("", |x| x.1)).collect::<Vec<_>>();
    let one = efxo(&["solve", &d, "--jobs", "1"]);
    let four = efxo(&["solve", &d, "--jobs", "4"]);
    assert_eq!(one.0, four.0);
    assert_eq!(strip(one.1), strip(four.1));
    assert_eq!(efxo(&["stats", &d, "--jobs", "1"]), efxo(&["stats", &d, "--jobs", "4"]));
}
