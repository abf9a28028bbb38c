#![allow(dead_code)]

use efx_orient::model::{verify_efx_definitional, Instance, Orientation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Plain enumeration of all 2^m orientations with the definitional verifier.
pub fn oracle_decision(inst: &Instance) -> bool {
    let m = inst.m();
    assert!(m <= 22, "oracle limited to small instances");
    (0u64..1 << m).any(|mask| {
        let r = (0..m)
            .map(|e| if mask >> e & 1 == 0 { inst.edge(e).u } else { inst.edge(e).v })
            .collect();
        let o = Orientation::from_receivers(inst, r).unwrap();
        verify_efx_definitional(inst, &o).unwrap().ok
    })
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random binary instance with at most `max_n` vertices and `max_m` edges.
pub fn random_binary(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    let m = rng.gen_range(0..=pairs.len().min(max_m));
    let edges: Vec<(usize, usize, u8)> = pairs[..m].iter().map(|&(u, v)| (u, v, rng.gen_range(0..2))).collect();
    Instance::binary(n, &edges).unwrap()
}

/// Every binary-labeled simple graph on exactly `n` labeled vertices.
pub fn all_labeled(n: usize) -> Vec<Instance> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    // Each pair is absent, a 0-edge, or a 1-edge.
    let total = 3usize.pow(pairs.len() as u32);
    for mut code in 0..total {
        let mut edges = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => edges.push((u, v, 0)),
                2 => edges.push((u, v, 1)),
                _ => {}
            }
            code /= 3;
        }
        out.push(Instance::binary(n, &edges).unwrap());
    }
    out
}

/// Random labeled tree via a random Prüfer-free attachment process.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

use efx_orient::reductions::MonotoneCnf;
use efx_orient::solvers::Lit;

/// Truth-table satisfiability.
pub fn cnf_satisfiable(f: &MonotoneCnf) -> Option<Vec<bool>> {
    let n = f.vars();
    (0u32..1 << n).map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()).find(|a| f.satisfied_by(a))
}

/// Random monotone CNF with up to `max_vars` variables and `max_clauses` clauses.
pub fn random_cnf(rng: &mut ChaCha8Rng, max_vars: usize, max_clauses: usize) -> MonotoneCnf {
    let vars = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let positive = rng.gen_bool(0.5);
            let len = rng.gen_range(1..=3);
            (0..len).map(|_| Lit { var: rng.gen_range(0..vars), positive }).collect()
        })
        .collect();
    MonotoneCnf::new(vars, clauses).unwrap()
}

/// The mixed three-clause example over x, y, z, r.
pub fn figure_formula() -> MonotoneCnf {
    let (x, y, z, r) = (0, 1, 2, 3);
    MonotoneCnf::with_mixed(
        4,
        vec![
            vec![Lit::pos(x), Lit::pos(y), Lit::neg(z)],
            vec![Lit::pos(z), Lit::neg(r), Lit::pos(z)],
            vec![Lit::neg(y), Lit::neg(z), Lit::pos(r)],
        ],
    )
    .unwrap()
}

use efx_orient::reductions::MisInstance;
use efx_orient::structure::SimpleGraph;

/// Colors as consecutive id ranges with the given sizes.
pub fn mis_with(sizes: &[usize], edges: &[(usize, usize)]) -> MisInstance {
    let n = sizes.iter().sum();
    let mut colors = Vec::new();
    let mut next = 0;
    for &s in sizes {
        colors.push((next..next + s).collect());
        next += s;
    }
    MisInstance::new(SimpleGraph::new(n, edges).unwrap(), colors).unwrap()
}

/// Non-decreasing color-size profiles with up to three colors of up to three vertices.
pub fn mis_profiles() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=3 {
        out.push(vec![a]);
        for b in a..=3 {
            out.push(vec![a, b]);
            for c in b..=3 {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Every edge set over the pairs joining different colors when there are at
/// most `exhaustive_up_to` such pairs; otherwise `samples` seeded subsets,
/// some with extra same-color edges.
pub fn mis_family(sizes: &[usize], exhaustive_up_to: usize, samples: usize, seed: u64) -> Vec<MisInstance> {
    let n: usize = sizes.iter().sum();
    let mut color = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        color.extend(std::iter::repeat_n(i, s));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let (cross, same): (Vec<_>, Vec<_>) = pairs.into_iter().partition(|&(u, v)| color[u] != color[v]);
    if cross.len() <= exhaustive_up_to {
        return (0u32..1 << cross.len())
            .map(|mask| {
                let es: Vec<_> = (0..cross.len()).filter(|i| mask >> i & 1 == 1).map(|i| cross[i]).collect();
                mis_with(sizes, &es)
            })
            .collect();
    }
    let mut r = rng(seed);
    (0..samples)
        .map(|_| {
            let p = r.gen_range(0.1..0.9);
            let mut es: Vec<_> = cross.iter().copied().filter(|_| r.gen_bool(p)).collect();
            if r.gen_bool(0.3) {
                es.extend(same.iter().copied().filter(|_| r.gen_bool(0.5)));
                es.sort_unstable();
            }
            mis_with(sizes, &es)
        })
        .collect()
}

use efx_orient::structure::is_leafed;

/// Largest arc set with the split property (optionally leafed), by
/// backtracking over all arcs.
pub fn direct_max_split(g: &SimpleGraph, leafed: bool) -> Option<usize> {
    let arcs: Vec<(usize, usize)> = g.edges().iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let compatible = |p: (usize, usize), q: (usize, usize)| !g.has_edge(p.0, q.1) && !g.has_edge(q.0, p.1);
    fn go(
        i: usize,
        arcs: &[(usize, usize)],
        cur: &mut Vec<(usize, usize)>,
        ok: &dyn Fn((usize, usize), (usize, usize)) -> bool,
        accept: &dyn Fn(&[(usize, usize)]) -> bool,
        best: &mut Option<usize>,
    ) {
        if i == arcs.len() {
            if accept(cur) && best.is_none_or(|b| cur.len() > b) {
                *best = Some(cur.len());
            }
            return;
        }
        if cur.iter().all(|&c| ok(c, arcs[i])) {
            cur.push(arcs[i]);
            go(i + 1, arcs, cur, ok, accept, best);
            cur.pop();
        }
        go(i + 1, arcs, cur, ok, accept, best);
    }
    let accept = |a: &[(usize, usize)]| !leafed || is_leafed(g, a);
    let mut best = None;
    go(0, &arcs, &mut Vec::new(), &compatible, &accept, &mut best);
    best
}

