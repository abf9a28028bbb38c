use std::collections::{BTreeSet, VecDeque};

use super::SolverError;
use crate::model::{Instance, Orientation, VertexId};

/// Orientation for a split where `G[A]` has only 1-edges with at most one
/// cycle per component and `G[B]` has only 0-edges.
///
/// Components of `G[A]` are oriented so that every vertex except one root per
/// acyclic component receives exactly one edge. Each root then takes one
/// 1-edge from `B` if it has any. Everything else goes to `B`.
pub fn solve_near_bipartite(inst: &Instance, a: &[VertexId], b: &[VertexId]) -> Result<Orientation, SolverError> {
    let n = inst.n();
    let mut in_a = vec![None; n];
    for &x in a {
        if x >= n || in_a[x].is_some() {
            return Err(SolverError::Precondition("A is not a set of vertices".into()));
        }
        in_a[x] = Some(true);
    }
    for &x in b {
        if x >= n || in_a[x].is_some() {
            return Err(SolverError::Precondition("A and B do not partition the vertices".into()));
        }
        in_a[x] = Some(false);
    }
    let in_a: Vec<bool> = match in_a.into_iter().collect::<Option<Vec<bool>>>() {
        Some(v) => v,
        None => return Err(SolverError::Precondition("A and B do not cover the vertices".into())),
    };
    for (e, edge) in inst.edges().iter().enumerate() {
        match (in_a[edge.u], in_a[edge.v]) {
            (true, true) if !inst.is_one(e) => {
                return Err(SolverError::Precondition(format!("G[A] has non-1-edge {e}")))
            }
            (false, false) if !inst.is_zero(e) => {
                return Err(SolverError::Precondition(format!("G[B] has non-0-edge {e}")))
            }
            _ => {}
        }
    }

    let inside = |e: usize| {
        let edge = inst.edge(e);
        in_a[edge.u] && in_a[edge.v]
    };
    let mut receiver = vec![usize::MAX; inst.m()];
    let mut seen = vec![false; n];
    let mut roots = Vec::new();

    // Step 1.
    for s in 0..n {
        if !in_a[s] || seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            comp.push(x);
            for &(y, e) in inst.neighbors(x) {
                if inside(e) && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let edges: usize = comp
            .iter()
            .map(|&x| inst.neighbors(x).iter().filter(|&&(_, e)| inside(e)).count())
            .sum::<usize>()
            / 2;
        if edges > comp.len() {
            return Err(SolverError::Precondition("a component of G[A] has two cycles".into()));
        }
        let sources: Vec<VertexId> = if edges == comp.len() {
            let cycle = unique_cycle(inst, &comp, &inside);
            for i in 0..cycle.len() {
                let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                receiver[inst.edge_between(x, y).unwrap()] = y;
            }
            cycle
        } else {
            let r = *comp.iter().min().unwrap();
            roots.push(r);
            vec![r]
        };
        let mut reached: BTreeSet<VertexId> = sources.iter().copied().collect();
        let mut queue: VecDeque<VertexId> = sources.into_iter().collect();
        while let Some(x) = queue.pop_front() {
            for &(y, e) in inst.neighbors(x) {
                if inside(e) && receiver[e] == usize::MAX && reached.insert(y) {
                    receiver[e] = y;
                    queue.push_back(y);
                }
            }
        }
    }

    // Step 2.
    for &r in &roots {
        if let Some(&(_, e)) = inst.neighbors(r).iter().find(|&&(y, e)| !in_a[y] && inst.is_one(e)) {
            receiver[e] = r;
        }
    }

    // Step 3.
    for (e, edge) in inst.edges().iter().enumerate() {
        if receiver[e] != usize::MAX {
            continue;
        }
        receiver[e] = match (in_a[edge.u], in_a[edge.v]) {
            (false, false) => edge.v,
            (true, false) => edge.v,
            (false, true) => edge.u,
            (true, true) => unreachable!("G[A] edges oriented in step 1"),
        };
    }
    Ok(Orientation::from_receivers_unchecked(receiver))
}

/// Vertex sequence of the single cycle of a unicyclic component.
pub(crate) fn unique_cycle(inst: &Instance, comp: &[VertexId], inside: &dyn Fn(usize) -> bool) -> Vec<VertexId> {
    let mut deg: std::collections::BTreeMap<VertexId, usize> = comp
        .iter()
        .map(|&x| (x, inst.neighbors(x).iter().filter(|&&(_, e)| inside(e)).count()))
        .collect();
    let mut core: BTreeSet<VertexId> = comp.iter().copied().collect();
    let mut peel: Vec<VertexId> = comp.iter().copied().filter(|x| deg[x] <= 1).collect();
    while let Some(x) = peel.pop() {
        core.remove(&x);
        for &(y, e) in inst.neighbors(x) {
            if inside(e) && core.contains(&y) {
                let d = deg.get_mut(&y).unwrap();
                *d -= 1;
                if *d == 1 {
                    peel.push(y);
                }
            }
        }
    }
    let start = *core.iter().next().expect("unicyclic component");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = inst
            .neighbors(cur)
            .iter()
            .find(|&&(y, e)| inside(e) && y != prev && core.contains(&y))
            .map(|&(y, _)| y)
            .unwrap();
        if next == start {
            return cycle;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
}
