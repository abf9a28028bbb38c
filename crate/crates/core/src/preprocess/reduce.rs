use std::collections::BTreeSet;

use super::trace::{GadgetEdge, Step};
use super::work::WorkGraph;
use super::PreprocessError;

fn record(g: &mut WorkGraph, steps: &mut Vec<Step>, s: Step) {
    s.apply(g);
    steps.push(s);
}

/// Drops vertices of 1-degree 0, then whole 1-components that contain a cycle.
/// Neither removal changes any 1-degree outside the removed set, so one pass of
/// each reaches the fixed point.
pub(crate) fn basic_phase(g: &mut WorkGraph, steps: &mut Vec<Step>) -> bool {
    let before = steps.len();
    for x in g.alive_vertices() {
        if g.one_degree(x) == 0 {
            let zero_neighbors = g.zero_neighbors(x);
            record(g, steps, Step::DropIsolated { vertex: x, zero_neighbors });
        }
    }
    for comp in g.one_components() {
        if g.one_edge_count(&comp) >= comp.len() {
            let s = cyclic_step(g, comp);
            record(g, steps, s);
        }
    }
    steps.len() > before
}

fn cyclic_step(g: &WorkGraph, vertices: Vec<usize>) -> Step {
    let inside: BTreeSet<usize> = vertices.iter().copied().collect();

    // 2-core by leaf peeling, then walk it until a vertex repeats.
    let mut deg: std::collections::BTreeMap<usize, usize> =
        vertices.iter().map(|&x| (x, g.one_degree(x))).collect();
    let mut peel: Vec<usize> = vertices.iter().copied().filter(|x| deg[x] == 1).collect();
    let mut in_core: BTreeSet<usize> = inside.clone();
    while let Some(x) = peel.pop() {
        in_core.remove(&x);
        for y in g.one_neighbors(x) {
            if in_core.contains(&y) {
                let d = deg.get_mut(&y).unwrap();
                *d -= 1;
                if *d == 1 {
                    peel.push(y);
                }
            }
        }
    }
    let start = *in_core.iter().next().expect("cyclic component has a 2-core");
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    let cycle = loop {
        let next = g
            .one_neighbors(cur)
            .into_iter()
            .find(|&y| y != prev && in_core.contains(&y))
            .expect("2-core vertices have degree at least 2");
        if let Some(pos) = walk.iter().position(|&x| x == next) {
            break walk[pos..].to_vec();
        }
        walk.push(next);
        prev = cur;
        cur = next;
    };

    let mut reached: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut queue: std::collections::VecDeque<usize> = cycle.iter().copied().collect();
    let mut tree = Vec::new();
    while let Some(x) = queue.pop_front() {
        for y in g.one_neighbors(x) {
            if reached.insert(y) {
                tree.push((x, y));
                queue.push_back(y);
            }
        }
    }

    let mut one_edges = Vec::new();
    let mut zero_edges = BTreeSet::new();
    for &x in &vertices {
        for (y, one) in g.neighbors(x) {
            if one {
                if x < y {
                    one_edges.push((x, y));
                }
            } else {
                zero_edges.insert((x.min(y), x.max(y)));
            }
        }
    }
    Step::DropCyclicComponent {
        vertices,
        cycle,
        tree,
        one_edges,
        zero_edges: zero_edges.into_iter().collect(),
    }
}

/// Replaces the 0-star of every vertex of 0-degree at least 2 by a balanced
/// binary tree gadget, lowest vertex first, until no such vertex remains.
pub(crate) fn zero_tree_phase(g: &mut WorkGraph, steps: &mut Vec<Step>) {
    let mut x = 0;
    while x < g.capacity() {
        if g.alive(x) && g.zero_neighbors(x).len() >= 2 {
            let leaves = g.zero_neighbors(x);
            let apex = g.capacity();
            let mut next = apex + 1;
            let mut internal = Vec::new();
            let mut gadget = Vec::new();
            build_tree(apex, &leaves, &mut next, &mut internal, &mut gadget);
            let s = Step::ZeroDegreeTree { center: x, apex, internal, gadget, leaves };
            record(g, steps, s);
        }
        x += 1;
    }
}

/// Attaches the leaves below `node`, splitting them into two halves; a half of
/// one leaf hangs directly from `node`.
fn build_tree(
    node: usize,
    leaves: &[usize],
    next: &mut usize,
    internal: &mut Vec<usize>,
    gadget: &mut Vec<GadgetEdge>,
) {
    let (left, right) = leaves.split_at(leaves.len() / 2);
    for half in [left, right] {
        let child = if half.len() == 1 {
            half[0]
        } else {
            let c = *next;
            *next += 1;
            internal.push(c);
            c
        };
        let mid = *next;
        *next += 1;
        gadget.push(GadgetEdge { parent: node, mid, child });
        if half.len() > 1 {
            build_tree(child, half, next, internal, gadget);
        }
    }
}

/// Merges twin leaves in every 1-tree on at least 4 vertices.
pub(crate) fn core_phase(g: &mut WorkGraph, steps: &mut Vec<Step>) -> Result<bool, PreprocessError> {
    let comps = g.one_components();
    let mut size = vec![0usize; g.capacity()];
    for comp in &comps {
        if g.one_edge_count(comp) >= comp.len() {
            return Err(PreprocessError::CyclicComponent { vertices: comp.clone() });
        }
        for &x in comp {
            size[x] = comp.len();
        }
    }
    let before = steps.len();
    for p in g.alive_vertices() {
        if size[p] < 4 {
            continue;
        }
        let nbrs = g.one_neighbors(p);
        let leaves: Vec<usize> = nbrs.iter().copied().filter(|&y| g.one_degree(y) == 1).collect();
        if leaves.len() < 2 {
            continue;
        }
        let inner: Vec<usize> = nbrs.iter().copied().filter(|&y| g.one_degree(y) > 1).collect();
        let kept = leaves[0];
        let (sibling, merged) = match inner.first() {
            Some(&q) => (q, &leaves[1..]),
            None => (*leaves.last().unwrap(), &leaves[1..leaves.len() - 1]),
        };
        for &v in merged {
            let zero_neighbors = g.zero_neighbors(v);
            let mut added = Vec::new();
            for &y in &zero_neighbors {
                let t = if y == kept { sibling } else { y };
                if !g.has_edge(kept, t) && !added.contains(&t) {
                    added.push(t);
                }
            }
            let s = Step::LeafMerge { kept, removed: v, parent: p, sibling, zero_neighbors, added };
            record(g, steps, s);
        }
    }
    Ok(steps.len() > before)
}
