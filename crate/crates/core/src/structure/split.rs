use super::graph::SimpleGraph;
use super::mim::{is_induced_matching, leafed_mim_dp, max_induced_matching_bf};
use super::StructureError;
use crate::model::VertexId;

/// Arcs `(tail, head)` over edges of a fixed graph such that for any two
/// distinct arcs `(u, v)` and `(x, y)` neither `uy` nor `xv` is an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitOrientation {
    /// Ascending.
    pub arcs: Vec<(VertexId, VertexId)>,
    pub leafed: bool,
}

impl SplitOrientation {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

pub fn is_split(g: &SimpleGraph, arcs: &[(VertexId, VertexId)]) -> bool {
    if !arcs.iter().all(|&(u, v)| g.has_edge(u, v)) {
        return false;
    }
    for (i, &(u, v)) in arcs.iter().enumerate() {
        for (j, &(x, y)) in arcs.iter().enumerate() {
            if i != j && (g.has_edge(u, y) || g.has_edge(x, v)) {
                return false;
            }
        }
    }
    true
}

/// Every leaf has its outgoing arc.
pub fn is_leafed(g: &SimpleGraph, arcs: &[(VertexId, VertexId)]) -> bool {
    g.leaves().into_iter().all(|l| arcs.contains(&(l, g.neighbors(l)[0])))
}

/// `G x e`: vertex `(v, s)` has id `2v + s`; each edge `uv` yields
/// `(u,0)-(v,1)` and `(u,1)-(v,0)`.
pub fn product_with_edge(g: &SimpleGraph) -> SimpleGraph {
    let mut edges = Vec::with_capacity(2 * g.m());
    for &(u, v) in g.edges() {
        edges.push((2 * u, 2 * v + 1));
        edges.push((2 * u + 1, 2 * v));
    }
    SimpleGraph::new(2 * g.n(), &edges).unwrap()
}

pub fn product_label(id: VertexId) -> (VertexId, u8) {
    (id / 2, (id % 2) as u8)
}

/// Maps an induced matching of `G x e` to arcs: the edge `(u,0)-(v,1)`
/// becomes `(u, v)`.
pub fn matching_to_split_orientation(
    g: &SimpleGraph,
    matching: &[(VertexId, VertexId)],
) -> Result<SplitOrientation, StructureError> {
    let p = product_with_edge(g);
    if !is_induced_matching(&p, matching) {
        return Err(StructureError::NotInducedMatching);
    }
    let mut arcs: Vec<(VertexId, VertexId)> = matching
        .iter()
        .map(|&(a, b)| {
            let (x, y) = if a % 2 == 0 { (a, b) } else { (b, a) };
            (x / 2, y / 2)
        })
        .collect();
    arcs.sort_unstable();
    let leafed = is_leafed(g, &arcs);
    Ok(SplitOrientation { arcs, leafed })
}

pub fn split_orientation_to_matching(
    g: &SimpleGraph,
    so: &SplitOrientation,
) -> Result<Vec<(VertexId, VertexId)>, StructureError> {
    if !is_split(g, &so.arcs) {
        return Err(StructureError::NotSplit);
    }
    let mut m: Vec<_> = so.arcs.iter().map(|&(u, v)| (2 * u, 2 * v + 1)).map(|(a, b)| (a.min(b), a.max(b))).collect();
    m.sort_unstable();
    Ok(m)
}

/// Largest split orientation through an exhaustive maximum induced matching of
/// the product graph.
pub fn max_split_orientation_bf(g: &SimpleGraph) -> Result<SplitOrientation, StructureError> {
    let (_, m) = max_induced_matching_bf(&product_with_edge(g))?;
    matching_to_split_orientation(g, &m)
}

/// Maximum leafed split orientation of a tree core.
///
/// With `r` the smallest vertex, the product of a tree is two disjoint copies:
/// one holds the arcs leaving vertices at even distance from `r`, the other
/// those leaving odd ones. Leaves of the same parity are at distance at least
/// 4 in a core, so each copy is a leafed induced matching problem.
pub fn max_leafed_split_orientation(core: &SimpleGraph) -> Result<SplitOrientation, StructureError> {
    if !core.is_core() {
        return Err(StructureError::NotACore);
    }
    let dist = core.distances(0);
    let even = |v: VertexId| dist[v].unwrap().is_multiple_of(2);
    let leaves = core.leaves();
    let l1: Vec<VertexId> = leaves.iter().copied().filter(|&v| even(v)).collect();
    let l2: Vec<VertexId> = leaves.iter().copied().filter(|&v| !even(v)).collect();
    let r1 = leafed_mim_dp(core, &l1)?.ok_or(StructureError::NotACore)?.1;
    let r2 = leafed_mim_dp(core, &l2)?.ok_or(StructureError::NotACore)?.1;
    let mut arcs = Vec::with_capacity(r1.len() + r2.len());
    for (a, b) in r1 {
        arcs.push(if even(a) { (a, b) } else { (b, a) });
    }
    for (a, b) in r2 {
        arcs.push(if even(a) { (b, a) } else { (a, b) });
    }
    arcs.sort_unstable();
    debug_assert!(is_split(core, &arcs) && is_leafed(core, &arcs));
    Ok(SplitOrientation { arcs, leafed: true })
}
