use std::collections::BTreeSet;

use super::graph::SimpleGraph;
use super::split::max_leafed_split_orientation;
use super::StructureError;
use crate::model::VertexId;

/// A core with 0-edges added so that exactly the chosen roots stay feasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetizedCore {
    /// Chosen arcs `(r_i, s_i)`.
    pub arcs: Vec<(VertexId, VertexId)>,
    pub roots: Vec<VertexId>,
    pub privates: Vec<VertexId>,
    /// Added 0-edges, `(a, b)` with `a < b`, ascending.
    pub zero_edges: Vec<(VertexId, VertexId)>,
}

/// Arcs of the maximum leafed split orientation, leaf arcs first by leaf id,
/// then the rest by `(tail, head)`.
pub fn canonical_arcs(core: &SimpleGraph) -> Result<Vec<(VertexId, VertexId)>, StructureError> {
    let so = max_leafed_split_orientation(core)?;
    let (mut leaf, mut rest): (Vec<_>, Vec<_>) = so.arcs.into_iter().partition(|&(u, _)| core.is_leaf(u));
    leaf.sort_unstable();
    rest.sort_unstable();
    leaf.extend(rest);
    Ok(leaf)
}

/// Keeps the first `k` canonical arcs and blocks every other vertex by a
/// 0-edge between its two smallest neighbors.
pub fn gadgetize_core(core: &SimpleGraph, k: usize) -> Result<GadgetizedCore, StructureError> {
    let all = canonical_arcs(core)?;
    let leaves = core.leaves().len();
    if k > all.len() || k < leaves {
        return Err(StructureError::ArcCount { requested: k, leaves, available: all.len() });
    }
    let arcs = all[..k].to_vec();
    let roots: Vec<VertexId> = arcs.iter().map(|a| a.0).collect();
    let privates: Vec<VertexId> = arcs.iter().map(|a| a.1).collect();
    let mut zero = BTreeSet::new();
    for v in 0..core.n() {
        if roots.contains(&v) {
            continue;
        }
        let nb = core.neighbors(v);
        assert!(nb.len() >= 2, "leaf {v} left without an arc");
        zero.insert((nb[0], nb[1]));
    }
    Ok(GadgetizedCore { arcs, roots, privates, zero_edges: zero.into_iter().collect() })
}
