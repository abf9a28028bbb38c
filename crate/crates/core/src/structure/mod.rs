//! Induced matchings, split orientations and the core gadget used by the
//! hardness constructions.

mod gadget;
mod graph;
mod mim;
mod split;

pub use gadget::{canonical_arcs, gadgetize_core, GadgetizedCore};
pub use graph::{labeled_trees, pendant_path, subdivided_star, SimpleGraph};
pub use mim::{
    is_induced_matching, leafed_matching_table, leafed_mim_dp, max_induced_matching_bf, LeafedMatchingDp, Slot,
    MIM_BF_MAX_EDGES,
};
pub use split::{
    is_leafed, is_split, matching_to_split_orientation, max_leafed_split_orientation, max_split_orientation_bf,
    product_label, product_with_edge, split_orientation_to_matching, SplitOrientation,
};

use crate::model::{Instance, Value, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("invalid edge {0}-{1}")]
    BadEdge(VertexId, VertexId),
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is not a core")]
    NotACore,
    #[error("vertex {0} is not a leaf")]
    NotALeaf(VertexId),
    #[error("required leaves {0} and {1} are closer than 4")]
    LeavesTooClose(VertexId, VertexId),
    #[error("tree has no inner vertex")]
    NoInnerVertex,
    #[error("graph has {actual} edges, limit {limit}")]
    TooLarge { limit: usize, actual: usize },
    #[error("not an induced matching of the product graph")]
    NotInducedMatching,
    #[error("arcs do not form a split orientation")]
    NotSplit,
    #[error("cannot take {requested} arcs: {leaves} leaves, {available} arcs available")]
    ArcCount { requested: usize, leaves: usize, available: usize },
}

/// A gadgetized core as an instance: tree edges valued 1, added edges 0.
pub fn gadget_instance(core: &SimpleGraph, g: &GadgetizedCore) -> Instance {
    let edges = core
        .edges()
        .iter()
        .map(|&(a, b)| (a, b, Value::one()))
        .chain(g.zero_edges.iter().map(|&(a, b)| (a, b, Value::zero())));
    Instance::new(core.n(), edges).expect("added 0-edges join vertices at distance 2")
}

/// Smallest tree on at most `max_n` vertices whose maximum leafed split
/// orientation is smaller than its maximum split orientation, with both sizes.
pub fn find_leafed_gap(max_n: usize) -> Option<(SimpleGraph, usize, usize)> {
    for n in 2..=max_n {
        for t in labeled_trees(n) {
            if !t.is_core() {
                continue;
            }
            let leafed = max_leafed_split_orientation(&t).ok()?.len();
            let (mim, _) = max_induced_matching_bf(&t).ok()?;
            if leafed < 2 * mim {
                return Some((t, leafed, 2 * mim));
            }
        }
    }
    None
}
