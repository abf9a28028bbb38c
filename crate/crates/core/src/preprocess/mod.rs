//! Answer-preserving reductions with a reversible trace.
//!
//! All reductions here assume a binary instance. Working vertex ids extend the
//! input ids: vertices created by a reduction get fresh ids past the input,
//! and the reduced instance is renumbered densely via `vertex_map`.

mod lift;
mod reduce;
mod trace;
mod work;

pub use lift::lift_orientation;
pub use trace::{GadgetEdge, ReductionTrace, Step};

use crate::model::{Instance, OrientationError, Witness};
use work::WorkGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PreprocessError {
    #[error("instance is not binary")]
    NotBinary,
    #[error("1-component {vertices:?} contains a cycle")]
    CyclicComponent { vertices: Vec<usize> },
    #[error("trace does not match the instance")]
    TraceMismatch,
    #[error("trace line {line}: {message}")]
    TraceSyntax { line: usize, message: String },
    #[error("orientation of the reduced instance is not EFX ({} witnesses)", .0.len())]
    ReducedNotEfx(Vec<Witness>),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

fn start(inst: &Instance) -> Result<WorkGraph, PreprocessError> {
    if !inst.is_binary() {
        return Err(PreprocessError::NotBinary);
    }
    Ok(WorkGraph::from_instance(inst))
}

fn finish(g: WorkGraph, input_n: usize, steps: Vec<trace::Step>) -> (Instance, ReductionTrace) {
    let (inst, vertex_map) = g.to_instance();
    (inst, ReductionTrace { input_n, steps, vertex_map })
}

/// Removes vertices without 1-edges and 1-components that contain a cycle.
pub fn preprocess_basic(inst: &Instance) -> Result<(Instance, ReductionTrace), PreprocessError> {
    let mut g = start(inst)?;
    let mut steps = Vec::new();
    reduce::basic_phase(&mut g, &mut steps);
    Ok(finish(g, inst.n(), steps))
}

/// Replaces every 0-star of size at least 2 by a binary tree gadget, until the
/// 0-edges form a matching. Enlarges the instance.
pub fn reduce_zero_degrees(inst: &Instance) -> Result<(Instance, ReductionTrace), PreprocessError> {
    let mut g = start(inst)?;
    let mut steps = Vec::new();
    reduce::zero_tree_phase(&mut g, &mut steps);
    Ok(finish(g, inst.n(), steps))
}

/// Merges twin leaves until every 1-tree on at least 4 vertices is a core.
/// Fails if some 1-component has a cycle.
pub fn make_cores(inst: &Instance) -> Result<(Instance, ReductionTrace), PreprocessError> {
    let mut g = start(inst)?;
    let mut steps = Vec::new();
    reduce::core_phase(&mut g, &mut steps)?;
    Ok(finish(g, inst.n(), steps))
}

/// Basic reductions and core merging to a joint fixed point.
pub fn preprocess_full(inst: &Instance) -> Result<(Instance, ReductionTrace), PreprocessError> {
    let mut g = start(inst)?;
    let mut steps = Vec::new();
    loop {
        let a = reduce::basic_phase(&mut g, &mut steps);
        let b = reduce::core_phase(&mut g, &mut steps)?;
        if !a && !b {
            break;
        }
    }
    Ok(finish(g, inst.n(), steps))
}

/// True iff no vertex of a 1-tree on at least 4 vertices has two leaf
/// 1-neighbors.
pub fn cores_hold(inst: &Instance) -> bool {
    let forest = crate::model::one_forest(inst);
    let ok = forest.trees().filter(|t| t.vertices.len() >= 4).all(|t| {
        t.vertices.iter().all(|&x| {
            inst.one_neighbors(x).filter(|&y| inst.one_degree(y) == 1).count() < 2
        })
    });
    ok
}
