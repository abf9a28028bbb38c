//! Rootings of the 1-forest and the nice orientations they induce.
//!
//! Rooting tree `T_i` at `r_i` orients its 1-edges away from `r_i`. Every
//! non-root then holds exactly one 1-item and only the root's 1-neighbors are
//! exposed to envy, so the rooting is feasible iff no 0-edge joins two of them.

mod states;

pub use states::{enumerate_states, State, StateTable, TreeStates};

use std::collections::VecDeque;

use crate::model::{one_forest, EdgeId, Instance, OneForest, Orientation, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootingError {
    #[error("1-component containing vertex {0} has a cycle")]
    CyclicComponent(VertexId),
    #[error("rooting has {found} roots for {expected} trees")]
    TreeCount { expected: usize, found: usize },
    #[error("root {root} is not in tree {tree}")]
    RootNotInTree { tree: usize, root: VertexId },
    #[error("rooting is infeasible: 0-edge {0} joins two root neighbors")]
    Infeasible(EdgeId),
}

/// Chosen root per 1-tree, trees ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rooting {
    pub roots: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    /// Smallest-id 0-edge with both endpoints in the root neighborhoods.
    Conflict { edge: EdgeId, a: VertexId, b: VertexId },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

pub(crate) fn acyclic_forest(inst: &Instance) -> Result<OneForest, RootingError> {
    let forest = one_forest(inst);
    if let Some(c) = forest.components.iter().find(|c| c.cyclic) {
        return Err(RootingError::CyclicComponent(c.vertices[0]));
    }
    Ok(forest)
}

/// Marks `R`, the union of the roots' 1-neighborhoods.
fn root_neighbors(inst: &Instance, forest: &OneForest, r: &Rooting) -> Result<Vec<bool>, RootingError> {
    if r.roots.len() != forest.components.len() {
        return Err(RootingError::TreeCount { expected: forest.components.len(), found: r.roots.len() });
    }
    let mut in_r = vec![false; inst.n()];
    for (tree, &root) in r.roots.iter().enumerate() {
        if root >= inst.n() || forest.component_of[root] != Some(tree) {
            return Err(RootingError::RootNotInTree { tree, root });
        }
        for y in inst.one_neighbors(root) {
            in_r[y] = true;
        }
    }
    Ok(in_r)
}

fn first_conflict(inst: &Instance, in_r: &[bool]) -> Option<EdgeId> {
    (0..inst.m()).find(|&e| {
        let edge = inst.edge(e);
        inst.is_zero(e) && in_r[edge.u] && in_r[edge.v]
    })
}

pub fn rooting_feasible(inst: &Instance, r: &Rooting) -> Result<Feasibility, RootingError> {
    let forest = acyclic_forest(inst)?;
    let in_r = root_neighbors(inst, &forest, r)?;
    Ok(match first_conflict(inst, &in_r) {
        None => Feasibility::Feasible,
        Some(edge) => Feasibility::Conflict { edge, a: inst.edge(edge).u, b: inst.edge(edge).v },
    })
}

/// Nice orientation of a feasible rooting: 1-edges away from the roots,
/// 0-edges away from root neighbors, every other 0-edge toward its larger end.
pub fn rooting_to_orientation(inst: &Instance, r: &Rooting) -> Result<Orientation, RootingError> {
    let forest = acyclic_forest(inst)?;
    let in_r = root_neighbors(inst, &forest, r)?;
    if let Some(e) = first_conflict(inst, &in_r) {
        return Err(RootingError::Infeasible(e));
    }
    let mut receiver = vec![usize::MAX; inst.m()];
    let mut seen = vec![false; inst.n()];
    for &root in &r.roots {
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in inst.neighbors(x) {
                if inst.is_one(e) && !seen[y] {
                    seen[y] = true;
                    receiver[e] = y;
                    queue.push_back(y);
                }
            }
        }
    }
    for (e, edge) in inst.edges().iter().enumerate() {
        if inst.is_one(e) {
            continue;
        }
        receiver[e] = if in_r[edge.u] {
            edge.v
        } else if in_r[edge.v] {
            edge.u
        } else {
            edge.v
        };
    }
    debug_assert!(receiver.iter().all(|&x| x != usize::MAX));
    Ok(Orientation::from_receivers_unchecked(receiver))
}
