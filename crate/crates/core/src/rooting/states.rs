use std::collections::BTreeSet;

use super::{acyclic_forest, RootingError};
use crate::model::{Instance, VertexId};

/// A root candidate and its 1-neighborhood (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    pub root: VertexId,
    pub neighborhood: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStates {
    pub id: usize,
    pub vertices: Vec<VertexId>,
    /// Ascending by root.
    pub states: Vec<State>,
    /// `(dominated, dominator)`, ascending by dominated vertex.
    pub dominated: Vec<(VertexId, VertexId)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateTable {
    pub trees: Vec<TreeStates>,
    /// Tree id per vertex; `None` for vertices without 1-edges.
    pub tree_of: Vec<Option<usize>>,
}

impl StateTable {
    pub fn state_counts(&self) -> Vec<usize> {
        self.trees.iter().map(|t| t.states.len()).collect()
    }

    /// Product of state counts, saturating.
    pub fn combinations(&self) -> u128 {
        self.trees
            .iter()
            .fold(1u128, |acc, t| acc.saturating_mul(t.states.len() as u128))
    }
}

/// `u` dominates `v` when `N1(u)` is a proper subset of `N1(v)`, or the two
/// are equal and `u < v`. Rooting at a dominator never hurts, so only
/// undominated vertices are kept as states.
pub fn enumerate_states(inst: &Instance) -> Result<StateTable, RootingError> {
    let forest = acyclic_forest(inst)?;
    let nbhd: Vec<Vec<VertexId>> = (0..inst.n()).map(|x| inst.one_neighbors(x).collect()).collect();
    let subset = |a: &[VertexId], b: &[VertexId]| {
        let mut j = 0;
        a.iter().all(|x| {
            while j < b.len() && b[j] < *x {
                j += 1;
            }
            j < b.len() && b[j] == *x
        })
    };

    let mut trees = Vec::with_capacity(forest.components.len());
    for (id, comp) in forest.components.iter().enumerate() {
        let mut states = Vec::new();
        let mut dominated = Vec::new();
        for &v in &comp.vertices {
            // A dominator shares a neighbor with v, so it is at distance 2.
            let candidates: BTreeSet<VertexId> = nbhd[v]
                .iter()
                .flat_map(|&x| nbhd[x].iter().copied())
                .filter(|&u| u != v)
                .collect();
            let by = candidates.into_iter().find(|&u| {
                let (nu, nv) = (&nbhd[u], &nbhd[v]);
                subset(nu, nv) && (nu.len() < nv.len() || u < v)
            });
            match by {
                Some(u) => dominated.push((v, u)),
                None => states.push(State { root: v, neighborhood: nbhd[v].clone() }),
            }
        }
        trees.push(TreeStates { id, vertices: comp.vertices.clone(), states, dominated });
    }
    Ok(StateTable { trees, tree_of: forest.component_of })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Instance {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1u8)).collect();
        Instance::binary(n, &edges).unwrap()
    }

    fn roots(inst: &Instance) -> Vec<VertexId> {
        enumerate_states(inst).unwrap().trees[0].states.iter().map(|s| s.root).collect()
    }

    #[test]
    fn path_states() {
        assert_eq!(roots(&path(2)), vec![0, 1]);
        assert_eq!(roots(&path(3)), vec![0, 1]);
        assert_eq!(roots(&path(4)), vec![0, 3]);
        assert_eq!(roots(&path(5)), vec![0, 1, 3, 4]);
    }

    #[test]
    fn dominators_recorded() {
        let t = enumerate_states(&path(5)).unwrap();
        assert_eq!(t.trees[0].dominated, vec![(2, 0)]);
        assert_eq!(t.combinations(), 4);
    }

    #[test]
    fn isolated_vertices_have_no_tree() {
        let inst = Instance::binary(3, &[(0, 1, 1), (1, 2, 0)]).unwrap();
        let t = enumerate_states(&inst).unwrap();
        assert_eq!(t.tree_of, vec![Some(0), Some(0), None]);
    }
}
