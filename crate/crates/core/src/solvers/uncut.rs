use std::collections::VecDeque;

use super::SolverError;
use crate::model::{EdgeId, Instance, VertexId};

/// Two-coloring; `side[v]` is false for the side holding the smallest vertex
/// of each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

impl Bipartition {
    pub fn part(&self, s: bool) -> Vec<VertexId> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UncutClassification {
    Bipartite(Bipartition),
    OneEdge(EdgeId, Bipartition),
    MoreThanOne,
}

impl UncutClassification {
    pub fn label(&self) -> &'static str {
        match self {
            UncutClassification::Bipartite(_) => "bipartite",
            UncutClassification::OneEdge(..) => "one-edge",
            UncutClassification::MoreThanOne => "more-than-one",
        }
    }
}

enum Coloring {
    Ok(Bipartition),
    /// Monochromatic edge plus BFS parent links.
    Conflict { edge: EdgeId, parent: Vec<Option<(VertexId, EdgeId)>> },
}

fn two_color(inst: &Instance, skip: Option<EdgeId>) -> Coloring {
    let n = inst.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for &(y, e) in inst.neighbors(x) {
                if Some(e) == skip {
                    continue;
                }
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        parent[y] = Some((x, e));
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return Coloring::Conflict { edge: e, parent },
                    _ => {}
                }
            }
        }
    }
    Coloring::Ok(Bipartition { side: color.into_iter().map(|c| c.unwrap()).collect() })
}

/// Edges of the odd cycle closed by a monochromatic BFS edge.
fn odd_cycle(inst: &Instance, edge: EdgeId, parent: &[Option<(VertexId, EdgeId)>]) -> Vec<EdgeId> {
    let path = |mut v: VertexId| {
        let mut p = vec![(v, None)];
        while let Some((u, e)) = parent[v] {
            p.push((u, Some(e)));
            v = u;
        }
        p
    };
    let (a, b) = (path(inst.edge(edge).u), path(inst.edge(edge).v));
    // Strip the common tail (shared ancestors up to the root).
    let (mut i, mut j) = (a.len(), b.len());
    while i > 1 && j > 1 && a[i - 2].0 == b[j - 2].0 {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<EdgeId> = a[1..i].iter().chain(b[1..j].iter()).filter_map(|&(_, e)| e).collect();
    cycle.push(edge);
    cycle
}

/// Classifies the minimum number of edges whose removal leaves a bipartite
/// graph as 0, 1 or more. An edge whose removal works lies on every odd
/// cycle, so only the edges of one odd cycle need testing.
pub fn detect_min_uncut_le1(inst: &Instance) -> UncutClassification {
    let (edge, parent) = match two_color(inst, None) {
        Coloring::Ok(b) => return UncutClassification::Bipartite(b),
        Coloring::Conflict { edge, parent } => (edge, parent),
    };
    let mut candidates = odd_cycle(inst, edge, &parent);
    candidates.sort_unstable();
    for e in candidates {
        if let Coloring::Ok(b) = two_color(inst, Some(e)) {
            return UncutClassification::OneEdge(e, b);
        }
    }
    UncutClassification::MoreThanOne
}

/// Splits the vertices so that `G[A]` holds only 1-edges and `G[B]` only
/// 0-edges, given an edge `e` whose removal leaves a bipartite graph.
/// The side containing `e` goes to `A` when `e` is a 1-edge and to `B` otherwise.
pub fn derive_ab_partition(inst: &Instance, e: EdgeId) -> Result<(Vec<VertexId>, Vec<VertexId>), SolverError> {
    if e >= inst.m() {
        return Err(SolverError::Precondition(format!("no edge {e}")));
    }
    let b = match two_color(inst, Some(e)) {
        Coloring::Ok(b) => b,
        Coloring::Conflict { .. } => {
            return Err(SolverError::Precondition(format!("removing edge {e} does not leave a bipartite graph")))
        }
    };
    let edge = inst.edge(e);
    if b.side[edge.u] != b.side[edge.v] {
        return Err(SolverError::Precondition("instance is already bipartite".into()));
    }
    let x = b.side[edge.u];
    let one = if inst.is_one(e) {
        true
    } else if inst.is_zero(e) {
        false
    } else {
        return Err(SolverError::NotBinary);
    };
    let (a_side, b_side) = if one { (x, !x) } else { (!x, x) };
    Ok((b.part(a_side), b.part(b_side)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, ones: &[usize]) -> Instance {
        let edges: Vec<_> = (0..n)
            .map(|i| (i, (i + 1) % n, u8::from(ones.contains(&i))))
            .collect();
        Instance::binary(n, &edges).unwrap()
    }

    #[test]
    fn classifications() {
        assert!(matches!(detect_min_uncut_le1(&cycle(6, &[])), UncutClassification::Bipartite(_)));
        match detect_min_uncut_le1(&cycle(5, &[])) {
            UncutClassification::OneEdge(e, _) => assert_eq!(e, 0),
            c => panic!("{c:?}"),
        }
        let two = Instance::binary(6, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 0), (4, 5, 0), (3, 5, 0)]).unwrap();
        assert_eq!(detect_min_uncut_le1(&two), UncutClassification::MoreThanOne);
    }

    #[test]
    fn ab_partition() {
        // C5 edges in canonical order: (0,1) (0,4) (1,2) (2,3) (3,4); 1-edge is (0,1).
        let c5 = cycle(5, &[0]);
        let (a, b) = derive_ab_partition(&c5, 0).unwrap();
        assert!(a.contains(&0) && a.contains(&1));
        assert_eq!(a.len() + b.len(), 5);

        let z = cycle(5, &[]);
        let (_, b) = derive_ab_partition(&z, 0).unwrap();
        assert!(b.contains(&0) && b.contains(&1));

        assert!(derive_ab_partition(&cycle(6, &[]), 0).is_err());
    }
}
