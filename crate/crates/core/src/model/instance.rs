use std::collections::BTreeMap;

use super::value::Value;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Value class of an edge, cached at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Zero,
    One,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub value: Value,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

/// Simple undirected graph with one exact value per edge.
///
/// Edges are stored with `u < v`, sorted by `(u, v)`; the position in that
/// order is the edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    edges: Vec<Edge>,
    class: Vec<EdgeClass>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    binary: bool,
}

impl Instance {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Value)>,
    {
        let mut map: BTreeMap<(VertexId, VertexId), Value> = BTreeMap::new();
        for (a, b, w) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(InstanceError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(InstanceError::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if map.insert(key, w).is_some() {
                return Err(InstanceError::DuplicateEdge(key.0, key.1));
            }
        }
        let edges: Vec<Edge> = map
            .into_iter()
            .map(|((u, v), value)| Edge { u, v, value })
            .collect();
        Ok(Self::from_sorted(n, edges))
    }

    /// Convenience constructor for binary instances; `w` is 0 or 1.
    pub fn binary(n: usize, edges: &[(VertexId, VertexId, u8)]) -> Result<Self, InstanceError> {
        Self::new(
            n,
            edges.iter().map(|&(u, v, w)| {
                let value = if w == 0 { Value::zero() } else { Value::integer(w as u64) };
                (u, v, value)
            }),
        )
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut class = Vec::with_capacity(edges.len());
        for (id, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
            class.push(if e.value.is_zero() {
                EdgeClass::Zero
            } else if e.value.is_one() {
                EdgeClass::One
            } else {
                EdgeClass::Other
            });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let binary = class.iter().all(|c| *c != EdgeClass::Other);
        Instance { n, edges, class, adj, binary }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn class(&self, e: EdgeId) -> EdgeClass {
        self.class[e]
    }

    pub fn is_one(&self, e: EdgeId) -> bool {
        self.class[e] == EdgeClass::One
    }

    pub fn is_zero(&self, e: EdgeId) -> bool {
        self.class[e] == EdgeClass::Zero
    }

    pub fn is_binary(&self) -> bool {
        self.binary
    }

    /// Neighbors of `v` with connecting edge ids, sorted by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn one_degree(&self, v: VertexId) -> usize {
        self.adj[v].iter().filter(|&&(_, e)| self.is_one(e)).count()
    }

    pub fn zero_degree(&self, v: VertexId) -> usize {
        self.adj[v].iter().filter(|&&(_, e)| self.is_zero(e)).count()
    }

    pub fn one_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v]
            .iter()
            .filter(move |&&(_, e)| self.is_one(e))
            .map(|&(x, _)| x)
    }

    pub fn zero_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v]
            .iter()
            .filter(move |&&(_, e)| self.is_zero(e))
            .map(|&(x, _)| x)
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let list = self.adj.get(a)?;
        list.binary_search_by_key(&b, |&(x, _)| x)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn ones(&self) -> usize {
        self.class.iter().filter(|c| **c == EdgeClass::One).count()
    }

    pub fn zeros(&self) -> usize {
        self.class.iter().filter(|c| **c == EdgeClass::Zero).count()
    }
}
