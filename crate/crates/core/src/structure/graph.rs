use std::collections::VecDeque;

use super::StructureError;
use crate::model::{Instance, VertexId};

/// Unweighted simple graph with sorted adjacency lists and edges `(u, v)`,
/// `u < v`, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, StructureError> {
        let mut canon: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(StructureError::BadEdge(a, b));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(StructureError::BadEdge(canon[0].0, canon[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(SimpleGraph { n, edges: canon, adj })
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    /// The 1-edge subgraph induced on one 1-component of an instance,
    /// relabeled to `0..k` in ascending order of the original ids.
    pub fn from_one_component(inst: &Instance, vertices: &[VertexId]) -> Self {
        let index = |x: VertexId| vertices.binary_search(&x).expect("vertex in component");
        let mut edges = Vec::new();
        for &x in vertices {
            for y in inst.one_neighbors(x) {
                if x < y {
                    edges.push((index(x), index(y)));
                }
            }
        }
        SimpleGraph::new(vertices.len(), &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.adj[v].len() == 1
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn distances(&self, s: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.distances(0).iter().all(Option::is_some)
    }

    /// A tree on at least two vertices in which no vertex has two leaf neighbors.
    pub fn is_core(&self) -> bool {
        self.is_tree()
            && self.n >= 2
            && (0..self.n).all(|v| self.adj[v].iter().filter(|&&y| self.is_leaf(y)).count() < 2)
    }
}

/// All labeled trees on `n >= 2` vertices, decoded from Prüfer sequences in
/// lexicographic order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = SimpleGraph> {
    assert!(n >= 2);
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(n, &seq)
    })
}

fn prufer_decode(n: usize, seq: &[usize]) -> SimpleGraph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    SimpleGraph::new(n, &edges).unwrap()
}

/// Star on `k` leaves with every edge subdivided once: `2k + 1` vertices.
pub fn subdivided_star(k: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..k {
        let mid = 1 + 2 * i;
        edges.push((0, mid));
        edges.push((mid, mid + 1));
    }
    SimpleGraph::new(2 * k + 1, &edges).unwrap()
}

/// Path `p_1 .. p_{3m-1}` with one pendant leaf at every `p_{3i-2}` and
/// `p_{3i-1}`: a core on `5m - 1` vertices whose induced matchings have at
/// most `m` edges.
pub fn pendant_path(m: usize) -> SimpleGraph {
    assert!(m >= 1);
    let len = 3 * m - 1;
    let mut edges: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    let mut next = len;
    for i in 1..=m {
        for p in [3 * i - 2, 3 * i - 1] {
            edges.push((p - 1, next));
            next += 1;
        }
    }
    SimpleGraph::new(next, &edges).unwrap()
}
