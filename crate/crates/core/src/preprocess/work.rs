use std::collections::BTreeMap;

use crate::model::{Instance, Value};

/// Mutable binary graph over working ids. Original vertices keep their ids;
/// vertices created by reductions are appended.
#[derive(Clone, Debug)]
pub(crate) struct WorkGraph {
    adj: Vec<BTreeMap<usize, bool>>,
    alive: Vec<bool>,
}

impl WorkGraph {
    pub fn from_instance(inst: &Instance) -> Self {
        let mut adj = vec![BTreeMap::new(); inst.n()];
        for (id, e) in inst.edges().iter().enumerate() {
            let one = inst.is_one(id);
            adj[e.u].insert(e.v, one);
            adj[e.v].insert(e.u, one);
        }
        WorkGraph { alive: vec![true; inst.n()], adj }
    }

    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn alive(&self, x: usize) -> bool {
        self.alive[x]
    }

    pub fn alive_vertices(&self) -> Vec<usize> {
        (0..self.adj.len()).filter(|&x| self.alive[x]).collect()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeMap::new());
        self.alive.push(true);
        self.adj.len() - 1
    }

    /// Makes sure ids up to `x` exist; used when replaying recorded steps.
    pub fn ensure_vertex(&mut self, x: usize) {
        while self.adj.len() <= x {
            self.add_vertex();
        }
    }

    pub fn kill(&mut self, x: usize) {
        debug_assert!(self.adj[x].is_empty());
        self.alive[x] = false;
    }

    pub fn add_edge(&mut self, a: usize, b: usize, one: bool) {
        debug_assert!(a != b && self.alive[a] && self.alive[b]);
        self.adj[a].insert(b, one);
        self.adj[b].insert(a, one);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].remove(&b);
        self.adj[b].remove(&a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains_key(&b)
    }

    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.adj[x].iter().map(|(&y, &one)| (y, one))
    }

    pub fn one_neighbors(&self, x: usize) -> Vec<usize> {
        self.neighbors(x).filter(|&(_, one)| one).map(|(y, _)| y).collect()
    }

    pub fn zero_neighbors(&self, x: usize) -> Vec<usize> {
        self.neighbors(x).filter(|&(_, one)| !one).map(|(y, _)| y).collect()
    }

    pub fn one_degree(&self, x: usize) -> usize {
        self.adj[x].values().filter(|&&one| one).count()
    }

    /// Components of the 1-edge subgraph over alive vertices of positive
    /// 1-degree, each sorted, ordered by smallest vertex.
    pub fn one_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in 0..self.adj.len() {
            if !self.alive[s] || seen[s] || self.one_degree(s) == 0 {
                continue;
            }
            seen[s] = true;
            let mut comp = Vec::new();
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                comp.push(x);
                for y in self.one_neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn one_edge_count(&self, comp: &[usize]) -> usize {
        comp.iter().map(|&x| self.one_degree(x)).sum::<usize>() / 2
    }

    /// Compacts alive vertices in ascending order. Returns the instance and
    /// the reduced-to-working id map.
    pub fn to_instance(&self) -> (Instance, Vec<usize>) {
        let map = self.alive_vertices();
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &x) in map.iter().enumerate() {
            index[x] = i;
        }
        let mut edges = Vec::new();
        for &x in &map {
            for (y, one) in self.neighbors(x) {
                if x < y {
                    let w = if one { Value::one() } else { Value::zero() };
                    edges.push((index[x], index[y], w));
                }
            }
        }
        let inst = Instance::new(map.len(), edges).expect("work graph is simple");
        (inst, map)
    }
}
