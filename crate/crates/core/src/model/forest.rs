use super::instance::{EdgeId, Instance, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneComponent {
    /// Sorted ascending.
    pub vertices: Vec<VertexId>,
    /// 1-edges of the component, ascending.
    pub edges: Vec<EdgeId>,
    pub cyclic: bool,
}

impl OneComponent {
    pub fn is_tree(&self) -> bool {
        !self.cyclic
    }
}

/// Components of the subgraph of 1-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForest {
    /// Ordered by smallest vertex.
    pub components: Vec<OneComponent>,
    /// Vertices with no incident 1-edge.
    pub isolated: Vec<VertexId>,
    pub component_of: Vec<Option<usize>>,
}

impl OneForest {
    pub fn trees(&self) -> impl Iterator<Item = &OneComponent> {
        self.components.iter().filter(|c| !c.cyclic)
    }

    pub fn has_cycle(&self) -> bool {
        self.components.iter().any(|c| c.cyclic)
    }
}

pub fn one_forest(inst: &Instance) -> OneForest {
    let n = inst.n();
    let mut component_of = vec![None; n];
    let mut components = Vec::new();
    let mut isolated = Vec::new();
    for s in 0..n {
        if component_of[s].is_some() {
            continue;
        }
        if inst.one_degree(s) == 0 {
            isolated.push(s);
            continue;
        }
        let id = components.len();
        component_of[s] = Some(id);
        let mut stack = vec![s];
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        while let Some(x) = stack.pop() {
            vertices.push(x);
            for &(y, e) in inst.neighbors(x) {
                if !inst.is_one(e) {
                    continue;
                }
                if x < y {
                    edges.push(e);
                }
                if component_of[y].is_none() {
                    component_of[y] = Some(id);
                    stack.push(y);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        let cyclic = edges.len() >= vertices.len();
        components.push(OneComponent { vertices, edges, cyclic });
    }
    OneForest { components, isolated, component_of }
}
