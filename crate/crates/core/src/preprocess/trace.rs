use serde::{Deserialize, Serialize};

use super::work::WorkGraph;
use super::PreprocessError;
use crate::model::Instance;

/// One gadget edge `a -> b` of the auxiliary tree, realized as the 1-edge
/// `a–w` and the 0-edge `w–b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetEdge {
    pub parent: usize,
    pub mid: usize,
    pub child: usize,
}

/// One reduction step over working vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    DropIsolated {
        vertex: usize,
        zero_neighbors: Vec<usize>,
    },
    DropCyclicComponent {
        vertices: Vec<usize>,
        /// Vertex sequence of a cycle; consecutive vertices (and last, first) are 1-adjacent.
        cycle: Vec<usize>,
        /// Spanning forest hanging off the cycle, as (parent, child).
        tree: Vec<(usize, usize)>,
        one_edges: Vec<(usize, usize)>,
        zero_edges: Vec<(usize, usize)>,
    },
    ZeroDegreeTree {
        center: usize,
        apex: usize,
        internal: Vec<usize>,
        gadget: Vec<GadgetEdge>,
        leaves: Vec<usize>,
    },
    LeafMerge {
        kept: usize,
        removed: usize,
        parent: usize,
        sibling: usize,
        /// 0-neighbors of the removed leaf, ascending.
        zero_neighbors: Vec<usize>,
        /// Targets `t` of 0-edges `kept–t` created by the merge.
        added: Vec<usize>,
    },
}

/// Graph edits performed by a step, as (a, b, is_one).
pub(crate) struct Edits {
    pub created: Vec<usize>,
    pub killed: Vec<usize>,
    pub removed: Vec<(usize, usize, bool)>,
    pub added: Vec<(usize, usize, bool)>,
}

impl Step {
    pub(crate) fn edits(&self) -> Edits {
        match self {
            Step::DropIsolated { vertex, zero_neighbors } => Edits {
                created: vec![],
                killed: vec![*vertex],
                removed: zero_neighbors.iter().map(|&y| (*vertex, y, false)).collect(),
                added: vec![],
            },
            Step::DropCyclicComponent { vertices, one_edges, zero_edges, .. } => Edits {
                created: vec![],
                killed: vertices.clone(),
                removed: one_edges
                    .iter()
                    .map(|&(a, b)| (a, b, true))
                    .chain(zero_edges.iter().map(|&(a, b)| (a, b, false)))
                    .collect(),
                added: vec![],
            },
            Step::ZeroDegreeTree { center, apex, internal, gadget, leaves } => {
                let mut created = vec![*apex];
                created.extend(internal);
                created.extend(gadget.iter().map(|g| g.mid));
                let mut added = vec![(*center, *apex, false)];
                for g in gadget {
                    added.push((g.parent, g.mid, true));
                    added.push((g.mid, g.child, false));
                }
                Edits {
                    created,
                    killed: vec![],
                    removed: leaves.iter().map(|&v| (*center, v, false)).collect(),
                    added,
                }
            }
            Step::LeafMerge { kept, removed, parent, zero_neighbors, added, .. } => {
                let mut rem = vec![(*removed, *parent, true)];
                rem.extend(zero_neighbors.iter().map(|&y| (*removed, y, false)));
                Edits {
                    created: vec![],
                    killed: vec![*removed],
                    removed: rem,
                    added: added.iter().map(|&t| (*kept, t, false)).collect(),
                }
            }
        }
    }

    pub(crate) fn apply(&self, g: &mut WorkGraph) {
        let ed = self.edits();
        for &x in &ed.created {
            g.ensure_vertex(x);
        }
        for &(a, b, _) in &ed.removed {
            g.remove_edge(a, b);
        }
        for &x in &ed.killed {
            g.kill(x);
        }
        for &(a, b, one) in &ed.added {
            g.add_edge(a, b, one);
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Step::DropIsolated { .. } => "drop_isolated",
            Step::DropCyclicComponent { .. } => "drop_cyclic_component",
            Step::ZeroDegreeTree { .. } => "zero_degree_tree",
            Step::LeafMerge { .. } => "leaf_merge",
        }
    }
}

/// Append-only log of reduction steps plus the id map of the reduced instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub input_n: usize,
    pub steps: Vec<Step>,
    /// Reduced vertex id -> working id.
    pub vertex_map: Vec<usize>,
}

impl ReductionTrace {
    pub fn identity(n: usize) -> Self {
        ReductionTrace { input_n: n, steps: Vec::new(), vertex_map: (0..n).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies every step to `original` and returns the reduced instance.
    pub fn replay(&self, original: &Instance) -> Result<Instance, PreprocessError> {
        if original.n() != self.input_n {
            return Err(PreprocessError::TraceMismatch);
        }
        let mut g = WorkGraph::from_instance(original);
        for s in &self.steps {
            s.apply(&mut g);
        }
        let (inst, map) = g.to_instance();
        if map != self.vertex_map {
            return Err(PreprocessError::TraceMismatch);
        }
        Ok(inst)
    }

    /// One JSON object per line: an `input_n` header, the tagged steps, and a
    /// `vertex_map` footer.
    pub fn to_text(&self) -> String {
        let mut out = serde_json::json!({ "input_n": self.input_n }).to_string();
        out.push('\n');
        for s in &self.steps {
            out.push_str(&serde_json::to_string(s).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::json!({ "vertex_map": self.vertex_map }).to_string());
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<Self, PreprocessError> {
        let mut input_n = None;
        let mut vertex_map = None;
        let mut steps = Vec::new();
        for (i, l) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let bad = |message: String| PreprocessError::TraceSyntax { line: i + 1, message };
            let v: serde_json::Value = serde_json::from_str(l).map_err(|e| bad(e.to_string()))?;
            if v.get("step").is_some() {
                steps.push(serde_json::from_value(v).map_err(|e| bad(e.to_string()))?);
            } else if let Some(n) = v.get("input_n") {
                input_n = Some(serde_json::from_value(n.clone()).map_err(|e| bad(e.to_string()))?);
            } else if let Some(m) = v.get("vertex_map") {
                vertex_map = Some(serde_json::from_value(m.clone()).map_err(|e| bad(e.to_string()))?);
            } else {
                return Err(bad("unrecognized line".into()));
            }
        }
        match (input_n, vertex_map) {
            (Some(input_n), Some(vertex_map)) => Ok(ReductionTrace { input_n, steps, vertex_map }),
            _ => Err(PreprocessError::TraceSyntax { line: 0, message: "missing header or footer".into() }),
        }
    }
}
