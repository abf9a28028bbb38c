use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::trace::{ReductionTrace, Step};
use super::PreprocessError;
use crate::model::{verify_efx, Instance, Orientation};

type Key = (usize, usize);

fn key(a: usize, b: usize) -> Key {
    (a.min(b), a.max(b))
}

/// Directed edges of the current working graph during the backward pass.
struct State {
    dir: BTreeMap<Key, (usize, bool)>,
    inc: HashMap<usize, BTreeSet<usize>>,
}

impl State {
    fn insert(&mut self, a: usize, b: usize, one: bool, receiver: usize) {
        self.dir.insert(key(a, b), (receiver, one));
        self.inc.entry(a).or_default().insert(b);
        self.inc.entry(b).or_default().insert(a);
    }

    fn remove(&mut self, a: usize, b: usize) {
        self.dir.remove(&key(a, b));
        if let Some(s) = self.inc.get_mut(&a) {
            s.remove(&b);
        }
        if let Some(s) = self.inc.get_mut(&b) {
            s.remove(&a);
        }
    }

    fn receiver(&self, a: usize, b: usize) -> usize {
        self.dir[&key(a, b)].0
    }

    fn holds_one(&self, x: usize) -> bool {
        self.inc.get(&x).is_some_and(|nb| {
            nb.iter().any(|&y| {
                let (r, one) = self.dir[&key(x, y)];
                one && r == x
            })
        })
    }
}

/// Turns an EFX orientation of the reduced instance into one of the input
/// instance by undoing the steps in reverse order.
pub fn lift_orientation(
    trace: &ReductionTrace,
    reduced: &Instance,
    o: &Orientation,
) -> Result<Orientation, PreprocessError> {
    if reduced.n() != trace.vertex_map.len() {
        return Err(PreprocessError::TraceMismatch);
    }
    let report = verify_efx(reduced, o)?;
    if !report.ok {
        return Err(PreprocessError::ReducedNotEfx(report.witnesses));
    }
    let mut st = State { dir: BTreeMap::new(), inc: HashMap::new() };
    for (id, e) in reduced.edges().iter().enumerate() {
        let m = &trace.vertex_map;
        st.insert(m[e.u], m[e.v], reduced.is_one(id), m[o.receiver(id)]);
    }

    for step in trace.steps.iter().rev() {
        let edits = step.edits();
        let mut directed: Vec<(usize, usize, bool, usize)> = Vec::new();
        match step {
            Step::DropIsolated { vertex, zero_neighbors } => {
                for &y in zero_neighbors {
                    directed.push((*vertex, y, false, *vertex));
                }
            }
            Step::DropCyclicComponent { vertices, cycle, tree, one_edges, zero_edges } => {
                let inside: BTreeSet<usize> = vertices.iter().copied().collect();
                let mut fixed: BTreeMap<Key, usize> = BTreeMap::new();
                for i in 0..cycle.len() {
                    let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    fixed.insert(key(a, b), b);
                }
                for &(p, c) in tree {
                    fixed.insert(key(p, c), c);
                }
                for &(a, b) in one_edges {
                    let r = fixed.get(&key(a, b)).copied().unwrap_or(a.max(b));
                    directed.push((a, b, true, r));
                }
                for &(a, b) in zero_edges {
                    let r = match (inside.contains(&a), inside.contains(&b)) {
                        (true, true) => a.max(b),
                        (true, false) => a,
                        _ => b,
                    };
                    directed.push((a, b, false, r));
                }
            }
            Step::ZeroDegreeTree { center, apex, leaves, .. } => {
                let toward_center = st.receiver(*center, *apex) == *center;
                for &v in leaves {
                    let r = if toward_center { *center } else { v };
                    directed.push((*center, v, false, r));
                }
            }
            Step::LeafMerge { removed, parent, zero_neighbors, .. } => {
                // The removed leaf always takes its 1-edge. If the parent holds
                // a 1-item it cannot envy, so the leaf may take its 0-edges too;
                // otherwise the leaf keeps a single item.
                let keep_zeros = st.holds_one(*parent);
                directed.push((*removed, *parent, true, *removed));
                for &y in zero_neighbors {
                    let r = if keep_zeros { *removed } else { y };
                    directed.push((*removed, y, false, r));
                }
            }
        }
        for &(a, b, _) in &edits.added {
            st.remove(a, b);
        }
        for (a, b, one, r) in directed {
            st.insert(a, b, one, r);
        }
    }

    let receivers: Vec<usize> = st.dir.values().map(|&(r, _)| r).collect();
    debug_assert!(st.dir.keys().all(|&(_, b)| b < trace.input_n));
    Ok(Orientation::from_receivers_unchecked(receivers))
}
