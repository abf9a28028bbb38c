use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::mapping::MisMapping;
use super::ReductionError;
use crate::model::{Instance, Value, VertexId};
use crate::structure::{gadget_instance, gadgetize_core, max_leafed_split_orientation, SimpleGraph};

/// Largest number of combinations [`mis_bruteforce`] will try.
pub const MIS_BF_CAP: u128 = 100_000_000;

/// A graph whose vertices are split into color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisInstance {
    graph: SimpleGraph,
    colors: Vec<Vec<VertexId>>,
}

impl MisInstance {
    /// Every vertex must appear in exactly one nonempty color class.
    pub fn new(graph: SimpleGraph, colors: Vec<Vec<VertexId>>) -> Result<Self, ReductionError> {
        let bad = |m: String| ReductionError::NotAPartition(m);
        let mut seen = vec![false; graph.n()];
        for (i, c) in colors.iter().enumerate() {
            if c.is_empty() {
                return Err(bad(format!("color {i} is empty")));
            }
            for &v in c {
                if v >= graph.n() {
                    return Err(ReductionError::Vertex(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(bad(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(bad(format!("vertex {v} has no color")));
        }
        Ok(MisInstance { graph, colors })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn colors(&self) -> &[Vec<VertexId>] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.colors.len()
    }

    pub fn is_solution(&self, set: &[VertexId]) -> bool {
        set.len() == self.k()
            && set.iter().zip(&self.colors).all(|(v, c)| c.contains(v))
            && set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.graph.has_edge(a, b)))
    }

    fn mapping(&self, selectors: Vec<Vec<Vec<VertexId>>>) -> MisMapping {
        MisMapping {
            n: self.graph.n(),
            edges: self.graph.edges().to_vec(),
            colors: self.colors.clone(),
            selectors,
        }
    }
}

/// The gadget on `a1 a2 b1 b2` that forces goodness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetChoice {
    /// 1-edges `a1a2` and `b1b2`.
    TwoOneEdges,
    /// 1-edges `a1b1`, `a2b2`; 0-edges `a1a2`, `b1b2`.
    CrossedOneEdgesWithZeros,
    /// 1-edges `a1b1`, `b2a2`; edge `b1b2` with the given value in `(0, 1)`.
    FractionalEdge(Value),
}

impl GadgetChoice {
    pub fn fractional_default() -> Self {
        GadgetChoice::FractionalEdge(Value::ratio(1, 2).expect("nonzero denominator"))
    }
}

/// Per color a 1-path with four vertices per member, per member a 1-path of
/// five auxiliary vertices, and four gadget vertices `a1 a2 b1 b2`, wired by
/// 0-edges so that EFX orientations correspond to multicolored independent
/// sets.
pub fn from_mis(mis: &MisInstance, gadget: &GadgetChoice) -> Result<(Instance, MisMapping), ReductionError> {
    if let GadgetChoice::FractionalEdge(m) = gadget {
        let r = m.as_rational();
        if r.is_zero() || *r >= num_rational::BigRational::one() {
            return Err(ReductionError::FractionOutOfRange);
        }
    }
    let n = mis.graph.n();
    // path[u] = u1, q[u] = x_{u,1}
    let mut path = vec![0; n];
    let mut next = 0;
    for c in &mis.colors {
        for &u in c {
            path[u] = next;
            next += 4;
        }
    }
    let mut q = vec![0; n];
    for &u in mis.colors.iter().flatten() {
        q[u] = next;
        next += 5;
    }
    let (a1, a2, b1, b2) = (next, next + 1, next + 2, next + 3);
    let total = next + 4;

    let mut edges: Vec<(VertexId, VertexId, Value)> = Vec::new();
    let mut zero = BTreeSet::new();
    let mut add_zero = |x: VertexId, y: VertexId| {
        zero.insert((x.min(y), x.max(y)));
    };
    for c in &mis.colors {
        let start = path[c[0]];
        for v in start..start + 4 * c.len() - 1 {
            edges.push((v, v + 1, Value::one()));
        }
    }
    for &u in mis.colors.iter().flatten() {
        for v in q[u]..q[u] + 4 {
            edges.push((v, v + 1, Value::one()));
        }
        let (u2, u3) = (path[u] + 1, path[u] + 2);
        let (x2, x3, x4) = (q[u] + 1, q[u] + 2, q[u] + 3);
        add_zero(u2, a1);
        add_zero(u2, a2);
        add_zero(x3, b1);
        add_zero(x3, b2);
        add_zero(u3, x2);
        for &v in mis.graph.neighbors(u) {
            add_zero(x4, path[v] + 2);
        }
    }
    match gadget {
        GadgetChoice::TwoOneEdges => {
            edges.push((a1, a2, Value::one()));
            edges.push((b1, b2, Value::one()));
        }
        GadgetChoice::CrossedOneEdgesWithZeros => {
            edges.push((a1, b1, Value::one()));
            edges.push((a2, b2, Value::one()));
            add_zero(a1, a2);
            add_zero(b1, b2);
        }
        GadgetChoice::FractionalEdge(m) => {
            edges.push((a1, b1, Value::one()));
            edges.push((a2, b2, Value::one()));
            edges.push((b1, b2, m.clone()));
        }
    }
    edges.extend(zero.into_iter().map(|(x, y)| (x, y, Value::zero())));
    let inst = Instance::new(total, edges)?;
    let selectors = mis
        .colors
        .iter()
        .map(|c| c.iter().map(|&u| vec![path[u] + 1, path[u] + 3]).collect())
        .collect();
    Ok((inst, mis.mapping(selectors)))
}

/// One gadgetized core per color, all arcs of its maximum leafed split
/// orientation kept as roots. The `j`-th root stands for the `j`-th member of
/// the color; surplus roots copy the 0-edges of the last member's private
/// vertex. Each MIS edge between different colors becomes a 0-edge between
/// the private vertices of the matching roots.
pub fn from_mis_big_cores(mis: &MisInstance, cores: &[SimpleGraph]) -> Result<(Instance, MisMapping), ReductionError> {
    if cores.len() != mis.k() {
        return Err(ReductionError::CoreCount { expected: mis.k(), found: cores.len() });
    }
    let mut offset = Vec::with_capacity(cores.len());
    let mut gadgets = Vec::with_capacity(cores.len());
    let mut total = 0;
    for (i, core) in cores.iter().enumerate() {
        let available = max_leafed_split_orientation(core)?.len();
        let needed = mis.colors[i].len();
        if available < needed {
            return Err(ReductionError::CoreTooSmall { color: i, needed, available });
        }
        gadgets.push(gadgetize_core(core, available)?);
        offset.push(total);
        total += core.n();
    }
    // Roots standing for position `p` of color `i`.
    let reps = |i: usize, p: usize| {
        let last = mis.colors[i].len() - 1;
        if p == last {
            last..gadgets[i].roots.len()
        } else {
            p..p + 1
        }
    };
    let mut where_is = vec![(0, 0); mis.graph.n()];
    for (i, c) in mis.colors.iter().enumerate() {
        for (p, &u) in c.iter().enumerate() {
            where_is[u] = (i, p);
        }
    }
    let mut edges: Vec<(VertexId, VertexId, Value)> = Vec::new();
    for (i, (core, g)) in cores.iter().zip(&gadgets).enumerate() {
        let local = gadget_instance(core, g);
        let o = offset[i];
        edges.extend(local.edges().iter().map(|e| (e.u + o, e.v + o, e.value.clone())));
    }
    let mut cross = BTreeSet::new();
    for &(u, v) in mis.graph.edges() {
        let ((i, p), (i2, p2)) = (where_is[u], where_is[v]);
        if i == i2 {
            continue;
        }
        for a in reps(i, p) {
            for b in reps(i2, p2) {
                let s = offset[i] + gadgets[i].privates[a];
                let t = offset[i2] + gadgets[i2].privates[b];
                cross.insert((s.min(t), s.max(t)));
            }
        }
    }
    edges.extend(cross.into_iter().map(|(x, y)| (x, y, Value::zero())));
    let inst = Instance::new(total, edges)?;
    let selectors = mis
        .colors
        .iter()
        .enumerate()
        .map(|(i, c)| (0..c.len()).map(|p| reps(i, p).map(|a| offset[i] + gadgets[i].roots[a]).collect()).collect())
        .collect();
    Ok((inst, mis.mapping(selectors)))
}

/// Lexicographically first multicolored independent set (colors in order,
/// members by id), or `None`.
pub fn mis_bruteforce(mis: &MisInstance) -> Result<Option<Vec<VertexId>>, ReductionError> {
    let actual = mis.colors.iter().try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128)).unwrap_or(u128::MAX);
    if actual > MIS_BF_CAP {
        return Err(ReductionError::CapExceeded { limit: MIS_BF_CAP, actual });
    }
    Ok(first_independent_choice(&mis.graph, &mis.colors))
}

/// Depth-first search over one candidate per group, smallest ids first.
pub(super) fn first_independent_choice(g: &SimpleGraph, groups: &[Vec<VertexId>]) -> Option<Vec<VertexId>> {
    fn go(g: &SimpleGraph, groups: &[Vec<VertexId>], chosen: &mut Vec<VertexId>) -> bool {
        let Some(group) = groups.get(chosen.len()) else {
            return true;
        };
        for &v in group {
            if chosen.iter().all(|&c| c != v && !g.has_edge(c, v)) {
                chosen.push(v);
                if go(g, groups, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let sorted: Vec<Vec<VertexId>> = groups
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    let mut chosen = Vec::new();
    go(g, &sorted, &mut chosen).then_some(chosen)
}
