use super::graph::SimpleGraph;
use super::StructureError;
use crate::model::VertexId;

/// Largest graph the exhaustive matcher accepts.
pub const MIM_BF_MAX_EDGES: usize = 32;

/// Maximum induced matching by include-first backtracking over edges in
/// ascending order. Among maximum matchings the first one found wins, so the
/// result is deterministic.
pub fn max_induced_matching_bf(g: &SimpleGraph) -> Result<(usize, Vec<(VertexId, VertexId)>), StructureError> {
    if g.m() > MIM_BF_MAX_EDGES {
        return Err(StructureError::TooLarge { limit: MIM_BF_MAX_EDGES, actual: g.m() });
    }
    struct S<'a> {
        g: &'a SimpleGraph,
        /// Per vertex: how many chosen edges touch it or a neighbor.
        covered: Vec<u32>,
        cur: Vec<usize>,
        best: Vec<usize>,
    }
    impl S<'_> {
        fn free(&self, (a, b): (VertexId, VertexId)) -> bool {
            self.covered[a] == 0 && self.covered[b] == 0
        }
        fn mark(&mut self, (a, b): (VertexId, VertexId), add: bool) {
            let mut touched = vec![a, b];
            touched.extend_from_slice(self.g.neighbors(a));
            touched.extend_from_slice(self.g.neighbors(b));
            touched.sort_unstable();
            touched.dedup();
            for x in touched {
                if add {
                    self.covered[x] += 1;
                } else {
                    self.covered[x] -= 1;
                }
            }
        }
        fn go(&mut self, i: usize) {
            let m = self.g.m();
            if self.cur.len() + (m - i) <= self.best.len() {
                return;
            }
            if i == m {
                self.best = self.cur.clone();
                return;
            }
            let e = self.g.edges()[i];
            if self.free(e) {
                self.mark(e, true);
                self.cur.push(i);
                self.go(i + 1);
                self.cur.pop();
                self.mark(e, false);
            }
            self.go(i + 1);
        }
    }
    let mut s = S { g, covered: vec![0; g.n()], cur: Vec::new(), best: Vec::new() };
    s.go(0);
    let edges: Vec<_> = s.best.iter().map(|&i| g.edges()[i]).collect();
    Ok((edges.len(), edges))
}

/// True iff `edges` are edges of `g` forming an induced matching.
pub fn is_induced_matching(g: &SimpleGraph, edges: &[(VertexId, VertexId)]) -> bool {
    if !edges.iter().all(|&(a, b)| g.has_edge(a, b)) {
        return false;
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if [a, b].iter().any(|&x| [c, d].iter().any(|&y| x == y || g.has_edge(x, y))) {
                return false;
            }
        }
    }
    true
}

const NEG: i64 = i64::MIN / 4;

fn add(a: i64, b: i64) -> i64 {
    if a <= NEG || b <= NEG {
        NEG
    } else {
        a + b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// Not in a matching edge.
    No,
    /// Matched with its parent.
    Bot,
    /// Matched with one of its children.
    Top,
}

/// Table of the leafed matching recursion; values below `NEG_INFINITY` mean
/// "impossible".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafedMatchingDp {
    pub root: VertexId,
    pub parent: Vec<Option<VertexId>>,
    pub no: Vec<i64>,
    pub bot: Vec<i64>,
    pub top: Vec<i64>,
}

impl LeafedMatchingDp {
    pub const NEG_INFINITY: i64 = NEG;

    pub fn value(&self) -> Option<usize> {
        let v = self.no[self.root].max(self.top[self.root]);
        (v > NEG).then_some(v as usize)
    }
}

fn children<'a>(t: &'a SimpleGraph, parent: &'a [Option<VertexId>], v: VertexId) -> impl Iterator<Item = VertexId> + 'a {
    let p = parent[v];
    t.neighbors(v).iter().copied().filter(move |&c| Some(c) != p)
}

/// Fills the no/bot/top table rooted at the smallest non-leaf.
pub fn leafed_matching_table(t: &SimpleGraph, required: &[VertexId]) -> Result<LeafedMatchingDp, StructureError> {
    if !t.is_tree() {
        return Err(StructureError::NotATree);
    }
    let leaves = t.leaves();
    for &l in required {
        if !leaves.contains(&l) {
            return Err(StructureError::NotALeaf(l));
        }
    }
    for (i, &a) in required.iter().enumerate() {
        let dist = t.distances(a);
        for &b in &required[i + 1..] {
            if dist[b].unwrap() < 4 {
                return Err(StructureError::LeavesTooClose(a, b));
            }
        }
    }
    let root = (0..t.n()).find(|&v| !t.is_leaf(v)).ok_or(StructureError::NoInnerVertex)?;
    let mut parent = vec![None; t.n()];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let kids: Vec<VertexId> = children(t, &parent, v).collect();
        for c in kids {
            parent[c] = Some(v);
            order.push(c);
        }
    }
    let n = t.n();
    let (mut no, mut bot, mut top) = (vec![0i64; n], vec![0i64; n], vec![NEG; n]);
    for &v in order.iter().rev() {
        if v != root && t.is_leaf(v) {
            bot[v] = 1;
            top[v] = NEG;
            no[v] = if required.contains(&v) { NEG } else { 0 };
            continue;
        }
        let mut sum_no = 0i64;
        let mut sum_free = 0i64;
        let mut best_swap = NEG;
        for c in children(t, &parent, v) {
            sum_no = add(sum_no, no[c]);
            sum_free = add(sum_free, no[c].max(top[c]));
            let swap = if no[c] <= NEG { bot[c] } else { bot[c] - no[c] };
            best_swap = best_swap.max(swap);
        }
        no[v] = sum_free;
        bot[v] = add(1, sum_no);
        // Exactly one child may leave the "no" slot; if some child cannot be
        // unmatched, that child must be the one.
        let blocked: Vec<VertexId> = children(t, &parent, v).filter(|&c| no[c] <= NEG).collect();
        top[v] = match blocked.len() {
            0 => add(sum_no, best_swap),
            1 => {
                let c = blocked[0];
                let rest = children(t, &parent, v)
                    .filter(|&x| x != c)
                    .fold(0i64, |acc, x| add(acc, no[x]));
                add(rest, bot[c])
            }
            _ => NEG,
        };
    }
    Ok(LeafedMatchingDp { root, parent, no, bot, top })
}

/// Maximum induced matching of a tree that covers every leaf in `required`.
/// `Ok(None)` when no such matching exists.
pub fn leafed_mim_dp(
    t: &SimpleGraph,
    required: &[VertexId],
) -> Result<Option<(usize, Vec<(VertexId, VertexId)>)>, StructureError> {
    if t.n() == 2 && t.m() == 1 {
        for &l in required {
            if l > 1 {
                return Err(StructureError::NotALeaf(l));
            }
        }
        return Ok(Some((1, vec![(0, 1)])));
    }
    let dp = leafed_matching_table(t, required)?;
    let Some(size) = dp.value() else {
        return Ok(None);
    };
    let mut edges = Vec::new();
    let start = if dp.top[dp.root] > dp.no[dp.root] { Slot::Top } else { Slot::No };
    let mut stack = vec![(dp.root, start)];
    while let Some((v, slot)) = stack.pop() {
        let kids: Vec<VertexId> = children(t, &dp.parent, v).collect();
        match slot {
            Slot::No => {
                for c in kids {
                    stack.push((c, if dp.top[c] > dp.no[c] { Slot::Top } else { Slot::No }));
                }
            }
            Slot::Bot => {
                edges.push((v.min(dp.parent[v].unwrap()), v.max(dp.parent[v].unwrap())));
                for c in kids {
                    stack.push((c, Slot::No));
                }
            }
            Slot::Top => {
                let pick = kids
                    .iter()
                    .copied()
                    .filter(|&c| dp.bot[c] > NEG)
                    .max_by_key(|&c| {
                        let rest = kids.iter().filter(|&&x| x != c).fold(0i64, |acc, &x| add(acc, dp.no[x]));
                        (add(rest, dp.bot[c]), std::cmp::Reverse(c))
                    })
                    .unwrap();
                for c in kids {
                    stack.push((c, if c == pick { Slot::Bot } else { Slot::No }));
                }
            }
        }
    }
    edges.sort_unstable();
    debug_assert_eq!(edges.len(), size);
    Ok(Some((size, edges)))
}
