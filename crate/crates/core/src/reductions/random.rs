use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ReductionError;
use crate::model::{Instance, VertexId};
use crate::structure::SimpleGraph;

/// Random instance families. All values are binary.
#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    /// `m` distinct pairs out of `n` vertices, each a 1-edge with probability `p_one`.
    Uniform { n: usize, m: usize, p_one: f64 },
    /// A connected bipartite graph on `n` vertices with `m` edges in total, of
    /// which exactly `uncut` join vertices on the same side of the planted
    /// balanced bipartition. With `uncut <= 1` this is also the min-uncut number.
    BipartitePlusEdges { n: usize, m: usize, uncut: usize },
    /// A random tree core on `size` vertices as 1-edges plus `zero_edges`
    /// random 0-edges between non-adjacent vertices.
    TreeCore { size: usize, zero_edges: usize },
}

pub fn gen_random(kind: &GenKind, seed: u64) -> Result<Instance, ReductionError> {
    gen_random_with(kind, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn gen_random_with<R: Rng>(kind: &GenKind, rng: &mut R) -> Result<Instance, ReductionError> {
    let bad = |m: String| ReductionError::Parameters(m);
    match *kind {
        GenKind::Uniform { n, m, p_one } => {
            if !(0.0..=1.0).contains(&p_one) {
                return Err(bad(format!("p_one {p_one} outside [0, 1]")));
            }
            let mut pairs = all_pairs(n);
            if m > pairs.len() {
                return Err(bad(format!("{m} edges do not fit on {n} vertices")));
            }
            pairs.shuffle(rng);
            pairs.truncate(m);
            pairs.sort_unstable();
            let edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, u8::from(rng.gen_bool(p_one)))).collect();
            Ok(Instance::binary(n, &edges)?)
        }
        GenKind::BipartitePlusEdges { n, m, uncut } => {
            if n < 2 {
                return Err(bad("need at least two vertices".into()));
            }
            let mut order: Vec<VertexId> = (0..n).collect();
            order.shuffle(rng);
            // Alternating sides in random order keeps the two halves balanced.
            let mut side = vec![false; n];
            for (i, &v) in order.iter().enumerate() {
                side[v] = i % 2 == 1;
            }
            let (same, mut across): (Vec<_>, Vec<_>) = all_pairs(n).into_iter().partition(|&(u, v)| side[u] == side[v]);
            if m < n - 1 + uncut || m - uncut > across.len() || uncut > same.len() {
                return Err(bad(format!("cannot place {m} edges with {uncut} uncut on {n} vertices")));
            }
            // Spanning tree: each vertex hangs from an earlier vertex on the other side.
            let mut chosen = Vec::new();
            for (i, &v) in order.iter().enumerate().skip(1) {
                let earlier: Vec<VertexId> = order[..i].iter().copied().filter(|&u| side[u] != side[v]).collect();
                let u = earlier[rng.gen_range(0..earlier.len())];
                chosen.push((u.min(v), u.max(v)));
            }
            across.retain(|p| !chosen.contains(p));
            across.shuffle(rng);
            chosen.extend(across.into_iter().take(m - uncut - (n - 1)));
            let mut same = same;
            same.shuffle(rng);
            chosen.extend(same.into_iter().take(uncut));
            chosen.sort_unstable();
            let edges: Vec<_> = chosen.into_iter().map(|(u, v)| (u, v, rng.gen_range(0..2u8))).collect();
            Ok(Instance::binary(n, &edges)?)
        }
        GenKind::TreeCore { size, zero_edges } => {
            let core = random_core(rng, size)?;
            let mut free: Vec<(VertexId, VertexId)> =
                all_pairs(size).into_iter().filter(|&(u, v)| !core.has_edge(u, v)).collect();
            if zero_edges > free.len() {
                return Err(bad(format!("{zero_edges} 0-edges do not fit")));
            }
            free.shuffle(rng);
            free.truncate(zero_edges);
            let edges: Vec<_> = core
                .edges()
                .iter()
                .map(|&(u, v)| (u, v, 1))
                .chain(free.into_iter().map(|(u, v)| (u, v, 0)))
                .collect();
            Ok(Instance::binary(size, &edges)?)
        }
    }
}

fn all_pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Random attachment tree rooted at 0. While some vertex sees two leaves,
/// one of them is hung below the other; each move removes a leaf, so this
/// stops for every size except 3.
fn random_core<R: Rng>(rng: &mut R, size: usize) -> Result<SimpleGraph, ReductionError> {
    if size < 2 || size == 3 {
        return Err(ReductionError::Parameters(format!("no tree core on {size} vertices")));
    }
    let mut parent: Vec<VertexId> = (0..size).map(|v| if v == 0 { 0 } else { rng.gen_range(0..v) }).collect();
    loop {
        let edges: Vec<_> = (1..size).map(|v| (parent[v], v)).collect();
        let g = SimpleGraph::new(size, &edges)?;
        let twins = (0..size).find_map(|p| {
            let leaves: Vec<VertexId> = g.neighbors(p).iter().copied().filter(|&y| g.is_leaf(y)).collect();
            (leaves.len() >= 2).then(|| (leaves[0], leaves[1]))
        });
        let Some((l1, l2)) = twins else {
            return Ok(g);
        };
        // Vertex 0 has no parent to change, so it always stays in place.
        parent[l2] = l1;
    }
}
