use num_traits::ToPrimitive;

use super::{checked, SolverError};
use crate::model::{Instance, Orientation, VertexId};
use crate::rooting::{enumerate_states, rooting_to_orientation, Rooting};

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Edge values scaled to integers by the common denominator.
fn integer_values(inst: &Instance) -> Result<Vec<u128>, SolverError> {
    let too_big = || SolverError::ValueRange;
    let mut lcm: u128 = 1;
    for e in inst.edges() {
        let d = e.value.as_rational().denom().to_u128().ok_or_else(too_big)?;
        lcm = (lcm / gcd(lcm, d)).checked_mul(d).ok_or_else(too_big)?;
    }
    inst.edges()
        .iter()
        .map(|e| {
            let r = e.value.as_rational();
            let n = r.numer().to_u128().ok_or_else(too_big)?;
            let d = r.denom().to_u128().ok_or_else(too_big)?;
            n.checked_mul(lcm / d).filter(|&v| v < 1 << 100).ok_or_else(too_big)
        })
        .collect()
}

struct Dfs<'a> {
    inst: &'a Instance,
    w: Vec<u128>,
    recv: Vec<VertexId>,
    /// Value held plus value of still-unassigned incident edges.
    pot: Vec<u128>,
    count: Vec<usize>,
}

impl Dfs<'_> {
    /// Some envy is already certain: `i` gave `ij` to `j`, `j` holds two items,
    /// and `i` cannot reach `w(ij)` any more.
    fn doomed_around(&self, i: VertexId, j: VertexId) -> bool {
        let gave = |x: VertexId| {
            self.inst.neighbors(x).iter().any(|&(y, f)| {
                self.recv[f] == y && self.count[y] >= 2 && self.w[f] > self.pot[x]
            })
        };
        let took = self.inst.neighbors(j).iter().any(|&(k, f)| {
            self.recv[f] == j && self.count[j] >= 2 && self.w[f] > self.pot[k]
        });
        gave(i) || took
    }

    fn run(&mut self, e: usize) -> bool {
        if e == self.recv.len() {
            return true;
        }
        let edge = self.inst.edge(e);
        for (j, i) in [(edge.u, edge.v), (edge.v, edge.u)] {
            self.recv[e] = j;
            self.pot[i] -= self.w[e];
            self.count[j] += 1;
            if !self.doomed_around(i, j) && self.run(e + 1) {
                return true;
            }
            self.count[j] -= 1;
            self.pot[i] += self.w[e];
            self.recv[e] = usize::MAX;
        }
        false
    }
}

/// Exhaustive search over orientations in lexicographic order (edge 0 most
/// significant, toward the smaller endpoint first), skipping subtrees in which
/// strong envy is already unavoidable. Works for any values.
pub fn solve_bruteforce_orientations(inst: &Instance, max_edges: usize) -> Result<Option<Orientation>, SolverError> {
    if inst.m() > max_edges {
        return Err(SolverError::CapExceeded { what: "edges", limit: max_edges as u128, actual: inst.m() as u128 });
    }
    let w = integer_values(inst)?;
    let mut pot = vec![0u128; inst.n()];
    for (e, edge) in inst.edges().iter().enumerate() {
        pot[edge.u] += w[e];
        pot[edge.v] += w[e];
    }
    let mut dfs = Dfs { inst, w, recv: vec![usize::MAX; inst.m()], pot, count: vec![0; inst.n()] };
    if !dfs.run(0) {
        return Ok(None);
    }
    checked(inst, Orientation::from_receivers_unchecked(dfs.recv)).map(Some)
}

/// Exhaustive search over rootings; candidates per tree are either the states
/// or every vertex of the tree.
fn rootings(inst: &Instance, cap: u128, all_vertices: bool) -> Result<Option<Orientation>, SolverError> {
    let table = enumerate_states(inst)?;
    let cands: Vec<Vec<VertexId>> = table
        .trees
        .iter()
        .map(|t| if all_vertices { t.vertices.clone() } else { t.states.iter().map(|s| s.root).collect() })
        .collect();
    let total = cands.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if total > cap {
        return Err(SolverError::CapExceeded { what: "rootings", limit: cap, actual: total });
    }
    let mut block = vec![0u32; inst.n()];
    let mut chosen = Vec::with_capacity(cands.len());
    fn go(inst: &Instance, cands: &[Vec<VertexId>], block: &mut [u32], chosen: &mut Vec<VertexId>) -> bool {
        let depth = chosen.len();
        if depth == cands.len() {
            return true;
        }
        for &r in &cands[depth] {
            let nb: Vec<VertexId> = inst.one_neighbors(r).collect();
            if nb.iter().any(|&a| block[a] > 0) {
                continue;
            }
            let zeros: Vec<VertexId> = nb.iter().flat_map(|&a| inst.zero_neighbors(a)).collect();
            if zeros.iter().any(|b| nb.contains(b)) {
                continue;
            }
            for &b in &zeros {
                block[b] += 1;
            }
            chosen.push(r);
            if go(inst, cands, block, chosen) {
                return true;
            }
            chosen.pop();
            for &b in &zeros {
                block[b] -= 1;
            }
        }
        false
    }
    if !go(inst, &cands, &mut block, &mut chosen) {
        return Ok(None);
    }
    let o = rooting_to_orientation(inst, &Rooting { roots: chosen })?;
    checked(inst, o).map(Some)
}

/// Lexicographic search over state combinations (tree order, state order).
pub fn solve_bruteforce_rootings(inst: &Instance, cap: u128) -> Result<Option<Orientation>, SolverError> {
    rootings(inst, cap, false)
}

/// Same search with every vertex of every tree as a candidate root.
pub fn solve_bruteforce_rootings_all(inst: &Instance, cap: u128) -> Result<Option<Orientation>, SolverError> {
    rootings(inst, cap, true)
}
