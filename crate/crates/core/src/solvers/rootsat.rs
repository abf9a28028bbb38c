use std::collections::{BTreeSet, HashMap, VecDeque};

use super::twosat::{twosat_solve, Lit, TwoSatFormula, VarMeaning};
use super::{checked, SolverError};
use crate::model::{Instance, Orientation, VertexId};
use crate::rooting::{enumerate_states, rooting_to_orientation, Rooting, State, StateTable};

/// Drops states whose own 1-neighborhood contains a 0-edge; such a root can
/// never be feasible.
pub fn prune_states(inst: &Instance, table: &StateTable) -> Vec<Vec<State>> {
    let mut mark = vec![false; inst.n()];
    table
        .trees
        .iter()
        .map(|t| {
            t.states
                .iter()
                .filter(|s| {
                    for &a in &s.neighborhood {
                        mark[a] = true;
                    }
                    let clash = s.neighborhood.iter().any(|&a| inst.zero_neighbors(a).any(|b| mark[b]));
                    for &a in &s.neighborhood {
                        mark[a] = false;
                    }
                    !clash
                })
                .cloned()
                .collect()
        })
        .collect()
}

/// One variable per group; `states[0]` is the true value and `states[1]`, if
/// present, the false value. A 0-edge between neighborhoods of states of two
/// different groups forbids choosing both.
fn formula_for(inst: &Instance, groups: &[(usize, Vec<State>)]) -> TwoSatFormula {
    let mut f = TwoSatFormula::new(groups.len());
    let mut owner: HashMap<VertexId, Vec<(usize, Lit)>> = HashMap::new();
    for (var, (tree, states)) in groups.iter().enumerate() {
        f.meaning.push(VarMeaning {
            tree: *tree,
            when_true: states.first().map(|s| s.root),
            when_false: states.get(1).map(|s| s.root),
        });
        match states.len() {
            0 => {
                f.infeasible_trees.push(*tree);
                f.add_clause(Lit::pos(var), Lit::pos(var));
                f.add_clause(Lit::neg(var), Lit::neg(var));
            }
            1 => f.add_clause(Lit::pos(var), Lit::pos(var)),
            2 => {}
            k => panic!("group with {k} states"),
        }
        for (i, s) in states.iter().enumerate() {
            let lit = if i == 0 { Lit::pos(var) } else { Lit::neg(var) };
            for &a in &s.neighborhood {
                owner.entry(a).or_default().push((var, lit));
            }
        }
    }
    let mut clauses = BTreeSet::new();
    for (e, edge) in inst.edges().iter().enumerate() {
        if !inst.is_zero(e) {
            continue;
        }
        let (Some(oa), Some(ob)) = (owner.get(&edge.u), owner.get(&edge.v)) else {
            continue;
        };
        for &(va, la) in oa {
            for &(vb, lb) in ob {
                if va != vb {
                    let (x, y) = (la.negate(), lb.negate());
                    clauses.insert((x.min(y), x.max(y)));
                }
            }
        }
    }
    f.clauses.extend(clauses);
    f
}

fn roots_from(f: &TwoSatFormula, assignment: &[bool]) -> Vec<(usize, VertexId)> {
    f.meaning
        .iter()
        .zip(assignment)
        .map(|(m, &val)| {
            let root = if val { m.when_true } else { m.when_false };
            (m.tree, root.expect("unit clause fixes single-state trees"))
        })
        .collect()
}

/// 2-SAT formula over the rooting choices; every tree must have at most two
/// states left after pruning.
pub fn build_twosat(inst: &Instance, states: &StateTable) -> Result<TwoSatFormula, SolverError> {
    let pruned = prune_states(inst, states);
    if let Some((tree, s)) = pruned.iter().enumerate().find(|(_, s)| s.len() > 2) {
        return Err(SolverError::TooManyStates { tree, count: s.len() });
    }
    let groups: Vec<(usize, Vec<State>)> = pruned.into_iter().enumerate().collect();
    Ok(formula_for(inst, &groups))
}

/// Decides instances whose trees all have at most two useful states, such as
/// preprocessed instances whose cores have diameter at most 3.
pub fn solve_small_cores(inst: &Instance) -> Result<Option<Orientation>, SolverError> {
    let table = enumerate_states(inst)?;
    let f = build_twosat(inst, &table)?;
    let Some(assignment) = twosat_solve(&f) else {
        return Ok(None);
    };
    let mut roots = vec![0; table.trees.len()];
    for (tree, r) in roots_from(&f, &assignment) {
        roots[tree] = r;
    }
    let o = rooting_to_orientation(inst, &Rooting { roots })?;
    checked(inst, o).map(Some)
}

pub(crate) fn diameter(inst: &Instance, vertices: &[VertexId]) -> usize {
    let far = |s: VertexId| {
        let mut dist: HashMap<VertexId, usize> = HashMap::from([(s, 0)]);
        let mut queue = VecDeque::from([s]);
        let mut last = (s, 0);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d > last.1 {
                last = (x, d);
            }
            for y in inst.one_neighbors(x) {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert(d + 1);
                    queue.push_back(y);
                }
            }
        }
        last
    };
    far(far(vertices[0]).0).1
}

/// Tree classes by size and shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreClass {
    Small,
    Tau,
    Big,
}

pub fn classify_trees(inst: &Instance, table: &StateTable, tau: usize) -> Vec<CoreClass> {
    table
        .trees
        .iter()
        .map(|t| {
            if diameter(inst, &t.vertices) <= 3 {
                CoreClass::Small
            } else if t.vertices.len() <= tau {
                CoreClass::Tau
            } else {
                CoreClass::Big
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamStats {
    /// Complete choices for the enumerated trees that reached the 2-SAT stage.
    pub outer_iterations: u64,
    pub nodes: u64,
    pub enumerated_trees: usize,
    pub tau_cores: usize,
    pub big_cores: usize,
}

struct Search<'a> {
    inst: &'a Instance,
    pruned: &'a [Vec<State>],
    order: Vec<usize>,
    small: Vec<usize>,
    chosen: Vec<VertexId>,
    block: Vec<u32>,
    budget: u64,
    stats: ParamStats,
}

impl Search<'_> {
    fn fits(&self, s: &State) -> bool {
        s.neighborhood.iter().all(|&a| self.block[a] == 0)
    }

    fn take(&mut self, s: &State, sign: i32) {
        for &a in &s.neighborhood {
            for b in self.inst.zero_neighbors(a) {
                if sign > 0 {
                    self.block[b] += 1;
                } else {
                    self.block[b] -= 1;
                }
            }
        }
    }

    /// No completion exists below this node: after fixing every open tree
    /// with a single fitting state, some tree has none left or the small
    /// trees admit no 2-SAT solution. Skipping such a branch never changes
    /// which complete choice is found first.
    fn dead_end(&self, depth: usize) -> bool {
        let open: Vec<usize> = self.order[depth..].iter().chain(&self.small).copied().collect();
        let mut block = self.block.clone();
        let mut fixed = vec![false; open.len()];
        let fits = |block: &[u32], s: &State| s.neighborhood.iter().all(|&a| block[a] == 0);
        loop {
            let mut changed = false;
            for (i, &t) in open.iter().enumerate() {
                if fixed[i] {
                    continue;
                }
                let mut fitting = self.pruned[t].iter().filter(|s| fits(&block, s));
                let Some(first) = fitting.next() else {
                    return true;
                };
                if fitting.next().is_none() {
                    fixed[i] = true;
                    changed = true;
                    for &a in &first.neighborhood {
                        for b in self.inst.zero_neighbors(a) {
                            block[b] += 1;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let groups: Vec<(usize, Vec<State>)> = open
            .iter()
            .zip(&fixed)
            .skip(self.order.len() - depth)
            .filter(|(_, &f)| !f)
            .map(|(&t, _)| (t, self.pruned[t].iter().filter(|s| fits(&block, s)).cloned().collect()))
            .collect();
        twosat_solve(&formula_for(self.inst, &groups)).is_none()
    }

    fn run(&mut self, depth: usize) -> Result<Option<Vec<(usize, VertexId)>>, SolverError> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            return Err(SolverError::BudgetExceeded { budget: self.budget });
        }
        if depth == self.order.len() {
            self.stats.outer_iterations += 1;
            let groups: Vec<(usize, Vec<State>)> = self
                .small
                .iter()
                .map(|&t| (t, self.pruned[t].iter().filter(|s| self.fits(s)).cloned().collect()))
                .collect();
            let f = formula_for(self.inst, &groups);
            return Ok(twosat_solve(&f).map(|a| {
                let mut roots: Vec<(usize, VertexId)> =
                    self.order.iter().copied().zip(self.chosen.iter().copied()).collect();
                roots.extend(roots_from(&f, &a));
                roots
            }));
        }
        let tree = self.order[depth];
        for s in &self.pruned[tree] {
            if !self.fits(s) {
                continue;
            }
            self.take(s, 1);
            if self.dead_end(depth + 1) {
                self.take(s, -1);
                continue;
            }
            self.chosen.push(s.root);
            let found = self.run(depth + 1);
            self.chosen.pop();
            self.take(s, -1);
            if let Some(r) = found? {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }
}

/// Enumerates state choices for every tree of diameter above 3, in tree order
/// and state order, and settles the remaining trees by 2-SAT after discarding
/// their states that clash with the choices so far. The first success is
/// returned, so the answer matches a plain lexicographic enumeration.
pub fn solve_parameterized(
    inst: &Instance,
    tau: usize,
    node_budget: u64,
) -> Result<(Option<Orientation>, ParamStats), SolverError> {
    let table = enumerate_states(inst)?;
    let pruned = prune_states(inst, &table);
    let classes = classify_trees(inst, &table, tau);
    let order: Vec<usize> = (0..classes.len()).filter(|&t| classes[t] != CoreClass::Small).collect();
    let small: Vec<usize> = (0..classes.len()).filter(|&t| classes[t] == CoreClass::Small).collect();
    let mut search = Search {
        inst,
        pruned: &pruned,
        stats: ParamStats {
            enumerated_trees: order.len(),
            tau_cores: classes.iter().filter(|c| **c == CoreClass::Tau).count(),
            big_cores: classes.iter().filter(|c| **c == CoreClass::Big).count(),
            ..Default::default()
        },
        order,
        small,
        chosen: Vec::new(),
        block: vec![0; inst.n()],
        budget: node_budget,
    };
    let found = search.run(0)?;
    let stats = search.stats;
    let Some(pairs) = found else {
        return Ok((None, stats));
    };
    let mut roots = vec![0; table.trees.len()];
    for (t, r) in pairs {
        roots[t] = r;
    }
    let o = rooting_to_orientation(inst, &Rooting { roots })?;
    Ok((Some(checked(inst, o)?), stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crossed_p2s() -> Instance {
        Instance::binary(4, &[(0, 1, 1), (2, 3, 1), (0, 2, 0), (0, 3, 0), (1, 2, 0), (1, 3, 0)]).unwrap()
    }

    #[test]
    fn single_crossing_edge() {
        let inst = Instance::binary(4, &[(0, 1, 1), (2, 3, 1), (1, 3, 0)]).unwrap();
        let f = build_twosat(&inst, &enumerate_states(&inst).unwrap()).unwrap();
        // root 0 (true) puts 1 in R; root 2 (true) puts 3 in R.
        assert_eq!(f.clauses, vec![(Lit::neg(0), Lit::neg(1))]);
        assert!(solve_small_cores(&inst).unwrap().is_some());
    }

    #[test]
    fn internal_zero_edge_prunes_a_state() {
        // P3 0-1-2 with 0-edge 0-2: rooting at 1 exposes both leaves.
        let inst = Instance::binary(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 0)]).unwrap();
        let f = build_twosat(&inst, &enumerate_states(&inst).unwrap()).unwrap();
        assert_eq!(f.clauses, vec![(Lit::pos(0), Lit::pos(0))]);
        assert_eq!(f.meaning[0].when_true, Some(0));
    }

    #[test]
    fn crossed_p2s_are_no() {
        let inst = crossed_p2s();
        assert_eq!(solve_small_cores(&inst).unwrap(), None);
        assert_eq!(solve_parameterized(&inst, 12, 1000).unwrap().0, None);
    }

    #[test]
    fn no_zero_edges_no_clauses() {
        let inst = Instance::binary(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
        let f = build_twosat(&inst, &enumerate_states(&inst).unwrap()).unwrap();
        assert!(f.clauses.is_empty());
    }

    #[test]
    fn p5_takes_at_most_four_iterations() {
        // P5 0..4 plus a P2 5-6 joined by 0-edges to vertices 1 and 3.
        let inst = Instance::binary(
            7,
            &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (5, 6, 1), (1, 5, 0), (3, 6, 0), (0, 6, 0)],
        )
        .unwrap();
        let (o, stats) = solve_parameterized(&inst, 5, 1000).unwrap();
        assert!(o.is_some());
        assert_eq!(stats.enumerated_trees, 1);
        assert!(stats.outer_iterations <= 4);
    }

    #[test]
    fn too_many_states() {
        let p5 = Instance::binary(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]).unwrap();
        assert!(matches!(solve_small_cores(&p5), Err(SolverError::TooManyStates { tree: 0, count: 4 })));
    }
}
