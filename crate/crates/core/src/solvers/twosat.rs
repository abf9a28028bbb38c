use crate::model::VertexId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    pub fn negate(self) -> Self {
        Lit { var: self.var, positive: !self.positive }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// What a variable means when built from a rooting problem: the tree it
/// belongs to and the root chosen for each truth value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarMeaning {
    pub tree: usize,
    pub when_true: Option<VertexId>,
    pub when_false: Option<VertexId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    pub vars: usize,
    pub clauses: Vec<(Lit, Lit)>,
    pub meaning: Vec<VarMeaning>,
    /// Trees left without any feasible state.
    pub infeasible_trees: Vec<usize>,
}

impl TwoSatFormula {
    pub fn new(vars: usize) -> Self {
        TwoSatFormula { vars, ..Default::default() }
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.vars && b.var < self.vars, "literal out of range");
        self.clauses.push((a, b));
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|&(a, b)| a.holds(assignment) || b.holds(assignment))
    }
}

/// Implication-graph 2-SAT. `x` is set true iff its component comes before
/// that of `¬x` in Tarjan completion order, which is a reverse topological
/// order of the condensation.
pub fn twosat_solve(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let nodes = 2 * f.vars;
    let mut graph = vec![Vec::new(); nodes];
    for &(a, b) in &f.clauses {
        graph[a.negate().node()].push(b.node());
        graph[b.negate().node()].push(a.node());
    }
    let comp = tarjan(&graph);
    let mut out = Vec::with_capacity(f.vars);
    for v in 0..f.vars {
        let (p, n) = (comp[2 * v], comp[2 * v + 1]);
        if p == n {
            return None;
        }
        out.push(p < n);
    }
    Some(out)
}

/// Iterative Tarjan; component ids in completion order.
fn tarjan(graph: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = graph.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for s in 0..n {
        if index[s] != UNSEEN {
            continue;
        }
        call.push((s, 0));
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i == 0 {
                index[v] = counter;
                low[v] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *i < graph[v].len() {
                let w = graph[v][*i];
                *i += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    if w == v {
                        break;
                    }
                }
                ncomp += 1;
            }
        }
    }
    comp
}
