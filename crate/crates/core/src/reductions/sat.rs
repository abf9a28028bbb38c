use std::collections::BTreeSet;

use super::mapping::{ClauseGadget, SatMapping};
use super::{MonotoneCnf, ReductionError};
use crate::model::{verify_efx, Instance, Orientation, Value, VertexId};
use crate::preprocess::{reduce_zero_degrees, ReductionTrace};
use crate::rooting::{rooting_feasible, Rooting};
use crate::solvers::Lit;

/// Variable `i` becomes the 1-edge `x_i ¬x_i` on vertices `2i, 2i+1`. Clause
/// `j` becomes the 1-path `c1 c2 g3 g2 c3` with 0-edges `c2 g2` and `g3 c3`;
/// literal `q` is wired by a 0-edge from its partner (`c2`, `c1`, `g2`) to
/// the literal's vertex. Clauses shorter than three repeat their last literal.
pub fn from_monotone_3sat(f: &MonotoneCnf) -> Result<(Instance, SatMapping), ReductionError> {
    let n = f.vars();
    let vars: Vec<[VertexId; 2]> = (0..n).map(|i| [2 * i, 2 * i + 1]).collect();
    let mut ones = Vec::new();
    let mut zeros = BTreeSet::new();
    for &[x, nx] in &vars {
        ones.push((x, nx));
    }
    let mut clauses = Vec::with_capacity(f.clauses().len());
    for (j, c) in f.clauses().iter().enumerate() {
        let base = 2 * n + 5 * j;
        let path = [base, base + 1, base + 2, base + 3, base + 4];
        ones.extend(path.windows(2).map(|w| (w[0], w[1])));
        zeros.insert((path[1], path[3]));
        zeros.insert((path[2], path[4]));
        let last = *c.last().expect("validated clause");
        let literals = [0, 1, 2].map(|q| c.get(q).copied().unwrap_or(last));
        let gadget = ClauseGadget { literals, path };
        for (q, &lit) in literals.iter().enumerate() {
            let a = gadget.partner(q);
            let t = literal_vertex(&vars, lit);
            zeros.insert((a.min(t), a.max(t)));
        }
        clauses.push(gadget);
    }
    let edges = ones
        .into_iter()
        .map(|(a, b)| (a, b, Value::one()))
        .chain(zeros.into_iter().map(|(a, b)| (a, b, Value::zero())));
    let inst = Instance::new(2 * n + 5 * f.clauses().len(), edges)?;
    Ok((inst, SatMapping { vars, clauses }))
}

pub(super) fn literal_vertex(vars: &[[VertexId; 2]], l: Lit) -> VertexId {
    vars[l.var][usize::from(!l.positive)]
}

/// The SAT instance followed by exhaustive 0-degree reduction, so that every
/// vertex has at most one 0-edge.
pub fn reduce_3sat_low_degree(f: &MonotoneCnf) -> Result<(Instance, SatMapping, ReductionTrace), ReductionError> {
    let (inst, map) = from_monotone_3sat(f)?;
    let (reduced, trace) = reduce_zero_degrees(&inst).expect("generated instances are binary");
    Ok((reduced, map, trace))
}

/// Reads `x_i` as true exactly when `¬x_i` holds the variable edge. Works for
/// any EFX orientation, nice or not.
pub fn assignment_from_orientation(
    inst: &Instance,
    map: &SatMapping,
    o: &Orientation,
) -> Result<Vec<bool>, ReductionError> {
    o.check(inst).map_err(|e| ReductionError::InvalidSolution(e.to_string()))?;
    let report = verify_efx(inst, o).map_err(|e| ReductionError::InvalidSolution(e.to_string()))?;
    if !report.ok {
        return Err(ReductionError::InvalidSolution(format!("not EFX: {:?}", report.witnesses[0])));
    }
    let mut assignment = Vec::with_capacity(map.vars.len());
    for &[x, nx] in &map.vars {
        let e = inst
            .edge_between(x, nx)
            .ok_or_else(|| ReductionError::InvalidSolution(format!("no variable edge {x}-{nx}")))?;
        assignment.push(o.receiver(e) == nx);
    }
    map.check_assignment(&assignment)?;
    Ok(assignment)
}

/// Reads `x_i` as true exactly when the variable gadget is rooted at `x_i`.
pub fn assignment_from_rooting(inst: &Instance, map: &SatMapping, r: &Rooting) -> Result<Vec<bool>, ReductionError> {
    let feasible = rooting_feasible(inst, r).map_err(|e| ReductionError::InvalidSolution(e.to_string()))?;
    if !feasible.is_feasible() {
        return Err(ReductionError::InvalidSolution(format!("{feasible:?}")));
    }
    let assignment: Vec<bool> = map.vars.iter().map(|v| r.roots.contains(&v[0])).collect();
    map.check_assignment(&assignment)?;
    Ok(assignment)
}

/// Roots each variable at its true literal and each clause at its first true
/// literal position.
pub fn rooting_from_assignment(map: &SatMapping, assignment: &[bool]) -> Result<Rooting, ReductionError> {
    map.check_assignment(assignment)?;
    let mut roots: Vec<VertexId> = map.vars.iter().zip(assignment).map(|(v, &t)| v[usize::from(!t)]).collect();
    for c in &map.clauses {
        let q = (0..3).find(|&q| c.literals[q].holds(assignment)).expect("checked");
        roots.push(c.literal_position(q));
    }
    Ok(Rooting { roots })
}
