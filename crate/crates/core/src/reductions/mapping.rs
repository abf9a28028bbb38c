use serde::{Deserialize, Serialize};

use super::mis::first_independent_choice;
use super::sat::assignment_from_orientation;
use super::ReductionError;
use crate::model::{verify_efx, Instance, Orientation, VertexId};
use crate::solvers::Lit;
use crate::structure::SimpleGraph;

/// A clause gadget: the five path vertices `c1 c2 g3 g2 c3` and the three
/// (padded) literals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseGadget {
    pub literals: [Lit; 3],
    pub path: [VertexId; 5],
}

impl ClauseGadget {
    /// Vertex standing for literal `q`.
    pub fn literal_position(&self, q: usize) -> VertexId {
        [self.path[0], self.path[1], self.path[4]][q]
    }

    /// Path neighbor of literal `q` that carries its 0-edge.
    pub fn partner(&self, q: usize) -> VertexId {
        [self.path[1], self.path[0], self.path[3]][q]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatMapping {
    /// `[x_i, ¬x_i]` per variable.
    pub vars: Vec<[VertexId; 2]>,
    pub clauses: Vec<ClauseGadget>,
}

impl SatMapping {
    pub(super) fn check_assignment(&self, assignment: &[bool]) -> Result<(), ReductionError> {
        if assignment.len() != self.vars.len() {
            return Err(ReductionError::InvalidSolution(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                self.vars.len()
            )));
        }
        match self.clauses.iter().position(|c| !c.literals.iter().any(|l| l.holds(assignment))) {
            Some(j) => Err(ReductionError::InvalidSolution(format!("clause {j} is not satisfied"))),
            None => Ok(()),
        }
    }
}

/// Decoding table for the MIS constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisMapping {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub colors: Vec<Vec<VertexId>>,
    /// `selectors[i][p]`: instance vertices whose empty 1-bundle suggests
    /// picking the `p`-th vertex of color `i`.
    pub selectors: Vec<Vec<Vec<VertexId>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mapping {
    Sat(SatMapping),
    Mis(MisMapping),
}

impl Mapping {
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("mapping serializes");
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self, ReductionError> {
        serde_json::from_str(text).map_err(|e| ReductionError::MappingSyntax(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extracted {
    Assignment(Vec<bool>),
    /// One vertex per color, in color order.
    IndependentSet(Vec<VertexId>),
}

/// Decodes an EFX orientation of a generated instance.
///
/// MIS decoding collects, per color, the positions whose selector vertices
/// hold no 1-item and returns the first independent combination.
pub fn extract(inst: &Instance, map: &Mapping, o: &Orientation) -> Result<Extracted, ReductionError> {
    match map {
        Mapping::Sat(m) => assignment_from_orientation(inst, m, o).map(Extracted::Assignment),
        Mapping::Mis(m) => {
            o.check(inst).map_err(|e| ReductionError::InvalidSolution(e.to_string()))?;
            let report = verify_efx(inst, o).map_err(|e| ReductionError::InvalidSolution(e.to_string()))?;
            if !report.ok {
                return Err(ReductionError::InvalidSolution(format!("not EFX: {:?}", report.witnesses[0])));
            }
            let mut holds_one = vec![false; inst.n()];
            for e in (0..inst.m()).filter(|&e| inst.is_one(e)) {
                holds_one[o.receiver(e)] = true;
            }
            let graph = SimpleGraph::new(m.n, &m.edges)?;
            let candidates: Vec<Vec<VertexId>> = m
                .colors
                .iter()
                .zip(&m.selectors)
                .map(|(color, sel)| {
                    color
                        .iter()
                        .zip(sel)
                        .filter(|(_, s)| s.iter().any(|&v| v < inst.n() && !holds_one[v]))
                        .map(|(&u, _)| u)
                        .collect()
                })
                .collect();
            first_independent_choice(&graph, &candidates)
                .map(Extracted::IndependentSet)
                .ok_or_else(|| ReductionError::InvalidSolution("no independent choice among root candidates".into()))
        }
    }
}
