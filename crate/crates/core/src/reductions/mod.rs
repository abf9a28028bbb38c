//! Instance generators for the hardness constructions: monotone 3-SAT into
//! rootable 1-forests, multicolored independent set into path or core
//! gadgets, plus seeded random families.
//!
//! Every generator returns a [`Mapping`] that decodes a solution of the
//! generated instance back into a solution of the source problem.

mod cnf;
mod mapping;
mod mis;
mod random;
mod sat;

pub use cnf::MonotoneCnf;
pub use mapping::{extract, Extracted, Mapping, MisMapping, SatMapping};
pub use mis::{from_mis, from_mis_big_cores, mis_bruteforce, GadgetChoice, MisInstance, MIS_BF_CAP};
pub use random::{gen_random, gen_random_with, GenKind};
pub use sat::{
    assignment_from_orientation, assignment_from_rooting, from_monotone_3sat, reduce_3sat_low_degree,
    rooting_from_assignment,
};

use crate::model::{InstanceError, VertexId};
use crate::structure::StructureError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} has {len} literals, at most 3 allowed")]
    ClauseTooLong { clause: usize, len: usize },
    #[error("clause {clause} mixes positive and negative literals")]
    MixedClause { clause: usize },
    #[error("clause {clause} uses variable {var} of {vars}")]
    VariableOutOfRange { clause: usize, var: usize, vars: usize },
    #[error("color classes do not partition the vertices: {0}")]
    NotAPartition(String),
    #[error("fractional gadget value must lie strictly between 0 and 1")]
    FractionOutOfRange,
    #[error("expected {expected} cores, got {found}")]
    CoreCount { expected: usize, found: usize },
    #[error("core for color {color} offers {available} roots, {needed} needed")]
    CoreTooSmall { color: usize, needed: usize, available: usize },
    #[error("search space {actual} exceeds cap {limit}")]
    CapExceeded { limit: u128, actual: u128 },
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("mapping: {0}")]
    MappingSyntax(String),
    #[error("vertex {0} out of range")]
    Vertex(VertexId),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}
