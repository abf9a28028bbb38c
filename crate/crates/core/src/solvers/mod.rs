//! Decision procedures for binary instances and the brute-force oracles they
//! are checked against.

mod brute;
mod near_bipartite;
mod portfolio;
mod rootsat;
mod twosat;
mod uncut;

pub use brute::{solve_bruteforce_orientations, solve_bruteforce_rootings, solve_bruteforce_rootings_all};
pub use near_bipartite::solve_near_bipartite;
pub use portfolio::{solve, solve_with, Decision, Route, Solution, SolveConfig, Strategy};
pub use rootsat::{
    build_twosat, classify_trees, prune_states, solve_parameterized, solve_small_cores, CoreClass, ParamStats,
};
pub use twosat::{twosat_solve, Lit, TwoSatFormula, VarMeaning};
pub use uncut::{derive_ab_partition, detect_min_uncut_le1, Bipartition, UncutClassification};

use crate::model::{verify_efx, Instance, Orientation, OrientationError};
use crate::preprocess::PreprocessError;
use crate::rooting::RootingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("instance is not binary")]
    NotBinary,
    #[error("tree {tree} has {count} feasible states, more than two")]
    TooManyStates { tree: usize, count: usize },
    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded { what: &'static str, limit: u128, actual: u128 },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("edge values too large for exhaustive search")]
    ValueRange,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("produced orientation failed verification")]
    Unverified,
    #[error(transparent)]
    Preprocess(#[from] PreprocessError),
    #[error(transparent)]
    Rooting(#[from] RootingError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

/// Re-verifies before handing an orientation out.
pub(crate) fn checked(inst: &Instance, o: Orientation) -> Result<Orientation, SolverError> {
    if verify_efx(inst, &o)?.ok {
        Ok(o)
    } else {
        Err(SolverError::Unverified)
    }
}
