use super::brute::solve_bruteforce_orientations;
use super::near_bipartite::solve_near_bipartite;
use super::rootsat::{solve_parameterized, solve_small_cores};
use super::uncut::{derive_ab_partition, detect_min_uncut_le1, UncutClassification};
use super::{checked, SolverError};
use crate::model::{Instance, Orientation};
use crate::preprocess::{lift_orientation, preprocess_full, ReductionTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Indeterminate,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    NearBipartite,
    Preprocess,
    TwoSat,
    Parameterized,
    BruteForce,
    None,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::NearBipartite => "near-bipartite",
            Strategy::Preprocess => "preprocess",
            Strategy::TwoSat => "2-SAT",
            Strategy::Parameterized => "parameterized",
            Strategy::BruteForce => "brute-force",
            Strategy::None => "none",
        }
    }
}

/// Which route `solve_with` may take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    #[default]
    Auto,
    TwoSat,
    Parameterized,
    BruteForce,
}

/// Resource settings. They bound work, never change an answer: running out
/// yields `Decision::Indeterminate`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub tau: usize,
    pub node_budget: u64,
    pub max_bruteforce_edges: usize,
    pub route: Route,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { tau: 12, node_budget: 1_000_000, max_bruteforce_edges: 20, route: Route::Auto }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub decision: Decision,
    /// Orientation of the input instance, present exactly when the answer is yes.
    pub orientation: Option<Orientation>,
    pub strategy: Strategy,
}

fn answer(
    inst: &Instance,
    reduced: Option<(&Instance, &ReductionTrace)>,
    found: Option<Orientation>,
    strategy: Strategy,
) -> Result<Solution, SolverError> {
    let orientation = match (found, reduced) {
        (None, _) => None,
        (Some(o), None) => Some(checked(inst, o)?),
        (Some(o), Some((red, trace))) => Some(checked(inst, lift_orientation(trace, red, &o)?)?),
    };
    let decision = if orientation.is_some() { Decision::Yes } else { Decision::No };
    Ok(Solution { decision, orientation, strategy })
}

fn near_bipartite(inst: &Instance) -> Result<Option<Orientation>, SolverError> {
    let (a, b) = match detect_min_uncut_le1(inst) {
        UncutClassification::Bipartite(bp) => (bp.part(false), bp.part(true)),
        UncutClassification::OneEdge(e, _) => derive_ab_partition(inst, e)?,
        UncutClassification::MoreThanOne => return Ok(None),
    };
    solve_near_bipartite(inst, &a, &b).map(Some)
}

/// Portfolio decision for binary instances with the default settings.
pub fn solve(inst: &Instance) -> Result<Solution, SolverError> {
    solve_with(inst, &SolveConfig::default())
}

/// Portfolio decision: near-bipartite shortcut, preprocessing, 2-SAT when
/// every tree has at most two useful states, state enumeration, and finally
/// brute force. Every yes comes with an orientation verified on `inst`.
pub fn solve_with(inst: &Instance, cfg: &SolveConfig) -> Result<Solution, SolverError> {
    if cfg.route == Route::BruteForce {
        return match solve_bruteforce_orientations(inst, cfg.max_bruteforce_edges) {
            Ok(found) => answer(inst, None, found, Strategy::BruteForce),
            Err(SolverError::CapExceeded { .. }) => Ok(indeterminate()),
            Err(e) => Err(e),
        };
    }
    if !inst.is_binary() {
        return Err(SolverError::NotBinary);
    }
    if cfg.route == Route::Auto {
        if let Some(o) = near_bipartite(inst)? {
            return answer(inst, None, Some(o), Strategy::NearBipartite);
        }
    }
    let (red, trace) = preprocess_full(inst)?;
    let reduced = Some((&red, &trace));
    match cfg.route {
        Route::TwoSat => return answer(inst, reduced, solve_small_cores(&red)?, Strategy::TwoSat),
        Route::Parameterized => {
            return match solve_parameterized(&red, cfg.tau, cfg.node_budget) {
                Ok((found, _)) => answer(inst, reduced, found, Strategy::Parameterized),
                Err(SolverError::BudgetExceeded { .. }) => Ok(indeterminate()),
                Err(e) => Err(e),
            }
        }
        _ => {}
    }
    if red.n() == 0 {
        let empty = Orientation::from_receivers_unchecked(Vec::new());
        return answer(inst, reduced, Some(empty), Strategy::Preprocess);
    }
    if let Some(o) = near_bipartite(&red)? {
        return answer(inst, reduced, Some(o), Strategy::NearBipartite);
    }
    match solve_small_cores(&red) {
        Ok(found) => return answer(inst, reduced, found, Strategy::TwoSat),
        Err(SolverError::TooManyStates { .. }) => {}
        Err(e) => return Err(e),
    }
    match solve_parameterized(&red, cfg.tau, cfg.node_budget) {
        Ok((found, _)) => return answer(inst, reduced, found, Strategy::Parameterized),
        Err(SolverError::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    match solve_bruteforce_orientations(&red, cfg.max_bruteforce_edges) {
        Ok(found) => answer(inst, reduced, found, Strategy::BruteForce),
        Err(SolverError::CapExceeded { .. }) => Ok(indeterminate()),
        Err(e) => Err(e),
    }
}

fn indeterminate() -> Solution {
    Solution { decision: Decision::Indeterminate, orientation: None, strategy: Strategy::None }
}
