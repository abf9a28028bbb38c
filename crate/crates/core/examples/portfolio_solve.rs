//! The default solver on a batch of random instances.

use efx_orient::model::verify_efx;
use efx_orient::reductions::{gen_random, GenKind};
use efx_orient::solvers::{solve_with, SolveConfig};

fn main() {
    let cfg = SolveConfig::default();
    for seed in 0..8 {
        let inst = gen_random(&GenKind::Uniform { n: 9, m: 16, p_one: 0.6 }, seed).unwrap();
        let sol = solve_with(&inst, &cfg).unwrap();
        let checked = sol.orientation.as_ref().map(|o| verify_efx(&inst, o).unwrap().ok);
        println!("seed {seed}: {} by {} (verified {checked:?})", sol.decision.as_str(), sol.strategy.as_str());
    }
}
