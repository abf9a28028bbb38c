//! Enumerate roots of the larger trees and settle the small ones by 2-SAT.

use efx_orient::reductions::{from_monotone_3sat, MonotoneCnf};
use efx_orient::solvers::{solve_parameterized, Lit};

fn main() {
    let f = MonotoneCnf::new(
        3,
        vec![vec![Lit::pos(0), Lit::pos(1)], vec![Lit::neg(0), Lit::neg(2)], vec![Lit::pos(2), Lit::pos(1), Lit::pos(0)]],
    )
    .unwrap();
    let (inst, _) = from_monotone_3sat(&f).unwrap();
    for tau in [4, 12] {
        let (o, stats) = solve_parameterized(&inst, tau, 100_000).unwrap();
        println!("tau={tau}: yes={} {stats:?}", o.is_some());
    }
}
