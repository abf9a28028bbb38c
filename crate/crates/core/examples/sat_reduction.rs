//! Monotone 3-SAT to EFX orientation and back.

use efx_orient::model::serialize_instance;
use efx_orient::reductions::{assignment_from_orientation, from_monotone_3sat, reduce_3sat_low_degree, MonotoneCnf};
use efx_orient::solvers::{solve, Lit};

fn main() {
    let (x, y, z) = (0, 1, 2);
    let f = MonotoneCnf::new(
        3,
        vec![vec![Lit::pos(x), Lit::pos(y), Lit::pos(z)], vec![Lit::neg(x), Lit::neg(y)], vec![Lit::neg(z)]],
    )
    .unwrap();
    let (inst, map) = from_monotone_3sat(&f).unwrap();
    print!("{}", serialize_instance(&inst));
    let sol = solve(&inst).unwrap();
    println!("decision {} via {}", sol.decision.as_str(), sol.strategy.as_str());
    if let Some(o) = &sol.orientation {
        let a = assignment_from_orientation(&inst, &map, o).unwrap();
        println!("assignment x={} y={} z={}", a[x], a[y], a[z]);
    }
    let (low, _, _) = reduce_3sat_low_degree(&f).unwrap();
    let max0 = (0..low.n()).map(|v| low.zero_degree(v)).max().unwrap_or(0);
    println!("low-degree variant: {} vertices, max 0-degree {max0}", low.n());
}
