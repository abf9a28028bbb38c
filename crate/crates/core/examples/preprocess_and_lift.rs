//! Shrink an instance, solve the remainder, and lift the answer back.

use efx_orient::model::verify_efx;
use efx_orient::preprocess::{lift_orientation, preprocess_full, ReductionTrace};
use efx_orient::solvers::solve_bruteforce_orientations;
use efx_orient::Instance;

fn main() {
    // A 1-triangle, a star with three leaves, a vertex with many 0-edges.
    let inst = Instance::binary(
        9,
        &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (3, 5, 1), (3, 6, 1), (7, 4, 0), (7, 5, 0), (7, 6, 0), (8, 3, 0)],
    )
    .unwrap();
    let (reduced, trace) = preprocess_full(&inst).unwrap();
    println!("{} vertices, {} edges -> {} vertices, {} edges", inst.n(), inst.m(), reduced.n(), reduced.m());
    let text = trace.to_text();
    for line in text.lines() {
        println!("  {line}");
    }
    let trace = ReductionTrace::from_text(&text).unwrap();
    let small = solve_bruteforce_orientations(&reduced, 20).unwrap().expect("reduced instance is yes");
    let lifted = lift_orientation(&trace, &reduced, &small).unwrap();
    println!("lifted orientation is EFX: {}", verify_efx(&inst, &lifted).unwrap().ok);
}
