//! Non-dominated root choices per 1-tree, and a feasibility check.

use efx_orient::rooting::{enumerate_states, rooting_feasible, rooting_to_orientation, Rooting};
use efx_orient::Instance;

fn main() {
    // P5 0..4 and P2 5-6, linked by two 0-edges.
    let inst =
        Instance::binary(7, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (5, 6, 1), (1, 5, 0), (3, 6, 0)]).unwrap();
    let table = enumerate_states(&inst).unwrap();
    for t in &table.trees {
        let roots: Vec<_> = t.states.iter().map(|s| s.root).collect();
        println!("tree {:?}: states {roots:?}, dominated {:?}", t.vertices, t.dominated);
    }
    for roots in [vec![2, 5], vec![0, 5], vec![0, 6]] {
        let r = Rooting { roots };
        let verdict = rooting_feasible(&inst, &r).unwrap();
        println!("roots {:?}: {verdict:?}", r.roots);
        if verdict.is_feasible() {
            println!("  receivers {:?}", rooting_to_orientation(&inst, &r).unwrap().receivers());
        }
    }
}
