//! Trees of diameter at most 3 have two useful roots each, so the rooting
//! question becomes 2-SAT.

use efx_orient::rooting::enumerate_states;
use efx_orient::solvers::{build_twosat, solve_small_cores};
use efx_orient::Instance;

fn main() {
    // Three 1-edges; 0-edges forbid some pairs of roots.
    let inst = Instance::binary(6, &[(0, 1, 1), (2, 3, 1), (4, 5, 1), (1, 3, 0), (0, 4, 0), (2, 5, 0)]).unwrap();
    let f = build_twosat(&inst, &enumerate_states(&inst).unwrap()).unwrap();
    for (v, m) in f.meaning.iter().enumerate() {
        println!("x{v}: tree {} true->root {:?} false->root {:?}", m.tree, m.when_true, m.when_false);
    }
    for (a, b) in &f.clauses {
        let show = |l: &efx_orient::solvers::Lit| format!("{}x{}", if l.positive { "" } else { "!" }, l.var);
        println!("  ({} | {})", show(a), show(b));
    }
    match solve_small_cores(&inst).unwrap() {
        Some(o) => println!("yes, receivers {:?}", o.receivers()),
        None => println!("no"),
    }
}
