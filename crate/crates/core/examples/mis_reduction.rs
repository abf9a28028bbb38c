//! Multicolored independent set through path gadgets and through cores.

use efx_orient::reductions::{
    extract, from_mis, from_mis_big_cores, mis_bruteforce, Extracted, GadgetChoice, Mapping, MisInstance,
};
use efx_orient::solvers::solve;
use efx_orient::structure::{pendant_path, SimpleGraph};

fn main() {
    // Colors {0,1} and {2,3}; edges 0-2, 1-3, 0-3 leave {1,2} as the only answer.
    let g = SimpleGraph::new(4, &[(0, 2), (1, 3), (0, 3)]).unwrap();
    let mis = MisInstance::new(g, vec![vec![0, 1], vec![2, 3]]).unwrap();
    println!("brute force: {:?}", mis_bruteforce(&mis).unwrap());
    let builds = [
        ("two 1-edges", from_mis(&mis, &GadgetChoice::TwoOneEdges).unwrap()),
        ("crossed", from_mis(&mis, &GadgetChoice::CrossedOneEdgesWithZeros).unwrap()),
        ("pendant cores", from_mis_big_cores(&mis, &[pendant_path(2), pendant_path(2)]).unwrap()),
    ];
    for (name, (inst, map)) in builds {
        let sol = solve(&inst).unwrap();
        let picked = sol.orientation.as_ref().map(|o| extract(&inst, &Mapping::Mis(map.clone()), o).unwrap());
        let set = match picked {
            Some(Extracted::IndependentSet(s)) => format!("{s:?}"),
            _ => "-".into(),
        };
        println!("{name}: {} vertices, {} -> {set}", inst.n(), sol.decision.as_str());
    }
}
