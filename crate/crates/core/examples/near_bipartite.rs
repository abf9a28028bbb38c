//! Instances that become bipartite after deleting at most one edge always
//! have an EFX orientation; this builds one.

use efx_orient::model::verify_efx;
use efx_orient::reductions::{gen_random, GenKind};
use efx_orient::solvers::{derive_ab_partition, detect_min_uncut_le1, solve_near_bipartite, UncutClassification};

fn main() {
    for seed in 0..5 {
        let inst = gen_random(&GenKind::BipartitePlusEdges { n: 10, m: 14, uncut: 1 }, seed).unwrap();
        let class = detect_min_uncut_le1(&inst);
        let (a, b) = match &class {
            UncutClassification::Bipartite(bp) => (bp.part(false), bp.part(true)),
            UncutClassification::OneEdge(e, _) => derive_ab_partition(&inst, *e).unwrap(),
            UncutClassification::MoreThanOne => unreachable!("one uncut edge by construction"),
        };
        let o = solve_near_bipartite(&inst, &a, &b).unwrap();
        println!("seed {seed}: {} A={a:?} efx={}", class.label(), verify_efx(&inst, &o).unwrap().ok);
    }
}
