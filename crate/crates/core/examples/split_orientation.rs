//! Induced matchings, split orientations and the gadget built from them.

use efx_orient::structure::{
    canonical_arcs, gadgetize_core, leafed_mim_dp, matching_to_split_orientation, max_induced_matching_bf,
    max_leafed_split_orientation, pendant_path, product_with_edge,
};

fn main() {
    let t = pendant_path(2);
    let (m, _) = max_induced_matching_bf(&t).unwrap();
    println!("core on {} vertices, induced matching number {m}", t.n());
    let (pm, matching) = max_induced_matching_bf(&product_with_edge(&t)).unwrap();
    let so = matching_to_split_orientation(&t, &matching).unwrap();
    println!("product matching {pm} -> split orientation {:?}", so.arcs);
    let leafed = max_leafed_split_orientation(&t).unwrap();
    println!("max leafed split orientation ({}): {:?}", leafed.len(), leafed.arcs);
    let dist = t.distances(0);
    let even: Vec<_> = t.leaves().into_iter().filter(|&l| dist[l].is_some_and(|d| d % 2 == 0)).collect();
    println!("matching covering leaves {even:?}: {:?}", leafed_mim_dp(&t, &even).unwrap());
    let k = canonical_arcs(&t).unwrap().len();
    let g = gadgetize_core(&t, k).unwrap();
    println!("gadget roots {:?} privates {:?} added 0-edges {:?}", g.roots, g.privates, g.zero_edges);
}
