//! Check an orientation against the EFX condition and print any strong envy.

use efx_orient::model::{parse_instance, parse_orientation, verify_efx, verify_efx_definitional};

fn main() {
    // Path 0-1-2 of 1-edges with a 0-edge 0-2 closing the triangle.
    let inst = parse_instance("p efx 3 3\n0 1 1\n1 2 1\n0 2 0\n").unwrap();
    for text in ["0 1 -> 1\n1 2 -> 2\n0 2 -> 0\n", "0 1 -> 1\n1 2 -> 1\n0 2 -> 2\n"] {
        let o = parse_orientation(&inst, text).unwrap();
        let fast = verify_efx(&inst, &o).unwrap();
        let slow = verify_efx_definitional(&inst, &o).unwrap();
        assert_eq!(fast, slow);
        println!("receivers {:?}: ok={}", o.receivers(), fast.ok);
        for w in &fast.witnesses {
            println!("  {} strongly envies {} (drop edge {})", w.envier, w.envied, w.dropped);
        }
    }
}
