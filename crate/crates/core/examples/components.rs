//! Components of the fixed loci of the relevant subtori, with Euler classes.
use equichow::fixedloci::{components, FixedPointSet};
use equichow::toricfan::Fan;

fn main() {
    let set = FixedPointSet::new(&Fan::projective_plane(), 2);
    for w in set.relevant_subtori() {
        println!("cocharacter {:?}", w.w());
        for c in components(&set, w).unwrap() {
            println!("  dimension {} with {} points", c.dimension, c.len());
            for (&p, e) in c.points.iter().zip(&c.euler) {
                println!("    {}  euler {e}", set.point(p).id());
            }
        }
    }
}
