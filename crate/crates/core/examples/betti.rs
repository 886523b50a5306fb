//! Betti numbers from the cell decomposition and from the generating function.
use equichow::chowring::{betti_bb, gottsche_poincare};
use equichow::fixedloci::FixedPointSet;
use equichow::toricfan::Fan;

fn main() {
    for fan in [
        Fan::projective_plane(),
        Fan::p1_times_p1(),
        Fan::hirzebruch(1),
    ] {
        let b2 = fan.rays().len() as u64 - 2;
        let series = gottsche_poincare(1, b2, 1, 4);
        for d in 1..=3u32 {
            let set = FixedPointSet::new(&fan, d);
            println!(
                "{} d={d}: cells {:?} series {:?}",
                fan.name(),
                betti_bb(&set),
                series[d as usize]
            );
        }
    }
}
