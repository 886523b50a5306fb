//! Hilbert multifunctions and curvilinear blocks along a fixed line.
use equichow::staircases::{
    hilbert_multifunction, line_blocks_local, MultiStaircase, Partition, Staircase,
};
use equichow::toricfan::{Fan, Subtorus};

fn main() {
    let fan = Fan::projective_plane();
    let z = MultiStaircase::new(
        fan.name(),
        vec![
            Staircase::from_heights(Partition::new(vec![2])),
            Staircase::from_heights(Partition::new(vec![1])),
            Staircase::empty(),
        ],
    );
    let w = Subtorus::through(1, 0).unwrap();
    println!("{} under cocharacter {:?}", z.id(), w.w());
    for (locus, h) in hilbert_multifunction(&fan, &z, w).pieces {
        println!("  {locus}: {h:?}");
    }
    for line in fan.classify_fixed_locus(w).lfix {
        let b = line_blocks_local(&z, line);
        println!("  line {line}: pieces {} blocks {:?}", b.pi, b.blocks);
    }
}
