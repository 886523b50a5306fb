//! The ordinary Chow ring of Hilb^2(P2): dimensions and structure constants.
use equichow::charpoly::fmt_rational;
use equichow::chowring::{chow_structure_constants, EquivariantModel};
use equichow::toricfan::Fan;

fn main() {
    let model = EquivariantModel::new(&Fan::projective_plane(), 2).unwrap();
    let ring = chow_structure_constants(&model, 4).unwrap();
    println!("dim A^k = {:?}", ring.betti);
    println!("dim A_T^k = {:?}", ring.equivariant_dims);
    for s in &ring.structure_constants {
        let c: Vec<String> = s.coefficients.iter().map(fmt_rational).collect();
        println!("e{:?} * e{:?} = [{}]", s.left, s.right, c.join(", "));
    }
}
