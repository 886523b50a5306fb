//! Graded dimensions of the equivariant Chow ring, by two independent routes.
use equichow::chowring::EquivariantModel;
use equichow::toricfan::Fan;

fn main() {
    let model = EquivariantModel::new(&Fan::p1_times_p1(), 2).unwrap();
    for k in 0..=4 {
        let span = model.equivariant_graded_basis(k);
        let solutions = model.congruence_solution_space(k);
        println!(
            "degree {k}: dim {} (congruence solutions {}), equal: {}",
            span.dim(),
            solutions.dim(),
            span == solutions
        );
    }
}
