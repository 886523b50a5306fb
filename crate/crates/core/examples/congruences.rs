//! Module generators and congruence relations of each fixed component.
use equichow::chowring::EquivariantModel;
use equichow::toricfan::Fan;

fn main() {
    let model = EquivariantModel::new(&Fan::projective_plane(), 2).unwrap();
    let set = model.fixed_points();
    for s in model.subtori() {
        println!("cocharacter {:?}", s.subtorus.w());
        for sys in &s.congruences {
            for r in &sys.relations {
                let terms: Vec<String> = r
                    .points
                    .iter()
                    .zip(&r.coefficients)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&p, c)| format!("({c}) {}", set.point(p).id()))
                    .collect();
                println!("  {} ≡ 0 mod {}", terms.join(" + "), r.modulus());
            }
        }
    }
}
