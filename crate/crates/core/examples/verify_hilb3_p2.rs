//! Checks the relevance array and the fifteen relation families of Hilb^3(P2).
use equichow::chowring::EquivariantModel;
use equichow::hilb3p2::{relation_families, verify};
use equichow::toricfan::Fan;

fn main() {
    let model = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
    let v = verify(&model, 6, 0, 100);
    for a in &v.array {
        println!(
            "{}: {:?} {}",
            a.point,
            a.computed,
            if a.passed() { "ok" } else { "MISMATCH" }
        );
    }
    for (r, f) in relation_families().iter().zip(&v.families) {
        println!(
            "{:>2}. {}  {} failures",
            r.number,
            r.render(),
            f.failures.len()
        );
    }
    for d in &v.degrees {
        println!(
            "degree {}: module {} relations {} expected {}",
            d.degree, d.module_dim, d.relation_dim, d.expected_dim
        );
    }
    println!("{}", if v.passed() { "PASS" } else { "FAIL" });
}
