//! Lists the torus fixed points of Hilb^d of a toric surface with tangent weights.
use equichow::fixedloci::FixedPointSet;
use equichow::toricfan::Fan;

fn main() {
    let d = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let set = FixedPointSet::new(&Fan::projective_plane(), d);
    println!("Hilb^{d}(P2): {} fixed points", set.len());
    for i in 0..set.len() {
        let t: Vec<String> = set.tangent(i).iter().map(|c| c.to_string()).collect();
        println!("  {}  {}", set.point(i).id(), t.join(" "));
    }
}
