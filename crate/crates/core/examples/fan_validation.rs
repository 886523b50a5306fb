//! Validates a few fans and prints their charts and lines.
use equichow::toricfan::Fan;

fn main() {
    for fan in [
        Fan::projective_plane(),
        Fan::p1_times_p1(),
        Fan::hirzebruch(2),
    ] {
        println!("{} rays {:?}", fan.name(), fan.rays());
        for c in fan.charts() {
            println!("  chart {}: u = {}, v = {}", c.index, c.u, c.v);
        }
        for l in fan.lines() {
            println!("  line {l}: character {}", fan.line_character(l, l.first));
        }
    }
    match Fan::from_json(r#"{"rays": [[1, 0], [1, 1], [-1, -1]]}"#) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
}
