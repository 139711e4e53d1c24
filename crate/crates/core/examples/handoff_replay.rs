//! Steps a token down a chain one frame at a time and prints the rule
//! each node fired.

use tokbin::engine::{step, Configuration};
use tokbin::harness::suite;
use tokbin::protocol::{NodeState, Protocol};

fn main() {
    let net = suite::path(7);
    let start: Vec<NodeState> = "0:T:1 1:W:0 2:T:1 0:F:1 1:F:1 2:F:0 0:F:1"
        .split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut cfg = Configuration { states: start, step_index: 0 };
    println!("step 0: {}", cfg.encode());
    for _ in 0..4 {
        let (next, record) = step(&net, &Protocol::default(), &cfg);
        let fired: Vec<&str> = record.fired.iter().map(|r| r.map_or("-", |r| r.name())).collect();
        println!("step {}: {}   fired {}", next.step_index, next.encode(), fired.join(" "));
        cfg = next;
    }
}
