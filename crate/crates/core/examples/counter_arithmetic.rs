//! Reads the distributed binary counter along a depth-9 chain.

use tokbin::certify::{latency_r, path_words, PATH_CAP};
use tokbin::engine::Configuration;
use tokbin::harness::suite;
use tokbin::protocol::NodeState;
use tokbin::topology::bfs_oracle;

fn main() {
    let net = suite::path(10);
    let tb = ["T1", "F1", "F0", "T0", "F1", "F0", "T1", "F0", "F0"];
    let mut states = vec![NodeState::ROOT];
    for (i, s) in tb.iter().enumerate() {
        states.push(format!("{}:{}:{}", (i + 1) % 3, &s[..1], &s[1..]).parse().unwrap());
    }
    let cfg = Configuration { states, step_index: 0 };
    let report = path_words(&bfs_oracle(&net), &cfg, 9, PATH_CAP).unwrap();
    let word = &report.paths[0];
    println!("b word {}", word.b_word());
    println!("t word {}", word.t_word());
    println!("counter {} = {}", word.b2().unwrap_or_default(), word.b10().unwrap_or_default());
    println!("full latency R(9) = {}", latency_r(9).unwrap());
    println!("remaining {:?}", report.remaining);
}
