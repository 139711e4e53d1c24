//! Runs the color overlay on an even cycle and prints the settled coloring.

use tokbin::engine::{initial_configuration, run, InitSpec, NoMonitor};
use tokbin::harness::{coloring_window, step_budget, suite, verify_coloring};
use tokbin::protocol::Protocol;

fn main() {
    let net = suite::cycle(6);
    let cfg = initial_configuration(&net, &InitSpec::Random(3), true).unwrap();
    let budget = step_budget(&net) + coloring_window(&net);
    let trace = run(&net, &Protocol::default(), cfg, budget, &mut NoMonitor);
    println!("verdict {:?}", verify_coloring(&net, &trace).unwrap());
    println!("final {}", trace.last().encode());
}
