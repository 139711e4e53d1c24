//! Mutant protocols on crafted starts next to the standard protocol.

use tokbin::engine::{initial_configuration, InitSpec};
use tokbin::harness::{certify_run, step_budget, suite};
use tokbin::protocol::{NodeState, Protocol};
use tokbin::topology::Network;

fn main() {
    let cases: [(&str, Protocol, Network, &str); 2] = [
        ("printed-propagation", Protocol::with_printed_propagation(), suite::cycle(4), "0:T:1 0:F:^ 0:F:0 0:F:0"),
        ("no-er-rank", Protocol::without_er_rank(), suite::cycle(3), "0:T:1 1:F:0 0:F:0"),
    ];
    for (label, mutant, net, text) in cases {
        let states: Vec<NodeState> = text.split_whitespace().map(|s| s.parse().unwrap()).collect();
        for (name, proto) in [("standard", Protocol::default()), (label, mutant)] {
            let cfg = initial_configuration(&net, &InitSpec::Explicit(states.clone()), false).unwrap();
            let out = certify_run(&net, &proto, cfg, step_budget(&net), true);
            println!(
                "[{text}] {name}: converged {} at {:?}, livelock period {:?}, violations {}",
                out.converged, out.stabilization_step, out.livelock_period, out.violations.len()
            );
        }
    }
}
