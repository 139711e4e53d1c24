//! A four-cycle configuration that never stabilizes, and the same start
//! under the cautious-join variant.

use tokbin::engine::{initial_configuration, InitSpec};
use tokbin::harness::{certify_run, step_budget, suite};
use tokbin::protocol::{NodeState, Protocol};

fn main() {
    let net = suite::cycle(4);
    let states: Vec<NodeState> = "0:T:1 -:F:0 1:F:1 0:F:0".split_whitespace().map(|s| s.parse().unwrap()).collect();
    for (label, proto) in [("standard", Protocol::default()), ("cautious-join", Protocol::with_cautious_join())] {
        let cfg = initial_configuration(&net, &InitSpec::Explicit(states.clone()), false).unwrap();
        let out = certify_run(&net, &proto, cfg, step_budget(&net), true);
        println!(
            "{label}: converged {} stabilization {:?} livelock period {:?}",
            out.converged, out.stabilization_step, out.livelock_period
        );
    }
}
