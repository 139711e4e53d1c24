//! Token inter-arrival times on stabilized chains.

use tokbin::cli::record_run;
use tokbin::engine::InitSpec;
use tokbin::harness::{inter_arrival, suite, token_arrivals};
use tokbin::protocol::Protocol;

fn main() {
    let depth = 5;
    let net = suite::path(depth + 1);
    let summary = record_run(&net, &Protocol::default(), &InitSpec::AllReset, false, 2000, 2).unwrap();
    let s = summary.stabilization_step.expect("chains stabilize");
    println!("stabilized at step {s}, configuration period {:?}", summary.period);
    for d in 1..=depth {
        let arrivals = token_arrivals(&summary.trace, d, s);
        println!("depth {d}: every {:?} steps, arrivals {:?}", inter_arrival(&arrivals), &arrivals[..arrivals.len().min(4)]);
    }
}
