//! Stabilizes a graph and extracts the BFS tree from the node states.

use tokbin::engine::{initial_configuration, Configuration, InitSpec};
use tokbin::harness::{certify_run, extract_bfs_tree, step_budget, suite};
use tokbin::protocol::Protocol;
use tokbin::topology::bfs_oracle;

fn main() {
    let net = suite::articulation();
    let cfg = initial_configuration(&net, &InitSpec::Random(42), false).unwrap();
    let out = certify_run(&net, &Protocol::default(), cfg, step_budget(&net), true);
    println!("converged {} at step {:?}, period {:?}", out.converged, out.stabilization_step, out.period);
    let last = Configuration { states: out.final_states, step_index: out.steps };
    let oracle = bfs_oracle(&net);
    match extract_bfs_tree(&net, &oracle, &last) {
        Ok(parents) => {
            for (v, p) in parents.iter().enumerate() {
                if let Some(p) = p {
                    println!("{v} -> {p} (distance {})", oracle.dist[v]);
                }
            }
        }
        Err(e) => println!("no tree: {e}"),
    }
}
