//! Lists the 36 core node states and their text encoding.

use tokbin::protocol::{NodeState, CORE_STATES};

fn main() {
    for s in NodeState::all_core() {
        let back: NodeState = s.to_string().parse().expect("encoding round trips");
        assert_eq!(back, s);
        println!("{:2}  {s}", s.core_index());
    }
    println!("{CORE_STATES} states");
}
