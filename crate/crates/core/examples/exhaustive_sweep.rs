//! Exhaustive sweep of one suite graph.
//!
//! `cargo run --release --example exhaustive_sweep -- C4`

use tokbin::cli::write_report_summary;
use tokbin::harness::{run_sweep, suite, SweepPlan};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C3".to_string());
    let Some((_, net)) = suite::standard().into_iter().find(|(n, _)| *n == name) else {
        eprintln!("unknown suite graph {name}");
        std::process::exit(2);
    };
    let report = run_sweep(&SweepPlan::exhaustive(net)).expect("suite graphs fit the cap");
    write_report_summary(&report, &mut std::io::stdout()).unwrap();
}
