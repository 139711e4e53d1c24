//! Records a run as a JSON-lines trace, reads it back and audits it.

use std::io::BufReader;

use tokbin::cli::record_run;
use tokbin::engine::InitSpec;
use tokbin::harness::suite;
use tokbin::protocol::Protocol;
use tokbin::trace::TraceFile;

fn main() {
    let net = suite::diamond();
    let proto = Protocol::default();
    let summary = record_run(&net, &proto, &InitSpec::Random(7), true, 400, 1).unwrap();
    let file = TraceFile::from_trace(&net, &proto, &summary.trace, true);
    let mut bytes = Vec::new();
    file.write(&mut bytes).unwrap();
    let back = TraceFile::read(BufReader::new(bytes.as_slice())).unwrap();
    let audit = back.audit().unwrap();
    println!("{} bytes, {} records, {} steps replayed, {} findings", bytes.len(), back.records.len(), audit.steps, audit.findings.len());
    println!("{}", String::from_utf8_lossy(&bytes).lines().nth(1).unwrap_or_default());
}
