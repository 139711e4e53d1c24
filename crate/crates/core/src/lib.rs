//! Synchronous lab for TokBin, a constant-space self-stabilizing BFS
//! spanning-tree protocol.
//!
//! Nodes hold a rank modulo 3, a three-phase token flag and one counter
//! bit: 36 states in total. The root streams tokens; each node forwards
//! every second one, so the nodes on a root path form a binary counter.

pub mod engine;
pub mod error;
pub mod protocol;
pub mod topology;
pub mod certify;
pub mod harness;
pub mod trace;
pub mod cli;
