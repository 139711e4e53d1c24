use thiserror::Error;

use crate::topology::NodeId;

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("malformed graph document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("a network needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("root {root} out of range for {nodes} nodes")]
    RootOutOfRange { root: NodeId, nodes: usize },
    #[error("node {node} out of range for {nodes} nodes")]
    NodeOutOfRange { node: NodeId, nodes: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(NodeId, NodeId),
    #[error("port table has {found} rows, expected {expected}")]
    PortTableLength { expected: usize, found: usize },
    #[error("duplicate port {port} at node {node}")]
    DuplicatePort { node: NodeId, port: u32 },
    #[error("port table of node {node} disagrees with the edge list at neighbor {neighbor}")]
    PortMismatch { node: NodeId, neighbor: NodeId },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateParseError {
    #[error("bad node state `{0}`: expected rank:token:bit[:color]")]
    Shape(String),
    #[error("bad rank `{0}`")]
    Rank(String),
    #[error("bad token `{0}`")]
    Token(String),
    #[error("bad bit `{0}`")]
    Bit(String),
    #[error("bad color `{0}`")]
    Color(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InitError {
    #[error("explicit configuration has {found} states, network has {expected} nodes")]
    WrongLength { expected: usize, found: usize },
    #[error("enumeration index {index} out of range (space has {size} configurations)")]
    IndexOutOfRange { index: u128, size: u128 },
    #[error("root state must be 0:T:1, got {0}")]
    IllegalRoot(String),
    #[error(transparent)]
    State(#[from] StateParseError),
}

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("node {node} has more than {cap} shortest paths")]
    PathCap { node: NodeId, cap: usize },
    #[error("distance must be at least 1")]
    RootLatency,
    #[error("node {0} is not a legal configuration member")]
    NotLegal(NodeId),
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed trace at line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("empty trace")]
    Empty,
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("exhaustive sweep needs 36^{exponent} configurations, above the cap of {cap}")]
    ExhaustiveCap { exponent: u32, cap: u128 },
    #[error("configuration is not legal")]
    NotLegal,
    #[error("network is not bipartite")]
    NotBipartite,
    #[error("color overlay is not enabled on this trace")]
    NoOverlay,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("graph: {0}")]
    Topology(#[from] TopologyError),
    #[error("init: {0}")]
    Init(#[from] InitError),
    #[error("trace: {0}")]
    Trace(#[from] TraceError),
    #[error("sweep: {0}")]
    Harness(#[from] HarnessError),
    #[error("{0}")]
    Usage(String),
}
