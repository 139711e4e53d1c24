//! Rooted, port-numbered communication graphs and the ground-truth oracles
//! (BFS distances, r-components, bipartiteness) that the protocol never sees.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::TopologyError;

/// A locally assigned label for an incident edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Port(pub u32);

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Node index. Used for indexing and reporting only.
pub type NodeId = usize;

/// Graph-description document.
///
/// ```json
/// { "nodes": 3, "root": 0, "edges": [[0, 1], [1, 2]] }
/// ```
///
/// `ports`, when present, lists for every node the `[port, neighbor]` pairs
/// of all its incident edges. Without it, ports are `0, 1, 2, ...` in the
/// order neighbors first appear in `edges`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub nodes: usize,
    pub root: NodeId,
    pub edges: Vec<(NodeId, NodeId)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ports: Option<Vec<Vec<(u32, NodeId)>>>,
}

/// Immutable rooted port-numbered undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    root: NodeId,
    adjacency: Vec<Vec<(Port, NodeId)>>,
}

impl Network {
    /// Builds a network from an edge list with listing-order ports.
    pub fn from_edges(
        nodes: usize,
        root: NodeId,
        edges: &[(NodeId, NodeId)],
    ) -> Result<Self, TopologyError> {
        Self::from_doc(&GraphDoc {
            nodes,
            root,
            edges: edges.to_vec(),
            ports: None,
        })
    }

    pub fn from_doc(doc: &GraphDoc) -> Result<Self, TopologyError> {
        let n = doc.nodes;
        if n < 2 {
            return Err(TopologyError::TooFewNodes(n));
        }
        if doc.root >= n {
            return Err(TopologyError::RootOutOfRange { root: doc.root, nodes: n });
        }
        let mut seen = BTreeSet::new();
        let mut neighbors: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for &(a, b) in &doc.edges {
            if a >= n || b >= n {
                return Err(TopologyError::NodeOutOfRange { node: a.max(b), nodes: n });
            }
            if a == b {
                return Err(TopologyError::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(TopologyError::DuplicateEdge(a, b));
            }
            neighbors[a].push(b);
            neighbors[b].push(a);
        }

        let adjacency = match &doc.ports {
            None => neighbors
                .iter()
                .map(|ns| {
                    ns.iter()
                        .enumerate()
                        .map(|(i, &u)| (Port(i as u32), u))
                        .collect()
                })
                .collect(),
            Some(ports) => {
                if ports.len() != n {
                    return Err(TopologyError::PortTableLength { expected: n, found: ports.len() });
                }
                let mut adjacency = Vec::with_capacity(n);
                for (v, table) in ports.iter().enumerate() {
                    let mut used = BTreeSet::new();
                    let mut listed = BTreeSet::new();
                    let mut row = Vec::with_capacity(table.len());
                    for &(port, u) in table {
                        if !used.insert(port) {
                            return Err(TopologyError::DuplicatePort { node: v, port });
                        }
                        if !listed.insert(u) {
                            return Err(TopologyError::PortMismatch { node: v, neighbor: u });
                        }
                        row.push((Port(port), u));
                    }
                    let expected: BTreeSet<NodeId> = neighbors[v].iter().copied().collect();
                    if listed != expected {
                        let neighbor = listed
                            .symmetric_difference(&expected)
                            .next()
                            .copied()
                            .unwrap_or(v);
                        return Err(TopologyError::PortMismatch { node: v, neighbor });
                    }
                    adjacency.push(row);
                }
                adjacency
            }
        };

        let net = Network { root: doc.root, adjacency };
        if !net.is_connected() {
            return Err(TopologyError::Disconnected);
        }
        Ok(net)
    }

    /// Parses a JSON graph-description document.
    pub fn from_json(text: &str) -> Result<Self, TopologyError> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc)
    }

    /// The document this network was built from, with explicit ports.
    pub fn to_doc(&self) -> GraphDoc {
        let mut edges = Vec::new();
        for (v, row) in self.adjacency.iter().enumerate() {
            for &(_, u) in row {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        GraphDoc {
            nodes: self.node_count(),
            root: self.root,
            edges,
            ports: Some(
                self.adjacency
                    .iter()
                    .map(|row| row.iter().map(|&(p, u)| (p.0, u)).collect())
                    .collect(),
            ),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// `(port, neighbor)` pairs of `v`, in port-table order.
    pub fn neighbors(&self, v: NodeId) -> &[(Port, NodeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn port_to(&self, v: NodeId, u: NodeId) -> Option<Port> {
        self.adjacency[v].iter().find(|&&(_, w)| w == u).map(|&(p, _)| p)
    }

    pub fn neighbor_at(&self, v: NodeId, port: Port) -> Option<NodeId> {
        self.adjacency[v].iter().find(|&&(p, _)| p == port).map(|&(_, u)| u)
    }

    pub fn are_adjacent(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u].iter().any(|&(_, w)| w == v)
    }

    pub fn non_root_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count()).filter(move |&v| v != self.root)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        while let Some(v) = stack.pop() {
            for &(_, u) in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Hop distances from the root, eccentricity and predecessor sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceOracle {
    pub dist: Vec<usize>,
    pub eccentricity: usize,
    /// `preds[v]`: neighbors of `v` at distance `dist[v] - 1`, ascending.
    pub preds: Vec<Vec<NodeId>>,
}

impl DistanceOracle {
    /// BFS from the root.
    pub fn new(net: &Network) -> Self {
        let n = net.node_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[net.root()] = 0;
        queue.push_back(net.root());
        while let Some(v) = queue.pop_front() {
            for &(_, u) in net.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        let preds = (0..n)
            .map(|v| {
                let mut p: Vec<NodeId> = net
                    .neighbors(v)
                    .iter()
                    .map(|&(_, u)| u)
                    .filter(|&u| dist[u] + 1 == dist[v])
                    .collect();
                p.sort_unstable();
                p
            })
            .collect();
        let eccentricity = dist.iter().copied().max().unwrap_or(0);
        DistanceOracle { dist, eccentricity, preds }
    }

    /// Target rank of `v` in the BFS layering modulo 3.
    pub fn target_rank(&self, v: NodeId) -> u8 {
        (self.dist[v] % 3) as u8
    }
}

pub fn bfs_oracle(net: &Network) -> DistanceOracle {
    DistanceOracle::new(net)
}

/// Partition of the non-root nodes into connected components of `G - r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RComponents {
    /// Component id per node; `None` for the root.
    pub assignment: Vec<Option<usize>>,
    pub count: usize,
}

impl RComponents {
    pub fn of(&self, v: NodeId) -> Option<usize> {
        self.assignment[v]
    }

    pub fn same(&self, u: NodeId, v: NodeId) -> bool {
        matches!((self.of(u), self.of(v)), (Some(a), Some(b)) if a == b)
    }
}

pub fn r_components(net: &Network) -> RComponents {
    let n = net.node_count();
    let mut assignment = vec![None; n];
    let mut count = 0;
    for start in net.non_root_nodes() {
        if assignment[start].is_some() {
            continue;
        }
        assignment[start] = Some(count);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(_, u) in net.neighbors(v) {
                if u != net.root() && assignment[u].is_none() {
                    assignment[u] = Some(count);
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    RComponents { assignment, count }
}

/// Two-coloring witness: `side[v]` is `false` for the root's side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

/// `Some(partition)` iff the graph has no odd cycle.
pub fn is_bipartite(net: &Network) -> Option<Bipartition> {
    let oracle = DistanceOracle::new(net);
    let side: Vec<bool> = oracle.dist.iter().map(|d| d % 2 == 1).collect();
    for v in 0..net.node_count() {
        if net.neighbors(v).iter().any(|&(_, u)| side[u] == side[v]) {
            return None;
        }
    }
    Some(Bipartition { side })
}
