//! Runtime versions of the correctness argument: legality, configuration
//! classes and the potential functions that must decrease along executions.
//!
//! Fractional quantities are kept in tenths so every comparison is exact.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::engine::{Configuration, StepRecord};
use crate::error::CertifyError;
use crate::protocol::{eval_predicates, Bit, NeighborView, NodeState, Protocol, Rank, Rule, Token};
use crate::topology::{bfs_oracle, r_components, DistanceOracle, Network, NodeId, Port, RComponents};

/// Path enumeration gives up beyond this many shortest paths to one node.
pub const PATH_CAP: usize = 4096;

/// `Legal^d`: rank equals distance mod 3. Always true at the root.
pub fn legal_d(oracle: &DistanceOracle, cfg: &Configuration) -> Vec<bool> {
    cfg.states
        .iter()
        .enumerate()
        .map(|(v, s)| s.rank == Rank::from_mod3(oracle.dist[v]))
        .collect()
}

fn t_bit(s: NodeState) -> u128 {
    (s.token == Token::True) as u128
}

/// `Legal^pi`: all shortest root paths to `v` carry the same b-word and
/// t-word, and none of them holds an erroneous bit.
///
/// Computed bottom-up over the predecessor DAG: a node has a single word
/// when all its predecessors do and those words coincide.
pub fn legal_pi(oracle: &DistanceOracle, cfg: &Configuration) -> Vec<bool> {
    let n = cfg.states.len();
    let mut word: Vec<Option<(u128, u128)>> = vec![None; n];
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_by_key(|&v| oracle.dist[v]);
    for v in order {
        let s = cfg.states[v];
        let Some(b) = s.bit.value() else { continue };
        let own = ((b as u128) << oracle.dist[v], t_bit(s) << oracle.dist[v]);
        if oracle.dist[v] == 0 {
            word[v] = Some(own);
            continue;
        }
        let mut common: Option<(u128, u128)> = None;
        let mut ok = true;
        for &p in &oracle.preds[v] {
            match (word[p], common) {
                (None, _) => ok = false,
                (Some(w), None) => common = Some(w),
                (Some(w), Some(c)) => ok &= w == c,
            }
        }
        if ok {
            word[v] = common.map(|(cb, ct)| (cb | own.0, ct | own.1));
        }
    }
    word.iter().map(Option::is_some).collect()
}

/// Per-node `Legal = Legal^d && Legal^pi`.
pub fn legal_nodes(oracle: &DistanceOracle, cfg: &Configuration) -> Vec<bool> {
    legal_d(oracle, cfg)
        .into_iter()
        .zip(legal_pi(oracle, cfg))
        .map(|(d, p)| d && p)
        .collect()
}

pub fn is_legal(oracle: &DistanceOracle, cfg: &Configuration) -> bool {
    legal_nodes(oracle, cfg).into_iter().all(|x| x)
}

/// Whether nodes at the same distance in the same r-component share one
/// core state. Root paths inside a component then all read the same words.
pub fn is_synchronized(
    oracle: &DistanceOracle,
    components: &RComponents,
    cfg: &Configuration,
) -> bool {
    let mut seen: HashMap<(usize, usize), NodeState> = HashMap::new();
    for (v, s) in cfg.states.iter().enumerate() {
        let Some(c) = components.of(v) else { continue };
        match seen.entry((c, oracle.dist[v])) {
            Entry::Occupied(e) => {
                if e.get().core() != s.core() {
                    return false;
                }
            }
            Entry::Vacant(e) => {
                e.insert(*s);
            }
        }
    }
    true
}

fn with_view<T>(net: &Network, cfg: &Configuration, v: NodeId, f: impl FnOnce(NeighborView<'_>) -> T) -> T {
    let entries: Vec<(Port, NodeState)> =
        net.neighbors(v).iter().map(|&(p, u)| (p, cfg.states[u])).collect();
    f(NeighborView::new(&entries))
}

/// Nodes carrying an obvious error (`Er_var`, `Er_tp` or `Er_N`).
pub fn obvious_errors(net: &Network, proto: &Protocol, cfg: &Configuration) -> Vec<NodeId> {
    net.non_root_nodes()
        .filter(|&v| {
            with_view(net, cfg, v, |view| eval_predicates(proto, cfg.states[v], view).obvious_error())
        })
        .collect()
}

/// `Phi`: number of nodes with an obvious error.
pub fn obvious_error_potential(net: &Network, proto: &Protocol, cfg: &Configuration) -> u64 {
    obvious_errors(net, proto, cfg).len() as u64
}

/// Token holders split by bit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenSets {
    pub all: Vec<NodeId>,
    pub zero: Vec<NodeId>,
    pub one: Vec<NodeId>,
}

pub fn token_sets(cfg: &Configuration) -> TokenSets {
    let mut sets = TokenSets::default();
    for (v, s) in cfg.states.iter().enumerate() {
        if s.token != Token::True {
            continue;
        }
        sets.all.push(v);
        match s.bit {
            Bit::Zero => sets.zero.push(v),
            Bit::One => sets.one.push(v),
            Bit::Top => {}
        }
    }
    sets
}

fn is_child(parent: NodeState, child: NodeState) -> bool {
    parent.rank.is_ranked() && child.rank == parent.rank.child()
}

fn ss1_member(net: &Network, s: NodeState, v: NodeId) -> bool {
    v != net.root() && s.token != Token::True && s.bit == Bit::One
}

/// `SS^1(v)` with distances: nodes without a token and with `b = 1`
/// reachable from `v` by child links through such nodes. `v` is excluded.
pub fn ss1_distances(net: &Network, cfg: &Configuration, v: NodeId) -> Vec<(NodeId, usize)> {
    let n = cfg.states.len();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::from([v]);
    dist[v] = 0;
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for &(_, u) in net.neighbors(w) {
            if dist[u] == usize::MAX
                && is_child(cfg.states[w], cfg.states[u])
                && ss1_member(net, cfg.states[u], u)
            {
                dist[u] = dist[w] + 1;
                out.push((u, dist[u]));
                queue.push_back(u);
            }
        }
    }
    out
}

pub fn ss1(net: &Network, cfg: &Configuration, v: NodeId) -> Vec<NodeId> {
    let mut nodes: Vec<NodeId> = ss1_distances(net, cfg, v).into_iter().map(|(u, _)| u).collect();
    nodes.sort_unstable();
    nodes
}

/// `SS^1` of every `T^1` holder, root included.
pub fn ss1_structures(net: &Network, cfg: &Configuration) -> Vec<(NodeId, Vec<NodeId>)> {
    token_sets(cfg).one.into_iter().map(|v| (v, ss1(net, cfg, v))).collect()
}

/// Tracks which tokens descend from the tokens present when the execution
/// first entered the error-free class.
#[derive(Clone, Debug, Default)]
pub struct TokenLineage {
    members: Option<Vec<bool>>,
    prev: Vec<NodeState>,
}

impl TokenLineage {
    pub fn new() -> Self {
        TokenLineage::default()
    }

    pub fn started(&self) -> bool {
        self.members.is_some()
    }

    /// Lineage holders of `cfg`. Starts on the first call with
    /// `error_free` set; `record` is the transition into `cfg`.
    pub fn advance(
        &mut self,
        net: &Network,
        cfg: &Configuration,
        record: Option<&StepRecord>,
        error_free: bool,
    ) -> Option<&[bool]> {
        let root = net.root();
        let next = match (&self.members, record) {
            (Some(members), Some(record)) => {
                let mut next = vec![false; cfg.states.len()];
                for v in net.non_root_nodes() {
                    if record.fired[v] != Some(Rule::Tok) {
                        continue;
                    }
                    let me = self.prev[v];
                    next[v] = net
                        .neighbors(v)
                        .iter()
                        .any(|&(_, u)| members[u] && self.prev[u].rank == me.rank.parent() && me.rank.is_ranked());
                }
                Some(next)
            }
            (Some(members), None) => Some(members.clone()),
            (None, _) if error_free => Some(
                cfg.states
                    .iter()
                    .enumerate()
                    .map(|(v, s)| v != root && s.token == Token::True)
                    .collect(),
            ),
            (None, _) => None,
        };
        self.members = next;
        self.prev.clone_from(&cfg.states);
        self.members.as_deref()
    }
}

/// Nodes a token at `v` can still reach: `v` itself and, when `v` offers,
/// its `SS^1` plus every child of `v` or of an `SS^1` member.
pub fn token_reach(net: &Network, cfg: &Configuration, v: NodeId) -> Vec<NodeId> {
    let mut reach = vec![v];
    if cfg.states[v].offers_token() {
        let mut inner = vec![v];
        inner.extend(ss1_distances(net, cfg, v).into_iter().map(|(u, _)| u));
        for &w in &inner {
            for &(_, u) in net.neighbors(w) {
                if u != net.root() && is_child(cfg.states[w], cfg.states[u]) {
                    reach.push(u);
                }
            }
        }
        reach.extend(inner);
    }
    reach.sort_unstable();
    reach.dedup();
    reach
}

/// `Psi` given the lineage holders: how many nodes their tokens can still
/// reach, counting each node once.
pub fn psi_with_lineage(net: &Network, cfg: &Configuration, lineage: &[bool]) -> u64 {
    let mut hit = vec![false; cfg.states.len()];
    for v in token_sets(cfg).all.into_iter().filter(|&v| lineage[v]) {
        for u in token_reach(net, cfg, v) {
            hit[u] = true;
        }
    }
    hit.iter().filter(|&&h| h).count() as u64
}

/// `Psi` on an isolated configuration, which is its own starting point.
pub fn initial_token_potential(net: &Network, cfg: &Configuration) -> u64 {
    let lineage: Vec<bool> = (0..cfg.states.len()).map(|v| v != net.root()).collect();
    psi_with_lineage(net, cfg, &lineage)
}

/// `R(d) = (2^(d-1) - 1) * 3 + d - 1`: steps until a node at distance `d`
/// first sees a token, starting from an empty counter.
pub fn latency_r(d: usize) -> Result<u64, CertifyError> {
    if d == 0 {
        return Err(CertifyError::RootLatency);
    }
    Ok(((1u64 << (d - 1)) - 1) * 3 + d as u64 - 1)
}

/// Words read along one shortest root path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWord {
    /// Root first, target last.
    pub nodes: Vec<NodeId>,
    pub b: Vec<Bit>,
    /// Token flag projected to 1 for `true`, 0 otherwise.
    pub t: Vec<u8>,
}

impl PathWord {
    /// Counter value: `sum (b_i + t_i) * 2^i` over the non-root nodes,
    /// `i = 0` next to the root. `None` if an erroneous bit occurs.
    pub fn b10(&self) -> Option<u64> {
        let mut total = 0u64;
        for (i, (b, t)) in self.b.iter().zip(&self.t).enumerate().skip(1) {
            total += (b.value()? as u64 + *t as u64) << (i - 1);
        }
        Some(total)
    }

    /// Binary form of [`PathWord::b10`], most significant digit first.
    pub fn b2(&self) -> Option<String> {
        self.b10().map(|x| format!("{x:b}"))
    }

    pub fn b_word(&self) -> String {
        self.b
            .iter()
            .map(|b| match b {
                Bit::Zero => '0',
                Bit::One => '1',
                Bit::Top => '^',
            })
            .collect()
    }

    pub fn t_word(&self) -> String {
        self.t.iter().map(|t| if *t == 1 { '1' } else { '0' }).collect()
    }
}

/// All shortest root paths to `v` with their words, the best counter
/// value and the remaining latency `R(d) - max B10`.
#[derive(Clone, Debug)]
pub struct PathReport {
    pub paths: Vec<PathWord>,
    pub best: Option<u64>,
    pub remaining: Option<i64>,
}

pub fn path_words(
    oracle: &DistanceOracle,
    cfg: &Configuration,
    v: NodeId,
    cap: usize,
) -> Result<PathReport, CertifyError> {
    let mut paths: Vec<Vec<NodeId>> = Vec::new();
    let mut stack = vec![vec![v]];
    while let Some(partial) = stack.pop() {
        let head = *partial.last().expect("non-empty");
        if oracle.dist[head] == 0 {
            let mut p = partial;
            p.reverse();
            paths.push(p);
            if paths.len() > cap {
                return Err(CertifyError::PathCap { node: v, cap });
            }
            continue;
        }
        for &p in oracle.preds[head].iter().rev() {
            let mut next = partial.clone();
            next.push(p);
            stack.push(next);
        }
    }
    let paths: Vec<PathWord> = paths
        .into_iter()
        .map(|nodes| PathWord {
            b: nodes.iter().map(|&u| cfg.states[u].bit).collect(),
            t: nodes.iter().map(|&u| t_bit(cfg.states[u]) as u8).collect(),
            nodes,
        })
        .collect();
    let best = paths.iter().map(PathWord::b10).collect::<Option<Vec<_>>>().and_then(|xs| xs.into_iter().max());
    let remaining = match (best, oracle.dist[v]) {
        (Some(b), d) if d > 0 => Some(latency_r(d)? as i64 - b as i64),
        _ => None,
    };
    Ok(PathReport { paths, best, remaining })
}

/// Cleaner-wave quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanerWave {
    /// Nodes with `b = ^`.
    pub errors: Vec<NodeId>,
    /// Ranked nodes with a wrong rank.
    pub wrong_rank: Vec<NodeId>,
    /// Ranked nodes whose root paths disagree.
    pub wrong_path: Vec<NodeId>,
    /// Distance to the nearest erroneous node over paths whose interior
    /// avoids the root and other erroneous nodes; `None` for infinity.
    pub distance: Vec<Option<usize>>,
}

pub fn cleaner_wave(net: &Network, oracle: &DistanceOracle, cfg: &Configuration) -> CleanerWave {
    let n = cfg.states.len();
    let root = net.root();
    let errors: Vec<NodeId> = (0..n).filter(|&v| cfg.states[v].bit == Bit::Top).collect();
    let ld = legal_d(oracle, cfg);
    let lp = legal_pi(oracle, cfg);
    let ranked = |v: NodeId| v != root && cfg.states[v].rank.is_ranked();
    let wrong_rank = (0..n).filter(|&v| ranked(v) && !ld[v]).collect();
    let wrong_path = (0..n).filter(|&v| ranked(v) && !lp[v]).collect();

    let mut distance = vec![None; n];
    let mut queue = VecDeque::new();
    for &e in &errors {
        distance[e] = Some(0);
        queue.push_back(e);
    }
    while let Some(w) = queue.pop_front() {
        let dw = distance[w].expect("queued nodes have a distance");
        for &(_, u) in net.neighbors(w) {
            if u == root || distance[u].is_some() || cfg.states[u].bit == Bit::Top {
                continue;
            }
            distance[u] = Some(dw + 1);
            queue.push_back(u);
        }
    }
    for &e in &errors {
        distance[e] = None;
    }
    CleanerWave { errors, wrong_rank, wrong_path, distance }
}

/// Best counter value per node over its shortest root paths, reading
/// erroneous bits as 0.
fn best_counter(oracle: &DistanceOracle, cfg: &Configuration) -> Vec<u64> {
    let n = cfg.states.len();
    let mut best = vec![0u64; n];
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_by_key(|&v| oracle.dist[v]);
    for v in order {
        let d = oracle.dist[v];
        if d == 0 {
            continue;
        }
        let s = cfg.states[v];
        let own = (s.bit.value().unwrap_or(0) as u64 + t_bit(s) as u64) << (d - 1);
        let above = oracle.preds[v].iter().map(|&p| best[p]).max().unwrap_or(0);
        best[v] = own.saturating_add(above);
    }
    best
}

/// Tenths shaved off each node's remaining latency by the phase of the
/// root neighbors on its shortest root paths: 3 when they all wait, 6 when
/// they are all idle, 0 when they hold the token or disagree.
fn phase_decrements(oracle: &DistanceOracle, cfg: &Configuration) -> Vec<u64> {
    let n = cfg.states.len();
    let mut mask = vec![0u8; n];
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_by_key(|&v| oracle.dist[v]);
    for v in order {
        match oracle.dist[v] {
            0 => {}
            1 => mask[v] = 1 << cfg.states[v].token as u8,
            _ => mask[v] = oracle.preds[v].iter().fold(0, |m, &p| m | mask[p]),
        }
    }
    mask.into_iter()
        .map(|m| match m {
            m if m == 1 << Token::Wait as u8 => 3,
            m if m == 1 << Token::False as u8 => 6,
            _ => 0,
        })
        .collect()
}

/// `beta` in tenths: SS^1 distance from the nearest `T^1` holder when `v`
/// sits in one, otherwise the adjusted remaining latency.
pub fn beta_tenths(net: &Network, oracle: &DistanceOracle, cfg: &Configuration) -> Vec<u64> {
    let n = cfg.states.len();
    let mut ss = vec![usize::MAX; n];
    for v in token_sets(cfg).one {
        for (u, d) in ss1_distances(net, cfg, v) {
            ss[u] = ss[u].min(d);
        }
    }
    let best = best_counter(oracle, cfg);
    let dec = phase_decrements(oracle, cfg);
    (0..n)
        .map(|v| {
            if ss[v] != usize::MAX {
                return ss[v] as u64 * 10;
            }
            if oracle.dist[v] == 0 {
                return 0;
            }
            let r = latency_r(oracle.dist[v]).unwrap_or(u64::MAX);
            (r.saturating_sub(best[v]) * 10).saturating_sub(dec[v])
        })
        .collect()
}

/// `varrho` in tenths.
pub fn residual_potential(net: &Network, oracle: &DistanceOracle, cfg: &Configuration) -> u64 {
    residual_terms(net, oracle, cfg).iter().sum()
}

/// Per-node `rho` in tenths.
pub fn residual_terms(net: &Network, oracle: &DistanceOracle, cfg: &Configuration) -> Vec<u64> {
    let n = cfg.states.len() as u64;
    let wave = cleaner_wave(net, oracle, cfg);
    let beta = beta_tenths(net, oracle, cfg);
    let mut flagged = vec![false; cfg.states.len()];
    for &v in wave.wrong_rank.iter().chain(&wave.wrong_path) {
        flagged[v] = true;
    }
    (0..cfg.states.len())
        .map(|v| {
            if v == net.root() {
                0
            } else if cfg.states[v].bit == Bit::Top {
                10
            } else if flagged[v] {
                let e = wave.distance[v].map_or(u64::MAX, |e| e as u64 * 10);
                e.min(beta[v]) * n
            } else if let (Some(e), true) = (wave.distance[v], cfg.states[v].rank.is_ranked()) {
                e as u64 * 10 * n
            } else {
                0
            }
        })
        .collect()
}

/// `Xi` in tenths: `beta + 1` summed over reset nodes.
pub fn join_potential(net: &Network, oracle: &DistanceOracle, cfg: &Configuration) -> u64 {
    let beta = beta_tenths(net, oracle, cfg);
    net.non_root_nodes()
        .filter(|&v| cfg.states[v].is_reset())
        .map(|v| beta[v] + 10)
        .sum()
}

/// Potentials and class flags of one configuration. Finer readings are
/// only computed inside the class where they are defined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialReadings {
    #[serde(rename = "Phi")]
    pub phi: u64,
    #[serde(rename = "Psi")]
    pub psi: Option<u64>,
    pub varrho_tenths: Option<u64>,
    #[serde(rename = "Xi_tenths")]
    pub xi_tenths: Option<u64>,
    /// Every node satisfies `Legal`.
    pub legal: bool,
    /// Same-level nodes of each r-component share their state.
    pub synchronized: bool,
    pub error_free: bool,
    pub token_clean: bool,
    pub clean: bool,
    pub legal_class: bool,
}

/// Classifies configurations of one network, keeping the token lineage
/// across calls so `Psi` is measured against the execution's start.
#[derive(Clone, Debug)]
pub struct Certifier<'a> {
    net: &'a Network,
    proto: Protocol,
    oracle: DistanceOracle,
    components: RComponents,
    lineage: TokenLineage,
}

impl<'a> Certifier<'a> {
    pub fn new(net: &'a Network, proto: Protocol) -> Self {
        Certifier {
            net,
            proto,
            oracle: bfs_oracle(net),
            components: r_components(net),
            lineage: TokenLineage::new(),
        }
    }

    pub fn oracle(&self) -> &DistanceOracle {
        &self.oracle
    }

    pub fn components(&self) -> &RComponents {
        &self.components
    }

    pub fn network(&self) -> &'a Network {
        self.net
    }

    /// Forgets the lineage so the next configuration starts a new execution.
    pub fn reset(&mut self) {
        self.lineage = TokenLineage::new();
    }

    /// Readings for the next configuration of the execution.
    pub fn observe(&mut self, cfg: &Configuration, record: Option<&StepRecord>) -> PotentialReadings {
        let net = self.net;
        let phi = obvious_error_potential(net, &self.proto, cfg);
        let legal = is_legal(&self.oracle, cfg);
        let synchronized = is_synchronized(&self.oracle, &self.components, cfg);
        let mut r = PotentialReadings { phi, legal, synchronized, error_free: phi == 0, ..Default::default() };
        let lineage = self.lineage.advance(net, cfg, record, r.error_free);
        if !r.error_free {
            return r;
        }
        let lineage = lineage.expect("lineage starts in the error-free class");
        let psi = psi_with_lineage(net, cfg, lineage);
        r.psi = Some(psi);
        r.token_clean = psi == 0;
        if !r.token_clean {
            return r;
        }
        let varrho = residual_potential(net, &self.oracle, cfg);
        r.varrho_tenths = Some(varrho);
        r.clean = varrho == 0;
        if !r.clean {
            return r;
        }
        let xi = join_potential(net, &self.oracle, cfg);
        r.xi_tenths = Some(xi);
        r.legal_class = legal && synchronized;
        r
    }
}

/// Readings of an isolated configuration.
pub fn classify(net: &Network, proto: &Protocol, cfg: &Configuration) -> PotentialReadings {
    Certifier::new(net, *proto).observe(cfg, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{initial_configuration, InitSpec};

    fn path(n: usize) -> Network {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Network::from_edges(n, 0, &edges).unwrap()
    }

    fn cfg(states: &str) -> Configuration {
        Configuration {
            states: states.split_whitespace().map(|s| s.parse().unwrap()).collect(),
            step_index: 0,
        }
    }

    #[test]
    fn legal_d_examples() {
        let net = path(4);
        let o = bfs_oracle(&net);
        assert!(legal_d(&o, &cfg("0:T:1 1:F:0 2:F:0 0:F:0")).iter().all(|&x| x));
        assert!(!legal_d(&o, &cfg("0:T:1 1:F:0 -:F:0 0:F:0"))[2]);
        assert!(!legal_d(&o, &cfg("0:T:1 2:F:0 2:F:0 0:F:0"))[1]);
    }

    #[test]
    fn latency_values() {
        assert_eq!(latency_r(1).unwrap(), 0);
        assert_eq!(latency_r(2).unwrap(), 4);
        assert_eq!(latency_r(9).unwrap(), 773);
        assert!(latency_r(0).is_err());
    }

    #[test]
    fn ss1_chain() {
        let net = path(5);
        let c = cfg("0:T:1 1:T:1 2:F:1 0:F:1 1:F:1");
        assert_eq!(ss1(&net, &c, 1), vec![2, 3, 4]);
        let c = cfg("0:T:1 1:T:1 2:F:0 0:F:1 1:F:1");
        assert!(ss1(&net, &c, 1).is_empty());
    }

    #[test]
    fn classify_legal_and_reset() {
        let net = path(4);
        let legal = initial_configuration(&net, &InitSpec::Legal, false).unwrap();
        let r = classify(&net, &Protocol::default(), &legal);
        assert!(r.error_free && r.token_clean && r.clean && r.legal_class);
        let reset = initial_configuration(&net, &InitSpec::AllReset, false).unwrap();
        let r = classify(&net, &Protocol::default(), &reset);
        assert!(r.error_free && !r.legal_class);
        let bad = cfg("0:T:1 -:T:0 -:F:0 -:F:0");
        assert!(!classify(&net, &Protocol::default(), &bad).error_free);
    }

    #[test]
    fn cleaner_distance() {
        let net = path(4);
        let o = bfs_oracle(&net);
        let wave = cleaner_wave(&net, &o, &cfg("0:T:1 1:F:0 2:W:^ 0:F:0"));
        assert_eq!(wave.distance, vec![None, Some(1), None, Some(1)]);
        let wave = cleaner_wave(&net, &o, &cfg("0:T:1 1:F:0 2:F:0 0:F:0"));
        assert!(wave.distance.iter().all(Option::is_none));
    }

    #[test]
    fn lone_reset_next_to_root_is_one_step_from_joining() {
        let net = path(2);
        let o = bfs_oracle(&net);
        assert_eq!(join_potential(&net, &o, &cfg("0:T:1 -:F:0")), 10);
    }
}
