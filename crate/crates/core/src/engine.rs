//! Lock-step scheduler: every enabled node fires at once against a snapshot
//! of the current configuration.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::InitError;
use crate::protocol::{
    color_update, eval_predicates, fire, guards_from, Color, NeighborView, NodeState, Protocol,
    Rank, Rule, CORE_STATES,
};
use crate::topology::{bfs_oracle, Network, NodeId, Port};

/// Global state: one `NodeState` per node, root pinned.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub states: Vec<NodeState>,
    pub step_index: u64,
}

impl Configuration {
    pub fn state(&self, v: NodeId) -> NodeState {
        self.states[v]
    }

    pub fn has_overlay(&self) -> bool {
        self.states.iter().any(|s| s.color.is_some())
    }

    /// Encoded states joined by spaces.
    pub fn encode(&self) -> String {
        let parts: Vec<String> = self.states.iter().map(|s| s.to_string()).collect();
        parts.join(" ")
    }
}

/// What happened during one transition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StepRecord {
    /// Rule fired by each node; `None` at the root and at disabled nodes.
    pub fired: Vec<Option<Rule>>,
    /// Nodes with more than one enabled guard.
    pub multi_enabled_count: usize,
    /// Nodes whose overlay color changed.
    pub color_changes: Vec<NodeId>,
}

/// Initial configuration recipes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitSpec {
    /// `k = d mod 3`, `t = false`, `b = 0` everywhere below the root.
    Legal,
    AllReset,
    /// Full list including the root, which must be `0:T:1`.
    Explicit(Vec<NodeState>),
    Random(u64),
    /// Mixed-radix index over the `36^(n-1)` non-root assignments, lowest
    /// digit at the lowest non-root node id.
    Enumerated(u128),
}

/// `36^(n-1)`, saturating.
pub fn enumeration_size(net: &Network) -> u128 {
    let exp = (net.node_count() - 1) as u32;
    (CORE_STATES as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

/// Builds the initial configuration. With `overlay`, the root is Black and
/// other nodes start White unless the recipe says otherwise.
pub fn initial_configuration(
    net: &Network,
    spec: &InitSpec,
    overlay: bool,
) -> Result<Configuration, InitError> {
    let n = net.node_count();
    let root = net.root();
    let default_color = overlay.then_some(Color::White);
    let mut states = vec![NodeState::RESET.with_color(default_color); n];
    match spec {
        InitSpec::Legal => {
            let oracle = bfs_oracle(net);
            for v in net.non_root_nodes() {
                let d = oracle.dist[v];
                let color = overlay.then(|| if d.is_multiple_of(2) { Color::Black } else { Color::White });
                states[v] = NodeState::new(
                    Rank::from_mod3(d),
                    crate::protocol::Token::False,
                    crate::protocol::Bit::Zero,
                )
                .with_color(color);
            }
        }
        InitSpec::AllReset => {}
        InitSpec::Explicit(list) => {
            if list.len() != n {
                return Err(InitError::WrongLength { expected: n, found: list.len() });
            }
            if list[root].core() != NodeState::ROOT {
                return Err(InitError::IllegalRoot(list[root].to_string()));
            }
            for (v, s) in list.iter().enumerate() {
                states[v] = match (s.color, overlay) {
                    (Some(_), true) => *s,
                    (_, false) => s.core(),
                    (None, true) => s.with_color(default_color),
                };
            }
        }
        InitSpec::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for v in net.non_root_nodes() {
                let s = NodeState::from_core_index(rng.gen_range(0..CORE_STATES));
                let color = overlay.then(|| if rng.gen() { Color::Black } else { Color::White });
                states[v] = s.with_color(color);
            }
        }
        InitSpec::Enumerated(index) => {
            let size = enumeration_size(net);
            if *index >= size {
                return Err(InitError::IndexOutOfRange { index: *index, size });
            }
            let mut rest = *index;
            for v in net.non_root_nodes() {
                let digit = (rest % CORE_STATES as u128) as usize;
                rest /= CORE_STATES as u128;
                states[v] = NodeState::from_core_index(digit).with_color(default_color);
            }
        }
    }
    states[root] = NodeState::ROOT.with_color(overlay.then_some(Color::Black));
    Ok(Configuration { states, step_index: 0 })
}

/// Reusable buffers for repeated steps on one network.
#[derive(Debug)]
pub struct Stepper<'a> {
    net: &'a Network,
    proto: Protocol,
    view: Vec<(Port, NodeState)>,
}

impl<'a> Stepper<'a> {
    pub fn new(net: &'a Network, proto: Protocol) -> Self {
        Stepper { net, proto, view: Vec::new() }
    }

    pub fn network(&self) -> &'a Network {
        self.net
    }

    pub fn protocol(&self) -> &Protocol {
        &self.proto
    }

    /// One synchronous transition from `cur` into `next`.
    pub fn step_into(&mut self, cur: &[NodeState], next: &mut Vec<NodeState>, record: &mut StepRecord) {
        let net = self.net;
        let root = net.root();
        debug_assert_eq!(cur[root].core(), NodeState::ROOT, "root state drifted");
        next.clear();
        next.extend_from_slice(cur);
        record.fired.clear();
        record.fired.resize(cur.len(), None);
        record.multi_enabled_count = 0;
        record.color_changes.clear();
        for v in 0..cur.len() {
            if v == root {
                continue;
            }
            self.view.clear();
            self.view
                .extend(net.neighbors(v).iter().map(|&(p, u)| (p, cur[u])));
            let view = NeighborView::new(&self.view);
            let me = cur[v];
            let preds = eval_predicates(&self.proto, me, view);
            let guards = guards_from(&self.proto, me, &preds);
            if guards.len() > 1 {
                record.multi_enabled_count += 1;
            }
            let Some(rule) = guards.first() else { continue };
            let mut succ = fire(me, view, rule);
            if me.color.is_some() {
                if let Some(c) = color_update(me, view) {
                    if Some(c) != me.color {
                        record.color_changes.push(v);
                    }
                    succ.color = Some(c);
                }
            }
            next[v] = succ;
            record.fired[v] = Some(rule);
        }
    }
}

/// One synchronous transition.
pub fn step(net: &Network, proto: &Protocol, cfg: &Configuration) -> (Configuration, StepRecord) {
    let mut stepper = Stepper::new(net, *proto);
    let mut next = Vec::with_capacity(cfg.states.len());
    let mut record = StepRecord::default();
    stepper.step_into(&cfg.states, &mut next, &mut record);
    (Configuration { states: next, step_index: cfg.step_index + 1 }, record)
}

/// Decision returned by a monitor after observing a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Control {
    Continue,
    Stop,
}

/// Pull-based observer. `record` is the transition that produced `cfg`
/// (`None` for the initial configuration).
pub trait Monitor {
    type Reading;

    fn observe(&mut self, cfg: &Configuration, record: Option<&StepRecord>) -> (Self::Reading, Control);
}

/// Observes nothing and never stops.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoMonitor;

impl Monitor for NoMonitor {
    type Reading = ();

    fn observe(&mut self, _: &Configuration, _: Option<&StepRecord>) -> ((), Control) {
        ((), Control::Continue)
    }
}

/// An execution prefix.
#[derive(Clone, Debug)]
pub struct Trace<R = ()> {
    pub configurations: Vec<Configuration>,
    /// `records[i]` leads from `configurations[i]` to `configurations[i + 1]`.
    pub records: Vec<StepRecord>,
    pub readings: Vec<R>,
}

impl<R> Trace<R> {
    pub fn len(&self) -> usize {
        self.configurations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configurations.is_empty()
    }

    pub fn last(&self) -> &Configuration {
        self.configurations.last().expect("trace has at least one configuration")
    }
}

/// Runs up to `budget` steps, stopping early when the monitor says so.
pub fn run<M: Monitor>(
    net: &Network,
    proto: &Protocol,
    cfg: Configuration,
    budget: u64,
    monitor: &mut M,
) -> Trace<M::Reading> {
    let mut stepper = Stepper::new(net, *proto);
    let (reading, mut control) = monitor.observe(&cfg, None);
    let mut trace = Trace { configurations: vec![cfg], records: Vec::new(), readings: vec![reading] };
    let mut steps = 0;
    while steps < budget && control == Control::Continue {
        let cur = trace.last();
        let mut next = Vec::with_capacity(cur.states.len());
        let mut record = StepRecord::default();
        stepper.step_into(&cur.states, &mut next, &mut record);
        let cfg = Configuration { states: next, step_index: cur.step_index + 1 };
        let (reading, c) = monitor.observe(&cfg, Some(&record));
        control = c;
        trace.configurations.push(cfg);
        trace.records.push(record);
        trace.readings.push(reading);
        steps += 1;
    }
    trace
}

/// First repeated configuration: `(first occurrence, period)`.
pub fn detect_cycle<R>(trace: &Trace<R>) -> Option<(usize, usize)> {
    let mut seen: HashMap<&[NodeState], usize> = HashMap::new();
    for (i, cfg) in trace.configurations.iter().enumerate() {
        if let Some(&first) = seen.get(cfg.states.as_slice()) {
            return Some((first, i - first));
        }
        seen.insert(&cfg.states, i);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::{Bit, Token};

    fn path(n: usize) -> Network {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Network::from_edges(n, 0, &edges).unwrap()
    }

    #[test]
    fn enumerated_zero_is_first_state() {
        let net = path(3);
        let cfg = initial_configuration(&net, &InitSpec::Enumerated(0), false).unwrap();
        assert_eq!(cfg.encode(), "0:T:1 0:F:0 0:F:0");
        let last = initial_configuration(&net, &InitSpec::Enumerated(36 * 36 - 1), false).unwrap();
        assert_eq!(last.encode(), "0:T:1 -:W:^ -:W:^");
        assert!(matches!(
            initial_configuration(&net, &InitSpec::Enumerated(36 * 36), false),
            Err(InitError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn random_is_seeded() {
        let net = path(6);
        let a = initial_configuration(&net, &InitSpec::Random(7), false).unwrap();
        let b = initial_configuration(&net, &InitSpec::Random(7), false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn explicit_checks_length_and_root() {
        let net = path(2);
        let bad = vec![NodeState::RESET, NodeState::RESET];
        assert!(matches!(
            initial_configuration(&net, &InitSpec::Explicit(bad), false),
            Err(InitError::IllegalRoot(_))
        ));
        assert!(matches!(
            initial_configuration(&net, &InitSpec::Explicit(vec![NodeState::ROOT]), false),
            Err(InitError::WrongLength { .. })
        ));
    }

    #[test]
    fn all_reset_path() {
        let net = path(3);
        let cfg = initial_configuration(&net, &InitSpec::AllReset, false).unwrap();
        assert_eq!(cfg.encode(), "0:T:1 -:F:0 -:F:0");
    }

    #[test]
    fn budget_zero_gives_one_configuration() {
        let net = path(3);
        let cfg = initial_configuration(&net, &InitSpec::Legal, false).unwrap();
        let trace = run(&net, &Protocol::default(), cfg, 0, &mut NoMonitor);
        assert_eq!(trace.len(), 1);
        assert!(trace.records.is_empty());
    }

    #[test]
    fn single_edge_cycles_through_phases() {
        let net = path(2);
        let cfg = initial_configuration(&net, &InitSpec::Legal, false).unwrap();
        let trace = run(&net, &Protocol::default(), cfg, 12, &mut NoMonitor);
        let tokens: Vec<Token> = trace.configurations.iter().map(|c| c.states[1].token).collect();
        assert_eq!(&tokens[..4], &[Token::False, Token::True, Token::Wait, Token::False]);
        // the bit flips on every pass, so the configuration repeats after two
        assert_eq!(detect_cycle(&trace), Some((0, 6)));
        assert_eq!(trace.configurations[3].states[1].bit, Bit::One);
    }

    #[test]
    fn constant_trace_has_period_one() {
        let cfg = Configuration { states: vec![NodeState::ROOT], step_index: 0 };
        let trace: Trace = Trace {
            configurations: vec![cfg.clone(), cfg],
            records: vec![StepRecord::default()],
            readings: vec![(), ()],
        };
        assert_eq!(detect_cycle(&trace), Some((0, 1)));
    }

    #[test]
    fn root_never_fires() {
        let net = path(3);
        let cfg = initial_configuration(&net, &InitSpec::Random(3), false).unwrap();
        let trace = run(&net, &Protocol::default(), cfg, 20, &mut NoMonitor);
        for (c, r) in trace.configurations.iter().zip(&trace.records) {
            assert_eq!(c.states[0], NodeState::ROOT);
            assert_eq!(r.fired[0], None);
        }
    }
}
