//! Sweeps over initial configurations: convergence certificates, lemma
//! monitors, tree extraction and the coloring check.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{is_legal, is_synchronized, legal_d, Certifier, PotentialReadings};
use crate::engine::{
    enumeration_size, initial_configuration, Configuration, Control, InitSpec, Monitor, StepRecord,
    Stepper, Trace,
};
use crate::error::HarnessError;
use crate::protocol::{parent_port, Color, NeighborView, NodeState, Protocol, Rule, Token};
use crate::topology::{bfs_oracle, is_bipartite, r_components, DistanceOracle, Network, NodeId, Port};

/// Largest exhaustive space accepted by default.
pub const EXHAUSTIVE_CAP: u128 = 2_000_000;

/// How many witnesses of each kind a report keeps.
const WITNESS_LIMIT: usize = 16;

/// Generous step budget `64 * 2^ecc + 8n + 16`.
pub fn step_budget(net: &Network) -> u64 {
    let ecc = bfs_oracle(net).eccentricity as u32;
    64 * (1u64 << ecc) + 8 * net.node_count() as u64 + 16
}

/// Which property a monitor violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Legal configurations stay legal with frozen ranks.
    Closure,
    /// One step reaches the error-free class.
    ErrorFreeEntry,
    /// The error-free class is never left.
    ErrorFreeClosure,
    /// Initial-token potential vanishes within n steps without growing.
    InitialTokens,
    /// Token holders in the token-clean class have legal ranks.
    TokenRank,
    /// Residual potential strictly decreases in the token-clean class.
    Residual,
    /// Join potential strictly decreases in the clean class.
    Join,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Closure,
        Check::ErrorFreeEntry,
        Check::ErrorFreeClosure,
        Check::InitialTokens,
        Check::TokenRank,
        Check::Residual,
        Check::Join,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Check::Closure => "closure",
            Check::ErrorFreeEntry => "error-free-entry",
            Check::ErrorFreeClosure => "error-free-closure",
            Check::InitialTokens => "initial-tokens",
            Check::TokenRank => "token-rank",
            Check::Residual => "residual",
            Check::Join => "join",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: Check,
    /// Index of the configuration where the check failed.
    pub step: u64,
    pub detail: String,
}

/// Per-execution state machine over the class readings.
#[derive(Clone, Debug)]
pub struct LemmaMonitor {
    n: u64,
    oracle: DistanceOracle,
    prev: Option<(PotentialReadings, Vec<NodeState>)>,
    error_free_since: Option<u64>,
    left_error_free: bool,
    reported: HashSet<Check>,
    pub violations: Vec<Violation>,
}

impl LemmaMonitor {
    pub fn new(net: &Network) -> Self {
        LemmaMonitor {
            n: net.node_count() as u64,
            oracle: bfs_oracle(net),
            prev: None,
            error_free_since: None,
            left_error_free: false,
            reported: HashSet::new(),
            violations: Vec::new(),
        }
    }

    fn flag(&mut self, check: Check, step: u64, detail: String) {
        // one entry per check and execution
        if self.reported.insert(check) {
            self.violations.push(Violation { check, step, detail });
        }
    }

    pub fn observe(&mut self, cfg: &Configuration, r: &PotentialReadings) {
        let step = cfg.step_index;
        if step == 1 && r.phi > 0 {
            self.flag(Check::ErrorFreeEntry, step, format!("Phi = {} after one step", r.phi));
        }
        if step > 1 && r.phi > 0 {
            self.flag(Check::ErrorFreeClosure, step, format!("Phi = {} at step {step}", r.phi));
        }
        if r.error_free && self.error_free_since.is_none() {
            self.error_free_since = Some(step);
        }
        if !r.error_free && self.error_free_since.is_some() {
            self.left_error_free = true;
        }
        if let (Some(since), Some(psi)) = (self.error_free_since, r.psi) {
            if psi > 0 && step >= since + self.n {
                self.flag(
                    Check::InitialTokens,
                    step,
                    format!("Psi = {psi} at {} steps after entering the error-free class", step - since),
                );
            }
        }
        if r.token_clean {
            let ld = legal_d(&self.oracle, cfg);
            if let Some(v) = (0..cfg.states.len())
                .find(|&v| cfg.states[v].token == Token::True && !ld[v])
            {
                self.flag(Check::TokenRank, step, format!("node {v} holds a token at {}", cfg.states[v]));
            }
        }
        if let Some((p, prev_states)) = &self.prev {
            let (p, prev_states) = (*p, prev_states.clone());
            if let (Some(a), Some(b)) = (p.psi, r.psi) {
                if b > a {
                    let detail = format!("Psi grew from {a} to {b}");
                    self.flag(Check::InitialTokens, step, detail);
                }
            }
            if let (Some(a), Some(b)) = (p.varrho_tenths, r.varrho_tenths) {
                if a > 0 && b >= a {
                    let detail = format!("varrho went from {a} to {b} tenths");
                    self.flag(Check::Residual, step, detail);
                }
            }
            if let (Some(a), Some(b)) = (p.xi_tenths, r.xi_tenths) {
                if a > 0 && b >= a {
                    let detail = format!("Xi went from {a} to {b} tenths");
                    self.flag(Check::Join, step, detail);
                }
            }
            if p.legal_class {
                if !r.legal_class {
                    self.flag(Check::Closure, step, "left the legal class".to_string());
                } else if let Some(v) =
                    (0..cfg.states.len()).find(|&v| cfg.states[v].rank != prev_states[v].rank)
                {
                    self.flag(Check::Closure, step, format!("rank of node {v} changed"));
                }
            }
        }
        self.prev = Some((*r, cfg.states.clone()));
    }

    /// Whether the execution ever fell back out of the error-free class.
    pub fn left_error_free(&self) -> bool {
        self.left_error_free
    }
}

/// Result of running one initial configuration to its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub converged: bool,
    /// First index of the final legal stretch.
    pub stabilization_step: Option<u64>,
    /// Configuration period observed while legal.
    pub period: Option<u64>,
    pub steps: u64,
    pub violations: Vec<Violation>,
    pub final_states: Vec<NodeState>,
    pub tree_ok: bool,
    /// Period of a cycle that never reaches the legal class, when the budget ran out on one.
    pub livelock_period: Option<u64>,
}

/// Steps `cfg` until it is legal and a configuration repeats while legal,
/// or the budget runs out.
pub fn certify_run(
    net: &Network,
    proto: &Protocol,
    cfg: Configuration,
    budget: u64,
    monitors: bool,
) -> RunOutcome {
    let mut certifier = Certifier::new(net, *proto);
    let mut monitor = LemmaMonitor::new(net);
    let mut stepper = Stepper::new(net, *proto);
    let mut seen: HashMap<Vec<NodeState>, u64> = HashMap::new();
    let mut stable_since: Option<u64> = None;
    let mut cur = cfg;
    let mut record = StepRecord::default();
    let mut next = Vec::new();
    let mut first = true;
    loop {
        let readings = certifier.observe(&cur, (!first).then_some(&record));
        first = false;
        if monitors {
            monitor.observe(&cur, &readings);
        }
        if readings.legal_class {
            if stable_since.is_none() {
                stable_since = Some(cur.step_index);
                seen.clear();
            }
            if let Some(&at) = seen.get(&cur.states) {
                let period = cur.step_index - at;
                let tree_ok = extract_bfs_tree(net, certifier.oracle(), &cur).is_ok();
                return RunOutcome {
                    converged: true,
                    stabilization_step: stable_since,
                    period: Some(period),
                    steps: cur.step_index,
                    violations: monitor.violations,
                    final_states: cur.states,
                    tree_ok,
                    livelock_period: None,
                };
            }
            seen.insert(cur.states.clone(), cur.step_index);
        } else {
            stable_since = None;
        }
        if cur.step_index >= budget {
            let livelock_period = find_cycle(&mut stepper, &cur.states, budget);
            return RunOutcome {
                converged: false,
                stabilization_step: None,
                period: None,
                steps: cur.step_index,
                violations: monitor.violations,
                final_states: cur.states,
                tree_ok: false,
                livelock_period,
            };
        }
        stepper.step_into(&cur.states, &mut next, &mut record);
        let states = std::mem::take(&mut next);
        next = std::mem::replace(&mut cur.states, states);
        cur.step_index += 1;
    }
}

/// Engine monitor for recorded runs: readings, lemma checks and the
/// periodic-legality certificate. Stops `extra_periods` periods after the
/// first repeat while legal.
#[derive(Clone, Debug)]
pub struct RunMonitor<'a> {
    certifier: Certifier<'a>,
    lemmas: LemmaMonitor,
    seen: HashMap<Vec<NodeState>, u64>,
    stable_since: Option<u64>,
    period: Option<u64>,
    certified_at: u64,
    pub extra_periods: u64,
}

impl<'a> RunMonitor<'a> {
    pub fn new(net: &'a Network, proto: Protocol) -> Self {
        RunMonitor {
            certifier: Certifier::new(net, proto),
            lemmas: LemmaMonitor::new(net),
            seen: HashMap::new(),
            stable_since: None,
            period: None,
            certified_at: 0,
            extra_periods: 0,
        }
    }

    /// Start of the final legal stretch, once periodicity is certified.
    pub fn stabilization_step(&self) -> Option<u64> {
        self.period.and(self.stable_since)
    }

    pub fn period(&self) -> Option<u64> {
        self.period
    }

    pub fn violations(&self) -> &[Violation] {
        &self.lemmas.violations
    }
}

impl Monitor for RunMonitor<'_> {
    type Reading = PotentialReadings;

    fn observe(&mut self, cfg: &Configuration, record: Option<&StepRecord>) -> (PotentialReadings, Control) {
        let r = self.certifier.observe(cfg, record);
        self.lemmas.observe(cfg, &r);
        if !r.legal_class {
            self.stable_since = None;
            self.period = None;
            self.seen.clear();
            return (r, Control::Continue);
        }
        if self.stable_since.is_none() {
            self.stable_since = Some(cfg.step_index);
        }
        if self.period.is_none() {
            if let Some(&at) = self.seen.get(&cfg.states) {
                self.period = Some(cfg.step_index - at);
                self.certified_at = cfg.step_index;
            } else {
                self.seen.insert(cfg.states.clone(), cfg.step_index);
            }
        }
        let stop = self
            .period
            .is_some_and(|p| cfg.step_index >= self.certified_at + p * self.extra_periods);
        (r, if stop { Control::Stop } else { Control::Continue })
    }
}

/// Steps at which `v` fired `R_tok`, from step `from` on.
pub fn token_arrivals<R>(trace: &Trace<R>, v: NodeId, from: u64) -> Vec<u64> {
    trace
        .records
        .iter()
        .enumerate()
        .filter(|(i, rec)| *i as u64 + 1 >= from && rec.fired[v] == Some(Rule::Tok))
        .map(|(i, _)| i as u64 + 1)
        .collect()
}

/// Common gap between consecutive arrivals; `None` with fewer than two
/// arrivals or unequal gaps.
pub fn inter_arrival(arrivals: &[u64]) -> Option<u64> {
    let mut gaps = arrivals.windows(2).map(|w| w[1] - w[0]);
    let first = gaps.next()?;
    gaps.all(|g| g == first).then_some(first)
}

/// Brent's cycle search from `start`, giving up after `limit` steps.
fn find_cycle(stepper: &mut Stepper, start: &[NodeState], limit: u64) -> Option<u64> {
    let mut record = StepRecord::default();
    let mut power = 1;
    let mut period = 1;
    let mut tortoise = start.to_vec();
    let mut hare = Vec::new();
    stepper.step_into(&tortoise, &mut hare, &mut record);
    let mut scratch = Vec::new();
    for _ in 0..limit {
        if tortoise == hare {
            return Some(period);
        }
        if power == period {
            tortoise.clone_from(&hare);
            power *= 2;
            period = 0;
        }
        stepper.step_into(&hare, &mut scratch, &mut record);
        std::mem::swap(&mut hare, &mut scratch);
        period += 1;
    }
    None
}

/// Sweep over initial configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum SweepMode {
    Exhaustive,
    Random { count: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct SweepPlan {
    pub network: Network,
    pub protocol: Protocol,
    pub mode: SweepMode,
    /// Defaults to [`step_budget`].
    pub budget: Option<u64>,
    pub monitors: bool,
    pub exhaustive_cap: u128,
}

impl SweepPlan {
    pub fn exhaustive(network: Network) -> Self {
        SweepPlan {
            network,
            protocol: Protocol::default(),
            mode: SweepMode::Exhaustive,
            budget: None,
            monitors: true,
            exhaustive_cap: EXHAUSTIVE_CAP,
        }
    }

    pub fn random(network: Network, count: u64, seed: u64) -> Self {
        SweepPlan { mode: SweepMode::Random { count, seed }, ..SweepPlan::exhaustive(network) }
    }

    pub fn with_protocol(mut self, protocol: Protocol) -> Self {
        self.protocol = protocol;
        self
    }

    pub fn total(&self) -> u64 {
        match self.mode {
            SweepMode::Exhaustive => enumeration_size(&self.network).min(u64::MAX as u128) as u64,
            SweepMode::Random { count, .. } => count,
        }
    }

    fn init_spec(&self, i: u64) -> InitSpec {
        match self.mode {
            SweepMode::Exhaustive => InitSpec::Enumerated(i as u128),
            SweepMode::Random { seed, .. } => InitSpec::Random(seed.wrapping_add(i)),
        }
    }
}

/// One failing execution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Position in the sweep.
    pub index: u64,
    pub initial: String,
    pub steps: u64,
    pub violations: Vec<Violation>,
    /// Set when the execution provably cycles outside the legal class.
    pub livelock_period: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub nodes: usize,
    pub eccentricity: usize,
    pub mode: SweepMode,
    pub protocol: Protocol,
    pub budget: u64,
    pub total: u64,
    pub converged: u64,
    /// Non-converged executions caught in a cycle, so no budget would help.
    pub livelocks: u64,
    pub max_steps: u64,
    pub mean_steps: f64,
    /// `max_steps / 2^ecc`.
    pub constant: f64,
    /// Converged executions whose final tree failed the oracle check.
    pub tree_failures: u64,
    /// Executions with at least one violation of each check.
    pub violation_counts: Vec<(Check, u64)>,
    pub non_converged: Vec<Witness>,
    pub violations: Vec<Witness>,
    /// Execution with the largest stabilization step.
    pub worst: Option<Witness>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.converged == self.total && self.violation_total() == 0 && self.tree_failures == 0
    }

    pub fn violation_total(&self) -> u64 {
        self.violation_counts.iter().map(|(_, c)| c).sum()
    }

    pub fn count(&self, check: Check) -> u64 {
        self.violation_counts
            .iter()
            .find(|(c, _)| *c == check)
            .map_or(0, |(_, n)| *n)
    }
}

#[derive(Clone, Debug, Default)]
struct Partial {
    total: u64,
    converged: u64,
    livelocks: u64,
    max_steps: u64,
    sum_steps: u128,
    tree_failures: u64,
    counts: [u64; 7],
    non_converged: Vec<Witness>,
    violations: Vec<Witness>,
    worst: Option<(u64, Witness)>,
}

impl Partial {
    fn merge(&mut self, other: Partial) {
        self.total += other.total;
        self.converged += other.converged;
        self.livelocks += other.livelocks;
        self.max_steps = self.max_steps.max(other.max_steps);
        self.sum_steps += other.sum_steps;
        self.tree_failures += other.tree_failures;
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        for w in other.non_converged {
            if self.non_converged.len() < WITNESS_LIMIT {
                self.non_converged.push(w);
            }
        }
        for w in other.violations {
            if self.violations.len() < WITNESS_LIMIT {
                self.violations.push(w);
            }
        }
        if let Some((s, w)) = other.worst {
            if self.worst.as_ref().is_none_or(|(best, _)| s > *best) {
                self.worst = Some((s, w));
            }
        }
    }
}

pub fn run_sweep(plan: &SweepPlan) -> Result<SweepReport, HarnessError> {
    let net = &plan.network;
    if plan.mode == SweepMode::Exhaustive {
        let size = enumeration_size(net);
        if size > plan.exhaustive_cap {
            return Err(HarnessError::ExhaustiveCap {
                exponent: (net.node_count() - 1) as u32,
                cap: plan.exhaustive_cap,
            });
        }
    }
    let budget = plan.budget.unwrap_or_else(|| step_budget(net));
    let total = plan.total();
    const CHUNK: u64 = 2048;
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let partials: Vec<Partial> = chunks
        .par_iter()
        .map(|&c| {
            let mut part = Partial::default();
            for i in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let cfg = initial_configuration(net, &plan.init_spec(i), false)
                    .expect("sweep indices stay in range");
                let initial = cfg.encode();
                let out = certify_run(net, &plan.protocol, cfg, budget, plan.monitors);
                part.total += 1;
                let witness = || Witness {
                    index: i,
                    initial: initial.clone(),
                    steps: out.steps,
                    violations: out.violations.clone(),
                    livelock_period: out.livelock_period,
                };
                if out.converged {
                    part.converged += 1;
                    let s = out.stabilization_step.unwrap_or(0);
                    part.max_steps = part.max_steps.max(s);
                    part.sum_steps += s as u128;
                    if part.worst.as_ref().is_none_or(|(best, _)| s > *best) {
                        part.worst = Some((s, witness()));
                    }
                    if !out.tree_ok {
                        part.tree_failures += 1;
                    }
                } else {
                    if out.livelock_period.is_some() {
                        part.livelocks += 1;
                    }
                    if part.non_converged.len() < WITNESS_LIMIT {
                        part.non_converged.push(witness());
                    }
                }
                if !out.violations.is_empty() {
                    for v in &out.violations {
                        part.counts[v.check as usize] += 1;
                    }
                    if part.violations.len() < WITNESS_LIMIT {
                        part.violations.push(witness());
                    }
                }
            }
            part
        })
        .collect();
    let mut agg = Partial::default();
    for p in partials {
        agg.merge(p);
    }
    let oracle = bfs_oracle(net);
    let ecc = oracle.eccentricity;
    Ok(SweepReport {
        nodes: net.node_count(),
        eccentricity: ecc,
        mode: plan.mode,
        protocol: plan.protocol,
        budget,
        total: agg.total,
        converged: agg.converged,
        livelocks: agg.livelocks,
        max_steps: agg.max_steps,
        mean_steps: if agg.converged == 0 { 0.0 } else { agg.sum_steps as f64 / agg.converged as f64 },
        constant: agg.max_steps as f64 / (1u64 << ecc) as f64,
        tree_failures: agg.tree_failures,
        violation_counts: Check::ALL.iter().map(|&c| (c, agg.counts[c as usize])).collect(),
        non_converged: agg.non_converged,
        violations: agg.violations,
        worst: agg.worst.map(|(_, w)| w),
    })
}

/// Parent of every non-root node: the neighbor behind its minimum parent
/// port. Checked against the distance oracle.
pub fn extract_bfs_tree(
    net: &Network,
    oracle: &DistanceOracle,
    cfg: &Configuration,
) -> Result<Vec<Option<NodeId>>, HarnessError> {
    if !is_legal(oracle, cfg) {
        return Err(HarnessError::NotLegal);
    }
    let mut parent = vec![None; net.node_count()];
    let mut view: Vec<(Port, NodeState)> = Vec::new();
    for v in net.non_root_nodes() {
        view.clear();
        view.extend(net.neighbors(v).iter().map(|&(p, u)| (p, cfg.states[u])));
        let port = parent_port(cfg.states[v], NeighborView::new(&view)).ok_or(HarnessError::NotLegal)?;
        let u = net.neighbor_at(v, port).ok_or(HarnessError::NotLegal)?;
        if oracle.dist[u] + 1 != oracle.dist[v] {
            return Err(HarnessError::NotLegal);
        }
        parent[v] = Some(u);
    }
    Ok(parent)
}

/// Outcome of the coloring check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringVerdict {
    Proper { settled_at: u64 },
    /// Edge still monochromatic, or a color changed, after settling.
    Failed { step: u64, edge: (NodeId, NodeId) },
    /// The protocol itself never stabilized in the trace.
    NotStabilized,
}

/// Settling window after stabilization: `(ecc + 1) * 3 * 2^ecc` steps.
pub fn coloring_window(net: &Network) -> u64 {
    let ecc = bfs_oracle(net).eccentricity as u64;
    (ecc + 1) * 3 * (1 << ecc)
}

/// Checks that the overlay becomes a proper 2-coloring with a Black root
/// within the settling window and stays fixed to the end of the trace.
pub fn verify_coloring<R>(net: &Network, trace: &Trace<R>) -> Result<ColoringVerdict, HarnessError> {
    let side = is_bipartite(net).ok_or(HarnessError::NotBipartite)?;
    if !trace.configurations.iter().all(Configuration::has_overlay) {
        return Err(HarnessError::NoOverlay);
    }
    let oracle = bfs_oracle(net);
    let components = r_components(net);
    let legal: Vec<bool> = trace
        .configurations
        .iter()
        .map(|c| is_legal(&oracle, c) && is_synchronized(&oracle, &components, c))
        .collect();
    let Some(stable) = (0..legal.len()).rev().take_while(|&i| legal[i]).last() else {
        return Ok(ColoringVerdict::NotStabilized);
    };
    let settle = stable + coloring_window(net) as usize;
    if settle >= trace.len() {
        return Ok(ColoringVerdict::NotStabilized);
    }
    let root = net.root();
    let expected = |v: NodeId| {
        if side.side[v] == side.side[root] { Color::Black } else { Color::White }
    };
    for cfg in &trace.configurations[settle..] {
        for v in 0..net.node_count() {
            if cfg.states[v].color != Some(expected(v)) {
                let edge = net
                    .neighbors(v)
                    .iter()
                    .map(|&(_, u)| (v.min(u), v.max(u)))
                    .find(|&(a, b)| cfg.states[a].color == cfg.states[b].color)
                    .unwrap_or((v, v));
                return Ok(ColoringVerdict::Failed { step: cfg.step_index, edge });
            }
        }
    }
    Ok(ColoringVerdict::Proper { settled_at: trace.configurations[settle].step_index })
}

/// Reference networks used by the sweeps. Node 0 is the root.
pub mod suite {
    use crate::topology::Network;

    fn build(n: usize, edges: &[(usize, usize)]) -> Network {
        Network::from_edges(n, 0, edges).expect("suite graphs are well formed")
    }

    pub fn path(n: usize) -> Network {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    pub fn cycle(n: usize) -> Network {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        build(n, &edges)
    }

    pub fn complete(n: usize) -> Network {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        build(n, &edges)
    }

    /// Root at the center with `leaves` leaves.
    pub fn star(leaves: usize) -> Network {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build(leaves + 1, &edges)
    }

    /// Two length-2 root paths into node 3, with a chord between the
    /// middle nodes.
    pub fn diamond() -> Network {
        build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    /// Triangle 0-1-2 plus the pendant path 0-3-4: the root separates
    /// the two parts.
    pub fn articulation() -> Network {
        build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])
    }

    /// The exhaustive suite with display names.
    pub fn standard() -> Vec<(&'static str, Network)> {
        vec![
            ("P2", path(2)),
            ("P3", path(3)),
            ("C3", cycle(3)),
            ("C4", cycle(4)),
            ("K4", complete(4)),
            ("S3", star(3)),
            ("diamond", diamond()),
            ("articulation", articulation()),
        ]
    }
}
