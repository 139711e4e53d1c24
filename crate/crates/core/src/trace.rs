//! Line-delimited JSON traces and their post-hoc audit.
//!
//! Line 1 is a header: `{"format":"tokbin-trace","version":1,"graph":{..},
//! "protocol":{..},"monitors":bool}`. Every further line is one
//! configuration: `{"step":n,"states":["0:T:1",..],"fired":["-",..]}` plus,
//! when monitors are on, the readings `Phi`, `Psi`, `varrho_tenths`,
//! `Xi_tenths` and the class flags. `fired[v]` names the rule that produced
//! the state of `v` in this configuration (`-` when none fired).

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::certify::{Certifier, PotentialReadings};
use crate::engine::{Configuration, StepRecord, Stepper, Trace};
use crate::error::TraceError;
use crate::harness::{LemmaMonitor, Violation};
use crate::protocol::{NodeState, Protocol, Rule};
use crate::topology::{GraphDoc, Network, NodeId};

pub const FORMAT: &str = "tokbin-trace";
pub const VERSION: u32 = 1;

const NONE_FIRED: &str = "-";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceHeader {
    pub format: String,
    pub version: u32,
    pub graph: GraphDoc,
    pub protocol: Protocol,
    pub monitors: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: u64,
    pub states: Vec<String>,
    pub fired: Vec<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub readings: Option<PotentialReadings>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceFile {
    pub header: TraceHeader,
    pub records: Vec<TraceRecord>,
}

impl TraceFile {
    /// Encodes an engine trace. Readings are kept only when `monitors`.
    pub fn from_trace(net: &Network, proto: &Protocol, trace: &Trace<PotentialReadings>, monitors: bool) -> Self {
        let n = net.node_count();
        let records = trace
            .configurations
            .iter()
            .enumerate()
            .map(|(i, cfg)| {
                let fired = match i.checked_sub(1) {
                    Some(j) => trace.records[j].fired.iter().map(|r| r.map_or(NONE_FIRED, Rule::name).to_string()).collect(),
                    None => vec![NONE_FIRED.to_string(); n],
                };
                TraceRecord {
                    step: cfg.step_index,
                    states: cfg.states.iter().map(NodeState::to_string).collect(),
                    fired,
                    readings: monitors.then(|| trace.readings[i]),
                }
            })
            .collect();
        TraceFile {
            header: TraceHeader {
                format: FORMAT.to_string(),
                version: VERSION,
                graph: net.to_doc(),
                protocol: *proto,
                monitors,
            },
            records,
        }
    }

    pub fn write<W: Write>(&self, mut w: W) -> Result<(), TraceError> {
        serde_json::to_writer(&mut w, &self.header).map_err(std::io::Error::from)?;
        writeln!(w)?;
        for rec in &self.records {
            serde_json::to_writer(&mut w, rec).map_err(std::io::Error::from)?;
            writeln!(w)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read<R: BufRead>(r: R) -> Result<Self, TraceError> {
        let mut lines = r.lines().enumerate().filter(|(_, l)| !matches!(l, Ok(s) if s.trim().is_empty()));
        let Some((_, first)) = lines.next() else {
            return Err(TraceError::Empty);
        };
        let header: TraceHeader = serde_json::from_str(&first?)
            .map_err(|e| TraceError::Malformed { line: 1, reason: e.to_string() })?;
        if header.format != FORMAT || header.version != VERSION {
            return Err(TraceError::Malformed {
                line: 1,
                reason: format!("unsupported format {} v{}", header.format, header.version),
            });
        }
        let mut records = Vec::new();
        for (i, line) in lines {
            let rec: TraceRecord = serde_json::from_str(&line?)
                .map_err(|e| TraceError::Malformed { line: i + 1, reason: e.to_string() })?;
            records.push(rec);
        }
        if records.is_empty() {
            return Err(TraceError::Empty);
        }
        Ok(TraceFile { header, records })
    }

    /// Decodes the network and the configurations, checking shapes.
    pub fn decode(&self) -> Result<(Network, Vec<Configuration>), TraceError> {
        let net = Network::from_doc(&self.header.graph)?;
        let n = net.node_count();
        let mut cfgs = Vec::with_capacity(self.records.len());
        for (i, rec) in self.records.iter().enumerate() {
            let line = i + 2;
            let bad = |reason: String| TraceError::Malformed { line, reason };
            if rec.states.len() != n || rec.fired.len() != n {
                return Err(bad(format!("expected {n} states and {n} fired entries")));
            }
            let states = rec
                .states
                .iter()
                .map(|s| s.parse::<NodeState>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| bad(e.to_string()))?;
            for f in &rec.fired {
                if f != NONE_FIRED && Rule::from_name(f).is_none() {
                    return Err(bad(format!("unknown rule `{f}`")));
                }
            }
            cfgs.push(Configuration { states, step_index: rec.step });
        }
        Ok((net, cfgs))
    }

    /// Replays the trace: every record must follow from its predecessor,
    /// recorded readings must match recomputed ones, and the lemma checks
    /// run over the recomputed readings.
    pub fn audit(&self) -> Result<Audit, TraceError> {
        let (net, cfgs) = self.decode()?;
        let proto = self.header.protocol;
        let mut findings = Vec::new();
        let mut certifier = Certifier::new(&net, proto);
        let mut lemmas = LemmaMonitor::new(&net);
        let mut stepper = Stepper::new(&net, proto);
        let mut record = StepRecord::default();
        let mut next = Vec::new();
        let root = net.root();
        for (i, cfg) in cfgs.iter().enumerate() {
            if cfg.states[root].core() != NodeState::ROOT {
                findings.push(Finding::RootDrift { step: cfg.step_index });
                return Ok(Audit { findings, steps: i as u64 });
            }
            let prev_record = if i == 0 {
                None
            } else {
                let prev = &cfgs[i - 1];
                if cfg.step_index != prev.step_index + 1 {
                    findings.push(Finding::StepGap { step: cfg.step_index });
                }
                stepper.step_into(&prev.states, &mut next, &mut record);
                if let Some(v) = first_mismatch(&next, &cfg.states) {
                    findings.push(Finding::Transition { step: cfg.step_index, node: v });
                    return Ok(Audit { findings, steps: i as u64 });
                }
                Some(&record)
            };
            let expected_fired: Vec<&str> = match prev_record {
                Some(rec) => rec.fired.iter().map(|r| r.map_or(NONE_FIRED, Rule::name)).collect(),
                None => vec![NONE_FIRED; net.node_count()],
            };
            if let Some(v) = (0..net.node_count()).find(|&v| self.records[i].fired[v] != expected_fired[v]) {
                findings.push(Finding::FiredRule { step: cfg.step_index, node: v });
            }
            let readings = certifier.observe(cfg, prev_record);
            if let Some(recorded) = self.records[i].readings {
                if recorded != readings {
                    findings.push(Finding::Readings { step: cfg.step_index });
                }
            }
            lemmas.observe(cfg, &readings);
        }
        findings.extend(lemmas.violations.into_iter().map(Finding::Lemma));
        Ok(Audit { findings, steps: cfgs.len() as u64 - 1 })
    }
}

fn first_mismatch(a: &[NodeState], b: &[NodeState]) -> Option<NodeId> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// One problem found while replaying a trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Finding {
    RootDrift { step: u64 },
    StepGap { step: u64 },
    /// The recorded successor differs from the engine's at `node`.
    Transition { step: u64, node: NodeId },
    FiredRule { step: u64, node: NodeId },
    Readings { step: u64 },
    Lemma(Violation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Audit {
    pub findings: Vec<Finding>,
    /// Transitions replayed.
    pub steps: u64,
}

impl Audit {
    pub fn clean(&self) -> bool {
        self.findings.is_empty()
    }
}
