//! Command-line front end: `run`, `sweep` and `verify`.
//!
//! Graphs come from a JSON document (`{"nodes":n,"root":r,"edges":[[a,b],..],
//! "ports":[[[port,neighbor],..],..]}`, ports optional) or from a built-in
//! name: `suite:P2`, `suite:C4`, .., or `path:N`, `cycle:N`, `complete:N`,
//! `star:LEAVES`. Exit codes: 0 success, 1 verification failure, 2 input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::certify::PotentialReadings;
use crate::engine::{initial_configuration, run, InitSpec, Trace};
use crate::error::CliError;
use crate::harness::{
    extract_bfs_tree, inter_arrival, run_sweep, step_budget, suite, token_arrivals, RunMonitor,
    SweepPlan, SweepReport, Witness,
};
use crate::protocol::{NodeState, Protocol};
use crate::topology::{bfs_oracle, Network};
use crate::trace::TraceFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tokbin", about = "Synchronous lab for the TokBin BFS protocol")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one execution and write its trace.
    Run(RunArgs),
    /// Sweep initial configurations and write a report.
    Sweep(SweepArgs),
    /// Replay a trace file and audit it.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InitKind {
    Legal,
    AllReset,
    Random,
    Enumerated,
    Explicit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeKind {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Standard,
    /// Error propagation as literally printed (negative control).
    PrintedPropagation,
    /// Without `R_erRank` (negative control).
    NoErRank,
    /// Reset nodes wait for erroneous neighbors to clear before joining.
    CautiousJoin,
}

impl Variant {
    pub fn protocol(self) -> Protocol {
        match self {
            Variant::Standard => Protocol::default(),
            Variant::PrintedPropagation => Protocol::with_printed_propagation(),
            Variant::NoErRank => Protocol::without_er_rank(),
            Variant::CautiousJoin => Protocol::with_cautious_join(),
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    /// Graph JSON file or built-in name.
    #[arg(long)]
    pub graph: String,
    #[arg(long, value_enum, default_value = "all-reset")]
    pub init: InitKind,
    /// Required with `--init random`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Required with `--init enumerated`.
    #[arg(long)]
    pub index: Option<u128>,
    /// Space-separated states, root first, with `--init explicit`.
    #[arg(long)]
    pub states: Option<String>,
    /// Defaults to `64 * 2^ecc + 8n + 16`.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value = "on")]
    pub monitors: Toggle,
    #[arg(long)]
    pub overlay_color: bool,
    #[arg(long, value_enum, default_value = "standard")]
    pub variant: Variant,
    /// Periods to keep recording after periodic legality is certified.
    #[arg(long, default_value_t = 1)]
    pub extra_periods: u64,
    /// Trace output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub graph: String,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeKind,
    /// Configurations drawn in random mode.
    #[arg(long)]
    pub count: Option<u64>,
    /// Required in random mode.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, value_enum, default_value = "on")]
    pub monitors: Toggle,
    #[arg(long, value_enum, default_value = "standard")]
    pub variant: Variant,
    /// Report output path (JSON).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Trace of the first failing execution, or the slowest one if none failed.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    pub trace: PathBuf,
}

/// Parses `args` (program name first) and executes. Human output goes to `out`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        // a closed pipe on stdout is the reader's choice, not an input error
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

/// Built-in name or JSON file.
pub fn load_graph(spec: &str) -> Result<Network, CliError> {
    if let Some((kind, arg)) = spec.split_once(':') {
        if kind == "suite" {
            return suite::standard()
                .into_iter()
                .find(|(name, _)| *name == arg)
                .map(|(_, net)| net)
                .ok_or_else(|| CliError::Usage(format!("unknown suite graph `{arg}`")));
        }
        let size = |min: usize| {
            arg.parse::<usize>()
                .ok()
                .filter(|&k| k >= min)
                .ok_or_else(|| CliError::Usage(format!("bad size in `{spec}`")))
        };
        match kind {
            "path" => return Ok(suite::path(size(2)?)),
            "cycle" => return Ok(suite::cycle(size(3)?)),
            "complete" => return Ok(suite::complete(size(2)?)),
            "star" => return Ok(suite::star(size(1)?)),
            _ => {}
        }
    }
    let text = std::fs::read_to_string(spec).map_err(|source| CliError::Io { path: spec.to_string(), source })?;
    Ok(Network::from_json(&text)?)
}

fn init_spec(a: &RunArgs) -> Result<InitSpec, CliError> {
    let missing = |flag: &str, init: &str| CliError::Usage(format!("--init {init} requires {flag}"));
    Ok(match a.init {
        InitKind::Legal => InitSpec::Legal,
        InitKind::AllReset => InitSpec::AllReset,
        InitKind::Random => InitSpec::Random(a.seed.ok_or_else(|| missing("--seed", "random"))?),
        InitKind::Enumerated => InitSpec::Enumerated(a.index.ok_or_else(|| missing("--index", "enumerated"))?),
        InitKind::Explicit => {
            let text = a.states.as_deref().ok_or_else(|| missing("--states", "explicit"))?;
            let states = text
                .split_whitespace()
                .map(str::parse::<NodeState>)
                .collect::<Result<Vec<_>, _>>()
                .map_err(crate::error::InitError::from)?;
            InitSpec::Explicit(states)
        }
    })
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Result of a recorded run.
#[derive(Clone, Debug)]
pub struct RunSummary {
    pub trace: Trace<PotentialReadings>,
    pub stabilization_step: Option<u64>,
    pub period: Option<u64>,
    /// Token inter-arrival at each depth, deepest last; index 0 is depth 1.
    pub token_periods: Vec<Option<u64>>,
    pub parents: Option<Vec<Option<usize>>>,
    pub violations: Vec<crate::harness::Violation>,
}

/// Runs one execution with the run monitor attached.
pub fn record_run(
    net: &Network,
    proto: &Protocol,
    spec: &InitSpec,
    overlay: bool,
    budget: u64,
    extra_periods: u64,
) -> Result<RunSummary, CliError> {
    let cfg = initial_configuration(net, spec, overlay)?;
    let mut monitor = RunMonitor::new(net, *proto);
    monitor.extra_periods = extra_periods;
    let trace = run(net, proto, cfg, budget, &mut monitor);
    let oracle = bfs_oracle(net);
    let stabilization_step = monitor.stabilization_step();
    let token_periods = (1..=oracle.eccentricity)
        .map(|d| {
            let from = stabilization_step?;
            let v = (0..net.node_count()).find(|&v| oracle.dist[v] == d)?;
            inter_arrival(&token_arrivals(&trace, v, from))
        })
        .collect();
    let parents = stabilization_step.and_then(|_| extract_bfs_tree(net, &oracle, trace.last()).ok());
    Ok(RunSummary {
        stabilization_step,
        period: monitor.period(),
        token_periods,
        parents,
        violations: monitor.violations().to_vec(),
        trace,
    })
}

pub fn cmd_run(a: &RunArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let net = load_graph(&a.graph)?;
    let spec = init_spec(a)?;
    let proto = a.variant.protocol();
    let budget = a.budget.unwrap_or_else(|| step_budget(&net));
    let summary = record_run(&net, &proto, &spec, a.overlay_color, budget, a.extra_periods)?;
    let monitors = a.monitors == Toggle::On;
    if let Some(path) = &a.out {
        TraceFile::from_trace(&net, &proto, &summary.trace, monitors).write(create(path)?)?;
    }
    let w = |e: std::io::Error| CliError::Io { path: "<stdout>".into(), source: e };
    let steps = summary.trace.len() - 1;
    writeln!(out, "steps recorded: {steps}").map_err(w)?;
    match (summary.stabilization_step, summary.period) {
        (Some(s), Some(p)) => {
            writeln!(out, "stabilized at step {s}, configuration period {p}").map_err(w)?;
            for (i, tp) in summary.token_periods.iter().enumerate() {
                let shown = tp.map_or("n/a".to_string(), |t| t.to_string());
                writeln!(out, "token period at depth {}: {shown}", i + 1).map_err(w)?;
            }
            if let Some(parents) = &summary.parents {
                let edges: Vec<String> = parents
                    .iter()
                    .enumerate()
                    .filter_map(|(v, p)| p.map(|p| format!("{v}->{p}")))
                    .collect();
                writeln!(out, "tree: {}", edges.join(" ")).map_err(w)?;
            }
        }
        _ if budget == 0 => writeln!(out, "budget 0: initial configuration only").map_err(w)?,
        _ => writeln!(out, "not stabilized within {budget} steps").map_err(w)?,
    }
    if monitors {
        for v in &summary.violations {
            writeln!(out, "violation: {} at step {}: {}", v.check, v.step, v.detail).map_err(w)?;
        }
    }
    let stabilized = summary.period.is_some() || budget == 0;
    let clean = !monitors || summary.violations.is_empty();
    Ok(if stabilized && clean { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let net = load_graph(&a.graph)?;
    let proto = a.variant.protocol();
    let mut plan = match a.mode {
        ModeKind::Exhaustive => SweepPlan::exhaustive(net.clone()),
        ModeKind::Random => {
            let count = a.count.ok_or_else(|| CliError::Usage("--mode random requires --count".into()))?;
            let seed = a.seed.ok_or_else(|| CliError::Usage("--mode random requires --seed".into()))?;
            SweepPlan::random(net.clone(), count, seed)
        }
    }
    .with_protocol(proto);
    plan.budget = a.budget;
    plan.monitors = a.monitors == Toggle::On;
    let report = run_sweep(&plan)?;
    if let Some(path) = &a.out {
        let mut f = create(path)?;
        serde_json::to_writer_pretty(&mut f, &report).map_err(std::io::Error::from).map_err(|source| {
            CliError::Io { path: path.display().to_string(), source }
        })?;
        writeln!(f).and_then(|_| f.flush()).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    if let Some(path) = &a.witness_out {
        if let Some(w) = featured_witness(&report) {
            let spec = InitSpec::Explicit(parse_states(&w.initial)?);
            let summary = record_run(&net, &proto, &spec, false, report.budget, 0)?;
            TraceFile::from_trace(&net, &proto, &summary.trace, true).write(create(path)?)?;
        }
    }
    write_report_summary(&report, out)
        .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn featured_witness(report: &SweepReport) -> Option<&Witness> {
    report.non_converged.first().or(report.violations.first()).or(report.worst.as_ref())
}

fn parse_states(text: &str) -> Result<Vec<NodeState>, CliError> {
    text.split_whitespace()
        .map(str::parse::<NodeState>)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Init(e.into()))
}

pub fn write_report_summary(r: &SweepReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "converged {}/{} (livelocks {}), max {} steps, mean {:.2}, c = {:.3}, tree failures {}",
        r.converged, r.total, r.livelocks, r.max_steps, r.mean_steps, r.constant, r.tree_failures
    )?;
    for (check, n) in &r.violation_counts {
        if *n > 0 {
            writeln!(out, "  {check}: {n} executions")?;
        }
    }
    for w in r.non_converged.iter().take(3) {
        writeln!(out, "  non-converged: {}", w.initial)?;
    }
    for w in r.violations.iter().take(3) {
        let v = &w.violations[0];
        writeln!(out, "  violation: {} ({} at step {}: {})", w.initial, v.check, v.step, v.detail)?;
    }
    Ok(())
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let path = &a.trace;
    let f = File::open(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let audit = TraceFile::read(BufReader::new(f))?.audit()?;
    let w = |e: std::io::Error| CliError::Io { path: "<stdout>".into(), source: e };
    writeln!(out, "replayed {} steps, {} findings", audit.steps, audit.findings.len()).map_err(w)?;
    for finding in &audit.findings {
        writeln!(out, "  {finding:?}").map_err(w)?;
    }
    Ok(if audit.clean() { EXIT_OK } else { EXIT_FAILED })
}
