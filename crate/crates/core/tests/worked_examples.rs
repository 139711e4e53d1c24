//! Worked examples: the token hand-off chain, the diverging-paths
//! witness and the binary-counter arithmetic.

use tokbin::certify::{classify, is_legal, latency_r, legal_pi, path_words, PATH_CAP};
use tokbin::engine::{initial_configuration, run, step, Configuration, InitSpec, NoMonitor};
use tokbin::harness::suite;
use tokbin::protocol::{eval_predicates, Bit, NeighborView, NodeState, Protocol, Rule, Token};
use tokbin::topology::{bfs_oracle, Network, Port};

fn states(text: &str) -> Vec<NodeState> {
    text.split_whitespace().map(|s| s.parse().unwrap()).collect()
}

/// Chain `root, p, v, u, w, x, y`; `p` only buffers `v` from the root.
fn handoff_chain(frame: [&str; 5]) -> Vec<NodeState> {
    let mut out = states("0:T:1 1:W:0");
    for (i, tb) in frame.iter().enumerate() {
        let depth = i + 2;
        out.push(format!("{}:{}:{}", depth % 3, &tb[..1], &tb[1..]).parse().unwrap());
    }
    out
}

const HANDOFF: [[&str; 5]; 5] = [
    ["T1", "F1", "F1", "F0", "F1"],
    ["W0", "T1", "F1", "F0", "F1"],
    ["F0", "W0", "T1", "F0", "F1"],
    ["F0", "F0", "W0", "T0", "F1"],
    ["F0", "F0", "F0", "W1", "F1"],
];

/// Rules fired by `v, u, w, x, y` on each hand-off step.
const HANDOFF_RULES: [[Option<Rule>; 5]; 4] = [
    [Some(Rule::Add), Some(Rule::Tok), None, None, None],
    [Some(Rule::Ready), Some(Rule::Add), Some(Rule::Tok), None, None],
    [None, Some(Rule::Ready), Some(Rule::Add), Some(Rule::Tok), None],
    [None, None, Some(Rule::Ready), Some(Rule::Add), None],
];

#[test]
fn token_handoff_chain_replays_frame_by_frame() {
    let net = suite::path(7);
    let proto = Protocol::default();
    let mut cfg = Configuration { states: handoff_chain(HANDOFF[0]), step_index: 0 };
    for (i, frame) in HANDOFF.iter().enumerate().skip(1) {
        let (next, record) = step(&net, &proto, &cfg);
        assert_eq!(&next.states[2..], &handoff_chain(*frame)[2..], "frame {i}");
        assert_eq!(&record.fired[2..], &HANDOFF_RULES[i - 1], "rules into frame {i}");
        cfg = next;
    }
}

#[test]
fn token_dies_below_a_zero_bit() {
    let net = suite::path(7);
    let d = Configuration { states: handoff_chain(HANDOFF[3]), step_index: 0 };
    let y = 6;
    let entries: Vec<(Port, NodeState)> = net.neighbors(y).iter().map(|&(p, u)| (p, d.states[u])).collect();
    let preds = eval_predicates(&Protocol::default(), d.states[y], NeighborView::new(&entries));
    assert!(!preds.take_p && !preds.take_o);
    let (e, _) = step(&net, &Protocol::default(), &d);
    assert_eq!(e.states[y], d.states[y]);
    assert_eq!(e.states[5].to_string(), "2:W:1");
}

fn diverging_paths() -> (Network, Configuration) {
    // r - u1 - w1 - x1 - v and r - u2 - w2 - x2 - v
    let net = Network::from_edges(8, 0, &[(0, 1), (1, 2), (2, 3), (3, 7), (0, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
    let cfg = Configuration { states: states("0:T:1 1:F:1 2:F:1 0:F:0 1:F:1 2:F:0 0:F:0 1:F:0"), step_index: 0 };
    (net, cfg)
}

#[test]
fn diverging_paths_are_detected_and_erased() {
    let (net, cfg) = diverging_paths();
    let proto = Protocol::default();
    let v = 7;
    let oracle = bfs_oracle(&net);
    assert!(!legal_pi(&oracle, &cfg)[v]);
    assert_eq!(classify(&net, &proto, &cfg).phi, 0, "no node is in error yet");
    let words = path_words(&oracle, &cfg, v, PATH_CAP).unwrap();
    let b: Vec<String> = words.paths.iter().map(|p| p.b_word()[1..4].to_string()).collect();
    assert_eq!(b, ["110", "100"]);

    let trace = run(&net, &proto, cfg, 12, &mut NoMonitor);
    let first_token = |x: usize| trace.configurations.iter().position(|c| c.states[x].token == Token::True);
    assert!(first_token(3).unwrap() < first_token(6).unwrap_or(usize::MAX));
    let err = trace.configurations.iter().position(|c| c.states[v].bit == Bit::Top).unwrap();
    assert!(trace.configurations[..err].iter().all(|c| c.states[v].token != Token::True), "v never got a token");
    // both x nodes enter the error state on the same step
    let x_err = |x: usize| trace.configurations.iter().position(|c| c.states[x].bit == Bit::Top);
    assert_eq!(x_err(3), Some(err + 1));
    assert_eq!(x_err(6), Some(err + 1));
}

#[test]
fn counter_arithmetic_on_a_depth_nine_chain() {
    let net = suite::path(10);
    let oracle = bfs_oracle(&net);
    let tb = ["T1", "F1", "F0", "T0", "F1", "F0", "T1", "F0", "F0"];
    let mut st = vec![NodeState::ROOT];
    for (i, s) in tb.iter().enumerate() {
        st.push(format!("{}:{}:{}", (i + 1) % 3, &s[..1], &s[1..]).parse().unwrap());
    }
    let cfg = Configuration { states: st, step_index: 0 };
    let report = path_words(&oracle, &cfg, 9, PATH_CAP).unwrap();
    let word = &report.paths[0];
    assert_eq!(&word.b_word()[1..], "110010100");
    assert_eq!(&word.t_word()[1..], "100100100");
    assert_eq!(word.b2().unwrap(), "10011100");
    assert_eq!(word.b10(), Some(156));
    assert_eq!(latency_r(9).unwrap(), 773);
    assert_eq!(report.best, Some(156));
    assert_eq!(report.remaining, Some(617));
}

#[test]
fn empty_counter_gives_full_latency() {
    let net = suite::path(6);
    let cfg = initial_configuration(&net, &InitSpec::Legal, false).unwrap();
    let oracle = bfs_oracle(&net);
    assert!(is_legal(&oracle, &cfg));
    for d in 1..6 {
        let report = path_words(&oracle, &cfg, d, PATH_CAP).unwrap();
        assert_eq!(report.best, Some(0));
        assert_eq!(report.remaining, Some(latency_r(d).unwrap() as i64));
    }
}
