//! Second, deliberately naive transcription of the predicates and guards,
//! checked against the single-pass evaluator.

use proptest::prelude::*;
use tokbin::protocol::{
    enabled_guards, eval_predicates, kin_sets, select_rule, tok_set, Bit, NeighborView, NodeState,
    Protocol, Rank, Rule, Token,
};
use tokbin::topology::Port;

struct Oracle {
    reset: bool,
    take_p: bool,
    take_o: bool,
    take_r: bool,
    er_prg: bool,
    er_var: bool,
    er_tp: bool,
    er_p: bool,
    er_c: bool,
    er_s: bool,
    rt_nd: bool,
    er_n: bool,
    false_r: bool,
    er_pi: bool,
    er: bool,
    guards: Vec<Rule>,
}

fn rank_num(r: Rank) -> Option<u8> {
    r.value()
}

fn oracle(proto: &Protocol, v: NodeState, nbrs: &[NodeState]) -> Oracle {
    let idx: Vec<usize> = (0..nbrs.len()).collect();
    let kv = rank_num(v.rank);
    let rel = |delta: u8| -> Vec<usize> {
        match kv {
            None => vec![],
            Some(k) => idx
                .iter()
                .copied()
                .filter(|&i| rank_num(nbrs[i].rank) == Some((k + delta) % 3))
                .collect(),
        }
    };
    let p = rel(2);
    let c = rel(1);
    let s = rel(0);
    let tok: Vec<usize> =
        idx.iter().copied().filter(|&i| nbrs[i].token == Token::True && nbrs[i].bit == Bit::One).collect();
    let differ = |a: NodeState, b: NodeState| a.bit != b.bit || a.token != b.token;

    let reset = v.rank == Rank::Bottom && v.token == Token::False && v.bit == Bit::Zero;
    let take_p = !tok.is_empty() && tok == p;
    let take_o = !tok.is_empty() && tok != p;
    let tok_rk = tok.iter().map(|&i| nbrs[i].rank).min();
    let take_r = !tok.is_empty()
        && tok.iter().all(|&i| tok.iter().all(|&j| nbrs[i].rank == nbrs[j].rank))
        && idx.iter().filter(|i| !tok.contains(i)).all(|&i| Some(nbrs[i].rank) != tok_rk)
        && tok_rk.is_some_and(|r| r != Rank::Bottom);

    let er_prg = v.rank != Rank::Bottom && nbrs.iter().any(|u| u.bit == Bit::Top);
    let er_var = !er_prg
        && v.bit != Bit::Top
        && v.rank == Rank::Bottom
        && (v.token != Token::False || v.bit != Bit::Zero);
    let er_tp = !er_prg
        && v.bit != Bit::Top
        && !c.is_empty()
        && c.iter().any(|&i| nbrs[i].token == Token::True)
        && !(v.token == Token::Wait && v.bit == Bit::Zero);
    let er_p = p.iter().any(|&i| p.iter().any(|&j| differ(nbrs[i], nbrs[j])))
        || (v.rank != Rank::Bottom && p.is_empty());
    let er_c = c.iter().any(|&i| c.iter().any(|&j| differ(nbrs[i], nbrs[j])));
    let er_s = s.iter().any(|&i| differ(nbrs[i], v));
    let rt_nd = v.rank != Rank::Bottom
        && !c.is_empty()
        && v.token != Token::True
        && nbrs.iter().any(|u| u.rank == Rank::Bottom);
    let er_n = !er_prg && v.bit != Bit::Top && !take_o && (er_p || er_c || er_s || rt_nd);
    let false_r = v.rank != Rank::Bottom && p.is_empty();
    let er_pi = reset
        && idx.iter().any(|&i| {
            idx.iter().any(|&j| {
                nbrs[i].rank == nbrs[j].rank && nbrs[i].rank != Rank::Bottom && differ(nbrs[i], nbrs[j])
            })
        });
    let er = er_var || er_tp || er_n || false_r || er_prg || er_pi;

    let mut guards = Vec::new();
    if v.bit != Bit::Top && er {
        guards.push(Rule::Er);
    }
    if v.bit == Bit::Top {
        guards.push(Rule::Reset);
    }
    if proto.er_rank && !er && v.rank != Rank::Bottom && v.bit != Bit::Top && v.token == Token::False && take_o {
        guards.push(Rule::ErRank);
    }
    if !er && v.rank == Rank::Bottom && take_r {
        guards.push(Rule::Join);
    }
    if !er && v.rank != Rank::Bottom && v.token == Token::False && take_p {
        guards.push(Rule::Tok);
    }
    if !er && v.token == Token::True {
        guards.push(Rule::Add);
    }
    if !er && v.token == Token::Wait {
        guards.push(Rule::Ready);
    }
    Oracle {
        reset,
        take_p,
        take_o,
        take_r,
        er_prg,
        er_var,
        er_tp,
        er_p,
        er_c,
        er_s,
        rt_nd,
        er_n,
        false_r,
        er_pi,
        er,
        guards,
    }
}

fn state() -> impl Strategy<Value = NodeState> {
    (0..36usize).prop_map(NodeState::from_core_index)
}

fn view() -> impl Strategy<Value = Vec<(Port, NodeState)>> {
    prop::collection::vec(state(), 1..=6).prop_flat_map(|states| {
        let n = states.len();
        let ports: Vec<u32> = (0..n as u32).map(|p| p * 2 + 1).collect();
        Just(ports).prop_shuffle().prop_map(move |ports| {
            ports.into_iter().map(Port).zip(states.iter().copied()).collect::<Vec<_>>()
        })
    })
}

fn check(proto: &Protocol, me: NodeState, entries: &[(Port, NodeState)]) -> Result<(), TestCaseError> {
    let view = NeighborView::new(entries);
    let nbrs: Vec<NodeState> = entries.iter().map(|&(_, s)| s).collect();
    let o = oracle(proto, me, &nbrs);
    let p = eval_predicates(proto, me, view);
    prop_assert_eq!(p.reset, o.reset);
    prop_assert_eq!(p.take_p, o.take_p);
    prop_assert_eq!(p.take_o, o.take_o);
    prop_assert_eq!(p.take_r, o.take_r);
    prop_assert_eq!(p.er_prg, o.er_prg);
    prop_assert_eq!(p.er_var, o.er_var);
    prop_assert_eq!(p.er_tp, o.er_tp);
    prop_assert_eq!(p.er_p, o.er_p);
    prop_assert_eq!(p.er_c, o.er_c);
    prop_assert_eq!(p.er_s, o.er_s);
    prop_assert_eq!(p.rt_nd, o.rt_nd);
    prop_assert_eq!(p.er_n, o.er_n);
    prop_assert_eq!(p.false_r, o.false_r);
    prop_assert_eq!(p.er_pi, o.er_pi);
    prop_assert_eq!(p.er, o.er);
    prop_assert!(!(p.take_p && p.take_o), "TakeP and TakeO overlap");
    let guards: Vec<Rule> = enabled_guards(proto, me, view).iter().collect();
    prop_assert_eq!(&guards, &o.guards);
    prop_assert_eq!(select_rule(proto, me, view), o.guards.first().copied());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100_000))]

    #[test]
    fn evaluator_matches_oracle(me in state(), entries in view()) {
        check(&Protocol::default(), me, &entries)?;
    }

    #[test]
    fn kin_sets_follow_rank_arithmetic(me in state(), entries in view()) {
        let kin = kin_sets(me, NeighborView::new(&entries));
        for &(port, u) in &entries {
            let expect = match (me.rank.value(), u.rank.value()) {
                (Some(k), Some(j)) if j == (k + 2) % 3 => 'p',
                (Some(k), Some(j)) if j == (k + 1) % 3 => 'c',
                (Some(k), Some(j)) if j == k => 's',
                _ => '-',
            };
            prop_assert_eq!(kin.parents.contains(&port), expect == 'p');
            prop_assert_eq!(kin.children.contains(&port), expect == 'c');
            prop_assert_eq!(kin.siblings.contains(&port), expect == 's');
        }
        let tok = tok_set(NeighborView::new(&entries));
        for &(port, u) in &entries {
            prop_assert_eq!(tok.contains(&port), u.token == Token::True && u.bit == Bit::One);
        }
    }
}

#[test]
fn exhaustive_degree_one_and_two() {
    let proto = Protocol::default();
    let all: Vec<NodeState> = NodeState::all_core().collect();
    for &me in &all {
        for &a in &all {
            check(&proto, me, &[(Port(0), a)]).unwrap();
            for &b in &all {
                check(&proto, me, &[(Port(0), a), (Port(1), b)]).unwrap();
            }
        }
    }
}
