//! The node program: state variables, kinship sets, the error-detection
//! predicates and the seven guarded rules, plus the two-coloring overlay.
//!
//! Every function here is a pure function of a node's own state and a
//! [`NeighborView`], which carries `(port, state)` pairs and nothing else.
//! Neighbor identities, distances and global parameters are not reachable
//! from this module.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::StateParseError;
use crate::topology::Port;

/// Rank variable `k`: distance to the root modulo 3, or `Bottom` for a
/// node that has been reset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Zero,
    One,
    Two,
    Bottom,
}

impl Rank {
    pub const ALL: [Rank; 4] = [Rank::Zero, Rank::One, Rank::Two, Rank::Bottom];

    pub fn from_mod3(value: usize) -> Rank {
        match value % 3 {
            0 => Rank::Zero,
            1 => Rank::One,
            _ => Rank::Two,
        }
    }

    pub fn value(self) -> Option<u8> {
        match self {
            Rank::Zero => Some(0),
            Rank::One => Some(1),
            Rank::Two => Some(2),
            Rank::Bottom => None,
        }
    }

    pub fn is_ranked(self) -> bool {
        self != Rank::Bottom
    }

    /// `(k + 1) mod 3`; `Bottom` stays `Bottom`.
    pub fn child(self) -> Rank {
        self.value().map_or(Rank::Bottom, |k| Rank::from_mod3(k as usize + 1))
    }

    /// `(k - 1) mod 3`; `Bottom` stays `Bottom`.
    pub fn parent(self) -> Rank {
        self.value().map_or(Rank::Bottom, |k| Rank::from_mod3(k as usize + 2))
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Token variable `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    False,
    True,
    Wait,
}

impl Token {
    pub const ALL: [Token; 3] = [Token::False, Token::True, Token::Wait];
}

/// Bit variable `b`. `Top` marks a node in error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bit {
    Zero,
    One,
    Top,
}

impl Bit {
    pub const ALL: [Bit; 3] = [Bit::Zero, Bit::One, Bit::Top];

    /// `(b + 1) mod 2`, undefined on `Top`.
    pub fn flipped(self) -> Option<Bit> {
        match self {
            Bit::Zero => Some(Bit::One),
            Bit::One => Some(Bit::Zero),
            Bit::Top => None,
        }
    }

    pub fn value(self) -> Option<u8> {
        match self {
            Bit::Zero => Some(0),
            Bit::One => Some(1),
            Bit::Top => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Full state of one node. `color` is only populated when the coloring
/// overlay is enabled and is not part of the 36-state core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeState {
    pub rank: Rank,
    pub token: Token,
    pub bit: Bit,
    pub color: Option<Color>,
}

/// Number of distinct core states `(rank, token, bit)`.
pub const CORE_STATES: usize = 36;

impl NodeState {
    /// The root's constant state `(0, true, 1)`.
    pub const ROOT: NodeState = NodeState::new(Rank::Zero, Token::True, Bit::One);
    /// A reset node `(bottom, false, 0)`.
    pub const RESET: NodeState = NodeState::new(Rank::Bottom, Token::False, Bit::Zero);

    pub const fn new(rank: Rank, token: Token, bit: Bit) -> Self {
        NodeState { rank, token, bit, color: None }
    }

    pub fn with_color(self, color: Option<Color>) -> Self {
        NodeState { color, ..self }
    }

    /// The state without the overlay.
    pub fn core(self) -> Self {
        NodeState { color: None, ..self }
    }

    /// Position in the fixed ordering: rank `0,1,2,-` major, then token
    /// `F,T,W`, then bit `0,1,^`.
    pub fn core_index(self) -> usize {
        self.rank.index() * 9 + self.token as usize * 3 + self.bit as usize
    }

    pub fn from_core_index(index: usize) -> NodeState {
        assert!(index < CORE_STATES, "core index {index} out of range");
        NodeState::new(
            Rank::ALL[index / 9],
            Token::ALL[(index / 3) % 3],
            Bit::ALL[index % 3],
        )
    }

    pub fn all_core() -> impl Iterator<Item = NodeState> {
        (0..CORE_STATES).map(NodeState::from_core_index)
    }

    /// `Reset(v)`: `k = bottom`, `t = false`, `b = 0`.
    pub fn is_reset(self) -> bool {
        self.rank == Rank::Bottom && self.token == Token::False && self.bit == Bit::Zero
    }

    /// Offers a token to its neighbors: `t = true` and `b = 1`.
    pub fn offers_token(self) -> bool {
        self.token == Token::True && self.bit == Bit::One
    }

    fn same_phase(self, other: NodeState) -> bool {
        self.token == other.token && self.bit == other.bit
    }
}

impl fmt::Display for NodeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = match self.rank {
            Rank::Zero => '0',
            Rank::One => '1',
            Rank::Two => '2',
            Rank::Bottom => '-',
        };
        let token = match self.token {
            Token::False => 'F',
            Token::True => 'T',
            Token::Wait => 'W',
        };
        let bit = match self.bit {
            Bit::Zero => '0',
            Bit::One => '1',
            Bit::Top => '^',
        };
        write!(f, "{rank}:{token}:{bit}")?;
        match self.color {
            Some(Color::Black) => write!(f, ":B"),
            Some(Color::White) => write!(f, ":W"),
            None => Ok(()),
        }
    }
}

impl FromStr for NodeState {
    type Err = StateParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = s.split(':').collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(StateParseError::Shape(s.to_string()));
        }
        let rank = match fields[0] {
            "0" => Rank::Zero,
            "1" => Rank::One,
            "2" => Rank::Two,
            "-" => Rank::Bottom,
            other => return Err(StateParseError::Rank(other.to_string())),
        };
        let token = match fields[1] {
            "F" => Token::False,
            "T" => Token::True,
            "W" => Token::Wait,
            other => return Err(StateParseError::Token(other.to_string())),
        };
        let bit = match fields[2] {
            "0" => Bit::Zero,
            "1" => Bit::One,
            "^" => Bit::Top,
            other => return Err(StateParseError::Bit(other.to_string())),
        };
        let color = match fields.get(3) {
            None => None,
            Some(&"B") => Some(Color::Black),
            Some(&"W") => Some(Color::White),
            Some(other) => return Err(StateParseError::Color(other.to_string())),
        };
        Ok(NodeState { rank, token, bit, color })
    }
}

/// What a node may read: its neighbors' states keyed by local port.
#[derive(Clone, Copy, Debug)]
pub struct NeighborView<'a> {
    entries: &'a [(Port, NodeState)],
}

impl<'a> NeighborView<'a> {
    pub fn new(entries: &'a [(Port, NodeState)]) -> Self {
        NeighborView { entries }
    }

    pub fn iter(&self) -> impl Iterator<Item = &'a (Port, NodeState)> + 'a {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn state_at(&self, port: Port) -> Option<NodeState> {
        self.entries.iter().find(|(p, _)| *p == port).map(|&(_, s)| s)
    }
}

/// Ports of a node's parents, children and siblings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KinSets {
    pub parents: Vec<Port>,
    pub children: Vec<Port>,
    pub siblings: Vec<Port>,
}

pub fn kin_sets(me: NodeState, view: NeighborView<'_>) -> KinSets {
    let mut kin = KinSets::default();
    if !me.rank.is_ranked() {
        return kin;
    }
    for &(port, u) in view.iter() {
        if !u.rank.is_ranked() {
            continue;
        }
        if u.rank == me.rank.parent() {
            kin.parents.push(port);
        } else if u.rank == me.rank.child() {
            kin.children.push(port);
        } else {
            kin.siblings.push(port);
        }
    }
    kin.parents.sort_unstable();
    kin.children.sort_unstable();
    kin.siblings.sort_unstable();
    kin
}

/// Minimum port among the parents, if any.
pub fn parent_port(me: NodeState, view: NeighborView<'_>) -> Option<Port> {
    if !me.rank.is_ranked() {
        return None;
    }
    let parent = me.rank.parent();
    view.iter()
        .filter(|(_, u)| u.rank == parent)
        .map(|&(p, _)| p)
        .min()
}

/// Ports of neighbors offering a token.
pub fn tok_set(view: NeighborView<'_>) -> Vec<Port> {
    let mut ports: Vec<Port> = view
        .iter()
        .filter(|(_, u)| u.offers_token())
        .map(|&(p, _)| p)
        .collect();
    ports.sort_unstable();
    ports
}

/// How errors spread to neighbors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorPropagation {
    /// A ranked node with an erroneous neighbor (`b = ^`) is in error.
    #[default]
    Neighbors,
    /// Literal transcription with the subscripts swapped: a node is in
    /// error if it is itself erroneous and has a ranked neighbor. Errors then
    /// never spread. Kept for comparison runs.
    AsPrinted,
}

/// Protocol parameters. [`Protocol::default`] is the standard program; the
/// other settings exist for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Protocol {
    #[serde(default)]
    pub propagation: ErrorPropagation,
    /// Whether `R_erRank` is part of the program.
    #[serde(default = "default_true")]
    pub er_rank: bool,
    /// Experimental: a reset node does not join while a neighbor has `b = ^`.
    #[serde(default)]
    pub cautious_join: bool,
}

fn default_true() -> bool {
    true
}

impl Default for Protocol {
    fn default() -> Self {
        Protocol { propagation: ErrorPropagation::Neighbors, er_rank: true, cautious_join: false }
    }
}

impl Protocol {
    pub fn with_printed_propagation() -> Self {
        Protocol { propagation: ErrorPropagation::AsPrinted, ..Protocol::default() }
    }

    pub fn without_er_rank() -> Self {
        Protocol { er_rank: false, ..Protocol::default() }
    }

    pub fn with_cautious_join() -> Self {
        Protocol { cautious_join: true, ..Protocol::default() }
    }

    pub fn is_standard(&self) -> bool {
        *self == Protocol::default()
    }
}

/// Truth values of every kinship and error predicate at one node.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Predicates {
    /// Some neighbor has `b = ^`. Only read by the cautious-join variant.
    pub near_error: bool,
    pub reset: bool,
    pub take_p: bool,
    pub take_o: bool,
    pub take_r: bool,
    /// Minimum rank among token senders; `None` when nobody offers.
    pub tok_rk: Option<Rank>,
    pub er_prg: bool,
    pub er_var: bool,
    pub er_tp: bool,
    pub er_p: bool,
    pub er_c: bool,
    pub er_s: bool,
    pub rt_nd: bool,
    pub er_n: bool,
    pub false_r: bool,
    pub er_pi: bool,
    pub er: bool,
}

impl Predicates {
    /// Obvious error: `Er_var`, `Er_tp` or `Er_N`.
    pub fn obvious_error(&self) -> bool {
        self.er_var || self.er_tp || self.er_n
    }
}

pub fn eval_predicates(proto: &Protocol, me: NodeState, view: NeighborView<'_>) -> Predicates {
    let ranked = me.rank.is_ranked();
    let parent = me.rank.parent();
    let child = me.rank.child();

    let mut tok_any = false;
    let mut tok_differs_from_parents = false;
    let mut tok_rank: Option<Rank> = None;
    let mut tok_rank_mixed = false;
    let mut non_tok_ranks = [false; 4];

    let mut p_first: Option<NodeState> = None;
    let mut p_mixed = false;
    let mut c_first: Option<NodeState> = None;
    let mut c_mixed = false;
    let mut c_has_token = false;
    let mut s_differs = false;

    let mut any_bottom = false;
    let mut any_top = false;
    let mut any_ranked = false;
    let mut by_rank: [Option<NodeState>; 3] = [None; 3];
    let mut rank_class_mixed = false;

    for &(_, u) in view.iter() {
        let offers = u.offers_token();
        let in_p = ranked && u.rank == parent;
        let in_c = ranked && u.rank == child;
        let in_s = ranked && u.rank == me.rank;

        if offers {
            tok_any = true;
            match tok_rank {
                None => tok_rank = Some(u.rank),
                Some(r) => {
                    if r != u.rank {
                        tok_rank_mixed = true;
                        tok_rank = Some(r.min(u.rank));
                    }
                }
            }
        } else {
            non_tok_ranks[u.rank.index()] = true;
        }
        if offers != in_p {
            tok_differs_from_parents = true;
        }

        if in_p {
            match p_first {
                None => p_first = Some(u),
                Some(f) => p_mixed |= !f.same_phase(u),
            }
        }
        if in_c {
            c_has_token |= u.token == Token::True;
            match c_first {
                None => c_first = Some(u),
                Some(f) => c_mixed |= !f.same_phase(u),
            }
        }
        if in_s {
            s_differs |= !me.same_phase(u);
        }

        any_bottom |= u.rank == Rank::Bottom;
        any_top |= u.bit == Bit::Top;
        if let Some(k) = u.rank.value() {
            any_ranked = true;
            match by_rank[k as usize] {
                None => by_rank[k as usize] = Some(u),
                Some(f) => rank_class_mixed |= !f.same_phase(u),
            }
        }
    }

    let has_parents = p_first.is_some();
    let has_children = c_first.is_some();
    let not_top = me.bit != Bit::Top;

    let reset = me.is_reset();
    let take_p = tok_any && !tok_differs_from_parents;
    let take_o = tok_any && tok_differs_from_parents;
    let take_r = match tok_rank {
        Some(r) if tok_any && !tok_rank_mixed && r.is_ranked() => !non_tok_ranks[r.index()],
        _ => false,
    };

    let er_prg = match proto.propagation {
        ErrorPropagation::Neighbors => ranked && any_top,
        ErrorPropagation::AsPrinted => any_ranked && !not_top,
    };
    let er_var = !er_prg
        && not_top
        && me.rank == Rank::Bottom
        && (me.token != Token::False || me.bit != Bit::Zero);
    let er_tp = !er_prg
        && not_top
        && has_children
        && c_has_token
        && !(me.token == Token::Wait && me.bit == Bit::Zero);
    let er_p = p_mixed || (ranked && !has_parents);
    let er_c = c_mixed;
    let er_s = s_differs;
    let rt_nd = ranked && has_children && me.token != Token::True && any_bottom;
    let er_n = !er_prg && not_top && !take_o && (er_p || er_c || er_s || rt_nd);
    let false_r = ranked && !has_parents;
    let er_pi = reset && rank_class_mixed;
    let er = er_var || er_tp || er_n || false_r || er_prg || er_pi;

    Predicates {
        near_error: any_top,
        reset,
        take_p,
        take_o,
        take_r,
        tok_rk: tok_rank,
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
    }
}

/// Rule labels in program order. The first four are corrective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Er,
    Reset,
    ErRank,
    Join,
    Tok,
    Add,
    Ready,
}

impl Rule {
    pub const ALL: [Rule; 7] = [
        Rule::Er,
        Rule::Reset,
        Rule::ErRank,
        Rule::Join,
        Rule::Tok,
        Rule::Add,
        Rule::Ready,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Er => "R_er",
            Rule::Reset => "R_reset",
            Rule::ErRank => "R_erRank",
            Rule::Join => "R_join",
            Rule::Tok => "R_tok",
            Rule::Add => "R_add",
            Rule::Ready => "R_ready",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Whether the rule can change the rank variable.
    pub fn touches_rank(self) -> bool {
        matches!(self, Rule::Reset | Rule::Join)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set of rules whose guard holds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GuardSet(u8);

impl GuardSet {
    pub fn insert(&mut self, rule: Rule) {
        self.0 |= 1 << rule as u8;
    }

    pub fn contains(&self, rule: Rule) -> bool {
        self.0 & (1 << rule as u8) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// The highest-priority enabled rule.
    pub fn first(&self) -> Option<Rule> {
        Rule::ALL.into_iter().find(|&r| self.contains(r))
    }

    pub fn iter(&self) -> impl Iterator<Item = Rule> + '_ {
        Rule::ALL.into_iter().filter(|&r| self.contains(r))
    }
}

/// Guards of all seven rules from precomputed predicates.
pub fn guards_from(proto: &Protocol, me: NodeState, preds: &Predicates) -> GuardSet {
    let ranked = me.rank.is_ranked();
    let ok = !preds.er;
    let mut set = GuardSet::default();
    if me.bit != Bit::Top && preds.er {
        set.insert(Rule::Er);
    }
    // Any erroneous node resets, ranked or not.
    if me.bit == Bit::Top {
        set.insert(Rule::Reset);
    }
    if proto.er_rank
        && ok
        && ranked
        && me.bit != Bit::Top
        && me.token == Token::False
        && preds.take_o
    {
        set.insert(Rule::ErRank);
    }
    if ok && !ranked && preds.take_r && !(proto.cautious_join && preds.near_error) {
        set.insert(Rule::Join);
    }
    if ok && ranked && me.token == Token::False && preds.take_p {
        set.insert(Rule::Tok);
    }
    if ok && me.token == Token::True {
        set.insert(Rule::Add);
    }
    if ok && me.token == Token::Wait {
        set.insert(Rule::Ready);
    }
    set
}

pub fn enabled_guards(proto: &Protocol, me: NodeState, view: NeighborView<'_>) -> GuardSet {
    guards_from(proto, me, &eval_predicates(proto, me, view))
}

/// The rule a non-root node fires: first enabled guard in program order.
pub fn select_rule(proto: &Protocol, me: NodeState, view: NeighborView<'_>) -> Option<Rule> {
    enabled_guards(proto, me, view).first()
}

/// `k_t(v)`: the senders' common rank plus one.
pub fn joining_rank(view: NeighborView<'_>) -> Option<Rank> {
    let mut common: Option<Rank> = None;
    for (_, u) in view.iter().filter(|(_, u)| u.offers_token()) {
        match common {
            None => common = Some(u.rank),
            Some(r) if r == u.rank => {}
            Some(_) => return None,
        }
    }
    common.filter(|r| r.is_ranked()).map(Rank::child)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("{rule} is not the rule selected at {state}")]
    NotSelected { rule: Rule, state: NodeState },
}

/// Successor state of `me` under `rule`, which must be the selected one:
/// a lower-priority enabled rule may be undefined (`R_add` on `b = ^`).
pub fn apply_rule(
    proto: &Protocol,
    me: NodeState,
    view: NeighborView<'_>,
    rule: Rule,
) -> Result<NodeState, RuleError> {
    if select_rule(proto, me, view) != Some(rule) {
        return Err(RuleError::NotSelected { rule, state: me });
    }
    Ok(fire(me, view, rule))
}

/// Executes a rule statement without re-checking its guard.
pub(crate) fn fire(me: NodeState, view: NeighborView<'_>, rule: Rule) -> NodeState {
    let mut next = me;
    match rule {
        Rule::Er | Rule::ErRank => {
            next.token = Token::Wait;
            next.bit = Bit::Top;
        }
        Rule::Reset => {
            next.rank = Rank::Bottom;
            next.token = Token::False;
            next.bit = Bit::Zero;
        }
        Rule::Join => {
            next.rank = joining_rank(view).expect("R_join requires senders sharing one rank");
            next.bit = Bit::One;
        }
        Rule::Tok => next.token = Token::True,
        Rule::Add => {
            next.token = Token::Wait;
            next.bit = me.bit.flipped().expect("R_add is never enabled on an erroneous node");
        }
        Rule::Ready => next.token = Token::False,
    }
    next
}

/// New overlay color: opposite of the minimum-port parent's color. `None`
/// when the node has no parent or that parent carries no color.
pub fn color_update(me: NodeState, view: NeighborView<'_>) -> Option<Color> {
    let port = parent_port(me, view)?;
    view.state_at(port)?.color.map(Color::opposite)
}
