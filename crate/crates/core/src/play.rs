//! Execution context for scripted Builder strategies.
//!
//! A strategy is ordinary Rust code that calls [`Play::propose`] and branches
//! on the returned color. Anything that stops the script early (a win, an
//! exhausted reply script, a broken contract) travels up as a [`Halt`].

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::board::{Board, Color, Edge, VertexId};
use crate::detect::contains_pattern_through;
use crate::painter::{PainterError, PainterStrategy};
use crate::pattern::GameGoal;
use crate::transcript::Transcript;

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaultKind {
    /// A lemma used more rounds than it promises.
    BoundExceeded { what: String, used: u32, bound: String },
    /// A bookkeeping invariant failed.
    InvariantViolated(String),
    /// A branch claims the game is over, but it is not.
    ClaimFailed(String),
    /// The script proposed an edge that is already colored.
    WastedRound(Edge),
    Painter(PainterError),
}

impl fmt::Display for FaultKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaultKind::BoundExceeded { what, used, bound } => {
                write!(f, "bound exceeded in {what}: used {used}, allowed {bound}")
            }
            FaultKind::InvariantViolated(s) => write!(f, "invariant violated: {s}"),
            FaultKind::ClaimFailed(s) => write!(f, "claimed win did not happen: {s}"),
            FaultKind::WastedRound(e) => write!(f, "strategy re-proposed uncovered edge {e}"),
            FaultKind::Painter(e) => write!(f, "painter error: {e}"),
        }
    }
}

/// A fatal strategy failure together with the transcript that produced it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{kind} (after {} rounds)", transcript.len())]
pub struct StrategyError {
    pub kind: FaultKind,
    pub transcript: Transcript,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Halt {
    /// Builder's target in this color appeared.
    Won(Color),
    /// The reply script ran out; this is the next proposal.
    Pending(Edge),
    Fault(Box<StrategyError>),
}

/// Counters gathered while a script runs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct PlayStats {
    pub type_c_checked: u64,
    pub k5_branch: u64,
    pub invariant_checks: u64,
}

impl std::ops::AddAssign for PlayStats {
    fn add_assign(&mut self, o: Self) {
        self.type_c_checked += o.type_c_checked;
        self.k5_branch += o.k5_branch;
        self.invariant_checks += o.invariant_checks;
    }
}

enum Oracle<'p> {
    Painter(&'p PainterStrategy),
    Replies(&'p [Color]),
    /// Answers from the colors already on a reference board.
    Board(&'p Board),
}

/// Callback shown every type C path a strategy builds, with the board at that moment.
pub type TypeCObserver<'a> = dyn Fn(&Board, &crate::builder::TypeCPath) + Sync + 'a;

pub struct Play<'p> {
    board: Board,
    transcript: Transcript,
    goal: GameGoal,
    oracle: Oracle<'p>,
    round_cap: Option<u32>,
    /// Moves with index below this are known not to end the game.
    trusted: usize,
    type_c_observer: Option<&'p TypeCObserver<'p>>,
    pub stats: PlayStats,
}

impl<'p> Play<'p> {
    pub fn new(goal: GameGoal, painter: &'p PainterStrategy) -> Self {
        Self::with_oracle(goal, Oracle::Painter(painter))
    }

    /// Start from a prepared board (used to exercise single lemmas).
    pub fn with_board(board: Board, goal: GameGoal, painter: &'p PainterStrategy) -> Self {
        let mut p = Self::new(goal, painter);
        p.board = board;
        p
    }

    /// Painter answers with `replies[i]` for the i-th proposal; past the end the
    /// script halts with [`Halt::Pending`]. The first `trusted` replies are
    /// known not to end the game, so win detection skips them.
    pub fn replaying(goal: GameGoal, replies: &'p [Color], trusted: usize) -> Self {
        let mut p = Self::with_oracle(goal, Oracle::Replies(replies));
        p.trusted = trusted;
        p
    }

    /// Replays the script against the colors already on `board`; halts with
    /// the first proposal not yet on it.
    pub fn following(goal: GameGoal, board: &'p Board) -> Self {
        Self::with_oracle(goal, Oracle::Board(board))
    }

    fn with_oracle(goal: GameGoal, oracle: Oracle<'p>) -> Self {
        Play {
            board: Board::new(),
            transcript: Transcript::new(),
            goal,
            oracle,
            round_cap: None,
            trusted: 0,
            type_c_observer: None,
            stats: PlayStats::default(),
        }
    }

    pub fn with_round_cap(mut self, cap: u32) -> Self {
        self.round_cap = Some(cap);
        self
    }

    pub fn observing_type_c(mut self, f: &'p TypeCObserver<'p>) -> Self {
        self.type_c_observer = Some(f);
        self
    }

    pub(crate) fn observe_type_c(&self, c: &crate::builder::TypeCPath) {
        if let Some(f) = self.type_c_observer {
            f(&self.board, c);
        }
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn goal(&self) -> GameGoal {
        self.goal
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    pub fn into_transcript(self) -> Transcript {
        self.transcript
    }

    /// Rounds played by this context (excludes a prepared starting board).
    pub fn rounds(&self) -> u32 {
        self.transcript.len() as u32
    }

    pub fn fresh(&self) -> VertexId {
        self.board.fresh_vertex()
    }

    pub fn fresh_avoiding(&self, avoid: &[VertexId]) -> VertexId {
        self.board.fresh_avoiding(avoid)
    }

    pub fn fresh_n<const N: usize>(&self) -> [VertexId; N] {
        self.board.fresh_vertices(N).try_into().expect("length N")
    }

    pub fn color(&self, a: VertexId, b: VertexId) -> Option<Color> {
        self.board.color(Edge::between(a, b))
    }

    pub fn fault(&self, kind: FaultKind) -> Halt {
        Halt::Fault(Box::new(StrategyError { kind, transcript: self.transcript.clone() }))
    }

    pub fn claim_failed(&self, what: impl Into<String>) -> Halt {
        self.fault(FaultKind::ClaimFailed(what.into()))
    }

    pub fn invariant(&self, ok: bool, what: impl FnOnce() -> String) -> Result<(), Halt> {
        if ok {
            Ok(())
        } else {
            Err(self.fault(FaultKind::InvariantViolated(what())))
        }
    }

    /// Propose `ab`; returns the color Painter chose unless the game just ended.
    pub fn propose(&mut self, a: VertexId, b: VertexId) -> Result<Color, Halt> {
        let e = Edge::between(a, b);
        if self.board.contains(e) {
            return Err(self.fault(FaultKind::WastedRound(e)));
        }
        if let Some(cap) = self.round_cap {
            if self.rounds() >= cap {
                return Err(self.fault(FaultKind::BoundExceeded {
                    what: "game".into(),
                    used: cap + 1,
                    bound: cap.to_string(),
                }));
            }
        }
        let i = self.transcript.len();
        let c = match &self.oracle {
            Oracle::Painter(p) => p.decide(&self.board, e).map_err(|err| self.fault(FaultKind::Painter(err)))?,
            Oracle::Replies(r) => *r.get(i).ok_or(Halt::Pending(e))?,
            Oracle::Board(b) => b.color(e).ok_or(Halt::Pending(e))?,
        };
        self.board.insert(e, c).expect("edge checked absent");
        self.transcript.push(e, c);
        if i >= self.trusted && contains_pattern_through(&self.board, c, self.goal.target(c), e) {
            return Err(Halt::Won(c));
        }
        Ok(c)
    }

    /// Propose `ab` where a red reply is claimed to finish Builder's red target.
    pub fn force_blue(&mut self, a: VertexId, b: VertexId, why: &str) -> Result<(), Halt> {
        match self.propose(a, b)? {
            Color::Blue => Ok(()),
            Color::Red => Err(self.claim_failed(format!("red {a}{b}: {why}"))),
        }
    }

    /// Propose `ab` where either reply is claimed to end the game.
    pub fn closing(&mut self, a: VertexId, b: VertexId, why: &str) -> Halt {
        match self.propose(a, b) {
            Err(h) => h,
            Ok(c) => self.claim_failed(format!("{c} {a}{b}: {why}")),
        }
    }

    /// Fails with `BoundExceeded` when more than `bound` rounds were used since `start`.
    pub fn check_cost(&self, start: u32, bound: Q, what: &str) -> Result<u32, Halt> {
        let used = self.rounds() - start;
        if q(used as i64) > bound {
            return Err(self.fault(FaultKind::BoundExceeded { what: what.into(), used, bound: bound.to_string() }));
        }
        Ok(used)
    }
}
