//! Running strategies: single games, exhaustive certification, tables and
//! the session service.

pub mod service;
pub mod session;
pub mod table;

use serde::Serialize;
use thiserror::Error;

use crate::board::Color;
use crate::builder::BuilderSpec;
use crate::detect::contains_pattern;
use crate::painter::{blocking_painter, PainterStrategy};
use crate::pattern::{Family, GameGoal};
use crate::play::{FaultKind, Halt, Play, PlayStats, StrategyError, TypeCObserver};
use crate::transcript::Transcript;

pub use session::{CreateSession, GameSession, HumanRole, MovePayload, SessionError, SessionStatus, SessionStore, Snapshot};
pub use table::{paper_bounds, standard_goals, TableOptions, TableRow};

/// A finished game between a scripted Builder and a painter.
#[derive(Clone, Debug, Serialize)]
pub struct GameRecord {
    pub strategy: String,
    pub painter: String,
    pub goal: GameGoal,
    pub winner: Color,
    pub transcript: Transcript,
    pub stats: PlayStats,
}

impl GameRecord {
    pub fn rounds(&self) -> usize {
        self.transcript.len()
    }
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("round cap {cap} reached without a winner")]
    RoundCapHit { cap: u32, transcript: Transcript },
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}

/// Play `spec` against `painter` until someone's target appears.
pub fn run_game(spec: &BuilderSpec, painter: &PainterStrategy, round_cap: u32) -> Result<GameRecord, GameError> {
    assert!(round_cap >= 1, "round cap must be positive");
    let goal = spec.goal();
    let mut g = Play::new(goal, painter).with_round_cap(round_cap);
    match spec.run(&mut g) {
        Halt::Won(winner) => Ok(GameRecord {
            strategy: spec.to_string(),
            painter: painter.name().to_string(),
            goal,
            winner,
            stats: g.stats,
            transcript: g.into_transcript(),
        }),
        Halt::Fault(err) => match err.kind {
            FaultKind::BoundExceeded { ref what, .. } if what == "game" => {
                Err(GameError::RoundCapHit { cap: round_cap, transcript: err.transcript })
            }
            _ => Err(GameError::Strategy(*err)),
        },
        Halt::Pending(_) => unreachable!("a painter always answers"),
    }
}

/// The blocking painter used for each strategy's stored reference game.
pub fn golden_painter(spec: &BuilderSpec) -> PainterStrategy {
    let fam = match spec {
        BuilderSpec::P3Path(_) | BuilderSpec::P3Cycle(_) | BuilderSpec::P3SmallCycle(_) => Family::path_forest(2),
        BuilderSpec::C4P4 | BuilderSpec::C4Path(_) => Family::cycle(4),
        BuilderSpec::P4Path(_) => Family::path_forest(3),
    };
    blocking_painter(fam)
}

/// Outcome of exploring every painter reply sequence against a strategy.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub strategy: String,
    pub claimed_bound: u32,
    /// Longest game over all reply sequences; `claimed_bound + 1` when some
    /// line broke the bound or faulted before finishing.
    pub worst_rounds: u32,
    pub leaves: u64,
    /// The first failing line in R-before-B order.
    pub counterexample: Option<Transcript>,
    pub failure: Option<String>,
    pub invariant_violations: u64,
    /// Counters summed over every leaf's line of play.
    pub stats: PlayStats,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Default)]
struct Subtree {
    worst: u32,
    leaves: u64,
    stats: PlayStats,
    invariant_violations: u64,
    failure: Option<(Transcript, String)>,
}

impl Subtree {
    fn merge(mut self, o: Subtree) -> Subtree {
        self.worst = self.worst.max(o.worst);
        self.leaves += o.leaves;
        self.stats += o.stats;
        self.invariant_violations += o.invariant_violations;
        self.failure = self.failure.or(o.failure);
        self
    }
}

struct Certifier<'a> {
    observer: Option<&'a TypeCObserver<'a>>,
    spec: BuilderSpec,
    goal: GameGoal,
    cap: u32,
    par_depth: usize,
}

impl Certifier<'_> {
    fn fail(&self, transcript: Transcript, why: String, stats: PlayStats, invariant: bool) -> Subtree {
        Subtree {
            worst: self.cap + 1,
            leaves: 1,
            stats,
            invariant_violations: invariant as u64,
            failure: Some((transcript, why)),
        }
    }

    /// Re-runs the script on `prefix`; only the last reply can end the game,
    /// since the parent already ran every shorter one.
    fn explore(&self, prefix: &mut Vec<Color>) -> Subtree {
        let trusted = prefix.len().saturating_sub(1);
        let mut g = Play::replaying(self.goal, prefix, trusted).with_round_cap(self.cap);
        if let Some(f) = self.observer {
            g = g.observing_type_c(f);
        }
        match self.spec.run(&mut g) {
            Halt::Won(c) => {
                let stats = g.stats;
                let rounds = g.rounds();
                let board = g.transcript().replay().expect("scripted transcripts replay");
                if !contains_pattern(&board, c, self.goal.target(c)) {
                    return self.fail(g.into_transcript(), format!("reported {c} win without a {c} target"), stats, false);
                }
                Subtree { worst: rounds, leaves: 1, stats, ..Subtree::default() }
            }
            Halt::Fault(err) => {
                let invariant = matches!(err.kind, FaultKind::InvariantViolated(_));
                self.fail(err.transcript, err.kind.to_string(), g.stats, invariant)
            }
            Halt::Pending(_) => {
                if prefix.len() < self.par_depth {
                    let child = |c| prefix.iter().copied().chain([c]).collect::<Vec<_>>();
                    let (mut red, mut blue) = (child(Color::Red), child(Color::Blue));
                    let (a, b) = rayon::join(|| self.explore(&mut red), || self.explore(&mut blue));
                    a.merge(b)
                } else {
                    prefix.push(Color::Red);
                    let a = self.explore(prefix);
                    *prefix.last_mut().unwrap() = Color::Blue;
                    let b = self.explore(prefix);
                    prefix.pop();
                    a.merge(b)
                }
            }
        }
    }
}

/// Explore every reply sequence, failing any line that runs past
/// `claimed_bound` rounds or breaks one of the strategy's own checks.
pub fn certify_bound(spec: &BuilderSpec, claimed_bound: u32) -> VerificationReport {
    certify_observing(spec, claimed_bound, None)
}

/// [`certify_bound`], also handing every type C path built on any line to `observer`.
pub fn certify_observing<'a>(
    spec: &BuilderSpec,
    claimed_bound: u32,
    observer: Option<&'a TypeCObserver<'a>>,
) -> VerificationReport {
    let c = Certifier { observer, spec: *spec, goal: spec.goal(), cap: claimed_bound, par_depth: 14 };
    let t = c.explore(&mut Vec::new());
    let (counterexample, failure) = match t.failure {
        Some((tr, why)) => (Some(tr), Some(why)),
        None => (None, None),
    };
    VerificationReport {
        strategy: spec.to_string(),
        claimed_bound,
        worst_rounds: t.worst,
        leaves: t.leaves,
        counterexample,
        failure,
        invariant_violations: t.invariant_violations,
        stats: t.stats,
    }
}

/// [`certify_bound`] at the strategy's own claimed bound.
pub fn certify(spec: &BuilderSpec) -> VerificationReport {
    certify_bound(spec, spec.claimed_bound())
}
