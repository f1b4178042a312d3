//! On-line Ramsey games on paths and cycles.
//!
//! Builder proposes edges of an infinite complete graph one per round and
//! Painter colors each red or blue; Builder wins once a red `G` or a blue `H`
//! appears. This crate provides the game board, painter policies, every
//! scripted Builder strategy together with exhaustive round-bound
//! certification, an exact solver for small goals, the lower-bound
//! (scaffolding) machinery and a small HTTP service for interactive play.
//!
//! ```
//! use ramsey_core::{run_game, blocking_painter, BuilderSpec, Family};
//!
//! let spec: BuilderSpec = "p3-path:8".parse().unwrap();
//! let painter = blocking_painter(Family::path_forest(2));
//! let game = run_game(&spec, &painter, 10).unwrap();
//! assert_eq!(game.transcript.len(), 10);
//! ```

pub mod board;
pub mod bounds;
pub mod builder;
pub mod canon;
pub mod detect;
pub mod enumerate;
pub mod harness;
pub mod painter;
pub mod pattern;
pub mod play;
pub mod solver;
pub mod transcript;

pub use board::{Board, BoardError, Color, Edge, VertexId};
pub use builder::{BuilderSpec, StrategyOutcome};
pub use canon::{canonical_key, CanonicalKey};
pub use detect::{contains_pattern, is_family_free, longest_monochromatic_path};
pub use harness::{certify_bound, run_game, GameRecord, VerificationReport};
pub use painter::{all_blue_painter, all_red_painter, blocking_painter, count_red_painter, replay_painter, PainterStrategy};
pub use pattern::{Family, GameGoal, PatternKind, TargetPattern};
pub use play::{Halt, Play, StrategyError};
pub use solver::{best_builder_move, optimal_painter, solve, SolveConfig, SolveResult, SolveValue};
pub use transcript::{Move, Transcript};
