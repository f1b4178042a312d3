//! Painter strategies. Every painter is a pure function of (board, proposed edge).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::board::{Board, Color, Edge};
use crate::detect::is_family_free;
use crate::pattern::{Family, GameGoal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PainterError {
    #[error("replay script exhausted at proposal {0}")]
    ExhaustedScript(usize),
    #[error("unknown painter `{0}` (expected blocking:FAM, count-red:N, replay:RB.., all-red, all-blue, optimal:BUDGET)")]
    Unknown(String),
}

type DecideFn = dyn Fn(&Board, Edge) -> Color + Send + Sync;

#[derive(Clone)]
enum Rule {
    Blocking(Family),
    CountRed(usize),
    Replay(Arc<[Color]>),
    Custom(Arc<DecideFn>),
}

#[derive(Clone)]
pub struct PainterStrategy {
    name: String,
    rule: Rule,
}

impl fmt::Debug for PainterStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PainterStrategy").field(&self.name).finish()
    }
}

/// Red iff the red graph plus `e` stays `fam`-free.
pub fn blocking_painter(fam: Family) -> PainterStrategy {
    PainterStrategy { name: format!("blocking:{fam}"), rule: Rule::Blocking(fam) }
}

/// The first `n` proposals are red, everything after is blue.
pub fn count_red_painter(n: usize) -> PainterStrategy {
    PainterStrategy { name: format!("count-red:{n}"), rule: Rule::CountRed(n) }
}

/// The i-th proposal gets `bits[i]`.
pub fn replay_painter(bits: Vec<Color>) -> PainterStrategy {
    let name = format!("replay:{}", bits.iter().map(|c| c.letter()).collect::<String>());
    PainterStrategy { name, rule: Rule::Replay(bits.into()) }
}

pub fn all_blue_painter() -> PainterStrategy {
    PainterStrategy { name: "all-blue".into(), rule: Rule::CountRed(0) }
}

pub fn all_red_painter() -> PainterStrategy {
    PainterStrategy { name: "all-red".into(), rule: Rule::CountRed(usize::MAX) }
}

impl PainterStrategy {
    /// Wrap an arbitrary deterministic decision function.
    pub fn from_fn(name: impl Into<String>, f: impl Fn(&Board, Edge) -> Color + Send + Sync + 'static) -> Self {
        PainterStrategy { name: name.into(), rule: Rule::Custom(Arc::new(f)) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn deterministic(&self) -> bool {
        true
    }

    pub fn decide(&self, board: &Board, e: Edge) -> Result<Color, PainterError> {
        let i = board.edge_count();
        Ok(match &self.rule {
            Rule::Blocking(fam) => {
                let mut red = board.color_subgraph(Color::Red);
                red.insert(e, Color::Red).expect("proposed edge is absent from the board");
                if is_family_free(&red, Color::Red, fam) {
                    Color::Red
                } else {
                    Color::Blue
                }
            }
            Rule::CountRed(n) => {
                if i < *n {
                    Color::Red
                } else {
                    Color::Blue
                }
            }
            Rule::Replay(bits) => *bits.get(i).ok_or(PainterError::ExhaustedScript(i))?,
            Rule::Custom(f) => f(board, e),
        })
    }

    /// `blocking:P4+acyclic`, `count-red:2`, `replay:RBBRB`, `all-red`, `all-blue`,
    /// `optimal:BUDGET` (needs the goal).
    pub fn parse(s: &str, goal: GameGoal) -> Result<PainterStrategy, PainterError> {
        let bad = || PainterError::Unknown(s.to_string());
        let (head, arg) = s.split_once(':').unwrap_or((s, ""));
        match head {
            "blocking" => Ok(blocking_painter(arg.parse().map_err(|_| bad())?)),
            "count-red" => Ok(count_red_painter(arg.parse().map_err(|_| bad())?)),
            "replay" => {
                let bits = arg.chars().map(Color::from_letter).collect::<Option<Vec<_>>>().ok_or_else(bad)?;
                Ok(replay_painter(bits))
            }
            "all-red" => Ok(all_red_painter()),
            "all-blue" => Ok(all_blue_painter()),
            "optimal" => Ok(crate::solver::optimal_painter(goal, arg.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::between(a, b)
    }

    #[test]
    fn blocking_examples() {
        let p = blocking_painter(Family::path_forest(2));
        let empty = Board::new();
        assert_eq!(p.decide(&empty, e(0, 1)).unwrap(), Color::Red);
        let one = empty.add_edge(e(0, 1), Color::Red).unwrap();
        assert_eq!(p.decide(&one, e(1, 2)).unwrap(), Color::Blue);
        assert_eq!(p.decide(&one, e(2, 3)).unwrap(), Color::Red);
    }

    #[test]
    fn count_red_examples() {
        let p = count_red_painter(2);
        let mut b = Board::new();
        let mut got = Vec::new();
        for x in [e(0, 1), e(1, 2), e(2, 3)] {
            let c = p.decide(&b, x).unwrap();
            got.push(c);
            b.insert(x, c).unwrap();
        }
        assert_eq!(got, vec![Color::Red, Color::Red, Color::Blue]);
        assert_eq!(count_red_painter(0).decide(&Board::new(), e(0, 1)).unwrap(), Color::Blue);
    }

    #[test]
    fn replay_exhausts() {
        let p = replay_painter(vec![Color::Red]);
        let b = Board::new();
        assert_eq!(p.decide(&b, e(0, 1)).unwrap(), Color::Red);
        let b = b.add_edge(e(0, 1), Color::Red).unwrap();
        assert_eq!(p.decide(&b, e(1, 2)), Err(PainterError::ExhaustedScript(1)));
    }
}
