//! Scripted Builder strategies.
//!
//! Each strategy is a plain function over a [`Play`] context. The same code
//! drives a live game, an exhaustive certification run and single-move
//! queries (via [`Play::following`]), so there is exactly one implementation
//! of every case split.

pub mod appendix;
pub mod c4;
pub mod gadgets;
pub mod p3;
pub mod p4;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::board::{Board, Color, Edge, VertexId};
use crate::pattern::{GameGoal, TargetPattern};
use crate::play::{FaultKind, Halt, Play, StrategyError};

pub use appendix::{BluePair, FindA, FindBC, RedPair, UseA, UseC};
pub use gadgets::{AnchoredPath, TrackedStructure, TypeAPath, TypeBPath, TypeCPath};
pub use p3::P3Block;

/// A named, parameterised strategy, e.g. `p3-path:8` or `c4-p4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuilderSpec {
    P3Path(usize),
    P3Cycle(usize),
    P3SmallCycle(usize),
    C4P4,
    C4Path(usize),
    P4Path(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("unknown strategy {0:?}")]
    Unknown(String),
    #[error("strategy {name} needs a parameter, e.g. {name}:5")]
    MissingParam { name: &'static str },
    #[error("bad parameter in {0:?}")]
    BadParam(String),
    #[error("{name} does not accept ell = {ell}")]
    OutOfRange { name: &'static str, ell: usize },
}

impl BuilderSpec {
    pub const NAMES: [&'static str; 6] = ["p3-path", "p3-cycle", "p3-smallcycle", "c4-p4", "c4-path", "p4-path"];

    pub fn name(&self) -> &'static str {
        match self {
            BuilderSpec::P3Path(_) => "p3-path",
            BuilderSpec::P3Cycle(_) => "p3-cycle",
            BuilderSpec::P3SmallCycle(_) => "p3-smallcycle",
            BuilderSpec::C4P4 => "c4-p4",
            BuilderSpec::C4Path(_) => "c4-path",
            BuilderSpec::P4Path(_) => "p4-path",
        }
    }

    pub fn param(&self) -> Option<usize> {
        match *self {
            BuilderSpec::P3Path(l)
            | BuilderSpec::P3Cycle(l)
            | BuilderSpec::P3SmallCycle(l)
            | BuilderSpec::C4Path(l)
            | BuilderSpec::P4Path(l) => Some(l),
            BuilderSpec::C4P4 => None,
        }
    }

    pub fn goal(&self) -> GameGoal {
        let p = |n: usize| TargetPattern::p(n as u32);
        let c = |n: usize| TargetPattern::c(n as u32);
        match *self {
            BuilderSpec::P3Path(l) => GameGoal::new(p(3), p(l + 1)),
            BuilderSpec::P3Cycle(l) | BuilderSpec::P3SmallCycle(l) => GameGoal::new(p(3), c(l)),
            BuilderSpec::C4P4 => GameGoal::new(c(4), p(4)),
            BuilderSpec::C4Path(l) => GameGoal::new(c(4), p(l + 1)),
            BuilderSpec::P4Path(l) => GameGoal::new(p(4), p(l + 1)),
        }
    }

    /// The strategy whose goal is `goal`, if the library has one.
    pub fn for_goal(goal: GameGoal) -> Option<BuilderSpec> {
        let (red, blue) = (goal.red, goal.blue);
        let n = blue.size() as usize;
        let spec = if red == TargetPattern::p(3) {
            match (blue.is_path(), n) {
                (true, _) => BuilderSpec::P3Path(n - 1),
                (false, 3 | 4) => BuilderSpec::P3SmallCycle(n),
                (false, _) => BuilderSpec::P3Cycle(n),
            }
        } else if red == TargetPattern::c(4) && blue.is_path() && n >= 4 {
            if n == 4 {
                BuilderSpec::C4P4
            } else {
                BuilderSpec::C4Path(n - 1)
            }
        } else if red == TargetPattern::p(4) && blue.is_path() {
            BuilderSpec::P4Path(n - 1)
        } else {
            return None;
        };
        spec.to_string().parse().ok()
    }

    /// The round bound the strategy is proved to meet.
    pub fn claimed_bound(&self) -> u32 {
        let l = self.param().unwrap_or(0) as u32;
        match self {
            BuilderSpec::P3Path(_) | BuilderSpec::P3Cycle(_) => (5 * l).div_ceil(4),
            BuilderSpec::P3SmallCycle(_) => l + 2,
            BuilderSpec::C4P4 => 8,
            BuilderSpec::C4Path(_) => 4 * l - 4,
            BuilderSpec::P4Path(_) => p4::p4_bound(l as usize),
        }
    }

    /// Run the script to the end of the game. The result is always a halt:
    /// a win, a pending proposal (reply script exhausted) or a fault.
    pub fn run(&self, g: &mut Play) -> Halt {
        let res = match *self {
            BuilderSpec::P3Path(l) => p3::p3_path(g, l),
            BuilderSpec::P3Cycle(l) => p3::p3_cycle(g, l),
            BuilderSpec::P3SmallCycle(l) => p3::p3_small_cycle(g, l),
            BuilderSpec::C4P4 => c4::c4_p4(g).map(drop),
            BuilderSpec::C4Path(l) => c4::c4_path(g, l),
            BuilderSpec::P4Path(l) => p4::p4_path(g, l),
        };
        match res {
            Err(h) => h,
            Ok(()) => g.claim_failed("script ended without a win"),
        }
    }

    /// The strategy's next proposal on `board`, which must have been produced
    /// by this strategy. `None` once the game is over.
    pub fn next_move(&self, board: &Board) -> Option<Edge> {
        let mut g = Play::following(self.goal(), board);
        match self.run(&mut g) {
            Halt::Pending(e) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for BuilderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(l) => write!(f, "{}:{l}", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for BuilderSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p.parse::<usize>().map_err(|_| SpecError::BadParam(s.into()))?)),
            None => (s, None),
        };
        let name = *Self::NAMES.iter().find(|n| **n == name).ok_or_else(|| SpecError::Unknown(s.into()))?;
        if name == "c4-p4" {
            return match param {
                None => Ok(BuilderSpec::C4P4),
                Some(_) => Err(SpecError::BadParam(s.into())),
            };
        }
        let ell = param.ok_or(SpecError::MissingParam { name })?;
        let (ok, spec) = match name {
            "p3-path" => (ell >= 2, BuilderSpec::P3Path(ell)),
            "p3-cycle" => (ell >= 5, BuilderSpec::P3Cycle(ell)),
            "p3-smallcycle" => (ell == 3 || ell == 4, BuilderSpec::P3SmallCycle(ell)),
            "c4-path" => (ell >= 3, BuilderSpec::C4Path(ell)),
            _ => (ell >= 1, BuilderSpec::P4Path(ell)),
        };
        if ok {
            Ok(spec)
        } else {
            Err(SpecError::OutOfRange { name, ell })
        }
    }
}

impl Serialize for BuilderSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BuilderSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Structures a lemma can hand back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Gadget {
    BluePath(Vec<VertexId>),
    Anchored(AnchoredPath),
    TypeA(TypeAPath),
    TypeB(TypeBPath),
    TypeC(TypeCPath),
    Structure(TrackedStructure),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum OutcomeKind {
    RedTargetBuilt,
    BlueTargetBuilt,
    Gadget(Gadget),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrategyOutcome {
    pub kind: OutcomeKind,
    pub rounds_used: u32,
}

impl StrategyOutcome {
    pub fn gadget(&self) -> Option<&Gadget> {
        match &self.kind {
            OutcomeKind::Gadget(g) => Some(g),
            _ => None,
        }
    }

    pub fn won_by(&self) -> Option<Color> {
        match self.kind {
            OutcomeKind::RedTargetBuilt => Some(Color::Red),
            OutcomeKind::BlueTargetBuilt => Some(Color::Blue),
            OutcomeKind::Gadget(_) => None,
        }
    }
}

/// Run one lemma against the context's painter and package what it produced.
///
/// ```
/// use ramsey_core::builder::{lemma, Gadget, p3};
/// use ramsey_core::{all_blue_painter, GameGoal, Play, TargetPattern};
///
/// let painter = all_blue_painter();
/// let goal = GameGoal::new(TargetPattern::p(3), TargetPattern::p(9));
/// let mut g = Play::new(goal, &painter);
/// let out = lemma(&mut g, |g| p3::building_block(g, 5)).unwrap();
/// assert_eq!(out.rounds_used, 4);
/// assert!(matches!(out.gadget(), Some(Gadget::BluePath(p)) if p.len() == 5));
/// ```
pub fn lemma<T: Into<Gadget>>(
    g: &mut Play,
    f: impl FnOnce(&mut Play) -> Result<T, Halt>,
) -> Result<StrategyOutcome, StrategyError> {
    let start = g.rounds();
    let res = f(g);
    let rounds_used = g.rounds() - start;
    let kind = match res {
        Ok(t) => OutcomeKind::Gadget(t.into()),
        Err(Halt::Won(Color::Red)) => OutcomeKind::RedTargetBuilt,
        Err(Halt::Won(Color::Blue)) => OutcomeKind::BlueTargetBuilt,
        Err(Halt::Fault(e)) => return Err(*e),
        Err(Halt::Pending(e)) => {
            return Err(StrategyError {
                kind: FaultKind::InvariantViolated(format!("no reply available for {e}")),
                transcript: g.transcript().clone(),
            })
        }
    };
    Ok(StrategyOutcome { kind, rounds_used })
}

impl From<Vec<VertexId>> for Gadget {
    fn from(p: Vec<VertexId>) -> Self {
        Gadget::BluePath(p)
    }
}

impl From<AnchoredPath> for Gadget {
    fn from(p: AnchoredPath) -> Self {
        Gadget::Anchored(p)
    }
}

impl From<TypeBPath> for Gadget {
    fn from(p: TypeBPath) -> Self {
        Gadget::TypeB(p)
    }
}

impl From<TypeCPath> for Gadget {
    fn from(p: TypeCPath) -> Self {
        Gadget::TypeC(p)
    }
}

impl From<P3Block> for Gadget {
    fn from(b: P3Block) -> Self {
        match b {
            P3Block::Blue(p) => Gadget::BluePath(p),
            P3Block::Anchored(a) => Gadget::Anchored(a),
        }
    }
}

impl From<FindA> for Gadget {
    fn from(f: FindA) -> Self {
        match f {
            FindA::TypeA(a) => Gadget::TypeA(a),
            FindA::Blue(p) => Gadget::BluePath(p),
        }
    }
}

impl From<UseA> for Gadget {
    fn from(u: UseA) -> Self {
        match u {
            UseA::Short(p) | UseA::Long(p) => Gadget::Anchored(p),
        }
    }
}

impl From<BluePair> for Gadget {
    fn from(b: BluePair) -> Self {
        Gadget::Structure(b.structure)
    }
}

impl From<FindBC> for Gadget {
    fn from(f: FindBC) -> Self {
        match f {
            FindBC::TypeB(b) => Gadget::TypeB(b),
            FindBC::TypeC(c) => Gadget::TypeC(c),
        }
    }
}

impl From<UseC> for Gadget {
    fn from(u: UseC) -> Self {
        Gadget::BluePath(u.r)
    }
}

impl From<RedPair> for Gadget {
    fn from(r: RedPair) -> Self {
        match r {
            RedPair::ExtendQ(q) => Gadget::Anchored(q),
            RedPair::ExtendR { r, .. } | RedPair::LongR(r) => Gadget::BluePath(r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        for s in ["p3-path:8", "p3-cycle:6", "p3-smallcycle:3", "c4-p4", "c4-path:5", "p4-path:10"] {
            let spec: BuilderSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("p3-path".parse::<BuilderSpec>().is_err());
        assert!("p3-cycle:4".parse::<BuilderSpec>().is_err());
        assert!("c4-p4:2".parse::<BuilderSpec>().is_err());
        assert!("k4".parse::<BuilderSpec>().is_err());
    }

    #[test]
    fn bounds_and_goals() {
        let b = |s: &str| s.parse::<BuilderSpec>().unwrap().claimed_bound();
        assert_eq!([b("p3-path:2"), b("p3-path:3"), b("p3-path:8")], [3, 4, 10]);
        assert_eq!([b("p3-smallcycle:3"), b("p3-smallcycle:4")], [5, 6]);
        assert_eq!([b("c4-path:3"), b("p4-path:10"), b("p4-path:6")], [8, 24, 18]);
        assert_eq!("p4-path:5".parse::<BuilderSpec>().unwrap().goal().to_string(), "(P4,P6)");
    }
}
