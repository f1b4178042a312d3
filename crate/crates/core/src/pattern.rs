//! Targets (`P<s>`, `C<s>`), game goals and forbidden families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("cannot parse pattern `{0}` (expected P<s> with s >= 2 or C<s> with s >= 3)")]
    BadPattern(String),
    #[error("cannot parse family `{0}`")]
    BadFamily(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    Path,
    Cycle,
}

/// A path `P_s` on `s` vertices or a cycle `C_s` of length `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TargetPattern {
    kind: PatternKind,
    size: u32,
}

impl TargetPattern {
    pub fn path(s: u32) -> Result<Self, PatternError> {
        if s < 2 {
            return Err(PatternError::BadPattern(format!("P{s}")));
        }
        Ok(TargetPattern { kind: PatternKind::Path, size: s })
    }

    pub fn cycle(s: u32) -> Result<Self, PatternError> {
        if s < 3 {
            return Err(PatternError::BadPattern(format!("C{s}")));
        }
        Ok(TargetPattern { kind: PatternKind::Cycle, size: s })
    }

    /// Shorthand for tests and examples; panics on an ill-formed size.
    pub fn p(s: u32) -> Self {
        Self::path(s).unwrap()
    }

    /// Shorthand for tests and examples; panics on an ill-formed size.
    pub fn c(s: u32) -> Self {
        Self::cycle(s).unwrap()
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_path(&self) -> bool {
        self.kind == PatternKind::Path
    }

    pub fn vertex_count(&self) -> u32 {
        self.size
    }

    pub fn edge_count(&self) -> u32 {
        match self.kind {
            PatternKind::Path => self.size - 1,
            PatternKind::Cycle => self.size,
        }
    }

    pub fn max_degree(&self) -> u32 {
        match (self.kind, self.size) {
            (PatternKind::Path, 2) => 1,
            _ => 2,
        }
    }

    /// A copy of the pattern on vertices `0..vertex_count`.
    pub fn edges(&self) -> Vec<crate::Edge> {
        let n = self.size;
        let mut out: Vec<_> = (1..n).map(|i| crate::Edge::between(i - 1, i)).collect();
        if self.kind == PatternKind::Cycle {
            out.push(crate::Edge::between(0, n - 1));
        }
        out
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            PatternKind::Path => 'P',
            PatternKind::Cycle => 'C',
        };
        write!(f, "{k}{}", self.size)
    }
}

impl FromStr for TargetPattern {
    type Err = PatternError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || PatternError::BadPattern(s.to_string());
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(bad)?;
        let size: u32 = chars.as_str().parse().map_err(|_| bad())?;
        match head.to_ascii_uppercase() {
            'P' => TargetPattern::path(size).map_err(|_| bad()),
            'C' => TargetPattern::cycle(size).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl Serialize for TargetPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TargetPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Builder wins on a red copy of `red` or a blue copy of `blue`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameGoal {
    pub red: TargetPattern,
    pub blue: TargetPattern,
}

impl GameGoal {
    pub fn new(red: TargetPattern, blue: TargetPattern) -> Self {
        GameGoal { red, blue }
    }

    pub fn target(&self, c: crate::Color) -> TargetPattern {
        match c {
            crate::Color::Red => self.red,
            crate::Color::Blue => self.blue,
        }
    }

    /// `e(G) + e(H) - 1`: Painter colours the first `e(G) - 1` edges red.
    pub fn trivial_lower_bound(&self) -> u32 {
        self.red.edge_count() + self.blue.edge_count() - 1
    }
}

impl fmt::Display for GameGoal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.red, self.blue)
    }
}

/// Finite description of a family of forbidden graphs.
///
/// `path_bound = Some(k)` forbids `P_{k+1}`; `acyclic` forbids every cycle;
/// `cycles` forbids the listed cycle lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Family {
    pub path_bound: Option<u32>,
    pub acyclic: bool,
    pub cycles: BTreeSet<u32>,
}

impl Family {
    /// `{P_{k+1}} ∪ {C_i : i ≥ 3}`, the family behind the forest scaffoldings.
    pub fn path_forest(k: u32) -> Family {
        Family { path_bound: Some(k), acyclic: true, cycles: BTreeSet::new() }
    }

    pub fn all_cycles() -> Family {
        Family { path_bound: None, acyclic: true, cycles: BTreeSet::new() }
    }

    pub fn cycle(len: u32) -> Family {
        Family { path_bound: None, acyclic: false, cycles: BTreeSet::from([len]) }
    }

    /// The family `{G}` for a single target.
    pub fn of_target(t: TargetPattern) -> Family {
        match t.kind() {
            PatternKind::Path => Family { path_bound: Some(t.size() - 1), ..Family::default() },
            PatternKind::Cycle => Family::cycle(t.size()),
        }
    }

    pub fn forbids(&self, t: TargetPattern) -> bool {
        match t.kind() {
            PatternKind::Path => self.path_bound.is_some_and(|k| t.size() > k),
            PatternKind::Cycle => {
                self.acyclic
                    || self.cycles.contains(&t.size())
                    || self.path_bound.is_some_and(|k| t.size() > k)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.path_bound {
            parts.push(format!("P{}", k + 1));
        }
        parts.extend(self.cycles.iter().map(|c| format!("C{c}")));
        if self.acyclic {
            parts.push("acyclic".to_string());
        }
        if parts.is_empty() {
            parts.push("empty".to_string());
        }
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for Family {
    type Err = PatternError;

    /// `P4+acyclic`, `C4`, `C3+C5`, `acyclic`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut fam = Family::default();
        for part in s.split('+').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("acyclic") || part.eq_ignore_ascii_case("cycles") {
                fam.acyclic = true;
                continue;
            }
            let t: TargetPattern = part.parse().map_err(|_| PatternError::BadFamily(s.to_string()))?;
            match t.kind() {
                PatternKind::Path => {
                    let k = t.size() - 1;
                    fam.path_bound = Some(fam.path_bound.map_or(k, |old| old.min(k)));
                }
                PatternKind::Cycle => {
                    fam.cycles.insert(t.size());
                }
            }
        }
        if fam == Family::default() {
            return Err(PatternError::BadFamily(s.to_string()));
        }
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_patterns() {
        assert_eq!("P4".parse::<TargetPattern>().unwrap(), TargetPattern::p(4));
        assert_eq!("c5".parse::<TargetPattern>().unwrap(), TargetPattern::c(5));
        assert!("P1".parse::<TargetPattern>().is_err());
        assert!("C2".parse::<TargetPattern>().is_err());
        assert!("Q3".parse::<TargetPattern>().is_err());
        assert_eq!(TargetPattern::p(4).edge_count(), 3);
        assert_eq!(TargetPattern::c(4).edge_count(), 4);
    }

    #[test]
    fn parse_families() {
        assert_eq!("P4+acyclic".parse::<Family>().unwrap(), Family::path_forest(3));
        assert_eq!("C4".parse::<Family>().unwrap(), Family::cycle(4));
        let f: Family = "C3+C5".parse().unwrap();
        assert_eq!(f.cycles.len(), 2);
        assert_eq!(Family::path_forest(3).to_string(), "P4+acyclic");
        assert!("".parse::<Family>().is_err());
    }

    #[test]
    fn trivial_bound() {
        let g = GameGoal::new(TargetPattern::p(4), TargetPattern::p(3));
        assert_eq!(g.trivial_lower_bound(), 4);
    }
}
