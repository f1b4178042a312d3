//! Results tables: published bounds next to solver values and certified
//! strategy bounds.

use std::fmt::Write as _;

use serde::Serialize;

use crate::builder::BuilderSpec;
use crate::pattern::{GameGoal, PatternKind, TargetPattern};
use crate::solver::{solve, SolveConfig, SolveValue};

use super::certify;

/// Published (lower, upper) bounds on the number of rounds, where known.
pub fn paper_bounds(goal: GameGoal) -> Option<(u32, u32)> {
    let blue = goal.blue;
    let l = blue.edge_count();
    let is_path = blue.kind() == PatternKind::Path;
    let trivial = goal.trivial_lower_bound();
    if goal.red == TargetPattern::p(3) {
        let exact = match (is_path, blue.size()) {
            (true, _) if l >= 2 => (5 * l).div_ceil(4),
            (false, n @ (3 | 4)) => n + 2,
            (false, _) => (5 * l).div_ceil(4),
            _ => return None,
        };
        Some((exact, exact))
    } else if goal.red == TargetPattern::c(4) && is_path && l >= 3 {
        Some((2 * l, 4 * l - 4))
    } else if goal.red == TargetPattern::p(4) && is_path && l >= 3 {
        Some(((7 * l + 2).div_ceil(5).max(trivial), (7 * l + 52) / 5))
    } else {
        None
    }
}

/// The three row families: `(P3, P_{l+1})` for `l = 2..=8`, `(P3, C_l)` for
/// `l = 3..=8` and `(C4, P_{l+1})` for `l = 3..=6`.
pub fn standard_goals() -> Vec<GameGoal> {
    let p3 = TargetPattern::p(3);
    let c4 = TargetPattern::c(4);
    let mut out: Vec<GameGoal> = (2..=8).map(|l| GameGoal::new(p3, TargetPattern::p(l + 1))).collect();
    out.extend((3..=8).map(|l| GameGoal::new(p3, TargetPattern::c(l))));
    out.extend((3..=6).map(|l| GameGoal::new(c4, TargetPattern::p(l + 1))));
    out
}

#[derive(Clone, Debug, Default)]
pub struct TableOptions {
    /// Solve goals whose published upper bound is at most this many rounds.
    pub solve_up_to: Option<u32>,
    /// Run exhaustive certification of the matching strategy.
    pub certify: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub goal: GameGoal,
    pub paper_lower: Option<u32>,
    pub paper_upper: Option<u32>,
    pub solver: Option<SolveValue>,
    pub strategy: Option<BuilderSpec>,
    /// Worst case found by certification, when it passed.
    pub certified: Option<u32>,
}

impl TableRow {
    /// Solver value (when exact) within `[paper lower, certified bound]`.
    pub fn consistent(&self) -> bool {
        let Some(v) = self.solver.and_then(SolveValue::exact) else { return true };
        self.paper_lower.is_none_or(|lo| lo <= v) && self.certified.is_none_or(|c| v <= c)
    }
}

pub fn table_rows(goals: &[GameGoal], opts: &TableOptions) -> Vec<TableRow> {
    goals
        .iter()
        .map(|&goal| {
            let bounds = paper_bounds(goal);
            let strategy = BuilderSpec::for_goal(goal);
            let solver = match (opts.solve_up_to, bounds) {
                (Some(limit), Some((_, hi))) if hi <= limit => {
                    solve(&SolveConfig::new(goal, hi)).ok().map(|r| r.value)
                }
                _ => None,
            };
            let certified = match strategy {
                Some(s) if opts.certify => Some(certify(&s)).filter(|r| r.passed()).map(|r| r.worst_rounds),
                _ => None,
            };
            TableRow {
                goal,
                paper_lower: bounds.map(|b| b.0),
                paper_upper: bounds.map(|b| b.1),
                solver,
                strategy,
                certified,
            }
        })
        .collect()
}

pub fn format_table(rows: &[TableRow]) -> String {
    let cell = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    let mut out = format!("{:<12} {:>6} {:>6} {:>16} {:<16} {:>9}\n", "goal", "lower", "upper", "solver", "strategy", "certified");
    for r in rows {
        let _ = writeln!(
            out,
            "{:<12} {:>6} {:>6} {:>16} {:<16} {:>9}",
            r.goal.to_string(),
            cell(r.paper_lower.map(|v| v.to_string())),
            cell(r.paper_upper.map(|v| v.to_string())),
            cell(r.solver.map(|v| v.to_string())),
            cell(r.strategy.map(|s| s.to_string())),
            cell(r.certified.map(|v| v.to_string())),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_rows() {
        let goals = standard_goals();
        let rows: Vec<(u32, u32)> = goals.iter().map(|g| paper_bounds(*g).unwrap()).collect();
        let p3_paths: Vec<u32> = rows[..7].iter().map(|r| r.0).collect();
        assert_eq!(p3_paths, vec![3, 4, 5, 7, 8, 9, 10]);
        let p3_cycles: Vec<u32> = rows[7..13].iter().map(|r| r.0).collect();
        assert_eq!(p3_cycles, vec![5, 6, 7, 8, 9, 10]);
        assert_eq!(&rows[13..], &[(6, 8), (8, 12), (10, 16), (12, 20)]);
    }
}
