mod common;

use ramsey_core::solver::MoveGen;
use ramsey_core::{
    optimal_painter, run_game, solve, BuilderSpec, GameGoal, SolveConfig, SolveValue, TargetPattern,
};

fn goal(red: &str, blue: &str) -> GameGoal {
    GameGoal::new(red.parse().unwrap(), blue.parse().unwrap())
}

fn value(cfg: &SolveConfig) -> Option<u32> {
    solve(cfg).unwrap().value.exact()
}

#[test]
fn small_values_match_plain_minimax() {
    for (r, b) in [("P2", "P2"), ("P2", "P4"), ("P3", "P2"), ("P3", "P3"), ("P2", "C3"), ("P3", "P4")] {
        let g = goal(r, b);
        let expect = common::naive_value(g, 6);
        assert_eq!(value(&SolveConfig::new(g, 6)), expect, "{g}");
    }
}

#[test]
fn reduced_moves_agree_with_all_moves() {
    for (r, b, cap) in [("P3", "P4", 5), ("P3", "C3", 6), ("P3", "P5", 6), ("P4", "P3", 6), ("C3", "P3", 6)] {
        let g = goal(r, b);
        let reduced = value(&SolveConfig::new(g, cap));
        let all = value(&SolveConfig::new(g, cap).movegen(MoveGen::Exhaustive).vertex_cap(7));
        assert_eq!(reduced, all, "{g}");
    }
}

#[test]
fn parallel_search_gives_the_same_values() {
    for (r, b, cap) in [("P3", "C4", 7), ("P3", "P6", 8)] {
        let g = goal(r, b);
        let seq = value(&SolveConfig::new(g, cap));
        let par = value(&SolveConfig::new(g, cap).threads(4));
        assert!(seq.is_some());
        assert_eq!(seq, par, "{g}");
    }
}

#[test]
fn principal_line_is_a_finished_game() {
    for (r, b) in [("P3", "P5"), ("P3", "C4"), ("C4", "P4")] {
        let g = goal(r, b);
        let res = solve(&SolveConfig::new(g, 9)).unwrap();
        let v = res.value.exact().unwrap();
        let board = res.principal.replay().unwrap();
        assert_eq!(res.principal.len() as u32, v, "{g}");
        assert!(common::goal_reached(&board, g), "{g}");
        assert!(!res.memo_overflowed);
    }
}

#[test]
fn value_is_at_least_the_trivial_bound() {
    for (r, b) in [("P3", "P3"), ("P3", "P5"), ("P4", "P3"), ("P3", "C3")] {
        let g = goal(r, b);
        let v = value(&SolveConfig::new(g, 8)).unwrap();
        assert!(v >= g.trivial_lower_bound(), "{g}");
    }
}

#[test]
fn tiny_memo_still_solves() {
    let g = goal("P3", "C4");
    let res = solve(&SolveConfig::new(g, 7).memo_limit(1)).unwrap();
    assert_eq!(res.value, SolveValue::Exact(6));
    assert!(res.memo_overflowed);
}

#[test]
fn optimal_painter_meets_a_certified_strategy_at_the_value() {
    // the painter guarantees at least the value, the strategy at most its bound
    for spec in [BuilderSpec::P3Path(4), BuilderSpec::P3SmallCycle(3)] {
        let v = value(&SolveConfig::new(spec.goal(), 8)).unwrap();
        let game = run_game(&spec, &optimal_painter(spec.goal(), v), 20).unwrap();
        assert!(game.rounds() as u32 >= v);
        assert!(game.rounds() as u32 <= spec.claimed_bound());
    }
}

#[test]
fn capped_search_reports_bounds() {
    let g = GameGoal::new(TargetPattern::p(3), TargetPattern::p(6));
    let res = solve(&SolveConfig::new(g, 6)).unwrap();
    assert_eq!(res.value, SolveValue::Unknown { lower: 7, upper: Some(7) });
    assert_eq!(res.value.to_string(), "unknown in [7,7]");
}
