mod common;

use std::path::PathBuf;

use proptest::prelude::*;
use ramsey_core::harness::{golden_painter, GameError};
use ramsey_core::{
    all_blue_painter, blocking_painter, count_red_painter, replay_painter, run_game, BuilderSpec, Color, Family,
    Transcript,
};

#[test]
fn p3_path_against_all_blue_grows_greedily() {
    let game = run_game(&BuilderSpec::P3Path(4), &all_blue_painter(), 10).unwrap();
    assert_eq!(game.winner, Color::Blue);
    assert_eq!(game.rounds(), 4);
}

#[test]
fn blocking_painter_is_optimal_against_p3_path() {
    let painter = blocking_painter("P3+acyclic".parse().unwrap());
    for ell in 4..=12usize {
        let game = run_game(&BuilderSpec::P3Path(ell), &painter, 40).unwrap();
        assert_eq!(game.rounds(), (5 * ell).div_ceil(4), "ell = {ell}");
        let board = game.transcript.replay().unwrap();
        assert!(common::board_has(&board, Color::Blue, ramsey_core::TargetPattern::p(ell as u32 + 1)));
    }
}

#[test]
fn c4_p4_against_blocking() {
    let game = run_game(&BuilderSpec::C4P4, &blocking_painter(Family::cycle(4)), 20).unwrap();
    assert!(game.rounds() <= 8);
}

#[test]
fn p4_path_needs_the_scaffolding_floor() {
    let game = run_game(&BuilderSpec::P4Path(10), &blocking_painter(Family::path_forest(3)), 40).unwrap();
    assert!(game.rounds() >= (7 * 10 + 2usize).div_ceil(5));
    assert!(game.rounds() as u32 <= BuilderSpec::P4Path(10).claimed_bound());
}

#[test]
fn round_cap_is_reported() {
    match run_game(&BuilderSpec::P3Path(8), &count_red_painter(1), 3) {
        Err(GameError::RoundCapHit { cap, transcript }) => {
            assert_eq!(cap, 3);
            assert_eq!(transcript.len(), 3);
        }
        other => panic!("expected a cap hit, got {other:?}"),
    }
}

fn golden_specs() -> Vec<BuilderSpec> {
    [
        "p3-path:8",
        "p3-path:12",
        "p3-cycle:6",
        "p3-cycle:11",
        "p3-smallcycle:3",
        "p3-smallcycle:4",
        "c4-p4",
        "c4-path:6",
        "p4-path:10",
        "p4-path:20",
        "p4-path:30",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

fn golden_path(spec: &BuilderSpec) -> PathBuf {
    let name = spec.to_string().replace(':', "-");
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.jsonl"))
}

/// Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.
#[test]
fn golden_transcripts_are_unchanged() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for spec in golden_specs() {
        let game = run_game(&spec, &golden_painter(&spec), 200).unwrap();
        let text = game.transcript.to_jsonl();
        let path = golden_path(&spec);
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(stored, text, "{spec} drifted from {}", path.display());
        assert!(game.rounds() as u32 <= spec.claimed_bound());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Any reply sequence: the game ends within the claimed bound with a real target.
    #[test]
    fn random_replies_respect_the_claimed_bound(
        idx in 0usize..9,
        ell_seed in 0usize..64,
        bits in proptest::collection::vec(any::<bool>(), 64),
    ) {
        let spec = match idx {
            0 => BuilderSpec::P3Path(2 + ell_seed % 11),
            1 => BuilderSpec::P3Cycle(5 + ell_seed % 8),
            2 => BuilderSpec::P3SmallCycle(3 + ell_seed % 2),
            3 => BuilderSpec::C4P4,
            4 => BuilderSpec::C4Path(3 + ell_seed % 6),
            _ => BuilderSpec::P4Path(1 + ell_seed % 24),
        };
        let replies: Vec<Color> = bits.iter().map(|&b| if b { Color::Red } else { Color::Blue }).collect();
        let game = run_game(&spec, &replay_painter(replies), 64).unwrap();
        prop_assert!(game.rounds() as u32 <= spec.claimed_bound());
        let board = game.transcript.replay().unwrap();
        prop_assert!(common::goal_reached(&board, spec.goal()));
        // nothing was reached one move earlier
        let mut earlier = Transcript::new();
        for m in &game.transcript.moves[..game.rounds() - 1] {
            earlier.push(m.edge, m.color);
        }
        prop_assert!(!common::goal_reached(&earlier.replay().unwrap(), spec.goal()));
    }
}
