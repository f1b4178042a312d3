mod common;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use ramsey_core::builder::TypeCPath;
use ramsey_core::harness::{certify, certify_bound, certify_observing};
use ramsey_core::{Board, BuilderSpec, Color, Edge, VertexId};

#[test]
fn p3_path_8_within_10() {
    let r = certify_bound(&BuilderSpec::P3Path(8), 10);
    assert!(r.passed(), "{:?}", r.failure);
    assert!(r.worst_rounds <= 10);
    assert!(r.leaves > 1);
}

#[test]
fn p3_cycle_6_within_8() {
    let r = certify_bound(&BuilderSpec::P3Cycle(6), 8);
    assert!(r.passed(), "{:?}", r.failure);
    assert!(r.worst_rounds <= 8);
}

#[test]
fn bound_below_the_value_yields_a_counterexample() {
    let r = certify_bound(&BuilderSpec::P3Path(8), 9);
    let cex = r.counterexample.as_ref().expect("a line longer than 9 rounds");
    assert!(r.worst_rounds > r.claimed_bound);
    // the line is a legal game that is still undecided after 9 rounds
    assert_eq!(cex.len(), 9);
    let board = cex.replay().unwrap();
    assert!(!common::goal_reached(&board, BuilderSpec::P3Path(8).goal()));
}

#[test]
fn report_invariant_holds_on_every_strategy() {
    for spec in ["p3-path:6", "p3-cycle:7", "p3-smallcycle:4", "c4-p4", "c4-path:4", "p4-path:7"] {
        let spec: BuilderSpec = spec.parse().unwrap();
        let ok = certify(&spec);
        assert_eq!(ok.counterexample.is_some(), ok.worst_rounds > ok.claimed_bound);
        assert!(ok.passed(), "{spec}: {:?}", ok.failure);
        let tight = certify_bound(&spec, ok.worst_rounds - 1);
        assert_eq!(tight.counterexample.is_some(), tight.worst_rounds > tight.claimed_bound);
        assert!(!tight.passed());
    }
}

/// Independent reading of the type C conditions on the board.
fn check_type_c(board: &Board, c: &TypeCPath) -> Result<(), String> {
    let color = |a: VertexId, b: VertexId| board.color(Edge::between(a, b));
    let k = c.segments.len();
    let lens: Vec<usize> = c.segments.iter().map(|s| s.len() - 1).collect();
    if k.is_multiple_of(2) || k < 3 {
        return Err(format!("k = {k}"));
    }
    let mut ones = 0;
    for i in (1..k - 1).step_by(2) {
        // even-indexed segment T_{i+1}
        let s = &c.segments[i];
        if !s.windows(2).all(|w| color(w[0], w[1]) == Some(Color::Blue)) {
            return Err(format!("T{} not blue", i + 1));
        }
        ones += (lens[i] == 1) as usize;
        if lens[i] > 2 {
            return Err(format!("T{} too long", i + 1));
        }
    }
    for i in (2..k - 1).step_by(2) {
        let s = &c.segments[i];
        if lens[i] != 2 || !s.windows(2).all(|w| color(w[0], w[1]) == Some(Color::Red)) {
            return Err(format!("T{} not a red P3", i + 1));
        }
    }
    if ones != 1 {
        return Err(format!("{ones} short blue segments"));
    }
    let total: usize = lens.iter().sum();
    if total != 2 * k - 5 + lens[0] + lens[k - 1] {
        return Err(format!("length {total} breaks the identity"));
    }
    Ok(())
}

#[test]
fn every_type_c_path_satisfies_the_length_identity() {
    let seen = AtomicU64::new(0);
    let bad = Mutex::new(Vec::new());
    let observer = |board: &Board, c: &TypeCPath| {
        seen.fetch_add(1, Ordering::Relaxed);
        if let Err(e) = check_type_c(board, c) {
            bad.lock().unwrap().push(e);
        }
    };
    let r = certify_observing(&BuilderSpec::P4Path(13), BuilderSpec::P4Path(13).claimed_bound(), Some(&observer));
    assert!(r.passed(), "{:?}", r.failure);
    assert!(seen.load(Ordering::Relaxed) > 0);
    assert_eq!(bad.into_inner().unwrap(), Vec::<String>::new());
}
