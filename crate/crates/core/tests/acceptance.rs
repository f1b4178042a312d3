//! One line per headline criterion. Runs as a plain binary so the lines are
//! always visible in `cargo test` output.

mod common;

use std::process::ExitCode;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ramsey_core::bounds::{check_forest_bounds, min_scaffolding_size};
use ramsey_core::builder::TypeCPath;
use ramsey_core::enumerate::family_free_graphs;
use ramsey_core::harness::{certify_observing, golden_painter};
use ramsey_core::{
    blocking_painter, canonical_key, run_game, solve, Board, BuilderSpec, Color, Edge, Family, GameGoal,
    SolveConfig, Transcript,
};

struct Outcome {
    ok: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

/// Criteria that fail for a reason recorded in the design notes.
const KNOWN: &[(&str, &str)] = &[(
    "scaffolding",
    "(all cycles, P3) needs 3 edges: a 2-edge forest has at most one cycle-closing non-edge",
)];

fn goal(red: &str, blue: &str) -> GameGoal {
    GameGoal::new(red.parse().unwrap(), blue.parse().unwrap())
}

fn exact_values() -> Outcome {
    let cases = [("P3", "P3", 3), ("P3", "P4", 4), ("P3", "C3", 5), ("P3", "C4", 6), ("C4", "P4", 8), ("P3", "P5", 5), ("P3", "P6", 7)];
    let mut bad = Vec::new();
    for (r, b, want) in cases {
        let g = goal(r, b);
        let got = solve(&SolveConfig::new(g, want + 1)).unwrap().value;
        if got.exact() != Some(want) {
            bad.push(format!("{g} = {got}, want {want}"));
        }
    }
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { "7 goals".into() } else { bad.join("; ") } }
}

fn certification() -> Outcome {
    let mut specs: Vec<BuilderSpec> = (2..=12).map(BuilderSpec::P3Path).collect();
    specs.extend((5..=12).map(BuilderSpec::P3Cycle));
    specs.extend([BuilderSpec::P3SmallCycle(3), BuilderSpec::P3SmallCycle(4)]);
    specs.extend((3..=8).map(BuilderSpec::C4Path));
    specs.extend((1..=10).map(BuilderSpec::P4Path));
    let mut bad = Vec::new();
    let (mut leaves, mut checks, mut violations) = (0, 0, 0);
    for spec in &specs {
        let r = certify_observing(spec, spec.claimed_bound(), None);
        leaves += r.leaves;
        checks += r.stats.invariant_checks;
        violations += r.invariant_violations;
        if !r.passed() {
            bad.push(format!("{spec}: {}", r.failure.unwrap_or_default()));
        }
    }
    let ok = bad.is_empty() && violations == 0;
    let detail = format!(
        "{} strategies, {leaves} leaves, {checks} loop checks, {violations} invariant violations{}",
        specs.len(),
        if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }
    );
    Outcome { ok, detail }
}

fn tightness() -> Outcome {
    let mut bad = Vec::new();
    let p4 = run_game(&BuilderSpec::P4Path(10), &blocking_painter(Family::path_forest(3)), 60).unwrap();
    if p4.rounds() < 15 {
        bad.push(format!("p4-path:10 took {}", p4.rounds()));
    }
    let painter = blocking_painter(Family::path_forest(2));
    for ell in 4..=12usize {
        let game = run_game(&BuilderSpec::P3Path(ell), &painter, 40).unwrap();
        if game.rounds() != (5 * ell).div_ceil(4) {
            bad.push(format!("p3-path:{ell} took {}", game.rounds()));
        }
    }
    let detail = format!("p4-path:10 takes {} >= 15; p3-path:4..12 exact", p4.rounds());
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { detail } else { bad.join("; ") } }
}

fn scaffolding() -> Outcome {
    let size = |fam: &str, h: String| {
        let fam: Family = fam.parse().unwrap();
        min_scaffolding_size(&fam, h.parse().unwrap(), 8).map(|(m, cert)| {
            cert.verify().expect("certificate re-checks");
            m
        })
    };
    let mut bad = Vec::new();
    for s in 3..=6usize {
        let got = size("acyclic", format!("P{s}"));
        if got != Some(s - 1) {
            bad.push(format!("(all cycles, P{s}) = {got:?}, want {}", s - 1));
        }
    }
    for l in 3..=6usize {
        let got = size(&format!("C{l}"), "P3".into());
        if got != Some(l) {
            bad.push(format!("(C{l}, P3) = {got:?}, want {l}"));
        }
    }
    if size("C4", "P4".into()) != Some(5) {
        bad.push("(C4, P4) != 5".into());
    }
    for ell in [4usize, 8] {
        let got = size("P3+acyclic", format!("P{}", ell + 1)).map(|m| m + ell);
        if got != Some((5 * ell).div_ceil(4)) {
            bad.push(format!("(P3+acyclic, P{}) + {ell} = {got:?}", ell + 1));
        }
    }
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { "all 13 values".into() } else { bad.join("; ") } }
}

fn red_family_free(board: &Board, fam: &Family) -> bool {
    let red = common::edges_of(board, Color::Red);
    !(fam.acyclic && common::has_cycle(&red))
        && fam.path_bound.is_none_or(|k| !common::has_pattern(&red, ramsey_core::TargetPattern::p(k + 1)))
        && fam.cycles.iter().all(|&l| !common::has_pattern(&red, ramsey_core::TargetPattern::c(l)))
}

fn properties() -> Outcome {
    let mut bad = Vec::new();

    // blocking painter over random games
    let families: Vec<Family> = ["P3+acyclic", "P4+acyclic", "C4", "C3+C5", "acyclic"].iter().map(|s| s.parse().unwrap()).collect();
    let mut rng = StdRng::seed_from_u64(7);
    for game in 0..10_000 {
        let fam = &families[game % families.len()];
        let painter = blocking_painter(fam.clone());
        let mut board = Board::new();
        for _ in 0..rng.gen_range(1..=25) {
            let n = (board.vertex_bound() as u32 + 2).min(9);
            let Ok(e) = Edge::new(rng.gen_range(0..n), rng.gen_range(0..n)) else { continue };
            if board.contains(e) {
                continue;
            }
            board.insert(e, painter.decide(&board, e).unwrap()).unwrap();
            if !red_family_free(&board, fam) {
                bad.push(format!("blocking {fam} broke in game {game}"));
                break;
            }
        }
    }

    // forest inequalities
    let mut forests = 0;
    for k in 2..=5usize {
        for g in family_free_graphs(&Family::path_forest(k as u32), 8).into_iter().flatten().filter(|g| g.n > 0) {
            forests += 1;
            if !check_forest_bounds(&g.to_board(Color::Red), k).is_ok_and(|r| r.holds()) {
                bad.push(format!("forest bound fails for k = {k} on {:?}", g.edges));
            }
        }
    }

    // canonical keys against brute-force isomorphism, half the pairs relabelled
    // copies; the exhaustive five-vertex sweep lives in the property tests
    let mut canon_pairs = 0;
    for n in [4usize, 5, 6] {
        for _ in 0..if n == 4 { 300 } else { 200 } {
            let a = random_colored(&mut rng, n);
            let b = if rng.gen_bool(0.5) { relabelled(&a, &mut rng, n) } else { random_colored(&mut rng, n) };
            canon_pairs += 1;
            if (canonical_key(&a) == canonical_key(&b)) != common::brute_isomorphic(&a, &b) {
                bad.push(format!("canonical key disagrees with isomorphism on {n} vertices"));
            }
        }
    }

    // type C identity during certification
    let seen = AtomicU64::new(0);
    let broken = AtomicU64::new(0);
    let observer = |_: &Board, c: &TypeCPath| {
        seen.fetch_add(1, Ordering::Relaxed);
        let k = c.segments.len();
        let lens: Vec<usize> = c.segments.iter().map(|s| s.len() - 1).collect();
        if lens.iter().sum::<usize>() != 2 * k - 5 + lens[0] + lens[k - 1] {
            broken.fetch_add(1, Ordering::Relaxed);
        }
    };
    for ell in 11..=14 {
        let spec = BuilderSpec::P4Path(ell);
        certify_observing(&spec, spec.claimed_bound(), Some(&observer));
    }
    if seen.load(Ordering::Relaxed) == 0 || broken.load(Ordering::Relaxed) > 0 {
        bad.push(format!("type C identity: {} seen, {} broken", seen.load(Ordering::Relaxed), broken.load(Ordering::Relaxed)));
    }

    // transcript replay
    for spec in ["p3-path:12", "c4-path:6", "p4-path:30"] {
        let spec: BuilderSpec = spec.parse().unwrap();
        let t = run_game(&spec, &golden_painter(&spec), 200).unwrap().transcript;
        let text = t.to_jsonl();
        let back = Transcript::from_jsonl(&text).unwrap();
        if back != t || back.to_jsonl() != text || back.replay().unwrap() != t.replay().unwrap() {
            bad.push(format!("{spec} transcript does not round-trip"));
        }
    }

    let detail = format!(
        "10000 blocking games, {forests} forests, {canon_pairs} canonical-key pairs, {} type C paths, replay",
        seen.load(Ordering::Relaxed)
    );
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { detail } else { bad.join("; ") } }
}

fn random_colored(rng: &mut StdRng, n: usize) -> Board {
    let mut b = Board::new();
    for a in 0..n as u32 {
        for c in a + 1..n as u32 {
            match rng.gen_range(0..3) {
                1 => b.insert(Edge::between(a, c), Color::Red).unwrap(),
                2 => b.insert(Edge::between(a, c), Color::Blue).unwrap(),
                _ => {}
            }
        }
    }
    b
}

fn relabelled(b: &Board, rng: &mut StdRng, n: usize) -> Board {
    let mut p: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    Board::from_edges(b.edges().map(|(e, c)| (Edge::between(p[e.lo() as usize], p[e.hi() as usize]), c))).unwrap()
}

fn main() -> ExitCode {
    let criteria: [Criterion; 5] = [
        ("exact values", exact_values),
        ("certification", certification),
        ("tightness", tightness),
        ("scaffolding", scaffolding),
        ("properties", properties),
    ];
    let mut unexpected = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN.iter().find(|(n, _)| *n == name);
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} {name:<14} {secs:>7.2}s  {}", out.detail);
        match (out.ok, known) {
            (false, Some((_, why))) => println!("     known: {why}"),
            (false, None) => unexpected += 1,
            _ => {}
        }
    }
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
