//! Exact game values by Builder-maximin search.
//!
//! `wins(board, r)` asks whether Builder can force one of the targets within
//! `r` more rounds. Positions are memoised by canonical form; for each key the
//! table keeps the smallest budget proven winning and the largest proven
//! losing, so every budget between is answered from either side.

use std::collections::HashMap;
use std::hash::BuildHasher;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::board::{Board, Color, Edge, VertexId};
use crate::builder::BuilderSpec;
use crate::canon::canonical_key_with_pending;
use crate::detect::contains_pattern_through;
use crate::painter::PainterStrategy;
use crate::pattern::GameGoal;
use crate::transcript::Transcript;

/// How Builder's candidate moves are enumerated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum MoveGen {
    /// Edges among active vertices, one pendant edge to a fresh vertex and one
    /// edge between two fresh vertices, deduplicated up to isomorphism.
    #[default]
    Reduced,
    /// Every absent edge on the labelled vertex set `0..vertex_cap`, no
    /// symmetry reduction and an exact-board memo. Only for tiny budgets.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveConfig {
    pub goal: GameGoal,
    pub round_cap: u32,
    pub vertex_cap: u32,
    /// Approximate byte budget for the memo table.
    pub memo_limit: Option<usize>,
    /// `None` searches sequentially (deterministic node counts).
    pub threads: Option<usize>,
    pub movegen: MoveGen,
}

impl SolveConfig {
    /// Defaults to `vertex_cap = 2 * round_cap`, sequential, reduced moves.
    pub fn new(goal: GameGoal, round_cap: u32) -> Self {
        SolveConfig { goal, round_cap, vertex_cap: 2 * round_cap, memo_limit: None, threads: None, movegen: MoveGen::Reduced }
    }

    pub fn vertex_cap(mut self, v: u32) -> Self {
        self.vertex_cap = v;
        self
    }

    pub fn threads(mut self, t: usize) -> Self {
        self.threads = Some(t);
        self
    }

    pub fn memo_limit(mut self, bytes: usize) -> Self {
        self.memo_limit = Some(bytes);
        self
    }

    pub fn movegen(mut self, m: MoveGen) -> Self {
        self.movegen = m;
        self
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("vertex cap {cap} is below the target size {need}")]
    CapTooSmall { cap: u32, need: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SolveValue {
    Exact(u32),
    /// The caps bind: the value is at least `lower`; `upper` is the best
    /// strategy bound known for this goal, if any.
    Unknown { lower: u32, upper: Option<u32> },
}

impl SolveValue {
    pub fn exact(self) -> Option<u32> {
        match self {
            SolveValue::Exact(v) => Some(v),
            SolveValue::Unknown { .. } => None,
        }
    }
}

impl std::fmt::Display for SolveValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveValue::Exact(v) => write!(f, "{v}"),
            SolveValue::Unknown { lower, upper: Some(u) } => write!(f, "unknown in [{lower},{u}]"),
            SolveValue::Unknown { lower, upper: None } => write!(f, "unknown in [{lower},inf)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: SolveValue,
    pub nodes_expanded: u64,
    /// A game of exactly `value` rounds: Builder plays a fastest win and
    /// Painter the reply that delays it longest (red on ties).
    pub principal: Transcript,
    /// The memo hit its byte budget; later positions were searched uncached.
    pub memo_overflowed: bool,
}

const SHARDS: usize = 64;

/// Proven facts about one position: winning from `win_at` rounds on, losing
/// up to `lose_at` rounds (`-1` = nothing known).
#[derive(Clone, Copy)]
struct Known {
    win_at: u8,
    lose_at: i8,
}

struct Memo {
    shards: Vec<Mutex<HashMap<Vec<u8>, Known>>>,
    hasher: std::collections::hash_map::RandomState,
    bytes: AtomicUsize,
    limit: Option<usize>,
    overflowed: AtomicBool,
}

impl Memo {
    fn new(limit: Option<usize>) -> Self {
        Memo {
            shards: (0..SHARDS).map(|_| Mutex::new(HashMap::new())).collect(),
            hasher: Default::default(),
            bytes: AtomicUsize::new(0),
            limit,
            overflowed: AtomicBool::new(false),
        }
    }

    fn shard(&self, key: &[u8]) -> &Mutex<HashMap<Vec<u8>, Known>> {
        
        
        &self.shards[self.hasher.hash_one(key) as usize % SHARDS]
    }

    fn get(&self, key: &[u8]) -> Option<Known> {
        self.shard(key).lock().unwrap().get(key).copied()
    }

    fn record(&self, key: Vec<u8>, r: u32, win: bool) {
        let r = r.min(i8::MAX as u32);
        let mut map = self.shard(&key).lock().unwrap();
        if let Some(k) = map.get_mut(&key) {
            if win {
                k.win_at = k.win_at.min(r as u8);
            } else {
                k.lose_at = k.lose_at.max(r as i8);
            }
            return;
        }
        let cost = key.len() + 48;
        if let Some(limit) = self.limit {
            if self.bytes.load(Ordering::Relaxed) + cost > limit {
                self.overflowed.store(true, Ordering::Relaxed);
                return;
            }
        }
        self.bytes.fetch_add(cost, Ordering::Relaxed);
        let k = if win { Known { win_at: r as u8, lose_at: -1 } } else { Known { win_at: u8::MAX, lose_at: r as i8 } };
        map.insert(key, k);
    }
}

/// Reusable search state for one goal. Cheap to share across threads.
pub struct Solver {
    goal: GameGoal,
    vertex_cap: u32,
    movegen: MoveGen,
    memo: Memo,
    nodes: AtomicU64,
    /// Depth (rounds remaining) at or above which children are searched in parallel.
    par_from: Option<u32>,
}

impl Solver {
    pub fn new(goal: GameGoal, vertex_cap: u32) -> Self {
        Solver { goal, vertex_cap, movegen: MoveGen::Reduced, memo: Memo::new(None), nodes: AtomicU64::new(0), par_from: None }
    }

    fn from_config(cfg: &SolveConfig) -> Self {
        Solver {
            goal: cfg.goal,
            vertex_cap: cfg.vertex_cap,
            movegen: cfg.movegen,
            memo: Memo::new(cfg.memo_limit),
            nodes: AtomicU64::new(0),
            par_from: cfg.threads.map(|_| cfg.round_cap.saturating_sub(2).max(3)),
        }
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    fn key(&self, board: &Board) -> Vec<u8> {
        match self.movegen {
            MoveGen::Reduced => crate::canon::canonical_key(board).into_bytes(),
            MoveGen::Exhaustive => board.edges().flat_map(|(e, c)| [e.lo() as u8, e.hi() as u8, c.letter() as u8]).collect(),
        }
    }

    /// Candidate moves in a fixed order, one per isomorphism class of
    /// (board, edge) in reduced mode.
    pub fn moves(&self, board: &Board) -> Vec<Edge> {
        match self.movegen {
            MoveGen::Exhaustive => {
                let n = self.vertex_cap;
                let mut out = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        let e = Edge::between(a, b);
                        if !board.contains(e) {
                            out.push(e);
                        }
                    }
                }
                out
            }
            MoveGen::Reduced => {
                let active: Vec<VertexId> = board.active_vertices().into_iter().collect();
                let mut cands = Vec::new();
                for (i, &a) in active.iter().enumerate() {
                    for &b in &active[i + 1..] {
                        let e = Edge::between(a, b);
                        if !board.contains(e) {
                            cands.push(e);
                        }
                    }
                }
                let n = active.len() as u32;
                if n < self.vertex_cap {
                    let f = board.fresh_vertex();
                    cands.extend(active.iter().map(|&a| Edge::between(a, f)));
                }
                if n.saturating_add(2) <= self.vertex_cap {
                    let fs = board.fresh_vertices(2);
                    cands.push(Edge::between(fs[0], fs[1]));
                }
                let mut seen = std::collections::HashSet::new();
                let mut keyed: Vec<(Vec<u8>, Edge)> = cands
                    .into_iter()
                    .filter_map(|e| {
                        let k = canonical_key_with_pending(board, e).into_bytes();
                        seen.insert(k.clone()).then_some((k, e))
                    })
                    .collect();
                keyed.sort();
                keyed.into_iter().map(|(_, e)| e).collect()
            }
        }
    }

    fn completes(&self, board: &Board, e: Edge, c: Color) -> bool {
        contains_pattern_through(board, c, self.goal.target(c), e)
    }

    /// Does move `e` win within `r` rounds (counting `e` itself)?
    fn move_wins(&self, board: &mut Board, e: Edge, r: u32) -> bool {
        let mut pending = Vec::with_capacity(2);
        for c in [Color::Red, Color::Blue] {
            board.insert(e, c).expect("absent edge");
            let done = self.completes(board, e, c);
            board.remove(e);
            if !done {
                pending.push(c);
            }
        }
        if pending.is_empty() {
            return true;
        }
        if r <= 1 {
            return false;
        }
        pending.into_iter().all(|c| {
            board.insert(e, c).expect("absent edge");
            let ok = self.wins(board, r - 1);
            board.remove(e);
            ok
        })
    }

    /// Can Builder force a target within `r` rounds from `board`?
    pub fn wins(&self, board: &mut Board, r: u32) -> bool {
        if r == 0 {
            return false;
        }
        let key = self.key(board);
        if let Some(k) = self.memo.get(&key) {
            if u32::from(k.win_at) <= r {
                return true;
            }
            if k.lose_at >= 0 && r <= k.lose_at as u32 {
                return false;
            }
        }
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let moves = self.moves(board);
        let win = if self.par_from.is_some_and(|d| r >= d) {
            let base = board.clone();
            moves.par_iter().any(|&e| self.move_wins(&mut base.clone(), e, r))
        } else {
            moves.iter().any(|&e| self.move_wins(board, e, r))
        };
        self.memo.record(key, r, win);
        win
    }

    /// Fewest rounds Builder needs from `board`, if at most `horizon`.
    pub fn rounds_needed(&self, board: &Board, horizon: u32) -> Option<u32> {
        let mut b = board.clone();
        (0..=horizon).find(|&r| self.wins(&mut b, r))
    }

    /// Rounds Builder still needs after `e` is colored `c` (0 when `c` completes a target).
    fn need_after(&self, board: &Board, e: Edge, c: Color, horizon: u32) -> Option<u32> {
        let mut b = board.clone();
        b.insert(e, c).expect("absent edge");
        if self.completes(&b, e, c) {
            return Some(0);
        }
        self.rounds_needed(&b, horizon)
    }

    /// Painter's delaying reply: the color whose position needs the most
    /// rounds within `horizon` (unreachable counts as `horizon + 1`), red on ties.
    pub fn delaying_color(&self, board: &Board, e: Edge, horizon: u32) -> Color {
        let score = |c| self.need_after(board, e, c, horizon).unwrap_or(horizon + 1);
        if score(Color::Blue) > score(Color::Red) {
            Color::Blue
        } else {
            Color::Red
        }
    }

    /// First move (in the fixed move order) winning within the least budget
    /// `<= horizon`; otherwise the first candidate move.
    pub fn best_move(&self, board: &Board, horizon: u32) -> Option<Edge> {
        let moves = self.moves(board);
        let mut b = board.clone();
        for r in 1..=horizon {
            if let Some(e) = moves.iter().copied().find(|&e| self.move_wins(&mut b, e, r)) {
                return Some(e);
            }
        }
        moves.first().copied()
    }
}

/// Exact value of the game for `cfg.goal`, or certified bounds if the caps bind.
pub fn solve(cfg: &SolveConfig) -> Result<SolveResult, SolveError> {
    let need = cfg.goal.red.vertex_count().max(cfg.goal.blue.vertex_count());
    if cfg.vertex_cap < need {
        return Err(SolveError::CapTooSmall { cap: cfg.vertex_cap, need });
    }
    let solver = Solver::from_config(cfg);
    let pool = cfg.threads.map(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().expect("thread pool"));
    let run = || {
        let mut empty = Board::new();
        let value = (1..=cfg.round_cap).find(|&r| solver.wins(&mut empty, r));
        let principal = value.map(|v| principal_line(&solver, v)).unwrap_or_default();
        (value, principal)
    };
    let (value, principal) = match &pool {
        Some(p) => p.install(run),
        None => run(),
    };
    let value = match value {
        Some(v) => SolveValue::Exact(v),
        None => SolveValue::Unknown { lower: (cfg.round_cap + 1).max(cfg.goal.trivial_lower_bound()), upper: BuilderSpec::for_goal(cfg.goal).map(|s| s.claimed_bound()) },
    };
    Ok(SolveResult {
        value,
        nodes_expanded: solver.nodes_expanded(),
        principal,
        memo_overflowed: solver.memo.overflowed.load(Ordering::Relaxed),
    })
}

fn principal_line(solver: &Solver, value: u32) -> Transcript {
    let mut board = Board::new();
    let mut t = Transcript::new();
    let mut left = value;
    while left > 0 {
        let e = solver.best_move(&board, left).expect("a winning position has moves");
        let c = solver.delaying_color(&board, e, left - 1);
        board.insert(e, c).expect("absent edge");
        t.push(e, c);
        if solver.completes(&board, e, c) {
            break;
        }
        left -= 1;
    }
    t
}

/// An edge minimising Builder's worst-case remaining rounds within `budget`;
/// falls back to the first legal candidate when nothing wins in time.
pub fn best_builder_move(board: &Board, goal: GameGoal, budget: u32) -> Edge {
    let solver = Solver::new(goal, u32::MAX);
    solver.best_move(board, budget).unwrap_or_else(|| {
        let f = board.fresh_vertices(2);
        Edge::between(f[0], f[1])
    })
}

/// Painter that delays Builder as long as possible, looking `budget` rounds ahead.
/// The search table is kept across calls.
pub fn optimal_painter(goal: GameGoal, budget: u32) -> PainterStrategy {
    let solver = Arc::new(Solver::new(goal, u32::MAX));
    PainterStrategy::from_fn(format!("optimal:{budget}"), move |board, e| {
        let horizon = budget.saturating_sub(board.edge_count() as u32 + 1);
        solver.delaying_color(board, e, horizon)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::TargetPattern;

    fn goal(red: &str, blue: &str) -> GameGoal {
        GameGoal::new(red.parse().unwrap(), blue.parse().unwrap())
    }

    #[test]
    fn tiny_values() {
        let v = |r, b, cap| solve(&SolveConfig::new(goal(r, b), cap)).unwrap().value;
        assert_eq!(v("P3", "P3", 4), SolveValue::Exact(3));
        assert_eq!(v("P3", "P4", 5), SolveValue::Exact(4));
        assert_eq!(v("P2", "P2", 2), SolveValue::Exact(1));
    }

    #[test]
    fn caps_bind() {
        let cfg = SolveConfig::new(goal("P3", "P5"), 4);
        let res = solve(&cfg).unwrap();
        assert_eq!(res.value, SolveValue::Unknown { lower: 5, upper: Some(5) });
        let small = SolveConfig::new(goal("P3", "P5"), 4).vertex_cap(4);
        assert!(matches!(solve(&small), Err(SolveError::CapTooSmall { .. })));
    }

    #[test]
    fn first_move_and_first_color() {
        let g = goal("P3", "P3");
        assert_eq!(best_builder_move(&Board::new(), g, 3), Edge::between(0, 1));
        let p = optimal_painter(g, 3);
        assert_eq!(p.decide(&Board::new(), Edge::between(0, 1)).unwrap(), Color::Red);
    }

    #[test]
    fn completing_edge_is_found() {
        let g = GameGoal::new(TargetPattern::p(3), TargetPattern::p(4));
        let b = Board::from_edges([
            (Edge::between(0, 1), Color::Blue),
            (Edge::between(1, 2), Color::Blue),
            (Edge::between(2, 3), Color::Red),
        ])
        .unwrap();
        let e = best_builder_move(&b, g, 3);
        for c in Color::BOTH {
            let next = b.add_edge(e, c).unwrap();
            assert!(crate::detect::contains_pattern(&next, c, g.target(c)), "{e} {c}");
        }
        assert_eq!(Solver::new(g, 8).rounds_needed(&b, 3), Some(1));
    }
}
