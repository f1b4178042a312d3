//! Path gadgets shared by the strategies, with their well-formedness checks.
//!
//! Every `validate` returns a human-readable reason on failure.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::board::{Board, Color, Edge, VertexId};

fn edge_is(board: &Board, a: VertexId, b: VertexId, c: Color) -> Result<(), String> {
    if a == b {
        return Err(format!("degenerate edge at {a}"));
    }
    match board.color(Edge::between(a, b)) {
        Some(got) if got == c => Ok(()),
        Some(got) => Err(format!("edge {a}{b} is {got}, expected {c}")),
        None => Err(format!("edge {a}{b} is not uncovered, expected {c}")),
    }
}

/// `path` is a simple path whose consecutive pairs are all `c`.
pub fn check_path(board: &Board, path: &[VertexId], c: Color) -> Result<(), String> {
    let distinct: BTreeSet<_> = path.iter().collect();
    if distinct.len() != path.len() {
        return Err(format!("path {path:?} repeats a vertex"));
    }
    path.windows(2).try_for_each(|w| edge_is(board, w[0], w[1], c))
}

/// Blue path `Q` with endpoint `path[0] = b` joined to `outside = c` by a red edge.
///
/// `c` may itself lie on `Q`: building blocks anchor at an inner vertex, and
/// joins routinely produce an anchor between the two ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnchoredPath {
    pub path: Vec<VertexId>,
    pub outside: VertexId,
}

impl AnchoredPath {
    pub fn b(&self) -> VertexId {
        self.path[0]
    }

    /// The end away from the anchor.
    pub fn a(&self) -> VertexId {
        *self.path.last().expect("non-empty")
    }

    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.path.len() == 1
    }

    pub fn anchor(&self) -> Edge {
        Edge::between(self.b(), self.outside)
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.path.iter().copied().chain([self.outside]).collect()
    }

    pub fn validate(&self, board: &Board) -> Result<(), String> {
        if self.path.is_empty() {
            return Err("anchored path is empty".into());
        }
        check_path(board, &self.path, Color::Blue)?;
        if self.outside == self.b() {
            return Err(format!("anchor at {} is a loop", self.outside));
        }
        edge_is(board, self.b(), self.outside, Color::Red)
    }
}

/// Red edge `xy` followed by a blue path `S` from `y` to `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeAPath {
    pub x: VertexId,
    /// `s[0] = y`, last = `z`.
    pub s: Vec<VertexId>,
}

impl TypeAPath {
    pub fn y(&self) -> VertexId {
        self.s[0]
    }

    pub fn z(&self) -> VertexId {
        *self.s.last().expect("non-trivial")
    }

    pub fn len_s(&self) -> usize {
        self.s.len() - 1
    }

    pub fn validate(&self, board: &Board) -> Result<(), String> {
        if self.s.len() < 2 {
            return Err("type A path needs a non-trivial S".into());
        }
        if self.s.contains(&self.x) {
            return Err("x lies on S".into());
        }
        check_path(board, &self.s, Color::Blue)?;
        edge_is(board, self.x, self.y(), Color::Red)
    }
}

/// `vw` red, `wx` and `xy` blue, `yz` red.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TypeBPath {
    pub v: VertexId,
    pub w: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
}

impl TypeBPath {
    pub fn validate(&self, board: &Board) -> Result<(), String> {
        let vs = [self.v, self.w, self.x, self.y, self.z];
        if vs.iter().collect::<BTreeSet<_>>().len() != 5 {
            return Err("type B vertices are not distinct".into());
        }
        edge_is(board, self.v, self.w, Color::Red)?;
        edge_is(board, self.w, self.x, Color::Blue)?;
        edge_is(board, self.x, self.y, Color::Blue)?;
        edge_is(board, self.y, self.z, Color::Red)
    }
}

/// Chain of segments `T_1 .. T_k`; consecutive segments share an endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCPath {
    pub segments: Vec<Vec<VertexId>>,
}

impl TypeCPath {
    pub fn k(&self) -> usize {
        self.segments.len()
    }

    pub fn seg(&self, i: usize) -> &[VertexId] {
        &self.segments[i - 1]
    }

    pub fn len(&self) -> usize {
        self.segments.iter().map(|s| s.len() - 1).sum()
    }

    fn end_is_red_p3(&self, board: &Board, seg: &[VertexId]) -> bool {
        seg.len() == 3 && seg.windows(2).all(|w| board.color(Edge::between(w[0], w[1])) == Some(Color::Red))
    }

    pub fn is_complete(&self, board: &Board) -> bool {
        !self.end_is_red_p3(board, self.seg(1)) && !self.end_is_red_p3(board, self.seg(self.k()))
    }

    pub fn reversed(&self) -> TypeCPath {
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| s.iter().rev().copied().collect())
            .collect();
        TypeCPath { segments }
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out = vec![self.segments[0][0]];
        for s in &self.segments {
            out.extend_from_slice(&s[1..]);
        }
        out
    }

    /// Conditions on k, the end segments, the blue even segments, the red odd
    /// interior segments, and the length identity `e = 2k - 5 + e(T_1) + e(T_k)`.
    pub fn validate(&self, board: &Board) -> Result<(), String> {
        let k = self.k();
        if k < 3 || k.is_multiple_of(2) {
            return Err(format!("type C needs odd k >= 3, got {k}"));
        }
        for (i, pair) in self.segments.windows(2).enumerate() {
            if pair[0].last() != pair[1].first() {
                return Err(format!("segments {} and {} do not meet", i + 1, i + 2));
            }
        }
        if self.segments.iter().any(|s| s.len() < 2) {
            return Err("empty segment".into());
        }
        let vs = self.vertices();
        if vs.iter().collect::<BTreeSet<_>>().len() != vs.len() {
            return Err("type C path repeats a vertex".into());
        }
        // T_1: blue edge, or x1 y1 z1 with y1 z1 red
        let t1 = self.seg(1);
        match t1.len() {
            2 => edge_is(board, t1[0], t1[1], Color::Blue)?,
            3 => {
                board.color(Edge::between(t1[0], t1[1])).ok_or("T1 edge missing")?;
                edge_is(board, t1[1], t1[2], Color::Red)?
            }
            n => return Err(format!("T1 has {n} vertices")),
        }
        let tk = self.seg(k);
        match tk.len() {
            2 => edge_is(board, tk[0], tk[1], Color::Blue)?,
            3 => {
                edge_is(board, tk[0], tk[1], Color::Red)?;
                board.color(Edge::between(tk[1], tk[2])).ok_or("Tk edge missing")?;
            }
            n => return Err(format!("T{k} has {n} vertices")),
        }
        let mut short = 0;
        for i in (2..k).step_by(2) {
            let s = self.seg(i);
            check_path(board, s, Color::Blue).map_err(|e| format!("T{i}: {e}"))?;
            match s.len() {
                2 => short += 1,
                3 => {}
                n => return Err(format!("T{i} has {n} vertices")),
            }
        }
        if short != 1 {
            return Err(format!("{short} even segments of length 1, expected exactly one"));
        }
        for i in (3..k).step_by(2) {
            let s = self.seg(i);
            if s.len() != 3 {
                return Err(format!("T{i} is not a P3"));
            }
            check_path(board, s, Color::Red).map_err(|e| format!("T{i}: {e}"))?;
        }
        let expected = 2 * k - 5 + (t1.len() - 1) + (tk.len() - 1);
        if self.len() != expected {
            return Err(format!("length {} but 2k-5+e(T1)+e(Tk) = {expected}", self.len()));
        }
        Ok(())
    }
}

/// Anchored path `Q`, blue path `R` (empty = a vertex not yet chosen) and a
/// matching of spare edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrackedStructure {
    pub q: AnchoredPath,
    pub r: Vec<VertexId>,
    pub spare_blue: Vec<Edge>,
    pub spare_red: Vec<Edge>,
}

impl TrackedStructure {
    pub fn q_len(&self) -> usize {
        self.q.len()
    }

    pub fn r_len(&self) -> usize {
        self.r.len().saturating_sub(1)
    }

    pub fn n_blue(&self) -> usize {
        self.spare_blue.len()
    }

    pub fn n_red(&self) -> usize {
        self.spare_red.len()
    }

    pub fn validate(&self, board: &Board) -> Result<(), String> {
        self.q.validate(board)?;
        check_path(board, &self.r, Color::Blue)?;
        let mut seen: BTreeSet<VertexId> = self.q.vertices();
        let mut claim = |v: VertexId, what: &str| {
            if seen.insert(v) {
                Ok(())
            } else {
                Err(format!("{what} vertex {v} is shared"))
            }
        };
        for &v in &self.r {
            claim(v, "R")?;
        }
        for (pool, c) in [(&self.spare_blue, Color::Blue), (&self.spare_red, Color::Red)] {
            for e in pool {
                edge_is(board, e.lo(), e.hi(), c)?;
                claim(e.lo(), "spare")?;
                claim(e.hi(), "spare")?;
            }
        }
        Ok(())
    }
}
