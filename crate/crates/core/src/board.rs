//! The colored board: uncovered edges of `K_N`, their colors and the round counter.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex of `K_N`. Indices are dense and carry no game meaning.
pub type VertexId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c.to_ascii_uppercase() {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error("edge {0} is already uncovered")]
    DuplicateEdge(Edge),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

/// Unordered pair of distinct vertices, stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[VertexId; 2]", into = "[VertexId; 2]")]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Edge, BoardError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(BoardError::SelfLoop(a)),
        }
    }

    /// Like [`Edge::new`] for endpoints already known to differ.
    ///
    /// Panics on a self-loop.
    pub fn between(a: VertexId, b: VertexId) -> Edge {
        Edge::new(a, b).expect("edge endpoints must differ")
    }

    pub fn lo(self) -> VertexId {
        self.0
    }

    pub fn hi(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> [VertexId; 2] {
        [self.0, self.1]
    }

    pub fn touches(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(self, o: Edge) -> bool {
        self.touches(o.0) || self.touches(o.1)
    }
}

impl TryFrom<[VertexId; 2]> for Edge {
    type Error = BoardError;
    fn try_from(v: [VertexId; 2]) -> Result<Self, Self::Error> {
        Edge::new(v[0], v[1])
    }
}

impl From<Edge> for [VertexId; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// The uncovered colored graph.
///
/// `edges` is the source of truth; `adj` is a per-vertex index kept in sync.
#[derive(Clone, Debug, Default)]
pub struct Board {
    edges: BTreeMap<Edge, Color>,
    adj: Vec<Vec<(VertexId, Color)>>,
    rounds: u32,
}

impl PartialEq for Board {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.rounds == other.rounds
    }
}

impl Eq for Board {}

impl Board {
    pub fn new() -> Board {
        Board::default()
    }

    pub fn from_edges<I: IntoIterator<Item = (Edge, Color)>>(edges: I) -> Result<Board, BoardError> {
        let mut b = Board::new();
        for (e, c) in edges {
            b.insert(e, c)?;
        }
        Ok(b)
    }

    /// Value-semantics move: returns the board with `e` colored `c`.
    pub fn add_edge(&self, e: Edge, c: Color) -> Result<Board, BoardError> {
        let mut next = self.clone();
        next.insert(e, c)?;
        Ok(next)
    }

    /// In-place variant of [`Board::add_edge`].
    pub fn insert(&mut self, e: Edge, c: Color) -> Result<(), BoardError> {
        if e.0 == e.1 {
            return Err(BoardError::SelfLoop(e.0));
        }
        if self.edges.contains_key(&e) {
            return Err(BoardError::DuplicateEdge(e));
        }
        self.edges.insert(e, c);
        let need = e.1 as usize + 1;
        if self.adj.len() < need {
            self.adj.resize_with(need, Vec::new);
        }
        self.adj[e.0 as usize].push((e.1, c));
        self.adj[e.1 as usize].push((e.0, c));
        self.rounds += 1;
        Ok(())
    }

    /// Undo an [`Board::insert`]; returns the color the edge had.
    pub fn remove(&mut self, e: Edge) -> Option<Color> {
        let c = self.edges.remove(&e)?;
        self.adj[e.0 as usize].retain(|(u, _)| *u != e.1);
        self.adj[e.1 as usize].retain(|(u, _)| *u != e.0);
        self.rounds -= 1;
        Some(c)
    }

    /// Counts a round without changing the graph (a re-chosen uncovered edge).
    pub fn waste_round(&mut self) {
        self.rounds += 1;
    }

    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.edges.get(&e).copied()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.edges.iter().map(|(e, c)| (*e, *c))
    }

    pub fn edge_map(&self) -> &BTreeMap<Edge, Color> {
        &self.edges
    }

    pub fn edges_of(&self, c: Color) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().filter(move |(_, col)| **col == c).map(|(e, _)| *e)
    }

    pub fn count_of(&self, c: Color) -> usize {
        self.edges.values().filter(|col| **col == c).count()
    }

    /// One past the largest vertex index ever touched.
    pub fn vertex_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn is_active(&self, v: VertexId) -> bool {
        self.adj.get(v as usize).is_some_and(|a| !a.is_empty())
    }

    pub fn active_vertices(&self) -> BTreeSet<VertexId> {
        (0..self.adj.len() as VertexId).filter(|v| self.is_active(*v)).collect()
    }

    pub fn degree(&self, v: VertexId, c: Color) -> usize {
        self.neighbors(v, c).count()
    }

    pub fn incident(&self, v: VertexId) -> &[(VertexId, Color)] {
        self.adj.get(v as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn neighbors(&self, v: VertexId, c: Color) -> impl Iterator<Item = VertexId> + '_ {
        self.incident(v).iter().filter(move |(_, col)| *col == c).map(|(u, _)| *u)
    }

    /// Smallest vertex not incident to any uncovered edge.
    pub fn fresh_vertex(&self) -> VertexId {
        self.fresh_avoiding(&[])
    }

    /// Smallest inactive vertex that is also not in `avoid`.
    pub fn fresh_avoiding(&self, avoid: &[VertexId]) -> VertexId {
        (0..)
            .find(|v| !self.is_active(*v) && !avoid.contains(v))
            .expect("vertex space is unbounded")
    }

    /// The `n` smallest inactive vertices.
    pub fn fresh_vertices(&self, n: usize) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let v = self.fresh_avoiding(&out);
            out.push(v);
        }
        out
    }

    /// The subgraph of one color as a board (round counter reset).
    pub fn color_subgraph(&self, c: Color) -> Board {
        Board::from_edges(self.edges_of(c).map(|e| (e, c))).expect("subgraph of a simple graph")
    }
}
