//! Interactive games between a human and an engine opponent.
//!
//! A session always has exactly one pending decision: an edge for a human
//! Builder, or a color for the edge the engine Builder just proposed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::board::{Board, Color, Edge, VertexId};
use crate::builder::BuilderSpec;
use crate::detect::contains_pattern_through;
use crate::painter::PainterStrategy;
use crate::pattern::GameGoal;
use crate::transcript::Transcript;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HumanRole {
    Builder,
    Painter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SessionStatus {
    Live,
    RedWin,
    BlueWin,
}

#[derive(Clone, Debug)]
pub enum Opponent {
    Builder(BuilderSpec),
    Painter(PainterStrategy),
}

impl Opponent {
    pub fn name(&self) -> String {
        match self {
            Opponent::Builder(s) => s.to_string(),
            Opponent::Painter(p) => p.name().to_string(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SessionError {
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("no session {0}")]
    SessionNotFound(String),
    #[error("session {0} is over")]
    SessionOver(String),
    #[error("bad request: {0}")]
    BadRequest(String),
    #[error("engine failed: {0}")]
    Engine(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CreateSession {
    pub goal: GameGoal,
    pub human_role: HumanRole,
    /// A strategy such as `p3-path:8` when the human paints, a painter such
    /// as `blocking:P3+acyclic` when the human builds.
    pub opponent: String,
}

/// Exactly one of the fields, matching the pending decision.
#[derive(Clone, Debug, Default, Deserialize)]
pub struct MovePayload {
    pub edge: Option<[VertexId; 2]>,
    pub color: Option<Color>,
}

#[derive(Clone, Debug)]
pub struct GameSession {
    pub id: String,
    pub goal: GameGoal,
    pub human_role: HumanRole,
    pub opponent: Opponent,
    pub board: Board,
    pub transcript: Transcript,
    pub status: SessionStatus,
    /// The engine's proposal awaiting the human's color.
    pub proposed: Option<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardSnapshot {
    pub edges: Vec<(VertexId, VertexId, Color)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PendingKind {
    Color,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Snapshot {
    pub id: String,
    pub goal: GameGoal,
    pub human_role: HumanRole,
    pub opponent: String,
    pub board: BoardSnapshot,
    pub pending: Option<PendingKind>,
    pub pending_edge: Option<[VertexId; 2]>,
    pub status: SessionStatus,
    pub round: u32,
}

impl GameSession {
    pub fn new(id: String, req: &CreateSession) -> Result<GameSession, SessionError> {
        let opponent = match req.human_role {
            HumanRole::Painter => {
                let spec: BuilderSpec = req.opponent.parse().map_err(|e| SessionError::BadRequest(format!("{e}")))?;
                if spec.goal() != req.goal {
                    return Err(SessionError::BadRequest(format!("{spec} plays {}, not {}", spec.goal(), req.goal)));
                }
                Opponent::Builder(spec)
            }
            HumanRole::Builder => Opponent::Painter(
                PainterStrategy::parse(&req.opponent, req.goal).map_err(|e| SessionError::BadRequest(e.to_string()))?,
            ),
        };
        let mut s = GameSession {
            id,
            goal: req.goal,
            human_role: req.human_role,
            opponent,
            board: Board::new(),
            transcript: Transcript::new(),
            status: SessionStatus::Live,
            proposed: None,
        };
        s.engine_propose()?;
        Ok(s)
    }

    pub fn snapshot(&self) -> Snapshot {
        let pending = match (self.status, self.human_role) {
            (SessionStatus::Live, HumanRole::Painter) => Some(PendingKind::Color),
            (SessionStatus::Live, HumanRole::Builder) => Some(PendingKind::Edge),
            _ => None,
        };
        Snapshot {
            id: self.id.clone(),
            goal: self.goal,
            human_role: self.human_role,
            opponent: self.opponent.name(),
            board: BoardSnapshot { edges: self.board.edges().map(|(e, c)| (e.lo(), e.hi(), c)).collect() },
            pending,
            pending_edge: self.proposed.map(Edge::endpoints),
            status: self.status,
            round: self.transcript.len() as u32,
        }
    }

    /// Apply the human's decision and the engine's reply. Nothing changes on error.
    pub fn apply(&mut self, m: &MovePayload) -> Result<(), SessionError> {
        if self.status != SessionStatus::Live {
            return Err(SessionError::SessionOver(self.id.clone()));
        }
        match (self.human_role, m.edge, m.color) {
            (HumanRole::Builder, Some([a, b]), None) => {
                let e = self.check_edge(a, b)?;
                let Opponent::Painter(p) = &self.opponent else { unreachable!("human builder faces a painter") };
                let c = p.decide(&self.board, e).map_err(|err| SessionError::Engine(err.to_string()))?;
                self.record(e, c);
                Ok(())
            }
            (HumanRole::Painter, None, Some(c)) => {
                let e = self.proposed.take().expect("live session with human painter has a proposal");
                self.record(e, c);
                self.engine_propose()
            }
            (HumanRole::Builder, ..) => Err(SessionError::IllegalMove("expected {\"edge\": [u, v]}".into())),
            (HumanRole::Painter, ..) => Err(SessionError::IllegalMove("expected {\"color\": \"red\"|\"blue\"}".into())),
        }
    }

    /// Vertices may be active ones or the next two fresh indices.
    fn check_edge(&self, a: VertexId, b: VertexId) -> Result<Edge, SessionError> {
        let e = Edge::new(a, b).map_err(|err| SessionError::IllegalMove(err.to_string()))?;
        let limit = self.board.vertex_bound() as VertexId + 2;
        if e.hi() >= limit {
            return Err(SessionError::IllegalMove(format!("vertex {} is beyond the next fresh vertices", e.hi())));
        }
        if self.board.contains(e) {
            return Err(SessionError::IllegalMove(format!("{e} is already colored")));
        }
        Ok(e)
    }

    fn record(&mut self, e: Edge, c: Color) {
        self.board.insert(e, c).expect("edge checked absent");
        self.transcript.push(e, c);
        if contains_pattern_through(&self.board, c, self.goal.target(c), e) {
            self.status = match c {
                Color::Red => SessionStatus::RedWin,
                Color::Blue => SessionStatus::BlueWin,
            };
        }
    }

    fn engine_propose(&mut self) -> Result<(), SessionError> {
        if let (Opponent::Builder(spec), SessionStatus::Live) = (&self.opponent, self.status) {
            let e = spec
                .next_move(&self.board)
                .ok_or_else(|| SessionError::Engine(format!("{spec} has no move on a live board")))?;
            self.proposed = Some(e);
        }
        Ok(())
    }
}

/// In-memory sessions; each one is locked independently.
#[derive(Default)]
pub struct SessionStore {
    sessions: Mutex<HashMap<String, Arc<Mutex<GameSession>>>>,
}

impl SessionStore {
    pub fn new() -> Self {
        SessionStore::default()
    }

    pub fn create(&self, req: &CreateSession) -> Result<Snapshot, SessionError> {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let s = GameSession::new(id.clone(), req)?;
        let snap = s.snapshot();
        self.sessions.lock().unwrap().insert(id, Arc::new(Mutex::new(s)));
        Ok(snap)
    }

    fn get(&self, id: &str) -> Result<Arc<Mutex<GameSession>>, SessionError> {
        self.sessions.lock().unwrap().get(id).cloned().ok_or_else(|| SessionError::SessionNotFound(id.to_string()))
    }

    pub fn state(&self, id: &str) -> Result<Snapshot, SessionError> {
        Ok(self.get(id)?.lock().unwrap().snapshot())
    }

    pub fn transcript(&self, id: &str) -> Result<Transcript, SessionError> {
        Ok(self.get(id)?.lock().unwrap().transcript.clone())
    }

    pub fn play(&self, id: &str, m: &MovePayload) -> Result<Snapshot, SessionError> {
        let s = self.get(id)?;
        let mut s = s.lock().unwrap();
        // work on a copy so a failing engine reply leaves no trace
        let mut next = s.clone();
        next.apply(m)?;
        *s = next;
        Ok(s.snapshot())
    }
}
