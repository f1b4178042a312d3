//! Move records and JSONL transcripts.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::board::{Board, BoardError, Color, Edge};

/// One round. `wasted` marks a re-chosen uncovered edge (nothing changes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub round: u32,
    pub edge: Edge,
    pub color: Color,
    #[serde(default)]
    pub wasted: bool,
}

#[derive(Debug, Error)]
pub enum TranscriptError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: serde_json::Error },
    #[error("round {round}: {source}")]
    Board { round: u32, source: BoardError },
    #[error("round {round}: wasted move on {edge} but the edge is not uncovered")]
    BadWaste { round: u32, edge: Edge },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transcript {
    pub moves: Vec<Move>,
}

impl Transcript {
    pub fn new() -> Self {
        Transcript::default()
    }

    pub fn push(&mut self, edge: Edge, color: Color) {
        let round = self.moves.len() as u32 + 1;
        self.moves.push(Move { round, edge, color, wasted: false });
    }

    pub fn push_wasted(&mut self, edge: Edge, color: Color) {
        let round = self.moves.len() as u32 + 1;
        self.moves.push(Move { round, edge, color, wasted: true });
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Painter's replies as an `R`/`B` string.
    pub fn reply_string(&self) -> String {
        self.moves.iter().map(|m| m.color.letter()).collect()
    }

    /// Rebuild the board the transcript describes.
    pub fn replay(&self) -> Result<Board, TranscriptError> {
        let mut b = Board::new();
        for m in &self.moves {
            if m.wasted {
                if b.color(m.edge) != Some(m.color) {
                    return Err(TranscriptError::BadWaste { round: m.round, edge: m.edge });
                }
                b.waste_round();
            } else {
                b.insert(m.edge, m.color).map_err(|source| TranscriptError::Board { round: m.round, source })?;
            }
        }
        Ok(b)
    }

    pub fn to_jsonl(&self) -> String {
        let mut s = String::new();
        for m in &self.moves {
            s.push_str(&serde_json::to_string(m).expect("moves serialize"));
            s.push('\n');
        }
        s
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_jsonl().as_bytes())
    }

    pub fn from_jsonl(s: &str) -> Result<Self, TranscriptError> {
        Self::read_jsonl(s.as_bytes())
    }

    pub fn read_jsonl<R: BufRead>(r: R) -> Result<Self, TranscriptError> {
        let mut moves = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let m: Move =
                serde_json::from_str(&line).map_err(|source| TranscriptError::Parse { line: i + 1, source })?;
            moves.push(m);
        }
        Ok(Transcript { moves })
    }
}

impl FromIterator<(Edge, Color)> for Transcript {
    fn from_iter<I: IntoIterator<Item = (Edge, Color)>>(iter: I) -> Self {
        let mut t = Transcript::new();
        for (e, c) in iter {
            t.push(e, c);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_shape() {
        let t: Transcript = [(Edge::between(0, 1), Color::Red)].into_iter().collect();
        assert_eq!(t.to_jsonl(), "{\"round\":1,\"edge\":[0,1],\"color\":\"red\",\"wasted\":false}\n");
        assert_eq!(Transcript::from_jsonl(&t.to_jsonl()).unwrap(), t);
    }

    #[test]
    fn replay_rejects_duplicates() {
        let e = Edge::between(2, 3);
        let t: Transcript = [(e, Color::Red), (e, Color::Blue)].into_iter().collect();
        assert!(matches!(t.replay(), Err(TranscriptError::Board { round: 2, .. })));
    }
}
