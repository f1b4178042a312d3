//! HTTP + JSON front end for [`SessionStore`].
//!
//! `POST /sessions`, `GET /sessions/{id}`, `POST /sessions/{id}/move`,
//! `GET /sessions/{id}/transcript` (JSONL) and `GET /strategies`.

use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::json;

use super::session::{CreateSession, MovePayload, SessionError, SessionStore, Snapshot};
use crate::builder::BuilderSpec;

impl IntoResponse for SessionError {
    fn into_response(self) -> Response {
        let (status, kind) = match &self {
            SessionError::IllegalMove(_) => (StatusCode::UNPROCESSABLE_ENTITY, "IllegalMove"),
            SessionError::SessionNotFound(_) => (StatusCode::NOT_FOUND, "SessionNotFound"),
            SessionError::SessionOver(_) => (StatusCode::CONFLICT, "SessionOver"),
            SessionError::BadRequest(_) => (StatusCode::BAD_REQUEST, "BadRequest"),
            SessionError::Engine(_) => (StatusCode::INTERNAL_SERVER_ERROR, "Engine"),
        };
        (status, Json(json!({ "error": kind, "message": self.to_string() }))).into_response()
    }
}

type Shared = State<Arc<SessionStore>>;

async fn create(State(store): Shared, Json(req): Json<CreateSession>) -> Result<(StatusCode, Json<Snapshot>), SessionError> {
    Ok((StatusCode::CREATED, Json(store.create(&req)?)))
}

async fn state(State(store): Shared, Path(id): Path<String>) -> Result<Json<Snapshot>, SessionError> {
    Ok(Json(store.state(&id)?))
}

async fn play(State(store): Shared, Path(id): Path<String>, Json(m): Json<MovePayload>) -> Result<Json<Snapshot>, SessionError> {
    Ok(Json(store.play(&id, &m)?))
}

async fn transcript(State(store): Shared, Path(id): Path<String>) -> Result<Response, SessionError> {
    let t = store.transcript(&id)?;
    Ok(([(header::CONTENT_TYPE, "application/x-ndjson")], t.to_jsonl()).into_response())
}

async fn strategies() -> Json<serde_json::Value> {
    let examples: Vec<String> = [
        BuilderSpec::P3Path(8),
        BuilderSpec::P3Cycle(6),
        BuilderSpec::P3SmallCycle(4),
        BuilderSpec::C4P4,
        BuilderSpec::C4Path(5),
        BuilderSpec::P4Path(10),
    ]
    .iter()
    .map(ToString::to_string)
    .collect();
    Json(json!({ "strategies": BuilderSpec::NAMES, "examples": examples }))
}

pub fn router(store: Arc<SessionStore>) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(state))
        .route("/sessions/{id}/move", post(play))
        .route("/sessions/{id}/transcript", get(transcript))
        .route("/strategies", get(strategies))
        .with_state(store)
}

/// Serve on `0.0.0.0:port` until the process ends.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    axum::serve(listener, router(Arc::new(SessionStore::new()))).await
}
