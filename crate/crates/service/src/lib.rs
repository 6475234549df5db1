//! Local HTTP JSON API over workbench sessions.
//!
//! A session holds a seed, the framed state of its quiver and an undo stack.
//! Requests on one session are serialized by a per-session lock; different
//! sessions never block each other. Every state transition is a direct call
//! into the core library.
//!
//! Vertex labels on the wire are 1-based, as in quiver files.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use clusterbench::coxeter::{DynkinDiagram, ReducedWord};
use clusterbench::quiver::{
    apply_reduction, find_reddening, gls_quiver, FramedState, IceQuiver, QuiverError, QuiverFile,
    ReductionScriptFile, VertexStatus,
};
use clusterbench::seed::SeedError;
use clusterbench::Seed;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;
use tokio::sync::Mutex;

pub const DEFAULT_PORT: u16 = 7161;

/// Variables with more terms than this are sent as `"<large>"`.
pub const DEFAULT_TERM_BUDGET: usize = 64;

/// Upper bound on the depth accepted by `POST /reddening`.
pub const MAX_REDDENING_DEPTH: usize = 24;

const BUILTINS: [(&str, &str); 2] =
    [("gls-A4-w0", "1,2,3,4,1,2,3,1,2,1"), ("gls-A4-richardson", "1,2,3,1,2,4,3")];

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("{0}")]
    BadRequest(String),
    #[error("no session '{0}'")]
    NoSession(String),
    #[error("{0}")]
    Conflict(String),
}

impl ServiceError {
    fn status(&self) -> StatusCode {
        match self {
            ServiceError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ServiceError::NoSession(_) => StatusCode::NOT_FOUND,
            ServiceError::Conflict(_) => StatusCode::CONFLICT,
        }
    }
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "error": self.to_string() });
        (self.status(), Json(body)).into_response()
    }
}

impl From<QuiverError> for ServiceError {
    fn from(e: QuiverError) -> Self {
        match e {
            QuiverError::MutationAtFrozen(_)
            | QuiverError::AlreadyFrozen(_)
            | QuiverError::DeleteNonFrozen(_) => ServiceError::Conflict(e.to_string()),
            _ => ServiceError::BadRequest(e.to_string()),
        }
    }
}

impl From<SeedError> for ServiceError {
    fn from(e: SeedError) -> Self {
        match e {
            SeedError::Quiver(q) => q.into(),
            other => ServiceError::BadRequest(other.to_string()),
        }
    }
}

type ApiResult<T> = Result<T, ServiceError>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Snapshot {
    seed: Seed,
    framed: FramedState,
}

#[derive(Debug)]
struct Session {
    initial: IceQuiver,
    current: Snapshot,
    undo: Vec<Snapshot>,
    history: Vec<usize>,
}

impl Session {
    fn new(q: IceQuiver) -> Self {
        Session {
            current: Snapshot { seed: Seed::initial(&q), framed: FramedState::new(&q) },
            initial: q,
            undo: Vec::new(),
            history: Vec::new(),
        }
    }

    fn mutate(&mut self, k: usize) -> ApiResult<()> {
        let seed = self.current.seed.mutate(k)?;
        let framed = self.current.framed.mutate(k)?;
        debug_assert_eq!(seed.quiver(), &framed.base());
        self.undo.push(std::mem::replace(&mut self.current, Snapshot { seed, framed }));
        self.history.push(k);
        Ok(())
    }

    fn undo(&mut self) -> ApiResult<()> {
        let prev = self.undo.pop().ok_or_else(|| ServiceError::Conflict("history is empty".into()))?;
        self.current = prev;
        self.history.pop();
        Ok(())
    }
}

#[derive(Serialize)]
struct SessionView {
    id: String,
    quiver: QuiverFile,
    frozen: Vec<bool>,
    status: Vec<&'static str>,
    /// `None` for frozen vertices.
    c_vectors: Vec<Option<Vec<i64>>>,
    variables: Vec<String>,
    variable_terms: Vec<usize>,
    history: Vec<usize>,
}

fn status_name(s: VertexStatus) -> &'static str {
    match s {
        VertexStatus::Green => "green",
        VertexStatus::Red => "red",
        VertexStatus::Frozen => "frozen",
    }
}

fn view(id: &str, s: &Session, term_budget: usize) -> SessionView {
    let q = s.current.seed.quiver();
    let framed = &s.current.framed;
    SessionView {
        id: id.to_string(),
        quiver: QuiverFile::from_quiver(q),
        frozen: q.frozen_flags().to_vec(),
        status: framed.statuses().into_iter().map(status_name).collect(),
        c_vectors: (0..q.len())
            .map(|v| (!q.is_frozen(v)).then(|| framed.c_vector(v)))
            .collect(),
        variables: s
            .current
            .seed
            .cluster()
            .iter()
            .map(|f| if f.num_terms() > term_budget { "<large>".to_string() } else { f.to_string() })
            .collect(),
        variable_terms: s.current.seed.cluster().iter().map(|f| f.num_terms()).collect(),
        history: s.history.iter().map(|k| k + 1).collect(),
    }
}

/// Shared registry of sessions.
pub struct AppState {
    sessions: std::sync::Mutex<HashMap<String, Arc<Mutex<Session>>>>,
    next_id: AtomicU64,
    term_budget: usize,
}

impl AppState {
    pub fn new(term_budget: usize) -> Self {
        AppState {
            sessions: std::sync::Mutex::new(HashMap::new()),
            next_id: AtomicU64::new(1),
            term_budget,
        }
    }

    fn session(&self, id: &str) -> ApiResult<Arc<Mutex<Session>>> {
        self.sessions
            .lock()
            .expect("registry lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::NoSession(id.to_string()))
    }
}

impl Default for AppState {
    fn default() -> Self {
        AppState::new(DEFAULT_TERM_BUDGET)
    }
}

fn parse_json(body: &[u8]) -> ApiResult<Value> {
    serde_json::from_slice(body).map_err(|e| ServiceError::BadRequest(format!("invalid JSON: {e}")))
}

/// Quiver named by a builtin id.
pub fn builtin_quiver(name: &str) -> Option<IceQuiver> {
    let (_, word) = BUILTINS.iter().find(|(n, _)| *n == name)?;
    let word: ReducedWord = word.parse().ok()?;
    gls_quiver(&DynkinDiagram::type_a(4), &word).ok()
}

async fn create_session(State(app): State<Arc<AppState>>, body: Bytes) -> ApiResult<Response> {
    let value = parse_json(&body)?;
    let quiver = match value.get("builtin") {
        Some(Value::String(name)) => builtin_quiver(name)
            .ok_or_else(|| ServiceError::BadRequest(format!("unknown builtin '{name}'")))?,
        Some(_) => return Err(ServiceError::BadRequest("builtin must be a string".into())),
        None => IceQuiver::from_json_value(&value)?,
    };
    let id = format!("s{}", app.next_id.fetch_add(1, Ordering::Relaxed));
    let session = Session::new(quiver);
    let body = view(&id, &session, app.term_budget);
    app.sessions.lock().expect("registry lock").insert(id, Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(body)).into_response())
}

async fn get_session(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<Json<SessionView>> {
    let session = app.session(&id)?;
    let s = session.lock().await;
    Ok(Json(view(&id, &s, app.term_budget)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MutateRequest {
    vertex: usize,
}

async fn mutate_session(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Bytes,
) -> ApiResult<Json<SessionView>> {
    let req: MutateRequest = serde_json::from_value(parse_json(&body)?)
        .map_err(|e| ServiceError::BadRequest(e.to_string()))?;
    let session = app.session(&id)?;
    let mut s = session.lock().await;
    let n = s.current.seed.quiver().len();
    if req.vertex == 0 || req.vertex > n {
        return Err(QuiverError::VertexOutOfRange { vertex: req.vertex, n }.into());
    }
    s.mutate(req.vertex - 1)?;
    Ok(Json(view(&id, &s, app.term_budget)))
}

async fn undo_session(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<Json<SessionView>> {
    let session = app.session(&id)?;
    let mut s = session.lock().await;
    s.undo()?;
    Ok(Json(view(&id, &s, app.term_budget)))
}

/// Applies the script to the session's initial quiver and restarts the session
/// from the initial seed of the result.
async fn reduce_session(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Bytes,
) -> ApiResult<Json<SessionView>> {
    let file: ReductionScriptFile = serde_json::from_value(parse_json(&body)?)
        .map_err(|e| ServiceError::BadRequest(e.to_string()))?;
    let script = file.to_script()?;
    let session = app.session(&id)?;
    let mut s = session.lock().await;
    let reduced = apply_reduction(&s.initial, &script)?;
    *s = Session::new(reduced);
    Ok(Json(view(&id, &s, app.term_budget)))
}

async fn export_session(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<Json<QuiverFile>> {
    let session = app.session(&id)?;
    let s = session.lock().await;
    Ok(Json(QuiverFile::from_quiver(s.current.seed.quiver())))
}

#[derive(Serialize)]
struct ReddeningResponse {
    sequence: Option<Vec<usize>>,
}

async fn reddening(body: Bytes) -> ApiResult<Json<ReddeningResponse>> {
    let value = parse_json(&body)?;
    let quiver = value
        .get("quiver")
        .ok_or_else(|| ServiceError::BadRequest("missing 'quiver'".into()))?;
    let quiver = IceQuiver::from_json_value(quiver)?;
    let depth = match value.get("depth") {
        Some(d) => d
            .as_u64()
            .ok_or_else(|| ServiceError::BadRequest("depth must be a non-negative integer".into()))?
            as usize,
        None => 12,
    };
    if depth > MAX_REDDENING_DEPTH {
        return Err(ServiceError::BadRequest(format!("depth {depth} exceeds {MAX_REDDENING_DEPTH}")));
    }
    let found = tokio::task::spawn_blocking(move || find_reddening(&quiver, depth))
        .await
        .map_err(|e| ServiceError::BadRequest(format!("search aborted: {e}")))?;
    Ok(Json(ReddeningResponse { sequence: found.map(|s| s.iter().map(|k| k + 1).collect()) }))
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/mutate", post(mutate_session))
        .route("/sessions/{id}/undo", post(undo_session))
        .route("/sessions/{id}/reduce", post(reduce_session))
        .route("/export/{id}", get(export_session))
        .route("/reddening", post(reddening))
        .with_state(state)
}

/// A router with an empty registry and the default term budget.
pub fn app() -> Router {
    router(Arc::new(AppState::default()))
}

/// Serves the API on `127.0.0.1:port` until the process ends.
pub async fn serve(port: u16, term_budget: usize) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(Arc::new(AppState::new(term_budget)))).await
}
