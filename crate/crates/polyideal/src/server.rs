//! Local JSON service: `POST /api/v1/{command}` with a [`JobRequest`] body,
//! `GET /api/v1/health`.

use std::net::SocketAddr;
use std::time::Duration;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use tower_http::cors::{AllowOrigin, CorsLayer};

use crate::job::{run_command, Command, ErrorClass, JobError, JobRequest, JobResponse};

#[derive(Debug, Clone, Copy)]
pub struct ServerConfig {
    /// Applied to requests that carry no `timeout_seconds`.
    pub default_timeout: Option<Duration>,
}

impl Default for ServerConfig {
    fn default() -> Self {
        ServerConfig {
            default_timeout: Some(Duration::from_secs(300)),
        }
    }
}

fn is_local_origin(origin: &HeaderValue) -> bool {
    let Ok(s) = origin.to_str() else { return false };
    let Some(rest) = s
        .strip_prefix("http://")
        .or_else(|| s.strip_prefix("https://"))
    else {
        return false;
    };
    let host = rest.rsplit_once(':').map_or(rest, |(h, port)| {
        if port.chars().all(|c| c.is_ascii_digit()) {
            h
        } else {
            rest
        }
    });
    matches!(host, "localhost" | "127.0.0.1" | "[::1]")
}

pub fn router(config: ServerConfig) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(AllowOrigin::predicate(|o, _| is_local_origin(o)))
        .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/api/v1/health", get(health))
        .route("/api/v1/{command}", post(job))
        .layer(cors)
        .with_state(config)
}

async fn health() -> Json<serde_json::Value> {
    Json(serde_json::json!({ "status": "ok" }))
}

fn respond(resp: &JobResponse) -> Response {
    let status =
        StatusCode::from_u16(resp.http_status()).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
    (
        status,
        [(header::CONTENT_TYPE, "application/json")],
        resp.to_json(),
    )
        .into_response()
}

async fn job(
    State(config): State<ServerConfig>,
    Path(name): Path<String>,
    body: Bytes,
) -> Response {
    let Some(command) = Command::from_name(&name) else {
        let e = JobError::new(
            ErrorClass::Parse,
            "unknown_command",
            format!("unknown command {:?}", name),
        );
        let mut r = respond(&JobResponse::failure(None, e));
        *r.status_mut() = StatusCode::NOT_FOUND;
        return r;
    };
    let mut req: JobRequest = match serde_json::from_slice(&body) {
        Ok(r) => r,
        Err(e) => {
            let e = JobError::new(ErrorClass::Parse, "bad_request", e.to_string());
            return respond(&JobResponse::failure(Some(command), e));
        }
    };
    match req.command {
        Some(c) if c != command => {
            let e = JobError::new(
                ErrorClass::Parse,
                "command_mismatch",
                format!(
                    "body names command {} but the path names {}",
                    c.name(),
                    command.name()
                ),
            );
            return respond(&JobResponse::failure(Some(command), e));
        }
        _ => req.command = Some(command),
    }
    if req.options.timeout_seconds.is_none() {
        req.options.timeout_seconds = config.default_timeout.map(|d| d.as_secs_f64());
    }
    match tokio::task::spawn_blocking(move || run_command(&req)).await {
        Ok(resp) => respond(&resp),
        Err(e) => respond(&JobResponse::failure(
            Some(command),
            JobError::new(ErrorClass::Internal, "internal", e.to_string()),
        )),
    }
}

pub async fn serve(addr: SocketAddr, config: ServerConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(config)).await
}
