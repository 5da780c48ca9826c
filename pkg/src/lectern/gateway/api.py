"""HTTP routes. Thin by design: parse, call the service, serialize.

Engine errors carry stable codes; the handler below maps each code to
one HTTP status so clients can branch without parsing messages.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import LecternError
from ..personalize import SummaryControls
from . import AppConfig
from .schemas import (
    SCHEMA_VERSION,
    AnnotationRequest,
    FocusIntervalRequest,
    IngestRequest,
    QuestionSelectRequest,
    SessionCreateRequest,
    SummaryControlsRequest,
    annotation_payload,
    article_payload,
    explanation_payload,
    question_filter_payload,
    questions_payload,
    reflection_payload,
    session_payload,
    summary_payload,
    time_filter_payload,
)
from .service import ReadingService

STATUS_BY_CODE = {
    "not_found": 404,
    "session_finished": 409,
    "remote_unavailable": 502,
    "provider_unavailable": 502,
    "storage_unavailable": 503,
    "internal": 500,
}
_DEFAULT_STATUS = 400  # remaining codes are caller mistakes


def _error_response(code: str, message: str, detail: dict | None = None) -> JSONResponse:
    return JSONResponse(
        status_code=STATUS_BY_CODE.get(code, _DEFAULT_STATUS),
        content={
            "schema_version": SCHEMA_VERSION,
            "error": {"code": code, "message": message, "detail": detail or {}},
        },
    )


def create_app(
    config: AppConfig | None = None, service: ReadingService | None = None
) -> FastAPI:
    service = service or ReadingService(config)
    app = FastAPI(title="lectern", version="0.1.0")
    app.state.service = service

    @app.exception_handler(LecternError)
    async def _engine_error(_request: Request, exc: LecternError) -> JSONResponse:
        return _error_response(exc.code, str(exc), exc.detail)

    @app.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError) -> JSONResponse:
        return _error_response("invalid_request", str(exc))

    @app.get("/healthz")
    def healthz() -> dict:
        return {"schema_version": SCHEMA_VERSION, "status": "ok"}

    @app.post("/articles")
    def ingest(request: IngestRequest) -> dict:
        article = service.ingest(request.body, request.content_kind, request.source_url)
        return article_payload(article, service.estimated_seconds(article))

    @app.get("/articles/{article_id}")
    def get_article(article_id: str) -> dict:
        article = service.get_article(article_id)
        return article_payload(article, service.estimated_seconds(article))

    @app.get("/articles/{article_id}/time-filter")
    def get_time_filter(article_id: str, budget_seconds: float) -> dict:
        return time_filter_payload(service.time_filter(article_id, budget_seconds))

    @app.get("/articles/{article_id}/questions")
    def list_questions(article_id: str) -> dict:
        return questions_payload(service.questions(article_id))

    @app.post("/articles/{article_id}/question-filter")
    def select_questions(article_id: str, request: QuestionSelectRequest) -> dict:
        return question_filter_payload(
            service.filter_questions(article_id, request.question_ids)
        )

    @app.get("/articles/{article_id}/past-summary")
    def past_summary(article_id: str) -> dict:
        record = service.past_summary(article_id)
        return {"schema_version": SCHEMA_VERSION, **record}

    @app.post("/sessions", status_code=201)
    def create_session(request: SessionCreateRequest) -> dict:
        return session_payload(service.start_session(request.article_id))

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return session_payload(service.get_session(session_id))

    @app.post("/sessions/{session_id}/focus")
    def post_focus(session_id: str, request: FocusIntervalRequest) -> dict:
        total = service.record_focus(
            session_id, request.paragraph_index, request.enter_ts, request.leave_ts
        )
        return {
            "schema_version": SCHEMA_VERSION,
            "paragraph_index": request.paragraph_index,
            "total_seconds": total,
        }

    @app.post("/sessions/{session_id}/annotations", status_code=201)
    def post_annotation(session_id: str, request: AnnotationRequest) -> dict:
        annotation = service.annotate(
            session_id,
            request.kind,
            request.paragraph_index,
            request.payload,
            request.span,
        )
        return annotation_payload(annotation)

    @app.get("/sessions/{session_id}/reflection")
    def get_reflection(session_id: str, paragraph_index: int) -> dict:
        return reflection_payload(
            service.reflection_question(session_id, paragraph_index)
        )

    @app.post("/sessions/{session_id}/finish")
    def finish(session_id: str) -> dict:
        result = service.finish_session(session_id)
        payload = summary_payload(result.summary)
        payload["dwell_control_enabled"] = result.dwell_control_enabled
        return payload

    @app.post("/sessions/{session_id}/summary")
    def weighted_summary(session_id: str, request: SummaryControlsRequest) -> dict:
        controls = SummaryControls(
            dwell_impact=request.dwell_impact,
            highlight_impact=request.highlight_impact,
            note_impact=request.note_impact,
            alpha=service.config.alpha,
        )
        summary = service.weighted_summary(
            session_id, controls, request.max_output_tokens
        )
        payload = summary_payload(summary)
        payload["controls"] = {
            "dwell_impact": controls.dwell_impact,
            "highlight_impact": controls.highlight_impact,
            "note_impact": controls.note_impact,
        }
        return payload

    @app.get("/sessions/{session_id}/explanations/{sentence_index}")
    def get_explanation(session_id: str, sentence_index: int) -> dict:
        return explanation_payload(service.explanation(session_id, sentence_index))

    return app
