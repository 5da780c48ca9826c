"""Request models and response serializers for the HTTP surface.

Responses are plain dicts built from engine objects so contract tests
can compare a route's JSON against a direct module call field by field.
Every payload carries ``schema_version``.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..article import Article
from ..extractive import TimeFilterResult
from ..questions import GeneratedQuestion, QuestionBatch, QuestionFilterResult
from ..session import Annotation, ReadingSession
from ..summarize import ExplanationBubble, Summary

SCHEMA_VERSION = 1


class IngestRequest(BaseModel):
    body: str
    content_kind: str = "plain"
    source_url: str = ""


class QuestionSelectRequest(BaseModel):
    question_ids: list[str]


class SessionCreateRequest(BaseModel):
    article_id: str


class FocusIntervalRequest(BaseModel):
    paragraph_index: int
    enter_ts: float
    leave_ts: float


class AnnotationRequest(BaseModel):
    kind: str
    paragraph_index: int
    payload: str = ""
    span: tuple[int, int] | None = None


class SummaryControlsRequest(BaseModel):
    dwell_impact: str = "low"
    highlight_impact: str = "low"
    note_impact: str = "low"
    max_output_tokens: int | None = Field(default=None, ge=1)


def article_payload(article: Article, estimated_seconds: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "article_id": article.article_id,
        "title": article.title,
        "source_url": article.source_url,
        "total_words": article.total_words,
        "estimated_seconds": estimated_seconds,
        "paragraphs": [
            {
                "index": p.index,
                "text": p.text,
                "word_count": p.word_count,
                "sentences": [
                    {
                        "index": s.index,
                        "start": s.start,
                        "end": s.end,
                        "word_count": s.word_count,
                    }
                    for s in p.sentences
                ],
            }
            for p in article.paragraphs
        ],
    }


def time_filter_payload(result: TimeFilterResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "budget": {
            "estimated_total_seconds": result.budget.estimated_total_seconds,
            "user_budget_seconds": result.budget.user_budget_seconds,
            "rate": result.budget.rate,
        },
        "selected_sentence_ids": list(result.selected_sentence_ids),
        "estimated_selected_seconds": result.estimated_selected_seconds,
        "highlights": [
            {"paragraph": paragraph, "start": start, "end": end}
            for paragraph, (start, end) in result.highlight_spans
        ],
    }


def questions_payload(batch: QuestionBatch) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "backend": batch.backend,
        "questions": [
            {
                "question_id": q.question_id,
                "text": q.text,
                "answer_unit": q.answer_unit,
            }
            for q in batch.questions
        ],
    }


def question_filter_payload(result: QuestionFilterResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "highlights": [
            {"sentence_id": sentence_id, "question_id": question_id}
            for sentence_id, question_id in result.highlight_spans
        ],
        "tooltips": {str(k): v for k, v in result.tooltip_map.items()},
    }


def annotation_payload(annotation: Annotation) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "annotation_id": annotation.annotation_id,
        "kind": annotation.kind,
        "paragraph_index": annotation.anchor_paragraph,
        "payload": annotation.payload,
        "span": list(annotation.span) if annotation.span else None,
    }


def session_payload(session: ReadingSession) -> dict:
    return {"schema_version": SCHEMA_VERSION, **session.to_record()}


def reflection_payload(question: GeneratedQuestion) -> dict:
    """Reflection questions never expose the answer span: the point of
    the exercise is recall."""
    return {
        "schema_version": SCHEMA_VERSION,
        "question_id": question.question_id,
        "text": question.text,
        "paragraph_index": question.answer_unit,
    }


def summary_payload(summary: Summary) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "backend": summary.backend,
        "word_budget": summary.word_budget,
        "fell_back": summary.fell_back,
        "sentences": list(summary.sentences),
    }


def explanation_payload(bubble: ExplanationBubble) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "summary_sentence_index": bubble.summary_sentence_index,
        "source_kind": bubble.source_kind,
        "source_ref": bubble.source_ref,
        "anchor_paragraph": bubble.anchor_paragraph,
        "message": bubble.message,
        "percentile": bubble.percentile,
    }
