"""Application service behind the HTTP routes and the CLI commands.

Holds the in-memory article/session registries, delegates every
computation to the engine modules, and persists one record per article
(latest session wins). The HTTP layer on top only serializes what comes
out of here.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import httpx

from .. import textmetrics
from ..article import Article
from ..errors import NotFoundError, UnknownParagraphError
from ..extractive import TimeFilterResult, time_filter
from ..ingest import (
    ExtractionRule,
    MergedUnit,
    RawDocument,
    extract_article,
    load_rules,
    merge_short_paragraphs,
)
from ..personalize import SummaryControls, augment_with_annotations
from ..questions import (
    GeneratedQuestion,
    QuestionBatch,
    QuestionFilterResult,
    generate_filter_questions,
    generate_reflection_question,
    question_filter,
)
from ..session import (
    Annotation,
    ReadingSession,
    SessionStore,
    dwell_profile,
)
from ..summarize import (
    ExplanationBubble,
    Summary,
    article_document,
    explain_sentence,
    summarize,
)
from . import AppConfig


@dataclass(frozen=True)
class FinishResult:
    summary: Summary
    dwell_control_enabled: bool


class ReadingService:
    """Single-process coordinator; per-session writes are serialized
    behind one lock, reads of immutable results stay lock-free."""

    def __init__(
        self,
        config: AppConfig | None = None,
        transport: httpx.BaseTransport | None = None,
    ):
        self.config = config or AppConfig()
        self._transport = transport
        self._rules: list[ExtractionRule] = (
            load_rules(self.config.rules_file) if self.config.rules_file else []
        )
        self._articles: dict[str, Article] = {}
        self._units: dict[str, list[MergedUnit]] = {}
        self._questions: dict[str, QuestionBatch] = {}
        self._sessions: dict[str, ReadingSession] = {}
        self._summaries: dict[str, Summary] = {}
        self._controls: dict[str, SummaryControls] = {}
        self._store = SessionStore(self.config.store_path)
        self._lock = threading.Lock()
        self._session_counter = 0

    # -- articles ------------------------------------------------------

    def ingest(
        self, body: str, content_kind: str = "plain", source_url: str = ""
    ) -> Article:
        raw = RawDocument(body=body, content_kind=content_kind, source_url=source_url)
        article = extract_article(raw, self._rules)
        with self._lock:
            self._articles[article.article_id] = article
            self._units[article.article_id] = merge_short_paragraphs(article)
            self._questions.pop(article.article_id, None)
        return article

    def get_article(self, article_id: str) -> Article:
        try:
            return self._articles[article_id]
        except KeyError:
            raise NotFoundError(f"unknown article {article_id}") from None

    def estimated_seconds(self, article: Article) -> float:
        return textmetrics.estimate_reading_time(article, self.config.words_per_minute)

    def time_filter(self, article_id: str, budget_seconds: float) -> TimeFilterResult:
        article = self.get_article(article_id)
        return time_filter(
            article,
            budget_seconds,
            self.config.words_per_minute,
            self.config.embedder_config(),
        )

    # -- questions -----------------------------------------------------

    def questions(self, article_id: str) -> QuestionBatch:
        article = self.get_article(article_id)
        with self._lock:
            cached = self._questions.get(article_id)
        if cached is not None:
            return cached
        batch = generate_filter_questions(
            article,
            self._units[article_id],
            self.config.question_config(),
            self.config.embedder_config(),
            transport=self._transport,
        )
        with self._lock:
            self._questions[article_id] = batch
        return batch

    def filter_questions(
        self, article_id: str, selected_ids: list[str]
    ) -> QuestionFilterResult:
        article = self.get_article(article_id)
        return question_filter(article, self.questions(article_id), selected_ids)

    # -- sessions --------------------------------------------------------

    def start_session(self, article_id: str) -> ReadingSession:
        article = self.get_article(article_id)
        with self._lock:
            self._session_counter += 1
            session = ReadingSession.start(f"s{self._session_counter:04d}", article)
            self._sessions[session.session_id] = session
        return session

    def get_session(self, session_id: str) -> ReadingSession:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise NotFoundError(f"unknown session {session_id}") from None

    def record_focus(
        self, session_id: str, paragraph_index: int, enter_ts: float, leave_ts: float
    ) -> float:
        session = self.get_session(session_id)
        with self._lock:
            return session.record_focus_interval(paragraph_index, enter_ts, leave_ts)

    def annotate(
        self,
        session_id: str,
        kind: str,
        paragraph_index: int,
        payload: str = "",
        span: tuple[int, int] | None = None,
    ) -> Annotation:
        session = self.get_session(session_id)
        with self._lock:
            return session.add_annotation(kind, paragraph_index, payload, span)

    def reflection_question(
        self, session_id: str, paragraph_index: int
    ) -> GeneratedQuestion:
        session = self.get_session(session_id)
        article = self.get_article(session.article_id)
        if not 0 <= paragraph_index < len(article.paragraphs):
            raise UnknownParagraphError(f"paragraph {paragraph_index} not in article")
        return generate_reflection_question(
            article.paragraphs[paragraph_index],
            article,
            self.config.question_config(),
            self.config.embedder_config(),
            transport=self._transport,
        )

    # -- summaries -------------------------------------------------------

    def finish_session(self, session_id: str) -> FinishResult:
        """Close the session and produce the plain summary (neutral
        weights, article text only). The response also says whether the
        dwell impact control may be offered: it is disabled when focus
        mode never ran."""
        session = self.get_session(session_id)
        article = self.get_article(session.article_id)
        with self._lock:
            session.finish()
        summary = summarize(
            article_document(article),
            self.config.summary_config(),
            None,
            self.config.embedder_config(),
            transport=self._transport,
        )
        controls = SummaryControls(alpha=self.config.alpha)
        with self._lock:
            self._summaries[session_id] = summary
            self._controls[session_id] = controls
        self._persist(session, summary)
        return FinishResult(summary, dwell_control_enabled=session.focus_mode_used)

    def weighted_summary(
        self,
        session_id: str,
        controls: SummaryControls,
        max_output_tokens: int | None = None,
    ) -> Summary:
        session = self.get_session(session_id)
        article = self.get_article(session.article_id)
        profile = dwell_profile(session, article)
        doc = augment_with_annotations(article, session.annotations, controls, profile)
        summary = summarize(
            doc,
            self.config.summary_config(),
            max_output_tokens,
            self.config.embedder_config(),
            transport=self._transport,
        )
        with self._lock:
            self._summaries[session_id] = summary
            self._controls[session_id] = controls
        self._persist(session, summary)
        return summary

    def explanation(self, session_id: str, sentence_index: int) -> ExplanationBubble:
        session = self.get_session(session_id)
        with self._lock:
            summary = self._summaries.get(session_id)
            controls = self._controls.get(session_id)
        if summary is None or controls is None:
            raise NotFoundError(f"session {session_id} has no summary yet")
        article = self.get_article(session.article_id)
        profile = dwell_profile(session, article)
        return explain_sentence(
            summary,
            sentence_index,
            profile,
            controls,
            self.config.rouge_variant,
        )

    def past_summary(self, article_id: str) -> dict:
        return self._store.load_latest(article_id)

    def _persist(self, session: ReadingSession, summary: Summary) -> None:
        self._store.persist(
            session,
            {
                "backend": summary.backend,
                "word_budget": summary.word_budget,
                "fell_back": summary.fell_back,
                "sentences": list(summary.sentences),
            },
        )
