"""Question generation behind a provider contract.

The remote protocol mirrors an answer-aware generator: request
{"context": ..., "answer": ...} returns {"question": ...}. The local
template backend is a deterministic stand-in: it asks about the most
distinctive term of the answer sentence (tf-idf over the unit's
sentences, earliest position wins ties), so the full pipeline stays
testable with no model server.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

import httpx

from . import textmetrics
from .article import Article, MergedUnit, Paragraph
from .embedder import EmbedderConfig
from .errors import ProviderUnavailableError, UnknownQuestionIdError
from .extractive import paragraph_key_sentence

QG_BACKENDS = ("template_local", "remote")
_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class QgProviderConfig:
    backend: str = "template_local"
    remote_endpoint: str = ""
    seed: int = 0
    timeout_seconds: float = 10.0
    fall_back_to_template: bool = True

    def __post_init__(self) -> None:
        if self.backend not in QG_BACKENDS:
            raise ValueError(f"unknown question backend {self.backend!r}")
        if self.backend == "remote" and not self.remote_endpoint:
            raise ValueError("remote question backend requires an endpoint")


@dataclass(frozen=True)
class GeneratedQuestion:
    question_id: str
    text: str
    answer_unit: int
    answer_sentence_ids: tuple[int, ...]


@dataclass(frozen=True)
class QuestionBatch:
    questions: tuple[GeneratedQuestion, ...]
    backend: str


@dataclass(frozen=True)
class QuestionFilterResult:
    highlight_spans: tuple[tuple[int, str], ...]  # (sentence id, question id)
    tooltip_map: dict[int, str]


def normalize_question(text: str) -> str:
    text = _WS_RE.sub(" ", text).strip()
    if not text.endswith("?"):
        text += "?"
    return text


def top_term(sentence_index: int, batch_texts: list[str]) -> str:
    """Most distinctive token of one sentence within a batch: highest
    tf times smoothed idf; ties go to the earliest position."""
    token_lists = [textmetrics.tokenize(t) for t in batch_texts]
    tokens = token_lists[sentence_index]
    if not tokens:
        raise ValueError("sentence has no tokens")
    n = len(token_lists)
    df = Counter()
    for toks in token_lists:
        df.update(set(toks))
    counts = Counter(tokens)
    weights = {
        term: counts[term] * (1.0 + math.log((1 + n) / (1 + df[term])))
        for term in counts
    }
    best = max(weights.values())
    for term in tokens:
        if weights[term] >= best - 1e-12:
            return term
    raise AssertionError("unreachable")


def _template_question(answer_sentence_index: int, batch_texts: list[str]) -> str:
    return f"What does the article say about {top_term(answer_sentence_index, batch_texts)}?"


def _remote_question(
    context: str,
    answer: str,
    config: QgProviderConfig,
    transport: httpx.BaseTransport | None,
) -> str:
    try:
        with httpx.Client(transport=transport, timeout=config.timeout_seconds) as client:
            response = client.post(
                config.remote_endpoint, json={"context": context, "answer": answer}
            )
            response.raise_for_status()
            payload = response.json()
    except httpx.HTTPError as exc:
        raise ProviderUnavailableError(f"question provider failed: {exc}") from exc
    question = payload.get("question")
    if not isinstance(question, str) or not question.strip():
        raise ProviderUnavailableError("question provider returned no question")
    return question


def _make_question(
    unit_texts: list[str],
    key_local_index: int,
    context: str,
    config: QgProviderConfig,
    transport: httpx.BaseTransport | None,
) -> tuple[str, str]:
    """Returns (question text, backend actually used)."""
    if config.backend == "remote":
        try:
            raw = _remote_question(context, unit_texts[key_local_index], config, transport)
            return normalize_question(raw), "remote"
        except ProviderUnavailableError:
            if not config.fall_back_to_template:
                raise
    return normalize_question(_template_question(key_local_index, unit_texts)), "template_local"


def _article_text(article: Article) -> str:
    return "\n\n".join(p.text for p in article.paragraphs)


def generate_filter_questions(
    article: Article,
    units: list[MergedUnit],
    provider: QgProviderConfig = QgProviderConfig(),
    embedder: EmbedderConfig = EmbedderConfig(),
    transport: httpx.BaseTransport | None = None,
) -> QuestionBatch:
    """One question per merged unit, ordered by unit id; the answer span
    is the unit's centroid-nearest sentence."""
    context = _article_text(article)
    flat = article.sentences
    questions = []
    backend_used = provider.backend
    for unit in units:
        unit_texts = [flat[i].text for i in unit.sentence_indices]
        key_local = paragraph_key_sentence(unit_texts, embedder)
        text, used = _make_question(unit_texts, key_local, context, provider, transport)
        if used != provider.backend:
            backend_used = used
        questions.append(
            GeneratedQuestion(
                question_id=f"q{unit.unit_id:03d}",
                text=text,
                answer_unit=unit.unit_id,
                answer_sentence_ids=(unit.sentence_indices[key_local],),
            )
        )
    return QuestionBatch(tuple(questions), backend_used)


def question_filter(
    article: Article,
    questions: QuestionBatch | tuple[GeneratedQuestion, ...],
    selected_ids: list[str],
) -> QuestionFilterResult:
    pool = questions.questions if isinstance(questions, QuestionBatch) else tuple(questions)
    by_id = {q.question_id: q for q in pool}
    unknown = [qid for qid in selected_ids if qid not in by_id]
    if unknown:
        raise UnknownQuestionIdError(f"unknown question ids: {unknown}")
    spans: list[tuple[int, str]] = []
    tooltips: dict[int, str] = {}
    for question in pool:  # unit order regardless of selection order
        if question.question_id not in selected_ids:
            continue
        for sentence_id in question.answer_sentence_ids:
            spans.append((sentence_id, question.question_id))
            tooltips[sentence_id] = question.text
    return QuestionFilterResult(tuple(spans), tooltips)


def generate_reflection_question(
    paragraph: Paragraph,
    article: Article,
    provider: QgProviderConfig = QgProviderConfig(),
    embedder: EmbedderConfig = EmbedderConfig(),
    transport: httpx.BaseTransport | None = None,
) -> GeneratedQuestion:
    """A single question about one paragraph. The answer span is kept on
    the result for attribution, but service payloads must not expose it:
    the reader is meant to recall, not reveal."""
    texts = [s.text for s in paragraph.sentences]
    if not texts:
        raise ValueError("paragraph has no sentences")
    key_local = paragraph_key_sentence(texts, embedder)
    text, _ = _make_question(texts, key_local, _article_text(article), provider, transport)
    return GeneratedQuestion(
        question_id=f"r{paragraph.index:03d}",
        text=text,
        answer_unit=paragraph.index,
        answer_sentence_ids=(paragraph.sentences[key_local].index,),
    )
