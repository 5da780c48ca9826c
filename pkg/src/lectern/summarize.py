"""Summary generation over an augmented document, explanation bubbles
that attribute each summary sentence to its closest source, and the
weight-sweep experiment used to calibrate the weighting range.

Two backends share one contract. The remote one posts segments and their
weights to an abstractive provider; the local one scores every sentence
by cosine similarity to the document centroid times its segment weight
and fills a word budget greedily. Multiplying scores by segment weights
keeps the same monotone promise the provider makes: heavier segments
contribute more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import httpx

from . import textmetrics
from .article import Article
from .embedder import EmbedderConfig, embed_sentences
from .errors import EmptyDocumentError, ProviderUnavailableError, UnknownParagraphError
from .personalize import AugmentedDocument, Segment, SummaryControls
from .sentences import segment_sentences
from .session import DwellProfile

SUMMARY_BACKENDS = ("weighted_extractive_local", "remote_abstractive")

TEMPLATE_PERCENTILE = (
    "You spent more time (per word) in this paragraph than {X}% of the other paragraphs"
)
TEMPLATE_PARAGRAPH = "This paragraph is the most related."
TEMPLATE_NOTE = "You wrote a related note here: {note}"
TEMPLATE_HIGHLIGHT = "You highlighted a related sentence here."


@dataclass(frozen=True)
class SummaryProviderConfig:
    backend: str = "weighted_extractive_local"
    remote_endpoint: str = ""
    timeout_seconds: float = 10.0
    fall_back_to_local: bool = True

    def __post_init__(self) -> None:
        if self.backend not in SUMMARY_BACKENDS:
            raise ValueError(f"unknown summary backend {self.backend!r}")
        if self.backend == "remote_abstractive" and not self.remote_endpoint:
            raise ValueError("remote summary backend requires an endpoint")


@dataclass(frozen=True)
class Summary:
    sentences: tuple[str, ...]
    backend: str
    source_doc: AugmentedDocument
    word_budget: int
    fell_back: bool = False


@dataclass(frozen=True)
class ExplanationBubble:
    summary_sentence_index: int
    source_kind: str  # paragraph | note | highlight
    source_ref: int | str
    anchor_paragraph: int
    message: str
    percentile: int | None = None


@dataclass(frozen=True)
class SweepPoint:
    weight: float
    rouge_f1: float


@dataclass(frozen=True)
class SweepCurve:
    target_paragraph: int
    points: tuple[SweepPoint, ...]
    variant: str


def _word_budget(doc: AugmentedDocument, max_output_tokens: int | None) -> int:
    if max_output_tokens is not None:
        if max_output_tokens < 1:
            raise ValueError("max_output_tokens must be positive")
        return max_output_tokens
    total = sum(textmetrics.word_count(seg.text) for seg in doc.segments)
    return max(1, math.floor(0.15 * total))


def _local_summary(
    doc: AugmentedDocument,
    budget: int,
    embedder_config: EmbedderConfig,
    transport: httpx.BaseTransport | None,
) -> tuple[str, ...]:
    texts: list[str] = []
    word_counts: list[int] = []
    weights: list[float] = []
    for segment in doc.segments:
        for start, end in segment_sentences(segment.text):
            sentence = segment.text[start:end]
            count = textmetrics.word_count(sentence)
            if count == 0:
                continue
            texts.append(sentence)
            word_counts.append(count)
            weights.append(segment.weight)
    if not texts:
        raise EmptyDocumentError("document has no sentences with words")
    vectors = embed_sentences(texts, embedder_config, transport=transport)
    centroid = vectors.mean(axis=0)
    centroid_norm = float((centroid ** 2).sum() ** 0.5)
    if centroid_norm > 0.0:
        raw = vectors @ centroid / centroid_norm
    else:
        raw = vectors @ centroid  # all-zero centroid scores everything 0
    scores = [float(raw[i]) * weights[i] for i in range(len(texts))]
    order = sorted(range(len(texts)), key=lambda i: (-scores[i], i))
    chosen: list[int] = []
    used = 0
    for i in order:
        if used + word_counts[i] <= budget:
            chosen.append(i)
            used += word_counts[i]
    if not chosen:
        chosen = [order[0]]
    return tuple(texts[i] for i in sorted(chosen))


def _remote_summary(
    doc: AugmentedDocument,
    budget: int,
    provider: SummaryProviderConfig,
    transport: httpx.BaseTransport | None,
) -> tuple[str, ...]:
    request = {
        "segments": [seg.text for seg in doc.segments],
        "weights": [seg.weight for seg in doc.segments],
        "max_output_tokens": budget,
    }
    try:
        with httpx.Client(transport=transport, timeout=provider.timeout_seconds) as client:
            response = client.post(provider.remote_endpoint, json=request)
            response.raise_for_status()
            payload = response.json()
    except httpx.HTTPError as exc:
        raise ProviderUnavailableError(f"summary provider failed: {exc}") from exc
    sentences = payload.get("summary_sentences")
    if (
        not isinstance(sentences, list)
        or not sentences
        or not all(isinstance(s, str) for s in sentences)
    ):
        raise ProviderUnavailableError("summary provider returned a malformed payload")
    return tuple(sentences)


def summarize(
    doc: AugmentedDocument,
    provider: SummaryProviderConfig | None = None,
    max_output_tokens: int | None = None,
    embedder_config: EmbedderConfig | None = None,
    transport: httpx.BaseTransport | None = None,
) -> Summary:
    """Summary of the augmented document under its segment weights.

    The remote backend receives the full segment/weight table; the local
    backend selects whole sentences. Both respect ``max_output_tokens``
    as a word budget (default 15% of the document's words).
    """
    provider = provider or SummaryProviderConfig()
    embedder_config = embedder_config or EmbedderConfig()
    if not doc.segments:
        raise EmptyDocumentError("cannot summarize an empty document")
    budget = _word_budget(doc, max_output_tokens)
    if provider.backend == "remote_abstractive":
        try:
            sentences = _remote_summary(doc, budget, provider, transport)
            return Summary(sentences, "remote_abstractive", doc, budget)
        except ProviderUnavailableError:
            if not provider.fall_back_to_local:
                raise
            sentences = _local_summary(doc, budget, embedder_config, None)
            return Summary(sentences, "weighted_extractive_local", doc, budget, fell_back=True)
    sentences = _local_summary(doc, budget, embedder_config, transport)
    return Summary(sentences, "weighted_extractive_local", doc, budget)


def _percentile_message(
    profile: DwellProfile, paragraph_index: int
) -> tuple[str | None, int | None]:
    """The above-average dwell message, or None when the rule does not
    fire. Fires only when the paragraph's time-per-word strictly exceeds
    the mean over read paragraphs; X counts the share of *other* read
    paragraphs strictly below it, rounded half up."""
    tpw = profile.time_per_word.get(paragraph_index)
    if tpw is None:
        return None, None
    values = list(profile.time_per_word.values())
    mean = sum(values) / len(values)
    if not tpw > mean:
        return None, None
    others = [v for p, v in profile.time_per_word.items() if p != paragraph_index]
    below = sum(1 for v in others if v < tpw)
    percent = math.floor(100.0 * below / len(others) + 0.5)
    return TEMPLATE_PERCENTILE.format(X=percent), percent


def explain_sentence(
    summary: Summary,
    sentence_index: int,
    profile: DwellProfile | None = None,
    controls: SummaryControls | None = None,
    variant: str = "rouge_l",
) -> ExplanationBubble:
    """Attribute one summary sentence to its closest source segment and
    phrase why it was included.

    Candidate segments are all paragraphs, plus notes and highlights
    whose impact level is not none. Ties keep the earliest segment.
    """
    controls = controls or SummaryControls()
    profile = profile if profile is not None else DwellProfile({}, frozenset())
    if not 0 <= sentence_index < len(summary.sentences):
        raise ValueError(f"summary has no sentence {sentence_index}")
    sentence = summary.sentences[sentence_index]
    candidates: list[Segment] = []
    for segment in summary.source_doc.segments:
        if segment.kind == "note" and controls.note_impact == "none":
            continue
        if segment.kind == "highlight" and controls.highlight_impact == "none":
            continue
        candidates.append(segment)
    if not candidates:
        raise ValueError("document has no attributable segments")
    best = candidates[0]
    best_score = -1.0
    for segment in candidates:
        score = textmetrics.rouge_f1(sentence, segment.text, variant)
        if score > best_score:
            best, best_score = segment, score
    percentile: int | None = None
    if best.kind == "note":
        message = TEMPLATE_NOTE.format(note=best.text)
    elif best.kind == "highlight":
        message = TEMPLATE_HIGHLIGHT
    else:
        message = None
        if controls.dwell_impact != "none":
            message, percentile = _percentile_message(profile, best.anchor_paragraph)
        if message is None:
            message = TEMPLATE_PARAGRAPH
    return ExplanationBubble(
        summary_sentence_index=sentence_index,
        source_kind=best.kind,
        source_ref=best.provenance,
        anchor_paragraph=best.anchor_paragraph,
        message=message,
        percentile=percentile,
    )


def explain_summary(
    summary: Summary,
    profile: DwellProfile | None = None,
    controls: SummaryControls | None = None,
    variant: str = "rouge_l",
) -> list[ExplanationBubble]:
    return [
        explain_sentence(summary, i, profile, controls, variant)
        for i in range(len(summary.sentences))
    ]


def article_document(article: Article, weights: dict[int, float] | None = None) -> AugmentedDocument:
    """Paragraph-only document, neutral weights unless overridden."""
    weights = weights or {}
    segments = tuple(
        Segment(
            text=p.text,
            weight=weights.get(p.index, 1.0),
            kind="paragraph",
            provenance=p.index,
            anchor_paragraph=p.index,
        )
        for p in article.paragraphs
    )
    return AugmentedDocument(segments)


def weight_sweep(
    article: Article,
    target_paragraph: int,
    embedder_config: EmbedderConfig | None = None,
    max_output_tokens: int | None = None,
    variant: str = "rouge_l",
) -> SweepCurve:
    """ROUGE F1 between the summary and one paragraph as that paragraph's
    weight sweeps 0.0 to 2.0 in steps of 0.1, everything else held at 1.0.

    Runs on the local backend so the curve is deterministic; the step
    grid matches the calibration experiment the weighting range is based
    on.
    """
    if not any(p.index == target_paragraph for p in article.paragraphs):
        raise UnknownParagraphError(f"article has no paragraph {target_paragraph}")
    embedder_config = embedder_config or EmbedderConfig()
    target_text = next(
        p.text for p in article.paragraphs if p.index == target_paragraph
    )
    points: list[SweepPoint] = []
    for step in range(21):
        weight = step / 10.0
        doc = article_document(article, {target_paragraph: weight})
        summary = summarize(
            doc,
            SummaryProviderConfig(),
            max_output_tokens,
            embedder_config,
        )
        f1 = textmetrics.rouge_f1(" ".join(summary.sentences), target_text, variant)
        points.append(SweepPoint(weight, f1))
    return SweepCurve(target_paragraph, tuple(points), variant)
