"""Centroid-nearest extractive selection under a compression-rate budget.

Sentences are embedded, clustered with spherical k-means (k grows with
the rate), and each cluster contributes its centroid-nearest sentence.
If the chosen sentences overrun the word budget, representatives of the
smallest clusters are dropped first, but at least one sentence always
survives: an empty highlight helps nobody.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import textmetrics
from .article import Article
from .embedder import EmbedderConfig, embed_sentences
from .errors import EmptyArticleError
from .textmetrics import ReadingBudget

_MAX_ITERATIONS = 50
# slack for float representation of exact rational rates: 1/3 of 6
# sentences must give k=2 even though the binary rate is a hair under
_RATE_EPS = 1e-9


@dataclass(frozen=True)
class ExtractiveSummary:
    selected_sentence_ids: tuple[int, ...]
    total_selected_words: int
    rate_used: float


@dataclass(frozen=True)
class TimeFilterResult:
    highlight_spans: tuple[tuple[int, tuple[int, int]], ...]
    selected_sentence_ids: tuple[int, ...]
    budget: ReadingBudget
    estimated_selected_seconds: float


def _spherical_kmeans(vectors: np.ndarray, k: int, seed: int) -> np.ndarray:
    """Cluster unit vectors by cosine; returns a label per row.

    Deterministic: seeded first center, then farthest-point picks with
    argmax (lowest index wins ties); assignment ties also resolve to the
    lowest center index.
    """
    n = vectors.shape[0]
    rng = np.random.default_rng(seed)
    centers = [int(rng.integers(n))]
    min_dist = 1.0 - vectors @ vectors[centers[0]]
    while len(centers) < k:
        nxt = int(np.argmax(min_dist))
        centers.append(nxt)
        min_dist = np.minimum(min_dist, 1.0 - vectors @ vectors[nxt])
    centroids = vectors[centers].copy()

    labels = np.full(n, -1, dtype=np.int64)
    for _ in range(_MAX_ITERATIONS):
        sims = vectors @ centroids.T
        new_labels = np.argmax(sims, axis=1)
        for cluster in range(k):
            if not np.any(new_labels == cluster):
                # reseed with the worst-fit point from a donor of size >= 2
                fit = sims[np.arange(n), new_labels]
                donors = np.array(
                    [i for i in range(n) if np.sum(new_labels == new_labels[i]) >= 2]
                )
                if donors.size == 0:
                    break
                worst = donors[int(np.argmin(fit[donors]))]
                centroids[cluster] = vectors[worst]
                new_labels[worst] = cluster
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for cluster in range(k):
            members = vectors[labels == cluster]
            if members.shape[0] == 0:
                continue
            mean = members.mean(axis=0)
            norm = np.linalg.norm(mean)
            if norm > 0:
                centroids[cluster] = mean / norm
    return labels


def extract_summary(
    sentence_texts: list[str], rate: float, config: EmbedderConfig
) -> ExtractiveSummary:
    if not sentence_texts:
        raise ValueError("extract_summary requires at least one sentence")
    if not 0.0 < rate <= 1.0:
        raise ValueError(f"rate must be in (0, 1], got {rate}")
    word_counts = [textmetrics.word_count(t) for t in sentence_texts]
    total_words = sum(word_counts)
    n = len(sentence_texts)
    budget = rate * total_words + _RATE_EPS

    k = max(1, math.floor(rate * n + _RATE_EPS))
    if k >= n:
        return ExtractiveSummary(tuple(range(n)), total_words, rate)

    vectors = embed_sentences(sentence_texts, config)
    labels = _spherical_kmeans(vectors, k, config.seed)

    chosen: list[tuple[int, int]] = []  # (cluster size, representative id)
    for cluster in range(k):
        members = np.flatnonzero(labels == cluster)
        if members.size == 0:
            continue
        mean = vectors[members].mean(axis=0)
        norm = np.linalg.norm(mean)
        if norm > 0:
            mean = mean / norm
        sims = vectors[members] @ mean
        rep = int(members[int(np.argmax(sims))])
        chosen.append((int(members.size), rep))

    selected = sorted(rep for _, rep in chosen)
    total_selected = sum(word_counts[i] for i in selected)
    drop_order = sorted(chosen, key=lambda item: (item[0], -item[1]))
    for _, rep in drop_order:
        if total_selected <= budget or len(selected) == 1:
            break
        selected.remove(rep)
        total_selected -= word_counts[rep]
    return ExtractiveSummary(tuple(selected), total_selected, rate)


def time_filter(
    article: Article,
    user_budget_seconds: float,
    words_per_minute: float = textmetrics.DEFAULT_WORDS_PER_MINUTE,
    config: EmbedderConfig = EmbedderConfig(),
) -> TimeFilterResult:
    if user_budget_seconds <= 0:
        raise ValueError("budget must be positive")
    sentences = article.sentences
    if not sentences:
        raise EmptyArticleError("article has no sentences")
    estimated_total = textmetrics.estimate_reading_time(article, words_per_minute)
    budget = textmetrics.compression_rate(estimated_total, user_budget_seconds)
    summary = extract_summary([s.text for s in sentences], budget.rate, config)
    spans = tuple(
        (sentences[i].paragraph_index, (sentences[i].start, sentences[i].end))
        for i in summary.selected_sentence_ids
    )
    estimated_selected = summary.total_selected_words / words_per_minute * 60.0
    return TimeFilterResult(
        highlight_spans=spans,
        selected_sentence_ids=summary.selected_sentence_ids,
        budget=budget,
        estimated_selected_seconds=estimated_selected,
    )


def paragraph_key_sentence(
    sentence_texts: list[str], config: EmbedderConfig = EmbedderConfig()
) -> int:
    """Index of the sentence nearest the centroid of the batch (k = 1)."""
    if not sentence_texts:
        raise ValueError("paragraph_key_sentence requires at least one sentence")
    if len(sentence_texts) == 1:
        return 0
    vectors = embed_sentences(sentence_texts, config)
    mean = vectors.mean(axis=0)
    norm = np.linalg.norm(mean)
    if norm > 0:
        mean = mean / norm
    return int(np.argmax(vectors @ mean))
