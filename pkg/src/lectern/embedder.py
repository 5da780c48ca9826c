"""Sentence embeddings: a deterministic hashed tf-idf backend plus a
remote-provider client speaking a minimal JSON protocol.

The local backend builds term weights over the input batch (tf times
smoothed idf), hashes each term into a fixed number of buckets with a
seed-keyed blake2b, and L2-normalizes. Smoothing uses
idf = 1 + ln((1+N)/(1+df)) so a term present in every sentence still
carries weight and identical sentences embed identically.
"""

from __future__ import annotations

import hashlib
import math
from collections import Counter
from dataclasses import dataclass

import httpx
import numpy as np

from . import textmetrics
from .errors import RemoteUnavailableError

EMBEDDER_BACKENDS = ("tfidf_local", "remote")


@dataclass(frozen=True)
class EmbedderConfig:
    backend: str = "tfidf_local"
    dimension: int = 512
    seed: int = 0
    remote_endpoint: str = ""
    timeout_seconds: float = 10.0
    fall_back_to_local: bool = True

    def __post_init__(self) -> None:
        if self.backend not in EMBEDDER_BACKENDS:
            raise ValueError(f"unknown embedder backend {self.backend!r}")
        if self.backend == "remote" and not self.remote_endpoint:
            raise ValueError("remote embedder backend requires an endpoint")
        if self.dimension < 1:
            raise ValueError("dimension must be positive")


def _bucket(term: str, dimension: int, seed: int) -> int:
    digest = hashlib.blake2b(
        term.encode("utf-8"), digest_size=8, key=str(seed).encode("ascii")
    ).digest()
    return int.from_bytes(digest, "big") % dimension


def _tfidf_local(sentences: list[str], config: EmbedderConfig) -> np.ndarray:
    token_lists = [textmetrics.tokenize(text) for text in sentences]
    n = len(token_lists)
    df: Counter[str] = Counter()
    for tokens in token_lists:
        df.update(set(tokens))
    idf = {term: 1.0 + math.log((1 + n) / (1 + count)) for term, count in df.items()}
    vectors = np.zeros((n, config.dimension), dtype=np.float64)
    for row, tokens in enumerate(token_lists):
        for term, count in Counter(tokens).items():
            vectors[row, _bucket(term, config.dimension, config.seed)] += count * idf[term]
    return _normalize_rows(vectors)


def _normalize_rows(vectors: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(vectors, axis=1, keepdims=True)
    np.divide(vectors, norms, out=vectors, where=norms > 0)
    return vectors


def _remote(
    sentences: list[str], config: EmbedderConfig, transport: httpx.BaseTransport | None
) -> np.ndarray:
    try:
        with httpx.Client(transport=transport, timeout=config.timeout_seconds) as client:
            response = client.post(config.remote_endpoint, json={"texts": sentences})
            response.raise_for_status()
            payload = response.json()
    except httpx.HTTPError as exc:
        raise RemoteUnavailableError(f"embedding provider failed: {exc}") from exc
    vectors = payload.get("vectors")
    if not isinstance(vectors, list) or len(vectors) != len(sentences):
        raise RemoteUnavailableError("embedding provider returned a malformed payload")
    try:
        array = np.asarray(vectors, dtype=np.float64)
    except ValueError as exc:
        raise RemoteUnavailableError("embedding provider returned ragged vectors") from exc
    if array.ndim != 2:
        raise RemoteUnavailableError("embedding provider returned ragged vectors")
    return _normalize_rows(array)


def embed_sentences(
    sentences: list[str],
    config: EmbedderConfig,
    transport: httpx.BaseTransport | None = None,
) -> np.ndarray:
    """One L2-normalized row per input sentence, order preserved.

    The ``transport`` hook exists so tests can mock the remote provider;
    production callers leave it None.
    """
    if not sentences:
        raise ValueError("embed_sentences requires at least one sentence")
    if config.backend == "remote":
        try:
            return _remote(sentences, config, transport)
        except RemoteUnavailableError:
            if not config.fall_back_to_local:
                raise
            return _tfidf_local(sentences, config)
    return _tfidf_local(sentences, config)
