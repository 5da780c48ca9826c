"""Tokenization, ROUGE scoring, and reading-time arithmetic.

All word counts in the engine come from :func:`tokenize` so that budgets,
weights, and overlap metrics agree on what a "word" is.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Unicode word characters minus underscore; punctuation is dropped.
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)

DEFAULT_WORDS_PER_MINUTE = 150.0

TokenSequence = list[str]


def tokenize(text: str) -> TokenSequence:
    """Lowercased word tokens at unicode word boundaries; deterministic."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def word_count(text: str) -> int:
    return len(_WORD_RE.findall(text))


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float

    @staticmethod
    def from_counts(overlap: float, candidate_total: int, reference_total: int) -> "RougeScore":
        precision = overlap / candidate_total if candidate_total else 0.0
        recall = overlap / reference_total if reference_total else 0.0
        if precision + recall == 0.0:
            return RougeScore(precision, recall, 0.0)
        return RougeScore(precision, recall, 2.0 * precision * recall / (precision + recall))


def _ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int = 1) -> RougeScore:
    """Clipped n-gram overlap: each reference n-gram occurrence matches at most once.

    Empty candidate or reference (after n-gram formation) yields an
    all-zero score rather than a division error.
    """
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    cand = _ngram_counts(candidate, n)
    ref = _ngram_counts(reference, n)
    overlap = sum(min(count, ref[gram]) for gram, count in cand.items())
    return RougeScore.from_counts(overlap, sum(cand.values()), sum(ref.values()))


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    # Iterative DP over two rolling rows.
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for token in a:
        cur = [0]
        for j, other in enumerate(b, start=1):
            if token == other:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> RougeScore:
    """Longest-common-subsequence overlap; empty side yields zero."""
    lcs = _lcs_length(candidate, reference)
    return RougeScore.from_counts(lcs, len(candidate), len(reference))


ROUGE_VARIANTS = ("rouge_l", "rouge_1")


def rouge_f1(candidate_text: str, reference_text: str, variant: str = "rouge_l") -> float:
    """F1 of the configured ROUGE variant over tokenized texts."""
    cand, ref = tokenize(candidate_text), tokenize(reference_text)
    if variant == "rouge_l":
        return rouge_l(cand, ref).f1
    if variant == "rouge_1":
        return rouge_n(cand, ref, 1).f1
    raise ValueError(f"unknown ROUGE variant {variant!r}; expected one of {ROUGE_VARIANTS}")


def reading_seconds_exact(words: int, words_per_minute: float | int | Fraction) -> Fraction:
    """Exact rational reading-time estimate: words / wpm * 60."""
    wpm = Fraction(words_per_minute)
    if wpm <= 0:
        raise ValueError("words_per_minute must be positive")
    return Fraction(words) * 60 / wpm


def estimate_reading_time(article, words_per_minute: float = DEFAULT_WORDS_PER_MINUTE) -> float:
    """Seconds needed to read the whole article at the given speed.

    Accepts anything with a ``total_words`` attribute or a plain word count.
    A zero-word article (rejected upstream) yields a defensive 0.0.
    """
    words = getattr(article, "total_words", article)
    return float(reading_seconds_exact(int(words), words_per_minute))


@dataclass(frozen=True)
class ReadingBudget:
    """Estimated total reading seconds, the user's budget, and their ratio.

    ``rate`` is the fraction of the text the engine may keep: the budget
    divided by the estimate, clamped into (0, 1]. A zero estimate means
    there is nothing to compress, so the rate is 1.
    """

    estimated_total_seconds: float
    user_budget_seconds: float
    rate: float


def compression_rate(estimated_total_seconds: float, user_budget_seconds: float) -> ReadingBudget:
    if estimated_total_seconds < 0 or user_budget_seconds < 0:
        raise ValueError("reading times must be non-negative")
    if estimated_total_seconds == 0:
        rate = 1.0
    else:
        rate = min(1.0, user_budget_seconds / estimated_total_seconds)
    return ReadingBudget(estimated_total_seconds, user_budget_seconds, rate)
