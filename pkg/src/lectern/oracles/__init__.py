"""Brute-force reference computations that freeze expected test values.

Every non-obvious number the test suite asserts is produced here first by
a deliberately naive independent algorithm (greedy n-gram matching,
recursive LCS, exhaustive clustering enumeration, direct formula
evaluation, dict-based exact tf-idf), then written to ``tests/fixtures/``
and committed. ``python -m lectern.oracles --check`` recomputes
everything and fails loudly on drift.

Nothing in this package may import the engine implementation; only the
standard library is used, so the fixtures stay an independent oracle.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache

# ---------------------------------------------------------------------------
# shared naive primitives


def simple_tokens(text: str) -> list[str]:
    """ASCII-only lowercase word extraction; fixture texts stay ASCII."""
    return re.findall(r"[a-z0-9]+", text.lower())


def _prf(overlap: int, candidate_total: int, reference_total: int) -> dict:
    precision = overlap / candidate_total if candidate_total else 0.0
    recall = overlap / reference_total if reference_total else 0.0
    f1 = (
        2.0 * precision * recall / (precision + recall)
        if precision + recall > 0
        else 0.0
    )
    return {"precision": precision, "recall": recall, "f1": f1}


def _ngrams(tokens: list[str], n: int) -> list[tuple[str, ...]]:
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def greedy_rouge_n(candidate: list[str], reference: list[str], n: int) -> dict:
    """Clipped n-gram overlap via greedy matching with removal."""
    remaining = _ngrams(reference, n)
    overlap = 0
    for gram in _ngrams(candidate, n):
        if gram in remaining:
            remaining.remove(gram)
            overlap += 1
    return _prf(overlap, len(_ngrams(candidate, n)), len(_ngrams(reference, n)))


def recursive_lcs(a: list[str], b: list[str]) -> int:
    """Longest common subsequence length by memoized recursion."""

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> int:
        if i == len(a) or j == len(b):
            return 0
        if a[i] == b[j]:
            return 1 + go(i + 1, j + 1)
        return max(go(i + 1, j), go(i, j + 1))

    return go(0, 0)


def rouge_l_scores(candidate: list[str], reference: list[str]) -> dict:
    return _prf(recursive_lcs(candidate, reference), len(candidate), len(reference))


def exact_tfidf(token_lists: list[list[str]]) -> list[dict[str, float]]:
    """Dict-keyed tf-idf vectors: tf raw count, idf = 1 + ln((1+N)/(1+df)),
    L2-normalized. No hashing, so cosines are exact for any vocabulary."""
    n = len(token_lists)
    df: dict[str, int] = {}
    for tokens in token_lists:
        for term in set(tokens):
            df[term] = df.get(term, 0) + 1
    vectors = []
    for tokens in token_lists:
        counts: dict[str, int] = {}
        for term in tokens:
            counts[term] = counts.get(term, 0) + 1
        vec = {
            term: count * (1.0 + math.log((1 + n) / (1 + df[term])))
            for term, count in counts.items()
        }
        norm = math.sqrt(sum(v * v for v in vec.values()))
        if norm > 0:
            vec = {t: v / norm for t, v in vec.items()}
        vectors.append(vec)
    return vectors


def _dot(u: dict[str, float], v: dict[str, float]) -> float:
    if len(v) < len(u):
        u, v = v, u
    return sum(w * v.get(t, 0.0) for t, w in u.items())


def _norm(u: dict[str, float]) -> float:
    return math.sqrt(sum(w * w for w in u.values()))


def cosine(u: dict[str, float], v: dict[str, float]) -> float:
    nu, nv = _norm(u), _norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return _dot(u, v) / (nu * nv)


def mean_vector(vectors: list[dict[str, float]]) -> dict[str, float]:
    total: dict[str, float] = {}
    for vec in vectors:
        for t, w in vec.items():
            total[t] = total.get(t, 0.0) + w
    return {t: w / len(vectors) for t, w in total.items()}


# ---------------------------------------------------------------------------
# exhaustive clustering


def best_partition(vectors: list[dict[str, float]], k: int) -> dict:
    """Globally optimal k-way partition under the spherical objective
    (maximize summed cosine to the cluster mean), by full enumeration.
    Only usable for the tiny fixture sizes (n <= 8)."""
    n = len(vectors)
    results = []
    for assign in itertools.product(range(k), repeat=n):
        if len(set(assign)) != k:
            continue
        first_seen: list[int] = []
        for label in assign:
            if label not in first_seen:
                first_seen.append(label)
        if first_seen != sorted(first_seen):
            continue  # canonical labelings only
        score = 0.0
        for cluster in range(k):
            members = [i for i in range(n) if assign[i] == cluster]
            centroid = mean_vector([vectors[i] for i in members])
            score += sum(cosine(vectors[i], centroid) for i in members)
        results.append((score, assign))
    results.sort(key=lambda item: -item[0])
    best_score, best_assign = results[0]
    runner_up = results[1][0] if len(results) > 1 else float("-inf")
    representatives = []
    for cluster in range(k):
        members = [i for i in range(n) if best_assign[i] == cluster]
        centroid = mean_vector([vectors[i] for i in members])
        sims = [(cosine(vectors[i], centroid), i) for i in members]
        best_sim = max(sim for sim, _ in sims)
        rep = min(i for sim, i in sims if sim == best_sim)
        representatives.append({"cluster": cluster, "sentence": rep, "cosine": best_sim})
    return {
        "assignment": list(best_assign),
        "objective": best_score,
        "runner_up_objective": runner_up,
        "representatives": representatives,
    }


# ---------------------------------------------------------------------------
# naive weighted-extractive selection (mirrors the documented fallback rule)


def fallback_select(
    sentence_tokens: list[list[str]],
    segment_of: list[int],
    weights: list[float],
    word_counts: list[int],
    budget_words: int,
) -> dict:
    vectors = exact_tfidf(sentence_tokens)
    centroid = mean_vector(vectors)
    scores = [
        cosine(vec, centroid) * weights[segment_of[i]] for i, vec in enumerate(vectors)
    ]
    order = sorted(range(len(vectors)), key=lambda i: (-scores[i], i))
    chosen: list[int] = []
    used = 0
    for i in order:
        if used + word_counts[i] <= budget_words:
            chosen.append(i)
            used += word_counts[i]
    if not chosen:
        chosen = [order[0]]
    return {"selected": sorted(chosen), "scores": scores}


# ---------------------------------------------------------------------------
# direct formula evaluations


def weight_formula(u: float, alpha: float) -> float:
    return 0.6 + 0.8 * (math.exp(alpha * u) - 1.0) / (math.exp(alpha) - 1.0)


def greedy_merge(counts: list[int], threshold: int = 32) -> list[list[int]]:
    units: list[list[int]] = []
    i = 0
    while i < len(counts):
        j, total = i, counts[i]
        while total <= threshold and j + 1 < len(counts):
            j += 1
            total += counts[j]
        units.append(list(range(i, j + 1)))
        i = j + 1
    return units


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def dwell_percentile(tpw: dict[int, float], attributed: int) -> dict:
    """Percentile message rule: fires iff the attributed paragraph's
    time-per-word strictly exceeds the mean over read paragraphs; the
    percent is the share of *other* read paragraphs strictly below it."""
    values = list(tpw.values())
    mean = sum(values) / len(values)
    fired = tpw[attributed] > mean
    percent = None
    if fired:
        others = [v for p, v in tpw.items() if p != attributed]
        percent = round_half_up(100.0 * sum(1 for v in others if v < tpw[attributed]) / len(others))
    return {"fired": fired, "percent": percent}
