"""Fixture builders: inputs plus oracle-computed expected values.

Each builder returns a JSON-ready dict and raises AssertionError when the
fixture loses the structural properties the tests rely on (clear margins,
interior thresholds, expected tie patterns), so a bad fixture edit fails
at generation time instead of producing a flaky suite.
"""

from __future__ import annotations

from . import (
    best_partition,
    cosine,
    dwell_percentile,
    exact_tfidf,
    fallback_select,
    greedy_merge,
    greedy_rouge_n,
    mean_vector,
    recursive_lcs,
    rouge_l_scores,
    simple_tokens,
    weight_formula,
)

# ---------------------------------------------------------------------------
# ROUGE

ROUGE_CASES: list[tuple[str, list[str], list[str], str]] = [
    ("identical_short", ["the", "cat", "sat"], ["the", "cat", "sat"], "1"),
    ("unigram_partial", ["the", "cat", "ran"], ["the", "cat", "sat"], "1"),
    ("disjoint", ["alpha", "beta"], ["gamma", "delta"], "1"),
    ("empty_candidate", [], ["a", "b"], "1"),
    ("empty_reference", ["a", "b"], [], "1"),
    ("both_empty", [], [], "1"),
    ("clip_repeat", ["a", "a", "a"], ["a"], "1"),
    ("clip_reverse", ["a"], ["a", "a", "a"], "1"),
    ("partial_repeat", ["a", "a", "b"], ["a", "b", "b"], "1"),
    ("unigram_unicode", ["état", "âme"], ["état", "d", "âme"], "1"),
    ("unigram_long", ["news", "market", "rose", "amid", "calm", "trading", "on", "friday"],
     ["market", "rose", "on", "friday", "amid", "rally"], "1"),
    ("bigram_identical", ["a", "b", "c"], ["a", "b", "c"], "2"),
    ("bigram_shift", ["a", "b", "c", "d"], ["b", "c", "d", "e"], "2"),
    ("bigram_multiset_equal", ["a", "b", "a"], ["b", "a", "b"], "2"),
    ("bigram_short_candidate", ["a"], ["a", "b"], "2"),
    ("bigram_clip", ["a", "b", "a", "b"], ["a", "b"], "2"),
    ("bigram_disjoint", ["x", "y", "z"], ["p", "q", "r"], "2"),
    ("trigram_prefix", ["a", "b", "c", "d"], ["a", "b", "c"], "3"),
    ("lcs_subsequence_gap", ["a", "x", "b", "y"], ["a", "b"], "L"),
    ("lcs_identical", ["p", "q", "r"], ["p", "q", "r"], "L"),
    ("lcs_disjoint", ["a", "b"], ["c", "d"], "L"),
    ("lcs_reversed", ["a", "b", "c"], ["c", "b", "a"], "L"),
    ("lcs_interleave", ["a", "b", "c", "d", "e"], ["a", "c", "e"], "L"),
    ("lcs_repeat", ["a", "a", "b"], ["a", "b", "a"], "L"),
    ("lcs_empty_candidate", [], ["a"], "L"),
    ("lcs_prefix", ["the", "quick", "fox"], ["the", "quick", "brown", "fox"], "L"),
    ("lcs_single_common", ["x", "a", "y"], ["p", "a", "q"], "L"),
]


def build_rouge_cases() -> dict:
    cases = []
    for name, cand, ref, kind in ROUGE_CASES:
        if kind == "L":
            scores = rouge_l_scores(cand, ref)
            scores["lcs"] = recursive_lcs(cand, ref)
        else:
            scores = greedy_rouge_n(cand, ref, int(kind))
        cases.append(
            {"name": name, "candidate": cand, "reference": ref, "kind": kind, **scores}
        )
    assert len(cases) >= 25
    by_name = {c["name"]: c for c in cases}
    assert abs(by_name["unigram_partial"]["f1"] - 2.0 / 3.0) < 1e-12
    assert by_name["lcs_subsequence_gap"]["lcs"] == 2
    assert by_name["lcs_subsequence_gap"]["recall"] == 1.0
    assert by_name["lcs_subsequence_gap"]["precision"] == 0.5
    return {"cases": cases}


# ---------------------------------------------------------------------------
# paragraph merging

MERGE_INPUTS: list[list[int]] = [
    [30, 50],
    [33, 50],
    [10, 10, 50],
    [32, 1],
    [5],
    [40, 5],
    [5, 40, 5],
    [1, 1, 1],
    [32, 32, 32],
    [100, 2, 100],
    [16, 16, 16, 16],
    [33, 32, 50],
]


def build_merge_cases() -> dict:
    cases = []
    for counts in MERGE_INPUTS:
        cases.append({"word_counts": counts, "units": greedy_merge(counts)})
    by_key = {tuple(c["word_counts"]): c["units"] for c in cases}
    assert by_key[(30, 50)] == [[0, 1]]
    assert by_key[(33, 50)] == [[0], [1]]
    assert by_key[(10, 10, 50)] == [[0, 1, 2]]
    return {"threshold": 32, "cases": cases}


# ---------------------------------------------------------------------------
# dwell weight formula


def build_weight_formula() -> dict:
    entries = []
    for alpha in (1.0, 2.0, 4.0):
        for u in (0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0):
            entries.append({"u": u, "alpha": alpha, "weight": weight_formula(u, alpha)})
    for e in entries:
        if e["u"] == 0.0:
            assert e["weight"] == 0.6
        if e["u"] == 1.0:
            assert e["weight"] == 1.4
        if e["u"] == 0.5:
            assert e["weight"] < 1.0  # exponential emphasis: below the midpoint
    tpw = [0.2, 0.5, 0.8]
    lo, hi = min(tpw), max(tpw)
    dwell_weights = [weight_formula((v - lo) / (hi - lo), 2.0) for v in tpw]
    assert dwell_weights[0] == 0.6 and dwell_weights[2] == 1.4
    return {
        "entries": entries,
        "dwell_example": {"time_per_word": tpw, "alpha": 2.0, "weights": dwell_weights},
    }


# ---------------------------------------------------------------------------
# exhaustive clustering fixture

KMEANS_SENTENCES = [
    "Glaciers carve valleys.",
    "Glaciers carve moraines.",
    "Glaciers deposit moraines.",
    "Bakers knead dough.",
    "Bakers knead loaves.",
    "Bakers proof loaves.",
]


def build_kmeans_fixture() -> dict:
    vectors = exact_tfidf([simple_tokens(s) for s in KMEANS_SENTENCES])
    result = best_partition(vectors, 2)
    assert result["assignment"] == [0, 0, 0, 1, 1, 1], result["assignment"]
    assert result["objective"] - result["runner_up_objective"] > 1e-6
    selected = []
    for rep in result["representatives"]:
        cluster = rep["cluster"]
        members = [i for i in range(6) if result["assignment"][i] == cluster]
        centroid = mean_vector([vectors[i] for i in members])
        sims = sorted((cosine(vectors[i], centroid) for i in members), reverse=True)
        assert sims[0] - sims[1] > 1e-9  # unique representative
        selected.append(rep["sentence"])
    selected.sort()
    word_counts = [len(simple_tokens(s)) for s in KMEANS_SENTENCES]
    return {
        "sentences": KMEANS_SENTENCES,
        "rate": 1.0 / 3.0,
        "k": 2,
        "assignment": result["assignment"],
        "objective": result["objective"],
        "expected_selected": selected,
        "word_counts": word_counts,
    }


KEY_SENTENCES = [
    "The committee approved the budget.",
    "The committee approved the annual budget.",
    "The committee approved the budget quickly.",
    "Migrating geese crossed northern skies.",
]


def build_key_sentence_fixture() -> dict:
    vectors = exact_tfidf([simple_tokens(s) for s in KEY_SENTENCES])
    centroid = mean_vector(vectors)
    sims = [cosine(v, centroid) for v in vectors]
    best = max(sims)
    rep = min(i for i, s in enumerate(sims) if s == best)
    assert rep in (0, 1, 2)  # outlier must not win
    others = [s for i, s in enumerate(sims) if i != rep]
    assert best - max(others) > 1e-6
    return {"sentences": KEY_SENTENCES, "expected_key": rep, "cosines": sims}


# ---------------------------------------------------------------------------
# question template term selection


def _top_term(tokens: list[str], vector: dict[str, float]) -> str:
    best_weight = max(vector[t] for t in tokens)
    for t in tokens:  # earliest position wins ties
        if abs(vector[t] - best_weight) < 1e-12:
            return t
    raise AssertionError("unreachable")


def build_question_term_fixture() -> dict:
    cases = []
    # note: for a 2-sentence batch both cosines to the mean are provably
    # equal, so the distinct-key case needs at least 3 sentences
    specs = [
        ("repeated_term", ["Officials tracked omicron because omicron spreads faster."]),
        ("all_tied", ["Costs rose."]),
        ("idf_distinct", ["Reactors generate carbon free power quietly.",
                          "Solar farms generate clean power cheaply.",
                          "Solar reactors generate electricity cheaply."]),
    ]
    for name, sentences in specs:
        token_lists = [simple_tokens(s) for s in sentences]
        vectors = exact_tfidf(token_lists)
        centroid = mean_vector(vectors)
        sims = [cosine(v, centroid) for v in vectors]
        best = max(sims)
        key = min(i for i, s in enumerate(sims) if s == best)
        if len(sentences) > 1:
            others = [s for i, s in enumerate(sims) if i != key]
            assert best - max(others) > 1e-6
        term = _top_term(token_lists[key], vectors[key])
        cases.append(
            {
                "name": name,
                "sentences": sentences,
                "expected_key": key,
                "expected_term": term,
                "expected_question": f"What does the article say about {term}?",
            }
        )
    by_name = {c["name"]: c for c in cases}
    assert by_name["repeated_term"]["expected_term"] == "omicron"
    assert by_name["all_tied"]["expected_term"] == "costs"
    return {"cases": cases}


# ---------------------------------------------------------------------------
# weighted-extractive fallback fixture

FALLBACK_SEGMENTS = [
    ["Astronomers measured quasar light every night.",
     "Astronomers measured quasar spectra every winter."],
    ["Divers photographed coral reefs atolls.",
     "Divers catalogued coral polyps under pale moonlight."],
    ["Farmers rotated ripe barley before harvest.",
     "Farmers rotated golden barley during drought."],
]


def _flatten_segments(segments: list[list[str]]):
    texts, seg_of = [], []
    for seg_index, seg in enumerate(segments):
        for sentence in seg:
            texts.append(sentence)
            seg_of.append(seg_index)
    token_lists = [simple_tokens(t) for t in texts]
    word_counts = [len(toks) for toks in token_lists]
    return texts, seg_of, token_lists, word_counts


def build_fallback_fixture() -> dict:
    texts, seg_of, token_lists, word_counts = _flatten_segments(FALLBACK_SEGMENTS)
    vocab_per_segment = [
        set(t for s in seg for t in simple_tokens(s)) for seg in FALLBACK_SEGMENTS
    ]
    for a in range(len(vocab_per_segment)):
        for b in range(a + 1, len(vocab_per_segment)):
            assert not (vocab_per_segment[a] & vocab_per_segment[b])
    budget = 13
    weighted = fallback_select(token_lists, seg_of, [0.6, 1.4, 0.6], word_counts, budget)
    assert weighted["selected"] == [2, 3], weighted
    uniform = fallback_select(token_lists, seg_of, [1.0, 1.0, 1.0], word_counts, budget)
    assert uniform["selected"] == [0, 1], uniform
    sel_scores = [weighted["scores"][i] for i in weighted["selected"]]
    rest = [s for i, s in enumerate(weighted["scores"]) if i not in weighted["selected"]]
    assert min(sel_scores) - max(rest) > 1e-6
    return {
        "segments": FALLBACK_SEGMENTS,
        "budget_words": budget,
        "weighted": {"weights": [0.6, 1.4, 0.6], **weighted},
        "uniform": {"weights": [1.0, 1.0, 1.0], **uniform},
    }


# ---------------------------------------------------------------------------
# weight sweep fixture

# The target paragraph has three sentences with *different* mutual overlap
# so their centroid cosines differ and the curve shows two interior jumps;
# two-sentence paragraphs always produce tied pairs (symmetric dot with the
# global mean), which would collapse the sweep to a single step.
SWEEP_PARAGRAPH_SENTENCES = [
    ["Astronomers measured quasar light every night.",
     "Astronomers measured quasar spectra every winter."],
    ["Farmers rotated ripe barley before harvest.",
     "Farmers rotated golden barley during drought."],
    ["Divers photographed coral reefs near atolls.",
     "Divers catalogued coral polyps with care.",
     "Divers catalogued eager polyps under moonlight."],
    ["Pianists rehearsed difficult sonata passages tonight.",
     "Judges admired spirited recital encores yesterday."],
]
SWEEP_TARGET = 2
SWEEP_BUDGET_WORDS = 13


def build_sweep_fixture() -> dict:
    texts, seg_of, token_lists, word_counts = _flatten_segments(SWEEP_PARAGRAPH_SENTENCES)
    target_tokens = [
        t for s in SWEEP_PARAGRAPH_SENTENCES[SWEEP_TARGET] for t in simple_tokens(s)
    ]
    points = []
    selections = []
    for step in range(21):
        w = step / 10.0
        weights = [1.0, 1.0, 1.0, 1.0]
        weights[SWEEP_TARGET] = w
        result = fallback_select(token_lists, seg_of, weights, word_counts, SWEEP_BUDGET_WORDS)
        summary_tokens = [t for i in result["selected"] for t in token_lists[i]]
        f1 = rouge_l_scores(summary_tokens, target_tokens)["f1"]
        points.append({"weight": w, "rouge_f1": f1})
        selections.append(result["selected"])
        # scores must be either exact ties (symmetric twins) or well separated,
        # so a reimplementation with different float ordering picks the same set
        scores = sorted(result["scores"])
        for a in range(len(scores)):
            for b in range(a + 1, len(scores)):
                gap = scores[b] - scores[a]
                assert gap < 1e-12 or gap > 1e-6, (w, gap)
    f1s = [p["rouge_f1"] for p in points]
    assert f1s[0] == 0.0
    assert all(f1s[i + 1] >= f1s[i] - 1e-12 for i in range(20))
    assert f1s[0] == f1s[1] == f1s[2]  # flat saturation at the low end
    assert f1s[-1] == f1s[-2] == f1s[-3] > 0.0  # flat saturation at the high end
    assert len(set(round(v, 9) for v in f1s)) >= 3  # two visible interior jumps
    return {
        "paragraph_sentences": SWEEP_PARAGRAPH_SENTENCES,
        "target_paragraph": SWEEP_TARGET,
        "budget_words": SWEEP_BUDGET_WORDS,
        "points": points,
        "selections": selections,
    }


# ---------------------------------------------------------------------------
# dwell percentile hand labels


def build_explanation_cases() -> dict:
    hand_cases = [
        ({"0": 0.1, "1": 0.2, "2": 0.3, "3": 0.9}, 3, True, 100),
        ({"0": 10.0, "1": 9.0, "2": 8.0, "3": 0.1}, 2, True, 33),
        ({"0": 1.0, "1": 1.0, "2": 0.1}, 0, True, 50),
        ({"0": 1.0, "1": 1.0}, 0, False, None),
        ({"0": 0.5, "1": 0.2, "2": 0.2, "3": 0.2, "4": 0.2}, 0, True, 100),
        ({"0": 0.3, "1": 0.6, "2": 0.9}, 1, False, None),
        ({"0": 0.4}, 0, False, None),
    ]
    cases = []
    for tpw_raw, attributed, fired, percent in hand_cases:
        tpw = {int(k): v for k, v in tpw_raw.items()}
        computed = dwell_percentile(tpw, attributed)
        assert computed["fired"] == fired, (tpw_raw, computed)
        assert computed["percent"] == percent, (tpw_raw, computed)
        cases.append(
            {
                "time_per_word": tpw_raw,
                "attributed": attributed,
                "fired": fired,
                "percent": percent,
            }
        )
    return {"cases": cases}


BUILDERS = {
    "rouge_cases.json": build_rouge_cases,
    "merge_cases.json": build_merge_cases,
    "weight_formula.json": build_weight_formula,
    "kmeans_fixture.json": build_kmeans_fixture,
    "key_sentence_fixture.json": build_key_sentence_fixture,
    "question_term_fixture.json": build_question_term_fixture,
    "fallback_fixture.json": build_fallback_fixture,
    "sweep_fixture.json": build_sweep_fixture,
    "explanation_cases.json": build_explanation_cases,
}
