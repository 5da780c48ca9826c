"""Rule-based sentence segmentation with an abbreviation list.

Splits on terminal punctuation runs ([.!?]+ plus trailing closing quotes
or brackets) followed by whitespace. A split is suppressed when:

* the period directly follows a known abbreviation ("Dr.", "e.g.", "U.S.")
  or a single-letter initial ("J. Smith"), or
* the next alphabetic character is lowercase, which reads as a
  mid-sentence continuation regardless of the punctuation mark.

Decimal numbers never split because the period is not followed by
whitespace. Text without terminal punctuation is one sentence.
"""

from __future__ import annotations

import re
from pathlib import Path

DEFAULT_ABBREVIATIONS = frozenset(
    {
        "mr", "mrs", "ms", "dr", "prof", "rev", "gen", "sen", "rep", "gov",
        "st", "jr", "sr", "vs", "etc", "e.g", "i.e", "cf", "al", "inc",
        "ltd", "co", "corp", "dept", "est", "fig", "no", "vol", "approx",
        "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
        "oct", "nov", "dec", "mon", "tue", "wed", "thu", "fri", "sat", "sun",
        "u.s", "u.k", "u.n", "a.m", "p.m", "ph.d", "b.a", "m.a", "d.c",
    }
)

# Terminal run: one or more . ! ? then optional closing quotes/brackets.
_BREAK_RE = re.compile(r"[.!?]+[\"'”’)\]]*")


def load_abbreviations(path: str | Path) -> frozenset[str]:
    """One abbreviation per line, '#' comments allowed, periods optional."""
    entries = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip().lower().rstrip(".")
        if line and not line.startswith("#"):
            entries.add(line)
    return frozenset(entries)


def _token_before(text: str, index: int) -> str:
    """Word immediately left of text[index], lowercased, without the final period."""
    start = index
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start:index].lstrip("\"'“‘([").lower()


def _next_alpha(text: str, index: int) -> str:
    for ch in text[index:]:
        if ch.isalpha():
            return ch
        if ch.isdigit():
            return ch
    return ""


def segment_sentences(
    text: str, abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS
) -> list[tuple[int, int]]:
    """Character spans [start, end) of the sentences in ``text``.

    Spans are ordered, disjoint, and trimmed of surrounding whitespace.
    Empty or all-whitespace text yields an empty list.
    """
    spans: list[tuple[int, int]] = []
    cursor = 0

    def emit(start: int, end: int) -> None:
        while start < end and text[start].isspace():
            start += 1
        while end > start and text[end - 1].isspace():
            end -= 1
        if start < end:
            spans.append((start, end))

    for match in _BREAK_RE.finditer(text):
        end = match.end()
        if end < len(text) and not text[end].isspace():
            continue  # mid-token punctuation, e.g. "3.5" or "v1.2-beta"
        nxt = _next_alpha(text, end)
        if nxt and nxt.islower():
            continue  # lowercase continuation
        if match.group(0).startswith("."):
            before = _token_before(text, match.start())
            if before in abbreviations or (len(before) == 1 and before.isalpha()):
                continue
        emit(cursor, end)
        cursor = end

    emit(cursor, len(text))
    return spans
