"""Turns raw web pages or plain text into an Article, and merges short
paragraphs into the units that anchor generated questions.

Extraction rules live in a tab-separated file, one per line:

    site_pattern<TAB>paragraph_selector[<TAB>title_selector]

`site_pattern` is an fnmatch glob tested against the URL host ("*"
matches everything); selectors use the subset documented in htmldoc.
Lines starting with "#" are comments. When no rule matches an HTML
document, a density heuristic picks the block holding the most <p> text,
unless the caller disabled the fallback.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fnmatch import fnmatch
from pathlib import Path
from urllib.parse import urlparse

from .article import Article, MergedUnit, build_article
from .errors import EmptyArticleError, NoRuleMatchedError
from .htmldoc import densest_paragraph_block, parse_html, select

MERGE_THRESHOLD_WORDS = 32
CONTENT_KINDS = ("plain", "html")

_BLANK_LINE_RE = re.compile(r"\n\s*\n")
_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class RawDocument:
    body: str
    content_kind: str = "plain"
    source_url: str = ""

    def __post_init__(self) -> None:
        if self.content_kind not in CONTENT_KINDS:
            raise ValueError(f"unknown content kind {self.content_kind!r}")


@dataclass(frozen=True)
class ExtractionRule:
    site_pattern: str
    paragraph_selector: str
    title_selector: str = ""


def load_rules(path: str | Path) -> list[ExtractionRule]:
    rules = []
    for number, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (2, 3):
            raise ValueError(f"rules file line {number}: expected 2 or 3 tab-separated fields")
        rules.append(ExtractionRule(*fields))
    return rules


def _normalize_block(block: str) -> str:
    return _WS_RE.sub(" ", block).strip()


def split_plain_paragraphs(body: str) -> list[str]:
    """Blank-line-separated blocks; single newlines are soft wraps."""
    blocks = [_normalize_block(b) for b in _BLANK_LINE_RE.split(body)]
    return [b for b in blocks if b]


def _match_rule(rules: list[ExtractionRule], source_url: str) -> ExtractionRule | None:
    host = urlparse(source_url).hostname or ""
    for rule in rules:
        if rule.site_pattern == "*" or fnmatch(host, rule.site_pattern):
            return rule
    return None


def extract_article(
    raw: RawDocument,
    rules: list[ExtractionRule] | None = None,
    allow_generic_fallback: bool = True,
) -> Article:
    if not raw.body.strip():
        raise EmptyArticleError("document body is empty")

    if raw.content_kind == "plain":
        return build_article("", split_plain_paragraphs(raw.body), raw.source_url)

    root = parse_html(raw.body)
    rule = _match_rule(rules or [], raw.source_url)
    title = ""
    if rule is not None:
        elements = select(root, rule.paragraph_selector)
        if rule.title_selector:
            titles = select(root, rule.title_selector)
            if titles:
                title = titles[0].text()
    elif allow_generic_fallback:
        elements = densest_paragraph_block(root)
    else:
        raise NoRuleMatchedError(f"no extraction rule matches {raw.source_url!r}")

    if not title:
        titles = select(root, "title") or select(root, "h1")
        if titles:
            title = titles[0].text()

    paragraphs = [text for e in elements if (text := e.text())]
    if not paragraphs:
        raise EmptyArticleError("no paragraphs extracted")
    return build_article(title, paragraphs, raw.source_url)


def merge_short_paragraphs(
    article: Article, threshold: int = MERGE_THRESHOLD_WORDS
) -> list[MergedUnit]:
    """Greedy forward pass: a unit keeps absorbing its successor while it
    is at or below the threshold; the trailing unit may stay short."""
    units: list[MergedUnit] = []
    paragraphs = article.paragraphs
    i = 0
    while i < len(paragraphs):
        j = i
        total = paragraphs[i].word_count
        while total <= threshold and j + 1 < len(paragraphs):
            j += 1
            total += paragraphs[j].word_count
        members = tuple(range(i, j + 1))
        units.append(
            MergedUnit(
                unit_id=len(units),
                paragraph_indices=members,
                text=" ".join(t for t in (paragraphs[p].text for p in members) if t),
                word_count=total,
                sentence_indices=tuple(
                    s.index for p in members for s in paragraphs[p].sentences
                ),
            )
        )
        i = j + 1
    return units
