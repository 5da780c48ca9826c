"""Reading-session state: dwell accumulation, annotations, persistence.

Dwell time accrues per paragraph from focus intervals and deliberately
includes time spent using the annotation tools while focused; no attempt
is made to subtract it. One record is stored per article, latest wins,
and the file schema is versioned so the CLI and UI can both read it.
"""

from __future__ import annotations

import hashlib
import json
import re
import time
from dataclasses import dataclass, field
from pathlib import Path

from .article import Article
from .errors import (
    InvalidIntervalError,
    NotFoundError,
    SessionFinishedError,
    SpanOutOfBoundsError,
    StorageUnavailableError,
    UnknownParagraphError,
)

SCHEMA_VERSION = 1
ANNOTATION_KINDS = ("highlight", "note", "reflection_answer")


@dataclass(frozen=True)
class Annotation:
    annotation_id: str
    kind: str
    anchor_paragraph: int
    payload: str = ""
    span: tuple[int, int] | None = None
    created_at: float = 0.0


@dataclass(frozen=True)
class DwellProfile:
    time_per_word: dict[int, float]
    read_set: frozenset[int]

    @property
    def empty(self) -> bool:
        return not self.time_per_word


@dataclass
class ReadingSession:
    session_id: str
    article_id: str
    paragraph_count: int
    paragraph_text_lengths: tuple[int, ...]
    started_at: float = field(default_factory=time.time)
    dwell: dict[int, float] = field(default_factory=dict)
    annotations: list[Annotation] = field(default_factory=list)
    focus_mode_used: bool = False
    finished: bool = False

    @classmethod
    def start(cls, session_id: str, article: Article, started_at: float | None = None):
        return cls(
            session_id=session_id,
            article_id=article.article_id,
            paragraph_count=len(article.paragraphs),
            paragraph_text_lengths=tuple(len(p.text) for p in article.paragraphs),
            started_at=time.time() if started_at is None else started_at,
        )

    def _check_open(self) -> None:
        if self.finished:
            raise SessionFinishedError(f"session {self.session_id} is finished")

    def _check_paragraph(self, index: int) -> None:
        if not 0 <= index < self.paragraph_count:
            raise UnknownParagraphError(f"paragraph {index} not in article")

    def record_focus_interval(self, paragraph_index: int, enter_ts: float, leave_ts: float) -> float:
        """Accumulates leave-enter onto the paragraph; returns its total."""
        self._check_open()
        self._check_paragraph(paragraph_index)
        if leave_ts < enter_ts:
            raise InvalidIntervalError(f"leave {leave_ts} before enter {enter_ts}")
        self.focus_mode_used = True
        self.dwell[paragraph_index] = self.dwell.get(paragraph_index, 0.0) + (leave_ts - enter_ts)
        return self.dwell[paragraph_index]

    def add_annotation(
        self,
        kind: str,
        anchor_paragraph: int,
        payload: str = "",
        span: tuple[int, int] | None = None,
        created_at: float | None = None,
    ) -> Annotation:
        self._check_open()
        self._check_paragraph(anchor_paragraph)
        if kind not in ANNOTATION_KINDS:
            raise ValueError(f"unknown annotation kind {kind!r}")
        if kind == "highlight":
            if span is None:
                raise ValueError("highlight requires a span")
            start, end = span
            if not (0 <= start < end <= self.paragraph_text_lengths[anchor_paragraph]):
                raise SpanOutOfBoundsError(
                    f"span {span} outside paragraph {anchor_paragraph}"
                )
        annotation = Annotation(
            annotation_id=f"a{len(self.annotations)}",
            kind=kind,
            anchor_paragraph=anchor_paragraph,
            payload=payload,
            span=span,
            created_at=time.time() if created_at is None else created_at,
        )
        self.annotations.append(annotation)
        return annotation

    def finish(self) -> None:
        self._check_open()
        self.finished = True

    # -- serialization ------------------------------------------------

    def to_record(self) -> dict:
        return {
            "session_id": self.session_id,
            "article_id": self.article_id,
            "paragraph_count": self.paragraph_count,
            "paragraph_text_lengths": list(self.paragraph_text_lengths),
            "started_at": self.started_at,
            "dwell": {str(k): v for k, v in self.dwell.items()},
            "annotations": [
                {
                    "annotation_id": a.annotation_id,
                    "kind": a.kind,
                    "anchor_paragraph": a.anchor_paragraph,
                    "payload": a.payload,
                    "span": list(a.span) if a.span else None,
                    "created_at": a.created_at,
                }
                for a in self.annotations
            ],
            "focus_mode_used": self.focus_mode_used,
            "finished": self.finished,
        }

    @classmethod
    def from_record(cls, record: dict) -> ReadingSession:
        session = cls(
            session_id=record["session_id"],
            article_id=record["article_id"],
            paragraph_count=record["paragraph_count"],
            paragraph_text_lengths=tuple(record["paragraph_text_lengths"]),
            started_at=record["started_at"],
            dwell={int(k): float(v) for k, v in record["dwell"].items()},
            annotations=[
                Annotation(
                    annotation_id=a["annotation_id"],
                    kind=a["kind"],
                    anchor_paragraph=a["anchor_paragraph"],
                    payload=a["payload"],
                    span=tuple(a["span"]) if a["span"] else None,
                    created_at=a["created_at"],
                )
                for a in record["annotations"]
            ],
            focus_mode_used=record["focus_mode_used"],
            finished=record["finished"],
        )
        return session


def dwell_profile(session: ReadingSession, article: Article) -> DwellProfile:
    """Seconds-per-word for every read paragraph; empty when focus mode
    never ran (downstream dwell weighting is then disabled)."""
    tpw: dict[int, float] = {}
    for index, seconds in session.dwell.items():
        if seconds <= 0 or index >= len(article.paragraphs):
            continue
        words = article.paragraphs[index].word_count
        if words > 0:
            tpw[index] = seconds / words
    return DwellProfile(time_per_word=tpw, read_set=frozenset(tpw))


_SAFE_RE = re.compile(r"[^A-Za-z0-9._-]+")


class SessionStore:
    """One JSON record per article under a directory; latest write wins."""

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def _path(self, article_id: str) -> Path:
        safe = _SAFE_RE.sub("-", article_id)[:40] or "article"
        suffix = hashlib.sha1(article_id.encode("utf-8")).hexdigest()[:8]
        return self.root / f"{safe}-{suffix}.json"

    def persist(self, session: ReadingSession, summary: dict | None = None) -> Path:
        record = {
            "schema_version": SCHEMA_VERSION,
            "article_id": session.article_id,
            "session": session.to_record(),
            "summary": summary,
        }
        path = self._path(session.article_id)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(record, ensure_ascii=False, indent=1), encoding="utf-8")
            tmp.replace(path)
        except OSError as exc:
            raise StorageUnavailableError(f"cannot write session store: {exc}") from exc
        return path

    def load_latest(self, article_id: str) -> dict:
        path = self._path(article_id)
        if not path.exists():
            raise NotFoundError(f"no stored session for article {article_id}")
        try:
            record = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise StorageUnavailableError(f"cannot read session store: {exc}") from exc
        if record.get("schema_version") != SCHEMA_VERSION:
            raise StorageUnavailableError(
                f"unsupported session schema {record.get('schema_version')!r}"
            )
        return record
