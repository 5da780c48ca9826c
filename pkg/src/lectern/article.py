"""Document model: articles, paragraphs, sentences.

An :class:`Article` is an ordered list of paragraphs, each carrying its
sentence spans and word count. Sentence indices are global to the
document so downstream selection can refer to a sentence by one number.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from . import textmetrics
from .errors import EmptyArticleError
from .sentences import DEFAULT_ABBREVIATIONS, segment_sentences


@dataclass(frozen=True)
class Sentence:
    index: int  # document-global position
    paragraph_index: int
    start: int  # char offset within the paragraph text
    end: int
    text: str
    word_count: int


@dataclass(frozen=True)
class Paragraph:
    index: int
    text: str
    word_count: int
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class Article:
    article_id: str
    title: str
    paragraphs: tuple[Paragraph, ...]
    source_url: str = ""

    @property
    def total_words(self) -> int:
        return sum(p.word_count for p in self.paragraphs)

    @property
    def sentences(self) -> tuple[Sentence, ...]:
        return tuple(s for p in self.paragraphs for s in p.sentences)

    def sentence(self, index: int) -> Sentence:
        flat = self.sentences
        if not 0 <= index < len(flat):
            raise IndexError(f"sentence index {index} out of range")
        return flat[index]


@dataclass(frozen=True)
class MergedUnit:
    """A run of consecutive paragraphs treated as one block.

    ``paragraph_indices`` is always a contiguous ascending range.
    """

    unit_id: int
    paragraph_indices: tuple[int, ...]
    text: str
    word_count: int
    sentence_indices: tuple[int, ...] = field(default=())


def compute_article_id(title: str, paragraphs: tuple[str, ...] | list[str]) -> str:
    digest = hashlib.sha256()
    digest.update(title.encode("utf-8"))
    for text in paragraphs:
        digest.update(b"\x00")
        digest.update(text.encode("utf-8"))
    return digest.hexdigest()[:16]


def build_article(
    title: str,
    paragraph_texts: list[str] | tuple[str, ...],
    source_url: str = "",
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> Article:
    """Segment sentences, count words, and assign global indices.

    Raises :class:`EmptyArticleError` when the document holds no
    paragraph with at least one word.
    """
    paragraphs: list[Paragraph] = []
    sentence_counter = 0
    for p_index, text in enumerate(paragraph_texts):
        sentences = []
        for start, end in segment_sentences(text, abbreviations):
            piece = text[start:end]
            sentences.append(
                Sentence(
                    index=sentence_counter,
                    paragraph_index=p_index,
                    start=start,
                    end=end,
                    text=piece,
                    word_count=textmetrics.word_count(piece),
                )
            )
            sentence_counter += 1
        paragraphs.append(
            Paragraph(
                index=p_index,
                text=text,
                word_count=textmetrics.word_count(text),
                sentences=tuple(sentences),
            )
        )
    if not any(p.word_count for p in paragraphs):
        raise EmptyArticleError("article has no words")
    return Article(
        article_id=compute_article_id(title, tuple(paragraph_texts)),
        title=title,
        paragraphs=tuple(paragraphs),
        source_url=source_url,
    )
