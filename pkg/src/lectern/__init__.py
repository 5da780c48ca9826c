"""Reading assistance for long articles.

Before reading: a time-budget filter that keeps the most representative
sentences, and generated questions whose answers light up in the text.
During reading: a focus mode that tracks per-paragraph dwell time,
highlights, notes, and reflection prompts. After reading: a summary
weighted by what the reader did, with each sentence attributable to the
paragraph, note, or highlight it came from.

The library is import-light: pull modules directly (``lectern.ingest``,
``lectern.extractive``, ...) or use the names re-exported here.
"""

from .article import Article, Paragraph, Sentence, build_article
from .errors import LecternError

__version__ = "0.1.0"

__all__ = [
    "Article",
    "Paragraph",
    "Sentence",
    "build_article",
    "LecternError",
    "__version__",
]
