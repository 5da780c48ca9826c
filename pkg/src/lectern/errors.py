"""Exception hierarchy shared by every lectern module.

Each error carries a stable ``code`` string that the HTTP gateway and the
CLI map one-to-one onto their error payloads / exit diagnostics.
"""

from __future__ import annotations


class LecternError(Exception):
    """Base class for all engine errors."""

    code = "internal"

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}


class NoRuleMatchedError(LecternError):
    """HTML ingestion found no extraction rule for the source host."""

    code = "no_rule_matched"


class EmptyArticleError(LecternError):
    """Ingestion or filtering was asked to operate on zero paragraphs."""

    code = "empty_article"


class EmptyDocumentError(LecternError):
    """Summarization input contained no usable text."""

    code = "empty_document"


class SessionFinishedError(LecternError):
    """A finished reading session rejected a new event."""

    code = "session_finished"


class InvalidIntervalError(LecternError):
    """Focus interval with leave timestamp before enter timestamp."""

    code = "invalid_interval"


class UnknownParagraphError(LecternError):
    """Paragraph index outside the session's article."""

    code = "unknown_paragraph"


class SpanOutOfBoundsError(LecternError):
    """Highlight span does not fit inside its anchor paragraph."""

    code = "span_out_of_bounds"


class UnknownQuestionIdError(LecternError):
    """Question id not present in the generated question list."""

    code = "unknown_question_id"


class RemoteUnavailableError(LecternError):
    """Remote embedding backend unreachable or returned garbage."""

    code = "remote_unavailable"


class ProviderUnavailableError(LecternError):
    """Remote question-generation or summarization provider failed."""

    code = "provider_unavailable"


class StorageUnavailableError(LecternError):
    """Session store could not be read or written."""

    code = "storage_unavailable"


class NotFoundError(LecternError):
    """Requested article, session, or stored record does not exist."""

    code = "not_found"


class SelectorSyntaxError(LecternError):
    """Extraction rule selector does not parse under the selector grammar."""

    code = "selector_syntax"
