"""Session data to per-segment weights and an annotation-augmented
document for weighted summarization.

The dwell mapping is exponential in normalized time-per-word:

    w(u) = 0.6 + 0.8 * (e^(alpha*u) - 1) / (e^alpha - 1)

so an unread paragraph sits at exactly 0.6 and the highest-dwell
paragraph at exactly 1.4, with slow growth at the low end (paragraphs a
reader lingered on stand out more). Note and highlight impact levels map
to fixed weights: none 0.6, low 1.0, high 1.4. The dwell impact level
instead shapes the exponent: none disables the factor entirely (neutral
1.0 paragraphs), low uses alpha, high uses 2*alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .article import Article
from .session import Annotation, DwellProfile

IMPACT_LEVELS = ("none", "low", "high")
IMPACT_WEIGHTS = {"none": 0.6, "low": 1.0, "high": 1.4}

WEIGHT_FLOOR = 0.6
WEIGHT_CEIL = 1.4
_SPAN = WEIGHT_CEIL - WEIGHT_FLOOR  # 0.8


def impact_weight(level: str) -> float:
    if level not in IMPACT_WEIGHTS:
        raise ValueError(f"unknown impact level {level!r}")
    return IMPACT_WEIGHTS[level]


@dataclass(frozen=True)
class SummaryControls:
    dwell_impact: str = "low"
    highlight_impact: str = "low"
    note_impact: str = "low"
    alpha: float = 2.0

    def __post_init__(self) -> None:
        for level in (self.dwell_impact, self.highlight_impact, self.note_impact):
            if level not in IMPACT_LEVELS:
                raise ValueError(f"unknown impact level {level!r}")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")

    @property
    def effective_alpha(self) -> float | None:
        """Exponent for the dwell mapping; None when dwell is disabled."""
        if self.dwell_impact == "none":
            return None
        return self.alpha if self.dwell_impact == "low" else 2.0 * self.alpha


@dataclass(frozen=True)
class ParagraphWeight:
    segment_id: int | str
    weight: float
    origin: str  # dwell | note | highlight | neutral


@dataclass(frozen=True)
class Segment:
    text: str
    weight: float
    kind: str  # paragraph | note | highlight
    provenance: int | str  # paragraph index or annotation id
    anchor_paragraph: int


@dataclass(frozen=True)
class AugmentedDocument:
    segments: tuple[Segment, ...]


def dwell_weight(u: float, alpha: float) -> float:
    """Exponential map of normalized time-per-word to [0.6, 1.4]; the
    endpoints are clamped so they come out exact in floats."""
    if u <= 0.0:
        return WEIGHT_FLOOR
    if u >= 1.0:
        return WEIGHT_CEIL
    return WEIGHT_FLOOR + _SPAN * math.expm1(alpha * u) / math.expm1(alpha)


def compute_dwell_weights(
    profile: DwellProfile, article: Article, alpha: float = 2.0
) -> list[ParagraphWeight]:
    """A weight per paragraph: unread 0.6; read paragraphs mapped by
    normalized time-per-word; a contrast-free profile (all equal, e.g. a
    single read paragraph) gets neutral 1.0 because "highest" means
    nothing without comparison."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    weights: list[ParagraphWeight] = []
    if profile.time_per_word:
        low = min(profile.time_per_word.values())
        high = max(profile.time_per_word.values())
    else:
        low = high = 0.0
    for paragraph in article.paragraphs:
        tpw = profile.time_per_word.get(paragraph.index)
        if tpw is None:
            weights.append(ParagraphWeight(paragraph.index, WEIGHT_FLOOR, "dwell"))
        elif high == low:
            weights.append(ParagraphWeight(paragraph.index, 1.0, "dwell"))
        else:
            u = (tpw - low) / (high - low)
            weights.append(ParagraphWeight(paragraph.index, dwell_weight(u, alpha), "dwell"))
    return weights


def augment_with_annotations(
    article: Article,
    annotations: list[Annotation],
    controls: SummaryControls,
    profile: DwellProfile,
) -> AugmentedDocument:
    """Paragraph segments in article order, each followed by the note and
    highlight segments anchored to it in creation order. Reflection
    answers are session data, not summary input, and are skipped.
    Annotations with impact none still appear (at weight 0.6); exclusion
    is the explainer's job, not the summarizer's."""
    alpha = controls.effective_alpha
    if alpha is None or profile.empty:
        paragraph_weights = {p.index: 1.0 for p in article.paragraphs}
    else:
        paragraph_weights = {
            w.segment_id: w.weight
            for w in compute_dwell_weights(profile, article, alpha)
        }
    segments: list[Segment] = []
    for paragraph in article.paragraphs:
        segments.append(
            Segment(
                text=paragraph.text,
                weight=paragraph_weights[paragraph.index],
                kind="paragraph",
                provenance=paragraph.index,
                anchor_paragraph=paragraph.index,
            )
        )
        # The annotations list is already in creation order; filtering
        # keeps it that way.
        anchored = [a for a in annotations if a.anchor_paragraph == paragraph.index]
        for annotation in anchored:
            if annotation.kind == "note":
                segments.append(
                    Segment(
                        text=annotation.payload,
                        weight=impact_weight(controls.note_impact),
                        kind="note",
                        provenance=annotation.annotation_id,
                        anchor_paragraph=paragraph.index,
                    )
                )
            elif annotation.kind == "highlight" and annotation.span is not None:
                start, end = annotation.span
                segments.append(
                    Segment(
                        text=paragraph.text[start:end],
                        weight=impact_weight(controls.highlight_impact),
                        kind="highlight",
                        provenance=annotation.annotation_id,
                        anchor_paragraph=paragraph.index,
                    )
                )
    return AugmentedDocument(tuple(segments))
