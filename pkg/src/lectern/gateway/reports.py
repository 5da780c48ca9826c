"""Figure and table rendering for the CLI report paths.

Each report writes a CSV and a PNG side by side so the numbers stay
greppable while the figure gives the shape at a glance.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from ..article import Article
from ..summarize import SweepCurve


def paragraph_report(
    article: Article,
    out_dir: str | Path,
    selected_sentence_ids: tuple[int, ...] = (),
) -> tuple[Path, Path]:
    """Words per paragraph, with the words a time filter kept overlaid
    when a selection is given. Returns (csv_path, png_path)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    selected = set(selected_sentence_ids)
    rows = []
    for paragraph in article.paragraphs:
        kept = sum(s.word_count for s in paragraph.sentences if s.index in selected)
        rows.append((paragraph.index, paragraph.word_count, kept))

    csv_path = out / "paragraphs.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["paragraph", "words", "selected_words"])
        writer.writerows(rows)

    indices = [r[0] for r in rows]
    totals = [r[1] for r in rows]
    kept = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(indices, totals, color="#c8d6e5", label="words")
    if selected:
        ax.bar(indices, kept, color="#2e86de", label="selected")
    ax.set_xlabel("paragraph")
    ax.set_ylabel("words")
    ax.set_title(article.title or article.article_id)
    ax.legend()
    fig.tight_layout()
    png_path = out / "paragraphs.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path


def sweep_report(curve: SweepCurve, out_dir: str | Path) -> tuple[Path, Path]:
    """The calibration curve: ROUGE F1 against the target paragraph as a
    function of its weight. Returns (csv_path, png_path)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    csv_path = out / "sweep.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["weight", "rouge_f1"])
        for point in curve.points:
            writer.writerow([f"{point.weight:.1f}", repr(point.rouge_f1)])

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(
        [p.weight for p in curve.points],
        [p.rouge_f1 for p in curve.points],
        marker="o",
        color="#2e86de",
    )
    ax.set_xlabel("paragraph weight")
    ax.set_ylabel(f"{curve.variant} f1 vs paragraph {curve.target_paragraph}")
    ax.set_title("summary pull toward one paragraph")
    ax.set_xlim(-0.05, 2.05)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    png_path = out / "sweep.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path
