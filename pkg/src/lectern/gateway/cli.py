"""Command-line front end.

Commands mirror the service surface: analyze (segmentation, reading
time, optional time filter), questions, summarize (plain or from a
stored session), sweep (the weight calibration table), serve. Output is
tab-delimited; report directories get a CSV plus a rendered figure.

Exit codes: 0 success, 1 user or engine error, 2 unexpected internal
error.
"""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path

import click

from ..errors import LecternError, NotFoundError
from ..personalize import SummaryControls, augment_with_annotations
from ..session import ReadingSession, SessionStore, dwell_profile
from ..summarize import article_document, explain_summary, summarize, weight_sweep
from ..textmetrics import ROUGE_VARIANTS
from . import AppConfig, load_config
from .service import ReadingService

_IMPACTS = click.Choice(["none", "low", "high"])


def _build_config(config_file: str | None, **overrides) -> AppConfig:
    base = load_config(config_file)
    values = {k: v for k, v in overrides.items() if v is not None}
    return dataclasses.replace(base, **values) if values else base


def _read_input(input_path: str) -> tuple[str, str]:
    path = Path(input_path)
    if not path.exists():
        raise NotFoundError(f"input file {input_path} not found")
    body = path.read_text(encoding="utf-8")
    kind = "html" if path.suffix.lower() in (".html", ".htm") else "plain"
    return body, kind


def _ingest(config: AppConfig, input_path: str):
    body, kind = _read_input(input_path)
    service = ReadingService(config)
    return service, service.ingest(body, kind, source_url=f"file://{input_path}")


@click.group()
def cli() -> None:
    """Reading assistance: filters, session summaries, calibration."""


@cli.command()
@click.argument("input_path")
@click.option("--budget-seconds", type=float, default=None, help="Run the time filter with this reading budget.")
@click.option("--wpm", "words_per_minute", type=float, default=None, help="Reading speed for time estimates.")
@click.option("--seed", type=int, default=None)
@click.option("--backend", type=click.Choice(["tfidf_local", "remote"]), default=None, help="Embedding backend.")
@click.option("--provider-endpoint", default=None, help="Remote embedding endpoint URL.")
@click.option("--rules-file", default=None, help="TSV of site extraction rules for HTML input.")
@click.option("--out-dir", type=click.Path(), default=None, help="Write paragraphs.csv and paragraphs.png here.")
@click.option("--config", "config_file", type=click.Path(), default=None, help="JSON config file.")
def analyze(
    input_path: str,
    budget_seconds: float | None,
    words_per_minute: float | None,
    seed: int | None,
    backend: str | None,
    provider_endpoint: str | None,
    rules_file: str | None,
    out_dir: str | None,
    config_file: str | None,
) -> None:
    """Segment an article and report reading time."""
    config = _build_config(
        config_file,
        words_per_minute=words_per_minute,
        seed=seed,
        embedder_backend=backend,
        embedder_endpoint=provider_endpoint,
        rules_file=rules_file,
    )
    service, article = _ingest(config, input_path)
    click.echo(f"article\t{article.article_id}\t{article.title}")
    click.echo(f"words\t{article.total_words}")
    click.echo(f"paragraphs\t{len(article.paragraphs)}")
    click.echo(f"sentences\t{len(article.sentences)}")
    click.echo(f"estimated_seconds\t{service.estimated_seconds(article):g}")
    for paragraph in article.paragraphs:
        click.echo(
            f"paragraph\t{paragraph.index}\t{paragraph.word_count}\t{len(paragraph.sentences)}"
        )
    selected: tuple[int, ...] = ()
    if budget_seconds is not None:
        result = service.time_filter(article.article_id, budget_seconds)
        selected = result.selected_sentence_ids
        click.echo(f"budget_seconds\t{budget_seconds:g}")
        click.echo(f"rate\t{result.budget.rate:g}")
        click.echo(f"selected_sentences\t{len(selected)}")
        click.echo(f"estimated_selected_seconds\t{result.estimated_selected_seconds:g}")
        for sentence_id in selected:
            sentence = article.sentence(sentence_id)
            click.echo(
                f"selected\t{sentence_id}\t{sentence.paragraph_index}\t{sentence.start}\t{sentence.end}"
            )
    if out_dir is not None:
        from .reports import paragraph_report

        csv_path, png_path = paragraph_report(article, out_dir, selected)
        click.echo(f"report\t{csv_path}\t{png_path}")


@cli.command()
@click.argument("input_path")
@click.option("--seed", type=int, default=None)
@click.option("--backend", type=click.Choice(["template_local", "remote"]), default=None, help="Question backend.")
@click.option("--provider-endpoint", default=None, help="Remote question-generation endpoint URL.")
@click.option("--rules-file", default=None)
@click.option("--config", "config_file", type=click.Path(), default=None)
def questions(
    input_path: str,
    seed: int | None,
    backend: str | None,
    provider_endpoint: str | None,
    rules_file: str | None,
    config_file: str | None,
) -> None:
    """List the pre-reading filter questions, one per merged unit."""
    config = _build_config(
        config_file,
        seed=seed,
        question_backend=backend,
        question_endpoint=provider_endpoint,
        rules_file=rules_file,
    )
    service, article = _ingest(config, input_path)
    batch = service.questions(article.article_id)
    click.echo(f"backend\t{batch.backend}")
    for question in batch.questions:
        click.echo(f"question\t{question.question_id}\t{question.answer_unit}\t{question.text}")


@cli.command(name="summarize")
@click.argument("input_path")
@click.option("--session-file", default=None, help="JSON session record; omit for a plain summary.")
@click.option("--store-path", default=None, help="Load the latest stored session for this article instead.")
@click.option("--dwell-impact", type=_IMPACTS, default="low", show_default=True)
@click.option("--highlight-impact", type=_IMPACTS, default="low", show_default=True)
@click.option("--note-impact", type=_IMPACTS, default="low", show_default=True)
@click.option("--max-output-tokens", type=int, default=None, help="Word budget for the summary.")
@click.option("--alpha", type=float, default=None, help="Dwell weighting exponent.")
@click.option("--seed", type=int, default=None)
@click.option("--backend", type=click.Choice(["weighted_extractive_local", "remote_abstractive"]), default=None)
@click.option("--provider-endpoint", default=None, help="Remote abstractive endpoint URL.")
@click.option("--rules-file", default=None)
@click.option("--explain/--no-explain", default=False, help="Print an attribution line per summary sentence.")
@click.option("--config", "config_file", type=click.Path(), default=None)
def summarize_cmd(
    input_path: str,
    session_file: str | None,
    store_path: str | None,
    dwell_impact: str,
    highlight_impact: str,
    note_impact: str,
    max_output_tokens: int | None,
    alpha: float | None,
    seed: int | None,
    backend: str | None,
    provider_endpoint: str | None,
    rules_file: str | None,
    explain: bool,
    config_file: str | None,
) -> None:
    """Summarize an article, personalized when a session is given."""
    config = _build_config(
        config_file,
        alpha=alpha,
        seed=seed,
        summary_backend=backend,
        summary_endpoint=provider_endpoint,
        rules_file=rules_file,
        store_path=store_path,
    )
    _, article = _ingest(config, input_path)
    session = None
    if session_file is not None:
        path = Path(session_file)
        if not path.exists():
            raise NotFoundError(f"session file {session_file} not found")
        record = json.loads(path.read_text(encoding="utf-8"))
        session = ReadingSession.from_record(record.get("session", record))
    elif store_path is not None:
        record = SessionStore(store_path).load_latest(article.article_id)
        session = ReadingSession.from_record(record["session"])
    controls = SummaryControls(
        dwell_impact=dwell_impact,
        highlight_impact=highlight_impact,
        note_impact=note_impact,
        alpha=config.alpha,
    )
    if session is None:
        doc = article_document(article)
        profile = None
    else:
        if session.article_id != article.article_id:
            raise NotFoundError(
                f"session is for article {session.article_id}, input is {article.article_id}"
            )
        profile = dwell_profile(session, article)
        doc = augment_with_annotations(article, session.annotations, controls, profile)
    summary = summarize(
        doc, config.summary_config(), max_output_tokens, config.embedder_config()
    )
    click.echo(f"backend\t{summary.backend}")
    click.echo(f"word_budget\t{summary.word_budget}")
    for index, sentence in enumerate(summary.sentences):
        click.echo(f"sentence\t{index}\t{sentence}")
    if explain:
        bubbles = explain_summary(summary, profile, controls, config.rouge_variant)
        for bubble in bubbles:
            click.echo(
                "explanation\t"
                f"{bubble.summary_sentence_index}\t{bubble.source_kind}\t"
                f"{bubble.source_ref}\t{bubble.message}"
            )


@cli.command()
@click.argument("input_path")
@click.option("--target", type=int, required=True, help="Paragraph index whose weight is swept.")
@click.option("--max-output-tokens", type=int, default=None)
@click.option("--variant", type=click.Choice(list(ROUGE_VARIANTS)), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--rules-file", default=None)
@click.option("--out-dir", type=click.Path(), default=None, help="Write sweep.csv and sweep.png here.")
@click.option("--config", "config_file", type=click.Path(), default=None)
def sweep(
    input_path: str,
    target: int,
    max_output_tokens: int | None,
    variant: str | None,
    seed: int | None,
    rules_file: str | None,
    out_dir: str | None,
    config_file: str | None,
) -> None:
    """Sweep one paragraph's weight 0.0 to 2.0 and table the ROUGE pull."""
    config = _build_config(
        config_file, seed=seed, rules_file=rules_file, rouge_variant=variant
    )
    _, article = _ingest(config, input_path)
    curve = weight_sweep(
        article,
        target,
        config.embedder_config(),
        max_output_tokens,
        config.rouge_variant,
    )
    click.echo("weight\trouge_f1")
    for point in curve.points:
        click.echo(f"{point.weight:.1f}\t{point.rouge_f1:.9f}")
    if out_dir is not None:
        from .reports import sweep_report

        csv_path, png_path = sweep_report(curve, out_dir)
        click.echo(f"report\t{csv_path}\t{png_path}")


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--store-path", default=None)
@click.option("--rules-file", default=None)
@click.option("--config", "config_file", type=click.Path(), default=None)
def serve(
    host: str,
    port: int,
    store_path: str | None,
    rules_file: str | None,
    config_file: str | None,
) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .api import create_app

    config = _build_config(config_file, store_path=store_path, rules_file=rules_file)
    uvicorn.run(create_app(config), host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except LecternError as exc:
        click.echo(f"error[{exc.code}]: {exc}", err=True)
        return 1
    except ValueError as exc:
        click.echo(f"error[invalid_request]: {exc}", err=True)
        return 1
    except Exception as exc:
        click.echo(f"internal error: {exc}", err=True)
        return 2
