"""Service wiring: one config object shared by the HTTP app and the CLI.

Settings resolve in three layers, each overriding the previous one:
built-in defaults, a JSON config file, then ``LECTERN_*`` environment
variables (field name upper-cased, e.g. ``LECTERN_WORDS_PER_MINUTE``).
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from ..embedder import EmbedderConfig
from ..questions import QgProviderConfig
from ..summarize import SummaryProviderConfig
from ..textmetrics import ROUGE_VARIANTS

ENV_PREFIX = "LECTERN_"


@dataclass(frozen=True)
class AppConfig:
    words_per_minute: float = 150.0
    alpha: float = 2.0
    seed: int = 0
    dimension: int = 512
    embedder_backend: str = "tfidf_local"
    embedder_endpoint: str = ""
    question_backend: str = "template_local"
    question_endpoint: str = ""
    summary_backend: str = "weighted_extractive_local"
    summary_endpoint: str = ""
    rouge_variant: str = "rouge_l"
    store_path: str = "sessions"
    rules_file: str = ""
    timeout_seconds: float = 10.0

    def __post_init__(self) -> None:
        if self.words_per_minute <= 0:
            raise ValueError("words_per_minute must be positive")
        if self.rouge_variant not in ROUGE_VARIANTS:
            raise ValueError(f"unknown rouge variant {self.rouge_variant!r}")

    def embedder_config(self) -> EmbedderConfig:
        return EmbedderConfig(
            backend=self.embedder_backend,
            dimension=self.dimension,
            seed=self.seed,
            remote_endpoint=self.embedder_endpoint,
            timeout_seconds=self.timeout_seconds,
        )

    def question_config(self) -> QgProviderConfig:
        return QgProviderConfig(
            backend=self.question_backend,
            remote_endpoint=self.question_endpoint,
            seed=self.seed,
            timeout_seconds=self.timeout_seconds,
        )

    def summary_config(self) -> SummaryProviderConfig:
        return SummaryProviderConfig(
            backend=self.summary_backend,
            remote_endpoint=self.summary_endpoint,
            timeout_seconds=self.timeout_seconds,
        )


def _coerce(raw: str, kind: type):
    if kind is float:
        return float(raw)
    if kind is int:
        return int(raw)
    return raw


def load_config(
    path: str | Path | None = None, env: Mapping[str, str] | None = None
) -> AppConfig:
    env = os.environ if env is None else env
    values: dict[str, object] = {}
    field_types = {f.name: f.type for f in dataclasses.fields(AppConfig)}
    types = {"float": float, "int": int, "str": str}
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
        for key, value in data.items():
            if key not in field_types:
                raise ValueError(f"unknown config key {key!r}")
            values[key] = value
    for name, type_name in field_types.items():
        raw = env.get(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = _coerce(raw, types.get(str(type_name), str))
    return AppConfig(**values)  # type: ignore[arg-type]
