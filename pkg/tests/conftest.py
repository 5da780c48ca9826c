import json
from pathlib import Path

import pytest

from lectern.embedder import EmbedderConfig

FIXTURES = Path(__file__).parent / "fixtures"

# Embedding config used by every test that compares engine output against
# the committed oracle fixtures. The oracles compute exact (unhashed)
# tf-idf; at 2048 buckets with seed 0 the term hash is injective over all
# fixture vocabularies (checked when the fixtures were built), so hashed
# and exact vectors agree up to coordinate naming and the cosines match
# to float precision. The production default (512) stays collision-prone
# on purpose; correctness there is covered by property tests instead.
ORACLE_EMBEDDER = EmbedderConfig(dimension=2048, seed=0)


def load_fixture(name: str) -> dict:
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(name): acceptance criterion this test enforces"
    )


_criterion_results: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if report.when == "call":
        _criterion_results.append((name, "PASS" if report.passed else "FAIL"))
    elif report.when == "setup" and not report.passed:
        _criterion_results.append((name, "FAIL"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _criterion_results:
        terminalreporter.write_line(f"[{verdict}] {name}")
