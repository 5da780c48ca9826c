"""Regenerate or verify the committed oracle fixtures.

    python -m lectern.oracles --check [--dir tests/fixtures]
    python -m lectern.oracles --write [--dir tests/fixtures]

The report is tab-delimited (fixture, status, detail); any mismatch or
missing file exits nonzero so drift cannot pass silently.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import BUILDERS


def _diff(path: str, expected, actual, out: list[str]) -> None:
    if isinstance(expected, dict) and isinstance(actual, dict):
        for key in sorted(set(expected) | set(actual)):
            if key not in expected:
                out.append(f"{path}.{key}: unexpected")
            elif key not in actual:
                out.append(f"{path}.{key}: missing")
            else:
                _diff(f"{path}.{key}", expected[key], actual[key], out)
    elif isinstance(expected, list) and isinstance(actual, list):
        if len(expected) != len(actual):
            out.append(f"{path}: length {len(actual)} != {len(expected)}")
            return
        for i, (e, a) in enumerate(zip(expected, actual)):
            _diff(f"{path}[{i}]", e, a, out)
    elif isinstance(expected, bool) or isinstance(actual, bool):
        if expected is not actual:
            out.append(f"{path}: {actual!r} != {expected!r}")
    elif isinstance(expected, (int, float)) and isinstance(actual, (int, float)):
        if abs(float(expected) - float(actual)) > 1e-12:
            out.append(f"{path}: {actual!r} != {expected!r}")
    elif expected != actual:
        out.append(f"{path}: {actual!r} != {expected!r}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="python -m lectern.oracles")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--write", action="store_true", help="regenerate fixture files")
    mode.add_argument("--check", action="store_true", help="verify committed fixtures (default)")
    parser.add_argument("--dir", default="tests/fixtures", help="fixture directory")
    args = parser.parse_args(argv)

    fixture_dir = Path(args.dir)
    failures = 0
    for name, builder in BUILDERS.items():
        path = fixture_dir / name
        try:
            built = builder()
        except AssertionError as exc:
            print(f"{name}\tBROKEN\t{exc!r}")
            failures += 1
            continue
        if args.write:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(built, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
            print(f"{name}\tWROTE\t{path}")
            continue
        if not path.exists():
            print(f"{name}\tMISSING\t{path}")
            failures += 1
            continue
        committed = json.loads(path.read_text(encoding="utf-8"))
        problems: list[str] = []
        _diff(name, built, committed, problems)
        if problems:
            failures += 1
            print(f"{name}\tMISMATCH\t{problems[0]}")
            for line in problems[1:6]:
                print(f"{name}\t...\t{line}")
        else:
            print(f"{name}\tOK\t{path}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
