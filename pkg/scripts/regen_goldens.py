#!/usr/bin/env python3
"""Regenerate the golden CLI outputs under tests/golden/.

Runs every CLI command over the bundled synthetic season with default flags.
Only rerun this after an intentional output-format change, and review the
diff: the test suite treats these files as byte-exact truth.
"""

from __future__ import annotations

from pathlib import Path

from click.testing import CliRunner

from timescore.cli import main

ROOT = Path(__file__).resolve().parent.parent
SEASON = ROOT / "data" / "synthetic_season.csv"
GOLDEN = ROOT / "tests" / "golden"


def run() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    runner = CliRunner()
    for command in ("table", "evolution", "indicators", "ecdf"):
        result = runner.invoke(
            main,
            [command, "--input", str(SEASON), "--out", str(GOLDEN)],
            catch_exceptions=False,
        )
        assert result.exit_code == 0, result.output
    for path in sorted(GOLDEN.iterdir()):
        print(f"wrote {path}")


if __name__ == "__main__":
    run()
