#!/usr/bin/env python3
"""Run the full report pipeline on a season file and print the headlines.

Writes every CLI artifact (table, evolution, indicators, ecdf) into the output
directory, then summarizes how the scoring systems compare on stdout.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from timescore.display import format_decimal
from timescore.indicators import compute_bundle, minutes_to_upper
from timescore.ingest import minute_error_bound, parse_season
from timescore.scoring import ScoringSystem
from timescore.standings import final_table

ROOT = Path(__file__).resolve().parent.parent
DEFAULT_SEASON = ROOT / "data" / "synthetic_season.csv"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--season", type=Path, default=DEFAULT_SEASON)
    parser.add_argument("--out", type=Path, default=ROOT / "out" / "report")
    parser.add_argument(
        "--systems", default="classic,time,mixed,goaldiff",
        help="comma-separated systems to include",
    )
    args = parser.parse_args()

    fmt = "json" if args.season.suffix.lower() == ".json" else "csv"
    season = parse_season(args.season.read_bytes(), fmt)
    systems = [ScoringSystem(tok.strip()) for tok in args.systems.split(",")]

    from click.testing import CliRunner
    from timescore.cli import main as cli

    runner = CliRunner()
    for command in ("table", "evolution", "indicators", "ecdf"):
        result = runner.invoke(
            cli,
            [
                command,
                "--input", str(args.season),
                "--out", str(args.out),
                "--systems", args.systems,
            ],
            catch_exceptions=False,
        )
        assert result.exit_code == 0, result.output

    print(f"season: {args.season} ({len(season.matches)} fixtures, "
          f"{len(season.teams)} teams, {season.num_rounds} rounds)")
    bound = minute_error_bound(season)
    print(f"worst-case per-match points error from goal-time precision: "
          f"{format_decimal(bound, 3)}")
    print(f"report files written to {args.out}")
    print()
    header = f"{'system':<10}{'champion':<14}{'gap 1-3%':>10}{'gap 1-last%':>13}{'lead chg':>10}{'avg pts':>9}"
    print(header)
    for system in systems:
        bundle = compute_bundle(season, system)
        table = final_table(season, system)
        print(
            f"{system.value:<10}{table.rows[0].team:<14}"
            f"{format_decimal(bundle.gap_1_3_pct, 1):>10}"
            f"{format_decimal(bundle.gap_1_last_pct, 1):>13}"
            f"{bundle.leadership_changes:>10}"
            f"{format_decimal(bundle.avg_points_per_team_game, 2):>9}"
        )
    if ScoringSystem.TIME in systems:
        print()
        print("minutes a single earlier victory goal would close each deficit (time system):")
        table = final_table(season, ScoringSystem.TIME)
        for metric in minutes_to_upper(table):
            note = " (below minute precision)" if metric.precision_limited else ""
            print(
                f"  {metric.team:<14} {format_decimal(metric.minutes_to_upper, 1):>7} min"
                f"{note}"
            )


if __name__ == "__main__":
    main()
