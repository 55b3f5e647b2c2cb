"""Batch command-line front end: season file in, deterministic report files out.

Exit codes: 0 on success, 1 for data/validation problems, 2 for I/O failures.
Identical inputs and flags always produce byte-identical outputs.
"""

from __future__ import annotations

import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import click

from .display import format_decimal
from .errors import SeasonDataError
from .indicators import (
    compute_bundle,
    draws_to_wins,
    ecdf_to_csv,
    indicators_to_csv,
    indicators_to_json,
    minutes_to_upper,
    points_ecdf,
)
from .ingest import SeasonDataset, SeasonFormat, parse_season
from .scoring import ScoringSystem, WeightTriple
from .standings import LeagueTable, evolution, evolution_to_csv, final_table, percent_of_leader


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    fmt: SeasonFormat
    systems: tuple[ScoringSystem, ...]
    weights: WeightTriple
    output_dir: Path
    display_decimals: int
    decimal_comma: bool


def _parse_systems(text: str) -> tuple[ScoringSystem, ...]:
    tokens = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not tokens:
        raise ValueError("at least one scoring system is required")
    systems: list[ScoringSystem] = []
    for tok in tokens:
        try:
            system = ScoringSystem(tok.lower())
        except ValueError:
            raise ValueError(
                f"unknown scoring system {tok!r}; choose from "
                "classic,time,mixed,goaldiff"
            ) from None
        if system not in systems:
            systems.append(system)
    return tuple(systems)


def _infer_format(path: Path, fmt: str | None) -> SeasonFormat:
    if fmt is not None:
        return SeasonFormat(fmt)
    return SeasonFormat.JSON if path.suffix.lower() == ".json" else SeasonFormat.CSV


def build_comparison_csv(
    tables: Sequence[LeagueTable],
    *,
    decimals: int = 2,
    pct_decimals: int = 0,
    minutes_decimals: int = 0,
    comma: bool = False,
) -> str:
    """Side-by-side comparison of final tables, one rank-aligned block per system.

    A time block gets a minutes-to-overtake column and a classic block gets a
    draws-to-wins column; the top row has no metric in either.
    """
    header = ["rank"]
    for table in tables:
        name = table.system.value
        header += [f"{name}_team", f"{name}_points", f"{name}_pct_of_1st"]
    time_table = next((t for t in tables if t.system is ScoringSystem.TIME), None)
    classic_table = next((t for t in tables if t.system is ScoringSystem.CLASSIC), None)
    if time_table is not None:
        header.append("time_min_to_upper")
    if classic_table is not None:
        header.append("classic_draws_to_wins")

    percents = [percent_of_leader(table) for table in tables]
    time_metrics = minutes_to_upper(time_table) if time_table is not None else []
    classic_metrics = draws_to_wins(classic_table) if classic_table is not None else []

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for i in range(len(tables[0].rows)):
        row: list[str] = [str(i + 1)]
        for table, pcts in zip(tables, percents):
            table_row = table.rows[i]
            row += [
                table_row.team,
                format_decimal(table_row.points, decimals, comma=comma),
                format_decimal(pcts[i], pct_decimals, comma=comma),
            ]
        if time_table is not None:
            row.append(
                ""
                if i == 0
                else format_decimal(
                    time_metrics[i - 1].minutes_to_upper, minutes_decimals, comma=comma
                )
            )
        if classic_table is not None:
            row.append("" if i == 0 else str(classic_metrics[i - 1].draws_to_wins))
        writer.writerow(row)
    return out.getvalue()


def _write_table(config: RunConfig, dataset: SeasonDataset) -> list[Path]:
    tables = [final_table(dataset, system, config.weights) for system in config.systems]
    content = build_comparison_csv(
        tables, decimals=config.display_decimals, comma=config.decimal_comma
    )
    path = config.output_dir / "table.csv"
    path.write_bytes(content.encode("utf-8"))
    return [path]


def _write_evolution(config: RunConfig, dataset: SeasonDataset) -> list[Path]:
    written = []
    for system in config.systems:
        evo = evolution(dataset, system, config.weights)
        content = evolution_to_csv(
            evo, decimals=config.display_decimals, comma=config.decimal_comma
        )
        path = config.output_dir / f"evolution_{system.value}.csv"
        path.write_bytes(content.encode("utf-8"))
        written.append(path)
    return written


def _write_indicators(config: RunConfig, dataset: SeasonDataset) -> list[Path]:
    bundles = [
        (system, compute_bundle(dataset, system, config.weights))
        for system in config.systems
    ]
    csv_path = config.output_dir / "indicators.csv"
    csv_path.write_bytes(
        indicators_to_csv(bundles, comma=config.decimal_comma).encode("utf-8")
    )
    json_path = config.output_dir / "indicators.json"
    json_path.write_bytes(indicators_to_json(bundles).encode("utf-8"))
    return [csv_path, json_path]


def _write_ecdf(config: RunConfig, dataset: SeasonDataset) -> list[Path]:
    written = []
    for system in config.systems:
        steps = points_ecdf(dataset, system, config.weights)
        path = config.output_dir / f"ecdf_{system.value}.csv"
        path.write_bytes(ecdf_to_csv(steps, comma=config.decimal_comma).encode("utf-8"))
        written.append(path)
    return written


def _execute(
    writer: Callable[[RunConfig, SeasonDataset], list[Path]],
    input_path: Path,
    fmt: str | None,
    systems: str,
    weights: str,
    output_dir: Path,
    decimals: int,
    decimal_comma: bool,
) -> None:
    try:
        config = RunConfig(
            input_path=input_path,
            fmt=_infer_format(input_path, fmt),
            systems=_parse_systems(systems),
            weights=WeightTriple.from_string(weights),
            output_dir=output_dir,
            display_decimals=decimals,
            decimal_comma=decimal_comma,
        )
        data = config.input_path.read_bytes()
        dataset = parse_season(data, config.fmt)
        config.output_dir.mkdir(parents=True, exist_ok=True)
        written = writer(config, dataset)
    except SeasonDataError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    except (ValueError, ZeroDivisionError) as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    except OSError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(2)
    for path in written:
        click.echo(str(path))


def _season_options(f):
    options = [
        click.option(
            "--input",
            "input_path",
            required=True,
            type=click.Path(path_type=Path),
            help="Season file (CSV or JSON).",
        ),
        click.option(
            "--format",
            "fmt",
            type=click.Choice(["csv", "json"]),
            default=None,
            help="Input format; inferred from the file suffix when omitted.",
        ),
        click.option(
            "--systems",
            default="classic,time",
            show_default=True,
            help="Comma-separated scoring systems: classic,time,mixed,goaldiff.",
        ),
        click.option(
            "--weights",
            default="3,1,0",
            show_default=True,
            help="Weights W,D,L for the time system (integers, decimals or fractions).",
        ),
        click.option(
            "--out",
            "output_dir",
            required=True,
            type=click.Path(path_type=Path),
            help="Output directory (created if missing).",
        ),
        click.option(
            "--decimals",
            type=click.IntRange(0, 3),
            default=2,
            show_default=True,
            help="Decimal places for points columns.",
        ),
        click.option(
            "--decimal-comma",
            "decimal_comma",
            is_flag=True,
            help="Render decimal values with a comma separator.",
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


@click.group()
def main() -> None:
    """Recompute league standings and competitiveness reports from goal timelines."""


@main.command("table")
@_season_options
def cmd_table(**kwargs) -> None:
    """Side-by-side final standings comparison (table.csv)."""
    _execute(_write_table, **kwargs)


@main.command("evolution")
@_season_options
def cmd_evolution(**kwargs) -> None:
    """Per-round rank/points trajectories (evolution_<system>.csv)."""
    _execute(_write_evolution, **kwargs)


@main.command("indicators")
@_season_options
def cmd_indicators(**kwargs) -> None:
    """Season competitiveness indicators (indicators.csv / indicators.json)."""
    _execute(_write_indicators, **kwargs)


@main.command("ecdf")
@_season_options
def cmd_ecdf(**kwargs) -> None:
    """Cumulative distribution of per-team match points (ecdf_<system>.csv)."""
    _execute(_write_ecdf, **kwargs)
