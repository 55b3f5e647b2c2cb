"""Season-level competitiveness metrics and overtake what-ifs.

Everything here is computed from exact rational points, so repeated runs are
bit-identical; rounding happens only in the CSV/JSON renderers.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .display import format_decimal
from .errors import EmptySeasonError, TooFewTeamsError, WrongSystemError
from .ingest import REGULATION_LENGTH_S, SECONDS_PER_MINUTE, SeasonDataset
from .scoring import DEFAULT_WEIGHTS, ScoringSystem, WeightTriple, match_points
from .standings import LeagueTable, evolution, leadership_stats, overall_changes


@dataclass(frozen=True, slots=True)
class IndicatorBundle:
    """The season-comparison numbers for one scoring system."""

    gap_1_3_pct: Fraction
    gap_1_9_pct: Fraction
    gap_1_last_pct: Fraction
    overall_changes: int
    leadership_changes: int
    distinct_leaders: int
    avg_points_per_team_game: Fraction


@dataclass(frozen=True, slots=True)
class OvertakeMetric:
    """What one team would need to overtake the team ranked directly above it.

    ``minutes_to_upper`` is filled for time-share tables (how many minutes
    earlier a single victory goal would need to fall); ``draws_to_wins`` for
    classic tables (how many drawn matches converted to wins close the gap).
    ``precision_limited`` flags sub-minute answers that minute-resolution data
    cannot support; ``capped`` flags a draws→wins count limited by the team's
    actual draw count.
    """

    team: str
    deficit_pts: Fraction
    minutes_to_upper: Fraction | None = None
    draws_to_wins: int | None = None
    precision_limited: bool = False
    capped: bool = False


def gaps(table: LeagueTable) -> tuple[Fraction, Fraction, Fraction]:
    """Percentage points deficits of the 3rd, 9th and last rows to the leader.

    Each gap is 100*(P_1 - P_k)/P_1. Tables shorter than nine rows fall back
    to the last row for the 9th-place gap.
    """
    rows = table.rows
    if len(rows) < 3:
        raise TooFewTeamsError(f"need at least 3 teams, got {len(rows)}")
    leader = rows[0].points

    def gap_at(k: int) -> Fraction:
        row = rows[min(k, len(rows)) - 1]
        return 100 * (leader - row.points) / leader

    return gap_at(3), gap_at(9), gap_at(len(rows))


def avg_points_per_team_game(
    dataset: SeasonDataset,
    system: ScoringSystem,
    weights: WeightTriple = DEFAULT_WEIGHTS,
) -> Fraction:
    """Mean points earned per team appearance (two appearances per fixture)."""
    if not dataset.matches:
        raise EmptySeasonError("season has no matches")
    total = Fraction(0)
    for match in dataset.matches:
        award = match_points(match, system, weights)
        total += award.home_pts + award.away_pts
    return total / (2 * len(dataset.matches))


def minutes_for_deficit(
    deficit: Fraction,
    t_match_s: int = REGULATION_LENGTH_S,
    weights: WeightTriple = DEFAULT_WEIGHTS,
) -> Fraction:
    """Minutes earlier a single victory goal must fall to recover ``deficit`` points.

    Anticipating a winning goal by m minutes converts m minutes of the
    scorer's level time into leading time, worth (alpha_w - alpha_d)*m/T_match
    points, so m = deficit * T_match / (alpha_w - alpha_d).
    """
    t_match_min = Fraction(t_match_s, SECONDS_PER_MINUTE)
    return deficit * t_match_min / (weights.alpha_w - weights.alpha_d)


def minutes_to_upper(
    table: LeagueTable, t_match_s: int = REGULATION_LENGTH_S
) -> list[OvertakeMetric]:
    """Per team below the top: minutes to erase the deficit to the row above.

    Only meaningful for time-share tables (WRONG_SYSTEM otherwise). The leader
    has no metric, so the list covers ranks 2..n in order. Deficits under one
    minute are flagged precision-limited: minute-resolution goal data cannot
    distinguish them.
    """
    if table.system is not ScoringSystem.TIME:
        raise WrongSystemError(
            f"minutes-to-upper applies to time tables, got {table.system.value!r}"
        )
    metrics = []
    for above, row in zip(table.rows, table.rows[1:]):
        deficit = above.points - row.points
        minutes = minutes_for_deficit(deficit, t_match_s, table.weights)
        metrics.append(
            OvertakeMetric(
                team=row.team,
                deficit_pts=deficit,
                minutes_to_upper=minutes,
                precision_limited=0 < minutes < 1,
            )
        )
    return metrics


def draws_to_wins(table: LeagueTable) -> list[OvertakeMetric]:
    """Per team below the top: drawn matches to convert into wins to catch the row above.

    Classic tables only (WRONG_SYSTEM otherwise). Each conversion gains two
    points, so the raw answer is ceil(deficit/2); it is capped at the team's
    actual draw count, with ``capped`` set when the cap binds.
    """
    if table.system is not ScoringSystem.CLASSIC:
        raise WrongSystemError(
            f"draws-to-wins applies to classic tables, got {table.system.value!r}"
        )
    metrics = []
    for above, row in zip(table.rows, table.rows[1:]):
        deficit = above.points - row.points
        raw = math.ceil(deficit / 2)
        metrics.append(
            OvertakeMetric(
                team=row.team,
                deficit_pts=deficit,
                draws_to_wins=min(raw, row.draws),
                capped=raw > row.draws,
            )
        )
    return metrics


def points_ecdf(
    dataset: SeasonDataset,
    system: ScoringSystem,
    weights: WeightTriple = DEFAULT_WEIGHTS,
) -> list[tuple[Fraction, Fraction]]:
    """Right-continuous ECDF of per-team per-match awards, as exact fractions.

    Returns (value, cumulative_fraction) steps over the sorted support of all
    2*fixtures awards; the final cumulative fraction is exactly 1.
    """
    if not dataset.matches:
        raise EmptySeasonError("season has no matches")
    awards: list[Fraction] = []
    for match in dataset.matches:
        award = match_points(match, system, weights)
        awards.extend((award.home_pts, award.away_pts))
    awards.sort()
    total = len(awards)
    steps: list[tuple[Fraction, Fraction]] = []
    for i, value in enumerate(awards, start=1):
        if i == total or awards[i] != value:
            steps.append((value, Fraction(i, total)))
    return steps


def compute_bundle(
    dataset: SeasonDataset,
    system: ScoringSystem,
    weights: WeightTriple = DEFAULT_WEIGHTS,
) -> IndicatorBundle:
    """All Table-style indicators for one system over one season."""
    evo = evolution(dataset, system, weights)
    table = evo.tables[-1]
    gap_3, gap_9, gap_last = gaps(table)
    leads = leadership_stats(evo)
    return IndicatorBundle(
        gap_1_3_pct=gap_3,
        gap_1_9_pct=gap_9,
        gap_1_last_pct=gap_last,
        overall_changes=overall_changes(evo),
        leadership_changes=leads.num_changes,
        distinct_leaders=leads.distinct_leaders,
        avg_points_per_team_game=avg_points_per_team_game(dataset, system, weights),
    )


_INDICATOR_ROWS = (
    ("Gap 1st-3rd place (%)", "gap_1_3_pct", 1),
    ("Gap 1st-9th place (%)", "gap_1_9_pct", 1),
    ("Gap 1st-last (%)", "gap_1_last_pct", 1),
    ("# Overall Changes", "overall_changes", None),
    ("# Changes on Leadership", "leadership_changes", None),
    ("# Different Leaders", "distinct_leaders", None),
    ("Aver. points per game", "avg_points_per_team_game", 2),
)


def indicators_to_csv(
    bundles: Sequence[tuple[ScoringSystem, IndicatorBundle]],
    *,
    comma: bool = False,
) -> str:
    """Fixed-order indicator rows, one value column per system."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["indicator"] + [system.value for system, _ in bundles])
    for label, attr, decimals in _INDICATOR_ROWS:
        row = [label]
        for _, bundle in bundles:
            value = getattr(bundle, attr)
            if decimals is None:
                row.append(str(value))
            else:
                row.append(format_decimal(value, decimals, comma=comma))
        writer.writerow(row)
    return out.getvalue()


def indicators_to_json(
    bundles: Sequence[tuple[ScoringSystem, IndicatorBundle]],
) -> str:
    """Indicator bundles keyed by system, with exact rationals as strings."""
    doc = {
        system.value: {
            "gap_1_3_pct": str(bundle.gap_1_3_pct),
            "gap_1_9_pct": str(bundle.gap_1_9_pct),
            "gap_1_last_pct": str(bundle.gap_1_last_pct),
            "overall_changes": bundle.overall_changes,
            "leadership_changes": bundle.leadership_changes,
            "distinct_leaders": bundle.distinct_leaders,
            "avg_points_per_team_game": str(bundle.avg_points_per_team_game),
        }
        for system, bundle in bundles
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def ecdf_to_csv(steps: Sequence[tuple[Fraction, Fraction]], *, comma: bool = False) -> str:
    """Two-column plot-ready CSV; six decimals keep distinct rational steps apart."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["points", "cumulative_fraction"])
    for value, cumulative in steps:
        writer.writerow(
            [format_decimal(value, 6, comma=comma), format_decimal(cumulative, 6, comma=comma)]
        )
    return out.getvalue()
