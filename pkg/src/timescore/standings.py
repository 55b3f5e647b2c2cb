"""League tables, round-by-round evolution, and rank-movement statistics."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .display import format_decimal
from .errors import EmptySeasonError
from .ingest import MatchRecord, SeasonDataset
from .scoring import DEFAULT_WEIGHTS, ScoringSystem, WeightTriple, final_result, match_points
from .timeline import segment


@dataclass(frozen=True, slots=True)
class TableRow:
    team: str
    points: Fraction
    played: int
    wins: int
    draws: int
    losses: int
    goals_for: int
    goal_diff: int
    rank: int


@dataclass(frozen=True, slots=True)
class LeagueTable:
    """A ranked table plus the system/weights it was computed under."""

    system: ScoringSystem
    weights: WeightTriple
    rows: tuple[TableRow, ...]


@dataclass(frozen=True, slots=True)
class StandingsEvolution:
    """Cumulative tables after each completed round, in round order."""

    system: ScoringSystem
    weights: WeightTriple
    tables: tuple[LeagueTable, ...]


@dataclass(frozen=True, slots=True)
class LeadershipStats:
    num_changes: int
    distinct_leaders: int
    leader_sequence: tuple[str, ...]


@dataclass
class _Totals:
    points: Fraction = Fraction(0)
    played: int = 0
    wins: int = 0
    draws: int = 0
    losses: int = 0
    goals_for: int = 0
    goals_against: int = 0


def _apply_match(
    totals: dict[str, _Totals],
    match: MatchRecord,
    system: ScoringSystem,
    weights: WeightTriple,
) -> None:
    award = match_points(match, system, weights, seg=segment(match))
    hg, ag = match.final_score
    for team, pts, gf, ga in (
        (match.home, award.home_pts, hg, ag),
        (match.away, award.away_pts, ag, hg),
    ):
        t = totals[team]
        t.points += pts
        t.played += 1
        t.goals_for += gf
        t.goals_against += ga
        outcome = final_result(gf, ga)
        if outcome == 3:
            t.wins += 1
        elif outcome == 1:
            t.draws += 1
        else:
            t.losses += 1


def _snapshot(
    totals: dict[str, _Totals], system: ScoringSystem, weights: WeightTriple
) -> LeagueTable:
    # Tie-break: points desc, goal difference desc, goals scored desc, name asc.
    # Applied identically under every system, so ranking is always a strict order.
    ordered = sorted(
        totals.items(),
        key=lambda item: (
            -item[1].points,
            -(item[1].goals_for - item[1].goals_against),
            -item[1].goals_for,
            item[0],
        ),
    )
    rows = tuple(
        TableRow(
            team=team,
            points=t.points,
            played=t.played,
            wins=t.wins,
            draws=t.draws,
            losses=t.losses,
            goals_for=t.goals_for,
            goal_diff=t.goals_for - t.goals_against,
            rank=rank,
        )
        for rank, (team, t) in enumerate(ordered, start=1)
    )
    return LeagueTable(system=system, weights=weights, rows=rows)


def final_table(
    dataset: SeasonDataset,
    system: ScoringSystem,
    weights: WeightTriple = DEFAULT_WEIGHTS,
) -> LeagueTable:
    """Full-season table: per-match awards summed per team, ranked by the tie-break."""
    if not dataset.matches:
        raise EmptySeasonError("season has no matches")
    totals = {team: _Totals() for team in dataset.teams}
    for match in dataset.matches:
        _apply_match(totals, match, system, weights)
    return _snapshot(totals, system, weights)


def evolution(
    dataset: SeasonDataset,
    system: ScoringSystem,
    weights: WeightTriple = DEFAULT_WEIGHTS,
) -> StandingsEvolution:
    """One cumulative table per round (round r includes all matches with round <= r)."""
    if not dataset.matches:
        raise EmptySeasonError("season has no matches")
    by_round: dict[int, list[MatchRecord]] = {}
    for match in dataset.matches:
        by_round.setdefault(match.round, []).append(match)
    totals = {team: _Totals() for team in dataset.teams}
    tables = []
    for round_no in range(1, dataset.num_rounds + 1):
        for match in by_round.get(round_no, []):
            _apply_match(totals, match, system, weights)
        tables.append(_snapshot(totals, system, weights))
    return StandingsEvolution(system=system, weights=weights, tables=tuple(tables))


def leadership_stats(evo: StandingsEvolution) -> LeadershipStats:
    """How often the top of the table changed hands across rounds."""
    leaders = tuple(table.rows[0].team for table in evo.tables)
    changes = sum(1 for prev, cur in zip(leaders, leaders[1:]) if prev != cur)
    return LeadershipStats(
        num_changes=changes,
        distinct_leaders=len(set(leaders)),
        leader_sequence=leaders,
    )


def overall_changes(evo: StandingsEvolution) -> int:
    """Count of (team, consecutive-round pair) entries whose rank moved."""
    total = 0
    for prev, cur in zip(evo.tables, evo.tables[1:]):
        prev_ranks = {row.team: row.rank for row in prev.rows}
        total += sum(1 for row in cur.rows if row.rank != prev_ranks[row.team])
    return total


def percent_of_leader(table: LeagueTable) -> tuple[Fraction, ...]:
    """Each row's points as an exact percentage of the leader's points."""
    leader = table.rows[0].points
    return tuple(100 * row.points / leader for row in table.rows)


def table_to_csv(
    table: LeagueTable,
    *,
    decimals: int = 2,
    pct_decimals: int = 0,
    comma: bool = False,
) -> str:
    """Single-system table as CSV, including the percent-of-leader column."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["rank", "team", "played", "wins", "draws", "losses",
         "goals_for", "goal_diff", "points", "pct_of_first"]
    )
    percents = percent_of_leader(table)
    for row, pct in zip(table.rows, percents):
        writer.writerow(
            [
                row.rank,
                row.team,
                row.played,
                row.wins,
                row.draws,
                row.losses,
                row.goals_for,
                row.goal_diff,
                format_decimal(row.points, decimals, comma=comma),
                format_decimal(pct, pct_decimals, comma=comma),
            ]
        )
    return out.getvalue()


def table_to_json(table: LeagueTable) -> str:
    """Single-system table as JSON with exact rational points ("num/den" strings)."""
    percents = percent_of_leader(table)
    rows = [
        {
            "rank": row.rank,
            "team": row.team,
            "played": row.played,
            "wins": row.wins,
            "draws": row.draws,
            "losses": row.losses,
            "goals_for": row.goals_for,
            "goal_diff": row.goal_diff,
            "points": str(row.points),
            "pct_of_first": str(pct),
        }
        for row, pct in zip(table.rows, percents)
    ]
    doc = {"system": table.system.value, "rows": rows}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def evolution_to_csv(
    evo: StandingsEvolution, *, decimals: int = 2, comma: bool = False
) -> str:
    """Long-form (round, team, rank, points) CSV suitable for plotting tools."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["round", "team", "rank", "points"])
    for round_no, table in enumerate(evo.tables, start=1):
        for row in table.rows:
            writer.writerow(
                [round_no, row.team, row.rank, format_decimal(row.points, decimals, comma=comma)]
            )
    return out.getvalue()
