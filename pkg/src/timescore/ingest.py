"""Season-file ingestion: domain records, validation, and the on-disk formats.

Two interchangeable formats are supported.

CSV (canonical)
    Header ``round,home,away,goals,length_min``, one fixture per row. The
    ``goals`` field is a comma-separated list of goal tokens (quoted when it
    contains commas). A token is ``SIDE:MINUTE`` or ``SIDE:MINUTE+STOPPAGE``
    with SIDE one of ``H``/``A``; stoppage notation denotes the absolute
    minute, so ``90+3`` and ``93`` parse identically. ``length_min`` is an
    optional integer match length in minutes (>= 90). Example row::

        1,Leicester,Sunderland,"H:52,H:71",

JSON (mirror)
    An object ``{"league": str, "matches": [...]}``. Each match mirrors the
    CSV fields; its ``goals`` entries are either token strings as above or
    objects ``{"side": "H"|"A", "time_s": int, "precision": str}`` for data
    with better-than-minute resolution. Match length is ``length_min`` or,
    when not a whole number of minutes, ``length_s``.

Both formats are UTF-8; LF and CRLF line endings are accepted. Goal times are
stored internally as integer seconds from kickoff, so minute-resolution input
is scaled by 60 at parse time and no floating point is involved anywhere.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import (
    DuplicateFixtureError,
    EmptySeasonError,
    MalformedRowError,
    NonContiguousRoundsError,
    NonMonotonicGoalsError,
    SeasonDataError,
    UnknownFormatError,
)

SECONDS_PER_MINUTE = 60
REGULATION_LENGTH_S = 90 * SECONDS_PER_MINUTE

CSV_HEADER = ("round", "home", "away", "goals", "length_min")

_GOAL_TOKEN_RE = re.compile(r"^(?P<side>[HA]):(?P<minute>\d+)(?:\+(?P<stoppage>\d+))?$")


class Side(enum.Enum):
    HOME = "H"
    AWAY = "A"


class TimePrecision(enum.Enum):
    """How a recorded goal time relates to the true time of the goal."""

    MINUTE_TRUNCATED = "minute_truncated"
    MINUTE_ROUNDED = "minute_rounded"
    EXACT = "exact"


class SeasonFormat(enum.Enum):
    CSV = "csv"
    JSON = "json"


# Worst-case timing slack (seconds) a single recorded goal can hide.
_PRECISION_SLACK_S = {
    TimePrecision.MINUTE_TRUNCATED: 59,
    TimePrecision.MINUTE_ROUNDED: 30,
    TimePrecision.EXACT: 0,
}


@dataclass(frozen=True, slots=True)
class GoalEvent:
    """One scored goal, timed in whole seconds from kickoff (>= 1)."""

    side: Side
    time_s: int
    precision: TimePrecision = TimePrecision.EXACT

    def __post_init__(self) -> None:
        if self.time_s < 1:
            raise MalformedRowError(
                f"goal time must be at least 1 second, got {self.time_s}"
            )


@dataclass(frozen=True, slots=True)
class MatchRecord:
    """One fixture: round number, sides, ordered goals, optional length override.

    Team names are trimmed on construction. Goal times must strictly increase
    (two goals can never share the same second). A declared length, when
    present, must cover both the 90-minute regulation span and every goal.
    """

    round: int
    home: str
    away: str
    goals: tuple[GoalEvent, ...] = ()
    declared_length_s: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "home", self.home.strip())
        object.__setattr__(self, "away", self.away.strip())
        object.__setattr__(self, "goals", tuple(self.goals))
        if self.round < 1:
            raise MalformedRowError(f"round must be a positive integer, got {self.round}")
        if not self.home or not self.away:
            raise MalformedRowError("team names must be non-empty")
        if self.home == self.away:
            raise MalformedRowError(f"a team cannot play itself: {self.home!r}")
        for prev, cur in zip(self.goals, self.goals[1:]):
            if cur.time_s <= prev.time_s:
                raise NonMonotonicGoalsError(
                    f"goal times must strictly increase, got {prev.time_s} s "
                    f"followed by {cur.time_s} s"
                )
        if self.declared_length_s is not None:
            if self.declared_length_s < REGULATION_LENGTH_S:
                raise MalformedRowError(
                    f"declared length {self.declared_length_s} s is shorter than "
                    f"regulation ({REGULATION_LENGTH_S} s)"
                )
            if self.goals and self.declared_length_s < self.goals[-1].time_s:
                raise MalformedRowError(
                    f"declared length {self.declared_length_s} s precedes the "
                    f"last goal at {self.goals[-1].time_s} s"
                )

    @property
    def final_score(self) -> tuple[int, int]:
        """(home goals, away goals) at the final whistle."""
        home = sum(1 for g in self.goals if g.side is Side.HOME)
        return home, len(self.goals) - home


@dataclass(frozen=True, slots=True)
class SeasonDataset:
    """A validated collection of fixtures for one league season.

    Each ordered (home, away) pairing may appear at most once, and round
    numbers must form a contiguous range starting at 1.
    """

    league_name: str = ""
    matches: tuple[MatchRecord, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "matches", tuple(self.matches))
        seen: set[tuple[str, str]] = set()
        for m in self.matches:
            pair = (m.home, m.away)
            if pair in seen:
                raise DuplicateFixtureError(
                    f"fixture {m.home} vs {m.away} appears more than once"
                )
            seen.add(pair)
        rounds = {m.round for m in self.matches}
        if rounds and rounds != set(range(1, max(rounds) + 1)):
            raise NonContiguousRoundsError(
                "round numbers must form a contiguous range starting at 1"
            )

    @property
    def teams(self) -> tuple[str, ...]:
        names = {m.home for m in self.matches} | {m.away for m in self.matches}
        return tuple(sorted(names))

    @property
    def num_rounds(self) -> int:
        return max((m.round for m in self.matches), default=0)


def parse_goal_token(token: str, precision: TimePrecision) -> GoalEvent:
    """Parse one ``SIDE:MINUTE[+STOPPAGE]`` token into a GoalEvent."""
    m = _GOAL_TOKEN_RE.match(token.strip())
    if m is None:
        raise MalformedRowError(f"bad goal token {token!r}")
    minute = int(m.group("minute")) + int(m.group("stoppage") or 0)
    return GoalEvent(
        side=Side(m.group("side")),
        time_s=minute * SECONDS_PER_MINUTE,
        precision=precision,
    )


def format_goal_token(goal: GoalEvent) -> str:
    """Render a whole-minute goal as its canonical token (absolute minute)."""
    if goal.time_s % SECONDS_PER_MINUTE != 0:
        raise ValueError(
            f"goal at {goal.time_s} s is not on a whole minute; "
            "use the JSON format for second-resolution data"
        )
    return f"{goal.side.value}:{goal.time_s // SECONDS_PER_MINUTE}"


def _coerce_format(fmt: SeasonFormat | str) -> SeasonFormat:
    if isinstance(fmt, SeasonFormat):
        return fmt
    try:
        return SeasonFormat(str(fmt).lower())
    except ValueError:
        raise UnknownFormatError(f"unknown season format {fmt!r}") from None


def _located(err: SeasonDataError, line: int) -> SeasonDataError:
    return type(err)(err.message, line=line)


def parse_season(
    data: bytes | str,
    fmt: SeasonFormat | str,
    *,
    minute_precision: TimePrecision = TimePrecision.MINUTE_TRUNCATED,
    league_name: str = "",
) -> SeasonDataset:
    """Parse season file content into a validated :class:`SeasonDataset`.

    Args:
        data: Raw file content (UTF-8 bytes or already-decoded text).
        fmt: ``SeasonFormat`` or the strings ``"csv"`` / ``"json"``.
        minute_precision: Precision flag given to goals supplied as minute
            tokens (sources differ in whether they truncate or round).
        league_name: Fallback league name for the CSV format, which has no
            league field of its own.

    Raises:
        SeasonDataError: with code MALFORMED_ROW (row/line reported),
            DUPLICATE_FIXTURE, NONMONOTONIC_GOALS, NONCONTIGUOUS_ROUNDS,
            UNKNOWN_FORMAT, or EMPTY_SEASON for an entirely empty file.
    """
    fmt = _coerce_format(fmt)
    text = data.decode("utf-8-sig") if isinstance(data, bytes) else data.lstrip("﻿")
    if not text.strip():
        raise EmptySeasonError("season file is empty")
    if fmt is SeasonFormat.CSV:
        return _parse_csv(text, minute_precision, league_name)
    return _parse_json(text, minute_precision, league_name)


def _parse_csv(
    text: str, minute_precision: TimePrecision, league_name: str
) -> SeasonDataset:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise EmptySeasonError("season file is empty") from None
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise MalformedRowError(
            f"expected header {','.join(CSV_HEADER)!r}, got {','.join(header)!r}",
            line=1,
        )
    matches = []
    for row in reader:
        if not row:
            continue  # blank line
        line = reader.line_num
        if len(row) != len(CSV_HEADER):
            raise MalformedRowError(
                f"expected {len(CSV_HEADER)} fields, got {len(row)}", line=line
            )
        round_text, home, away, goals_field, length_field = row
        try:
            try:
                round_no = int(round_text.strip())
            except ValueError:
                raise MalformedRowError(f"bad round number {round_text!r}") from None
            goals = tuple(
                parse_goal_token(tok, minute_precision)
                for tok in goals_field.split(",")
                if tok.strip()
            )
            declared = None
            if length_field.strip():
                try:
                    declared = int(length_field.strip()) * SECONDS_PER_MINUTE
                except ValueError:
                    raise MalformedRowError(
                        f"bad length_min value {length_field!r}"
                    ) from None
            matches.append(
                MatchRecord(
                    round=round_no,
                    home=home,
                    away=away,
                    goals=goals,
                    declared_length_s=declared,
                )
            )
        except SeasonDataError as err:
            raise _located(err, line) from None
    return SeasonDataset(league_name=league_name, matches=tuple(matches))


def _require_int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedRowError(f"{what} must be an integer, got {value!r}")
    return value


def _parse_json_goal(entry: Any, minute_precision: TimePrecision) -> GoalEvent:
    if isinstance(entry, str):
        return parse_goal_token(entry, minute_precision)
    if isinstance(entry, dict):
        try:
            side = Side(entry["side"])
            raw_time = entry["time_s"]
            precision = TimePrecision(entry.get("precision", TimePrecision.EXACT.value))
        except (KeyError, ValueError) as exc:
            raise MalformedRowError(f"bad goal object {entry!r}: {exc}") from None
        return GoalEvent(
            side=side, time_s=_require_int(raw_time, "goal time_s"), precision=precision
        )
    raise MalformedRowError(f"goal entry must be a token string or object, got {entry!r}")


def _parse_json(
    text: str, minute_precision: TimePrecision, league_name: str
) -> SeasonDataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedRowError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("matches"), list):
        raise MalformedRowError('top level must be an object with a "matches" list')
    league = doc.get("league", league_name)
    if not isinstance(league, str):
        raise MalformedRowError('"league" must be a string')
    matches = []
    for i, obj in enumerate(doc["matches"], start=1):
        try:
            if not isinstance(obj, dict):
                raise MalformedRowError("match entry must be an object")
            if obj.get("length_min") is not None and obj.get("length_s") is not None:
                raise MalformedRowError("give length_min or length_s, not both")
            declared = None
            if obj.get("length_min") is not None:
                declared = _require_int(obj["length_min"], "length_min") * SECONDS_PER_MINUTE
            elif obj.get("length_s") is not None:
                declared = _require_int(obj["length_s"], "length_s")
            goals = tuple(
                _parse_json_goal(entry, minute_precision)
                for entry in obj.get("goals", [])
            )
            matches.append(
                MatchRecord(
                    round=_require_int(obj["round"], "round"),
                    home=str(obj["home"]),
                    away=str(obj["away"]),
                    goals=goals,
                    declared_length_s=declared,
                )
            )
        except SeasonDataError as err:
            raise type(err)(f"match {i}: {err.message}") from None
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedRowError(f"match {i}: {exc}") from None
    return SeasonDataset(league_name=league, matches=tuple(matches))


def serialize_season(dataset: SeasonDataset, fmt: SeasonFormat | str) -> str:
    """Render a dataset back to file text.

    CSV can only represent whole-minute goal times with one uniform
    non-EXACT precision and no league name; anything else raises ValueError
    (use JSON, which round-trips every valid dataset).
    """
    fmt = _coerce_format(fmt)
    if fmt is SeasonFormat.CSV:
        return _serialize_csv(dataset)
    return _serialize_json(dataset)


def _serialize_csv(dataset: SeasonDataset) -> str:
    if dataset.league_name:
        raise ValueError("CSV has no league field; use the JSON format")
    precisions = {g.precision for m in dataset.matches for g in m.goals}
    if TimePrecision.EXACT in precisions or len(precisions) > 1:
        raise ValueError(
            "CSV carries minute-resolution goals with one uniform precision; "
            "use the JSON format"
        )
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for m in dataset.matches:
        if m.declared_length_s is None:
            length = ""
        elif m.declared_length_s % SECONDS_PER_MINUTE == 0:
            length = str(m.declared_length_s // SECONDS_PER_MINUTE)
        else:
            raise ValueError(
                f"declared length {m.declared_length_s} s is not a whole minute; "
                "use the JSON format"
            )
        goals = ",".join(format_goal_token(g) for g in m.goals)
        writer.writerow([m.round, m.home, m.away, goals, length])
    return out.getvalue()


def _serialize_json(dataset: SeasonDataset) -> str:
    matches = []
    for m in dataset.matches:
        entry: dict[str, Any] = {
            "round": m.round,
            "home": m.home,
            "away": m.away,
            "goals": [
                {"side": g.side.value, "time_s": g.time_s, "precision": g.precision.value}
                for g in m.goals
            ],
        }
        if m.declared_length_s is not None:
            if m.declared_length_s % SECONDS_PER_MINUTE == 0:
                entry["length_min"] = m.declared_length_s // SECONDS_PER_MINUTE
            else:
                entry["length_s"] = m.declared_length_s
        matches.append(entry)
    doc = {"league": dataset.league_name, "matches": matches}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def minute_error_bound(dataset: SeasonDataset) -> Fraction:
    """Worst-case per-match points error implied by the goal-time precision flags.

    Each goal recorded at minute resolution can be off by up to 59 s when the
    source truncates (30 s when it rounds to the nearest minute), and a timing
    shift of d seconds moves at most 2·d/5400 points between the two sides of
    a 90-minute match. Per-goal bounds are summed within each match and the
    maximum over all matches is returned, as an exact rational.
    """
    worst = Fraction(0)
    for m in dataset.matches:
        bound = sum(
            (
                Fraction(2 * _PRECISION_SLACK_S[g.precision], REGULATION_LENGTH_S)
                for g in m.goals
            ),
            Fraction(0),
        )
        worst = max(worst, bound)
    return worst
