"""Split a match clock into leading / level / trailing durations for the home side.

The match is partitioned into left-closed, right-open intervals between goals;
each interval is classified by the score sign at its start, so the durations
always sum exactly to the effective match length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ingest import REGULATION_LENGTH_S, MatchRecord, Side


@dataclass(frozen=True, slots=True)
class SegmentBreakdown:
    """Durations (seconds) the home side spent leading, level and trailing.

    Away-side durations are the mirror image: the away side leads exactly
    while the home side trails, and level time is shared.
    """

    t_win_home: int
    t_draw: int
    t_lose_home: int
    t_match: int

    def __post_init__(self) -> None:
        if min(self.t_win_home, self.t_draw, self.t_lose_home) < 0:
            raise ValueError("segment durations must be non-negative")
        if self.t_win_home + self.t_draw + self.t_lose_home != self.t_match:
            raise ValueError(
                f"durations {self.t_win_home}+{self.t_draw}+{self.t_lose_home} "
                f"do not sum to the match length {self.t_match}"
            )

    @property
    def t_win_away(self) -> int:
        return self.t_lose_home

    @property
    def t_lose_away(self) -> int:
        return self.t_win_home


def effective_length(match: MatchRecord) -> int:
    """Match length in seconds: declared if given, else 90' extended to the last goal."""
    if match.declared_length_s is not None:
        return match.declared_length_s
    last_goal = match.goals[-1].time_s if match.goals else 0
    return max(REGULATION_LENGTH_S, last_goal)


def segment(match: MatchRecord) -> SegmentBreakdown:
    """Accumulate leading/level/trailing durations by walking the goals in order."""
    t_match = effective_length(match)
    win = draw = lose = 0
    home = away = 0
    prev = 0
    for goal in match.goals:
        span = goal.time_s - prev
        if home > away:
            win += span
        elif home == away:
            draw += span
        else:
            lose += span
        if goal.side is Side.HOME:
            home += 1
        else:
            away += 1
        prev = goal.time_s
    tail = t_match - prev
    if home > away:
        win += tail
    elif home == away:
        draw += tail
    else:
        lose += tail
    return SegmentBreakdown(win, draw, lose, t_match)


def segment_oracle(match: MatchRecord, resolution_s: int = 1) -> SegmentBreakdown:
    """Reference implementation: step the clock and classify each step.

    Simulates the score at ``resolution_s``-second steps, classifying each
    step by the score sign at the step's start (a goal at time t counts from
    the step starting at t). A trailing remainder shorter than the resolution
    is handled as one final short step. At 1-second resolution this equals
    :func:`segment` exactly; it exists as an independently-coded check.
    """
    if resolution_s < 1:
        raise ValueError("resolution must be a positive number of seconds")
    t_match = effective_length(match)
    goals = match.goals
    win = draw = lose = 0
    home = away = 0
    i = 0
    t = 0
    while t < t_match:
        while i < len(goals) and goals[i].time_s <= t:
            if goals[i].side is Side.HOME:
                home += 1
            else:
                away += 1
            i += 1
        step = min(resolution_s, t_match - t)
        if home > away:
            win += step
        elif home == away:
            draw += step
        else:
            lose += step
        t += step
    return SegmentBreakdown(win, draw, lose, t_match)
