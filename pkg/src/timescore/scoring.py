"""Per-match point awards under the four scoring systems.

All awards are exact rationals (:class:`fractions.Fraction`); any decimal
you see in an output file is presentation-only rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .ingest import MatchRecord
from .timeline import SegmentBreakdown, segment


class ScoringSystem(enum.Enum):
    CLASSIC = "classic"
    TIME = "time"
    MIXED_HALF = "mixed"
    GOALDIFF_THIRD = "goaldiff"


@dataclass(frozen=True, slots=True)
class WeightTriple:
    """Weights applied to leading, level and trailing time (strictly ordered)."""

    alpha_w: Fraction
    alpha_d: Fraction
    alpha_l: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha_w", "alpha_d", "alpha_l"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not self.alpha_w > self.alpha_d > self.alpha_l:
            raise ValueError(
                f"weights must satisfy alpha_w > alpha_d > alpha_l, got "
                f"({self.alpha_w}, {self.alpha_d}, {self.alpha_l})"
            )

    @classmethod
    def from_string(cls, text: str) -> "WeightTriple":
        """Parse "W,D,L" where each part is an integer, decimal or fraction."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated weights, got {text!r}")
        return cls(*(Fraction(p.strip()) for p in parts))


DEFAULT_WEIGHTS = WeightTriple(Fraction(3), Fraction(1), Fraction(0))


@dataclass(frozen=True, slots=True)
class PointsAward:
    """Both sides' points for one match under one scoring system."""

    home_pts: Fraction
    away_pts: Fraction
    system: ScoringSystem


def final_result(goals_for: int, goals_against: int) -> int:
    """Match outcome on the 3/1/0 scale for the side scoring ``goals_for``."""
    if goals_for > goals_against:
        return 3
    if goals_for == goals_against:
        return 1
    return 0


def goal_diff_value(goals_for: int, goals_against: int) -> int:
    """Goal-difference bonus: 0 for a non-positive difference, else capped at 3."""
    return max(0, min(goals_for - goals_against, 3))


def time_points(seg: SegmentBreakdown, weights: WeightTriple = DEFAULT_WEIGHTS) -> PointsAward:
    """Weighted share of the match clock spent leading / level / trailing.

    home = (alpha_w*T_lead + alpha_d*T_level + alpha_l*T_trail) / T_match,
    and symmetrically for the away side. With the default (3, 1, 0) weights
    the two awards always sum to 3 - T_level/T_match.
    """
    w = weights
    home = (
        w.alpha_w * seg.t_win_home + w.alpha_d * seg.t_draw + w.alpha_l * seg.t_lose_home
    ) / seg.t_match
    away = (
        w.alpha_w * seg.t_win_away + w.alpha_d * seg.t_draw + w.alpha_l * seg.t_lose_away
    ) / seg.t_match
    return PointsAward(home, away, ScoringSystem.TIME)


def classic_points(match: MatchRecord) -> PointsAward:
    """Standard 3-for-a-win points from the final score."""
    hg, ag = match.final_score
    return PointsAward(
        Fraction(final_result(hg, ag)),
        Fraction(final_result(ag, hg)),
        ScoringSystem.CLASSIC,
    )


def _time_share(seg: SegmentBreakdown) -> tuple[Fraction, Fraction]:
    # Hybrid systems fix the time term at weights (3, 1, 0) regardless of any
    # configured triple.
    home = Fraction(3 * seg.t_win_home + seg.t_draw, seg.t_match)
    away = Fraction(3 * seg.t_win_away + seg.t_draw, seg.t_match)
    return home, away


def mixed_points(match: MatchRecord, seg: SegmentBreakdown | None = None) -> PointsAward:
    """Even blend: half the (3,1,0) time share plus half the final-result points."""
    seg = segment(match) if seg is None else seg
    time_home, time_away = _time_share(seg)
    hg, ag = match.final_score
    half = Fraction(1, 2)
    return PointsAward(
        half * (time_home + final_result(hg, ag)),
        half * (time_away + final_result(ag, hg)),
        ScoringSystem.MIXED_HALF,
    )


def goaldiff_points(match: MatchRecord, seg: SegmentBreakdown | None = None) -> PointsAward:
    """Equal thirds: (3,1,0) time share, final-result points, capped goal difference."""
    seg = segment(match) if seg is None else seg
    time_home, time_away = _time_share(seg)
    hg, ag = match.final_score
    third = Fraction(1, 3)
    return PointsAward(
        third * (time_home + final_result(hg, ag) + goal_diff_value(hg, ag)),
        third * (time_away + final_result(ag, hg) + goal_diff_value(ag, hg)),
        ScoringSystem.GOALDIFF_THIRD,
    )


def match_points(
    match: MatchRecord,
    system: ScoringSystem,
    weights: WeightTriple = DEFAULT_WEIGHTS,
    seg: SegmentBreakdown | None = None,
) -> PointsAward:
    """Dispatch to the requested system, computing the segment breakdown as needed."""
    if system is ScoringSystem.CLASSIC:
        return classic_points(match)
    seg = segment(match) if seg is None else seg
    if system is ScoringSystem.TIME:
        return time_points(seg, weights)
    if system is ScoringSystem.MIXED_HALF:
        return mixed_points(match, seg)
    if system is ScoringSystem.GOALDIFF_THIRD:
        return goaldiff_points(match, seg)
    raise ValueError(f"unknown scoring system: {system!r}")
