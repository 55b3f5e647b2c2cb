"""Exact-to-decimal rendering. Core values stay rational; this is presentation only."""

from __future__ import annotations

from fractions import Fraction


def round_half_up(value: Fraction | int, decimals: int = 0) -> Fraction:
    """Round to ``decimals`` places, halves toward +infinity."""
    scale = 10**decimals
    shifted = Fraction(value) * scale
    return Fraction(
        (shifted.numerator * 2 + shifted.denominator) // (shifted.denominator * 2),
        scale,
    )


def format_decimal(value: Fraction | int, decimals: int = 2, *, comma: bool = False) -> str:
    """Fixed-point rendering of an exact rational, half-up.

    ``comma=True`` swaps the decimal point for a comma (the convention used in
    several European league tables).
    """
    scaled = round_half_up(value, decimals) * 10**decimals
    digits = scaled.numerator  # denominator is 1 by construction
    sign = "-" if digits < 0 else ""
    digits = abs(digits)
    if decimals == 0:
        text = f"{sign}{digits}"
    else:
        whole, frac = divmod(digits, 10**decimals)
        text = f"{sign}{whole}.{frac:0{decimals}d}"
    return text.replace(".", ",") if comma else text
