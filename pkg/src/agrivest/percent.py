"""Exact conversion between internal fractions and human percent units.

Files and wire formats carry benefit percentages the way people write them
(3 means 3%); internally everything is a fraction in [0, 1]. Going through
decimal strings keeps the conversion exact for any value that originated
as a decimal, so documents round-trip byte-for-byte.
"""
from __future__ import annotations

from decimal import Decimal


def fraction_to_percent(fraction: float) -> float:
    return float(Decimal(repr(fraction)) * 100)


def percent_to_fraction(percent: float) -> float:
    return float(Decimal(repr(percent)) / 100)
