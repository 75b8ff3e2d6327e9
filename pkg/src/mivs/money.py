"""Exact money handling.

All amounts are integer counts of minor currency units (cents). Python
integers are arbitrary precision, so sums of any realistic size stay exact;
no rounding happens anywhere after parse time.
"""

from __future__ import annotations

import re

from .errors import BadNumber

# Money is a plain int of minor units. The alias exists for signatures.
Money = int

MINOR_PER_MAJOR = 100

_MONEY_RE = re.compile(r"^(\d+)(?:\.(\d{1,2}))?$")


def parse_money(text: str) -> Money:
    """Parse a decimal amount ("19", "19.5", "19.50") into minor units.

    Rejects negatives, thousands separators, exponents and more than two
    decimal places.
    """
    match = _MONEY_RE.match(text.strip())
    if match is None:
        raise BadNumber(f"not a money amount: {text!r}")
    whole, frac = match.group(1), match.group(2) or ""
    return int(whole) * MINOR_PER_MAJOR + int(frac.ljust(2, "0") or 0)


def format_money(amount: Money) -> str:
    """Render minor units as major units with exactly two decimals."""
    if amount < 0:
        return "-" + format_money(-amount)
    major, minor = divmod(amount, MINOR_PER_MAJOR)
    return f"{major}.{minor:02d}"


def format_signed_money(delta: Money) -> str:
    """Like format_money but with an explicit sign for nonzero deltas."""
    if delta > 0:
        return "+" + format_money(delta)
    return format_money(delta)
