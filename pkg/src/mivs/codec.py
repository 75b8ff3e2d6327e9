"""Bijection between solution ids and vendor subsets.

Every nonempty subset of n vendors is named by an integer r in
[1, 2^n - 1]: bit (j-1) of r is set exactly when vendor j is selected.
Vendor 1 lives in the least significant bit, so r = 10 with n = 5 selects
vendors {2, 4} and r = 784 with n = 10 selects vendors {5, 9, 10}.
"""

from __future__ import annotations

from typing import Iterable

from .errors import EmptySubset, IndexOutOfRange, OutOfRange, UnsupportedWidth
from .model import VendorSubset

# Ids are kept within 62 bits so they stay exact in any 64-bit signed
# integer representation a caller might round-trip through.
MAX_WIDTH = 62


def _check_width(n: int) -> None:
    if n < 1:
        raise OutOfRange(f"vendor count must be >= 1, got {n}")
    if n > MAX_WIDTH:
        raise UnsupportedWidth(f"vendor count {n} exceeds the {MAX_WIDTH}-bit id width")


def decode_subset(r: int, n: int) -> VendorSubset:
    """Vendor subset named by solution id r among n vendors."""
    _check_width(n)
    if not (1 <= r <= (1 << n) - 1):
        raise OutOfRange(f"solution id {r} outside [1, 2^{n} - 1]")
    return VendorSubset(frozenset(j for j in range(1, n + 1) if r >> (j - 1) & 1))


def encode_subset(members: Iterable[int], n: int) -> int:
    """Solution id of a vendor subset; exact inverse of decode_subset."""
    _check_width(n)
    member_set = frozenset(members)
    if not member_set:
        raise EmptySubset("cannot encode an empty vendor subset")
    r = 0
    for j in member_set:
        if not (1 <= j <= n):
            raise IndexOutOfRange(f"vendor index {j} outside 1..{n}")
        r |= 1 << (j - 1)
    return r
