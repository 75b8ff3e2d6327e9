"""Domain model for multi-item vendor selection.

An instance is an items x vendors matrix of bid prices (absent cell = no
bid) plus one fixed handling cost per vendor. A solution selects a nonempty
vendor subset, assigns each item to its cheapest selected bidder, and pays
the fixed cost of every selected vendor whether or not it wins items.

Instances are immutable after validation and safe to share across threads;
every operation in this module is a pure function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    BadConstraint,
    BadParameters,
    ConflictingConstraints,
    DimensionMismatch,
    DuplicateId,
    EmptyInstance,
    EmptySubset,
    IndexOutOfRange,
    NegativeFixedCost,
    NonPositivePrice,
)
from .money import Money


class CoverageMode(enum.Enum):
    """FULL requires every item to be assignable; PARTIAL reports coverage."""

    FULL = "full"
    PARTIAL = "partial"


@dataclass(frozen=True)
class ItemRecord:
    id: str
    name: str


@dataclass(frozen=True)
class VendorRecord:
    id: str
    name: str


@dataclass(frozen=True)
class Instance:
    """A validated bid matrix. Construct via validate_instance().

    prices[i][j] is the bid of vendor j+1 on item i+1 in minor units, or
    None where the vendor did not bid.
    """

    items: tuple[ItemRecord, ...]
    vendors: tuple[VendorRecord, ...]
    prices: tuple[tuple[Optional[Money], ...], ...]
    fixed_costs: tuple[Money, ...]
    bid_counts: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.items)

    @property
    def n(self) -> int:
        return len(self.vendors)

    @property
    def zero_bid_items(self) -> tuple[str, ...]:
        """Ids of items nobody bids on (accepted at load, surfaced at solve)."""
        return tuple(
            rec.id for rec, count in zip(self.items, self.bid_counts) if count == 0
        )

    def vendor_index(self, vendor_id: str) -> int:
        """1-based index for a vendor id; raises BadConstraint if unknown."""
        for j, rec in enumerate(self.vendors, start=1):
            if rec.id == vendor_id:
                return j
        raise BadConstraint(f"unknown vendor: {vendor_id!r}")


@dataclass(frozen=True)
class VendorSubset:
    """A nonempty set of 1-based vendor indices.

    The solution id doubles as the bitmask: bit (j-1) set <=> vendor j
    selected, so vendor 1 sits in the least significant bit.
    """

    members: frozenset[int]

    def __post_init__(self) -> None:
        if not self.members:
            raise EmptySubset("vendor subset must be nonempty")
        for j in self.members:
            if not isinstance(j, int) or j < 1:
                raise IndexOutOfRange(f"vendor index must be a positive int: {j!r}")

    @classmethod
    def of(cls, members: Iterable[int]) -> "VendorSubset":
        return cls(frozenset(members))

    @property
    def solution_id(self) -> int:
        return sum(1 << (j - 1) for j in self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class Solution:
    """A vendor subset together with its minimum-cost item assignment.

    assignment[i] is the 1-based vendor index supplying item i+1, or None
    when no selected vendor bids on it. Fixed cost is charged for every
    subset member, including ones winning zero items.
    """

    instance: Instance
    subset: VendorSubset
    assignment: tuple[Optional[int], ...]
    acquisition_cost: Money
    fixed_cost: Money
    total_cost: Money
    items_covered: int

    @property
    def effective_members(self) -> frozenset[int]:
        """Vendors actually winning at least one item."""
        return frozenset(j for j in self.assignment if j is not None)

    @property
    def uncovered_items(self) -> tuple[str, ...]:
        return tuple(
            rec.id
            for rec, j in zip(self.instance.items, self.assignment)
            if j is None
        )


Cardinality = Union[int, tuple[int, int], None]


@dataclass(frozen=True)
class Constraints:
    """What-if restrictions on the vendor subset."""

    required: frozenset[int] = frozenset()
    forbidden: frozenset[int] = frozenset()
    cardinality: Cardinality = None
    coverage: CoverageMode = CoverageMode.FULL

    @property
    def is_trivial(self) -> bool:
        """True when nothing restricts the subset (coverage mode aside)."""
        return not self.required and not self.forbidden and self.cardinality is None

    def cardinality_bounds(self, n: int) -> tuple[int, int]:
        """Normalized inclusive (lo, hi) for the subset size."""
        if self.cardinality is None:
            return 1, n
        if isinstance(self.cardinality, int):
            lo = hi = self.cardinality
        else:
            lo, hi = self.cardinality
        if not (1 <= lo <= hi <= n):
            raise BadConstraint(
                f"cardinality bounds ({lo}, {hi}) must lie within [1, {n}]"
            )
        return lo, hi

    def validate(self, n: int) -> None:
        for j in self.required | self.forbidden:
            if not (1 <= j <= n):
                raise BadConstraint(f"vendor index {j} outside 1..{n}")
        overlap = self.required & self.forbidden
        if overlap:
            raise ConflictingConstraints(
                f"vendors both required and forbidden: {sorted(overlap)}"
            )
        self.cardinality_bounds(n)


def _as_records(raw: Sequence, cls) -> tuple:
    records = []
    for entry in raw:
        if isinstance(entry, cls):
            records.append(entry)
        elif isinstance(entry, str):
            records.append(cls(id=entry, name=entry))
        else:
            rid, name = entry
            records.append(cls(id=rid, name=name))
    return tuple(records)


def validate_instance(
    items: Sequence,
    vendors: Sequence,
    prices: Sequence[Sequence[Optional[Money]]],
    fixed_costs: Sequence[Money],
) -> Instance:
    """Validate raw data into an immutable Instance.

    Items and vendors may be given as id strings, (id, name) pairs, or
    records. Zero-bid items are accepted and flagged; they only become an
    error when a full-coverage solve is attempted.
    """
    item_records = _as_records(items, ItemRecord)
    vendor_records = _as_records(vendors, VendorRecord)
    m, n = len(item_records), len(vendor_records)
    if m == 0 or n == 0:
        raise EmptyInstance(f"need at least one item and one vendor (m={m}, n={n})")

    for rec in item_records + vendor_records:
        if not rec.id:
            raise BadParameters("ids must be non-empty text")
    seen: set[str] = set()
    for rec in item_records:
        if rec.id in seen:
            raise DuplicateId(f"duplicate item id: {rec.id!r}")
        seen.add(rec.id)
    seen.clear()
    for rec in vendor_records:
        if rec.id in seen:
            raise DuplicateId(f"duplicate vendor id: {rec.id!r}")
        seen.add(rec.id)

    if len(prices) != m:
        raise DimensionMismatch(f"expected {m} price rows, got {len(prices)}")
    if len(fixed_costs) != n:
        raise DimensionMismatch(
            f"expected {n} fixed costs, got {len(fixed_costs)}"
        )

    rows = []
    bid_counts = []
    for i, row in enumerate(prices):
        if len(row) != n:
            raise DimensionMismatch(
                f"price row {i + 1} has {len(row)} cells, expected {n}"
            )
        cells = []
        count = 0
        for j, price in enumerate(row):
            if price is None:
                cells.append(None)
                continue
            if price <= 0:
                raise NonPositivePrice(
                    f"price for item {item_records[i].id!r} from vendor "
                    f"{vendor_records[j].id!r} must be positive, got {price}"
                )
            cells.append(int(price))
            count += 1
        rows.append(tuple(cells))
        bid_counts.append(count)

    costs = []
    for j, cost in enumerate(fixed_costs):
        if cost < 0:
            raise NegativeFixedCost(
                f"fixed cost for vendor {vendor_records[j].id!r} is negative"
            )
        costs.append(int(cost))

    return Instance(
        items=item_records,
        vendors=vendor_records,
        prices=tuple(rows),
        fixed_costs=tuple(costs),
        bid_counts=tuple(bid_counts),
    )


def cost_accounting(
    acquisition: Money, vendor_count: int, per_vendor_fixed: Money
) -> Money:
    """Total cost = acquisition + vendor_count * per-vendor fixed cost."""
    if acquisition < 0 or vendor_count < 0 or per_vendor_fixed < 0:
        raise BadParameters("cost accounting inputs must be non-negative")
    return acquisition + vendor_count * per_vendor_fixed
