"""Minimum-cost completion of a vendor subset.

Given a subset, the cheapest solution assigns each item to the selected
vendor offering its lowest price; price ties go to the lowest vendor index
so results are deterministic. A per-item price index sorted by
(price, vendor) lets us take the first selected entry instead of scanning
all columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InfeasibleSubset
from .model import CoverageMode, Instance, Money, Solution, VendorSubset


@dataclass(frozen=True)
class ItemPriceIndex:
    """Per item: (vendor, price) pairs ascending by price, then vendor."""

    per_item: tuple[tuple[tuple[int, Money], ...], ...]

    def entries(self, item_index: int) -> tuple[tuple[int, Money], ...]:
        return self.per_item[item_index]


def build_price_index(instance: Instance) -> ItemPriceIndex:
    """Sort each item's bids by (price, vendor index). O(m * n log n)."""
    per_item = []
    for row in instance.prices:
        bids = [(j, p) for j, p in enumerate(row, start=1) if p is not None]
        bids.sort(key=lambda entry: (entry[1], entry[0]))
        per_item.append(tuple(bids))
    return ItemPriceIndex(per_item=tuple(per_item))


def build_solution(
    instance: Instance,
    subset: VendorSubset,
    coverage: CoverageMode = CoverageMode.FULL,
    index: Optional[ItemPriceIndex] = None,
) -> Solution:
    """The minimum-cost solution for the given vendor subset.

    Fixed cost is charged for every subset member, item wins or not. Under
    FULL coverage an uncovered item raises InfeasibleSubset; under PARTIAL
    it is left unassigned and only counted.
    """
    if index is None:
        index = build_price_index(instance)
    mask = subset.solution_id

    assignment: list[Optional[int]] = []
    acquisition = 0
    covered = 0
    for entries in index.per_item:
        chosen: Optional[int] = None
        for vendor, price in entries:
            if mask >> (vendor - 1) & 1:
                chosen = vendor
                acquisition += price
                covered += 1
                break
        assignment.append(chosen)

    if coverage is CoverageMode.FULL and covered < instance.m:
        uncovered = tuple(
            rec.id for rec, j in zip(instance.items, assignment) if j is None
        )
        raise InfeasibleSubset(
            f"subset {subset.sorted_members()} leaves {len(uncovered)} item(s) "
            f"uncovered: {', '.join(uncovered)}",
            uncovered=uncovered,
        )

    fixed = sum(instance.fixed_costs[j - 1] for j in subset.members)
    return Solution(
        instance=instance,
        subset=subset,
        assignment=tuple(assignment),
        acquisition_cost=acquisition,
        fixed_cost=fixed,
        total_cost=acquisition + fixed,
        items_covered=covered,
    )
