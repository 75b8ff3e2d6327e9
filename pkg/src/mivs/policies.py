"""Baseline procurement policies to compare the optimum against.

Two conventional policies: award everything to the single vendor with the
least total purchasing cost, or buy each item from whichever vendor bid
lowest on it. Both are usually more expensive than the optimum once fixed
vendor handling costs are accounted for.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .assign import build_price_index, build_solution
from .errors import NoFullCoverageVendor, UncoveredItem
from .model import CoverageMode, Instance, Money, Solution, VendorSubset


class PolicyKind(enum.Enum):
    SINGLE_VENDOR = "single_vendor"
    CHEAPEST_PER_ITEM = "cheapest_per_item"


@dataclass(frozen=True)
class VendorRanking:
    """One row of the single-vendor comparison table."""

    vendor: int
    purchasing_cost: Money  # sum of this vendor's bids
    items_bid: int
    full_coverage: bool


@dataclass(frozen=True)
class PolicyResult:
    kind: PolicyKind
    solution: Solution
    ranking: tuple[VendorRanking, ...] = ()


def policy_single_vendor(instance: Instance) -> PolicyResult:
    """Award the whole order to one vendor.

    Only vendors bidding on every item qualify; they are ranked by
    purchasing cost alone (ties to the lower index), and the winner's
    fixed cost is added when reporting the total.
    """
    rows = []
    for j in range(1, instance.n + 1):
        bids = [row[j - 1] for row in instance.prices if row[j - 1] is not None]
        rows.append(
            VendorRanking(
                vendor=j,
                purchasing_cost=sum(bids),
                items_bid=len(bids),
                full_coverage=len(bids) == instance.m,
            )
        )
    eligible = [r for r in rows if r.full_coverage]
    if not eligible:
        raise NoFullCoverageVendor("no single vendor bids on every item")
    eligible.sort(key=lambda r: (r.purchasing_cost, r.vendor))
    others = sorted((r for r in rows if not r.full_coverage), key=lambda r: r.vendor)
    winner = eligible[0]
    solution = build_solution(
        instance, VendorSubset.of([winner.vendor]), coverage=CoverageMode.FULL
    )
    return PolicyResult(
        kind=PolicyKind.SINGLE_VENDOR,
        solution=solution,
        ranking=tuple(eligible + others),
    )


def policy_cheapest_per_item(instance: Instance) -> PolicyResult:
    """Buy each item from its globally cheapest bidder (lowest index on ties).

    Fixed cost is charged only for vendors that actually win an item, so
    the result equals the all-vendors assignment with the losing vendors'
    fixed costs dropped.
    """
    missing = instance.zero_bid_items
    if missing:
        raise UncoveredItem(
            f"no vendor bids on: {', '.join(missing)}", items=missing
        )
    index = build_price_index(instance)
    everyone = build_solution(
        instance,
        VendorSubset.of(range(1, instance.n + 1)),
        coverage=CoverageMode.FULL,
        index=index,
    )
    winners = everyone.effective_members
    solution = build_solution(
        instance, VendorSubset(winners), coverage=CoverageMode.FULL, index=index
    )
    return PolicyResult(kind=PolicyKind.CHEAPEST_PER_ITEM, solution=solution)
