"""Exhaustive search over vendor subsets.

The optimum is found by evaluating the minimum-cost solution of every
nonempty vendor subset (2^n - 1 of them) and keeping the cheapest; among
equal-cost optima the smallest solution id wins, so results are
reproducible regardless of enumeration order, worker count, or pruning.

Required/forbidden vendors are handled by enumerating only subsets of the
free vendors with the required ones OR-ed in; the mapping is monotone, so
the sweep still visits candidates in ascending solution id. Workers own
disjoint contiguous id chunks and local incumbents; a single deterministic
merge picks min (total, id). Optional pruning skips a subset when its
committed fixed cost plus a global acquisition lower bound already meets
the incumbent; it can change counters, never the answer.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .assign import ItemPriceIndex, build_price_index, build_solution
from .errors import NoFeasibleSubset, SolveTimeout, TooManyVendors
from .model import Constraints, CoverageMode, Instance, Money, Solution, VendorSubset

DEFAULT_VENDOR_CAP = 24
_DEADLINE_STRIDE = 4096


@dataclass(frozen=True)
class SolverOptions:
    pruning: bool = False
    workers: int = 1
    vendor_cap: int = DEFAULT_VENDOR_CAP
    time_budget: Optional[float] = None  # seconds; None = unlimited

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not (1 <= self.vendor_cap <= 62):
            raise ValueError("vendor_cap must be within [1, 62]")


@dataclass(frozen=True)
class SolveReport:
    best: Solution
    best_id: int
    subsets_evaluated: int
    subsets_pruned: int
    subsets_infeasible: int
    wall_time: float
    constraints: Constraints = field(default_factory=Constraints)
    options: SolverOptions = field(default_factory=SolverOptions)


def lower_bound(instance: Instance, committed_fixed: Money = 0) -> Money:
    """Committed fixed cost plus the sum of per-item global minimum bids.

    No completion of a full-coverage solution can cost less: every item
    must pay at least its cheapest bid anywhere. Zero-bid items contribute
    nothing.
    """
    floor = committed_fixed
    for row in instance.prices:
        bids = [p for p in row if p is not None]
        if bids:
            floor += min(bids)
    return floor


def _item_walks(index: ItemPriceIndex) -> tuple:
    return tuple(
        tuple((1 << (vendor - 1), price) for vendor, price in entries)
        for entries in index.per_item
    )


def _scan_chunk(
    t_start: int,
    t_stop: int,
    req_mask: int,
    free_bits: Optional[list[int]],
    walks: tuple,
    fixed_by_bit: dict[int, Money],
    lo_k: int,
    hi_k: int,
    full: bool,
    m: int,
    pruning: bool,
    acq_floor: Money,
    deadline: Optional[float],
    track_per_k: bool,
):
    """Evaluate one contiguous id chunk; local incumbent, local counters."""
    best_total: Optional[Money] = None
    best_id = 0
    evaluated = pruned = infeasible = 0
    per_k: Optional[dict[int, tuple[Money, int]]] = {} if track_per_k else None

    for t in range(t_start, t_stop):
        if deadline is not None and t % _DEADLINE_STRIDE == 0:
            if time.perf_counter() > deadline:
                raise SolveTimeout("solve exceeded its time budget")

        if free_bits is None:
            mask = t
        else:
            mask = req_mask
            s = t
            while s:
                low = s & -s
                mask |= free_bits[low.bit_length() - 1]
                s ^= low

        k = mask.bit_count()
        if k < lo_k or k > hi_k:
            continue

        fx = 0
        s = mask
        while s:
            low = s & -s
            fx += fixed_by_bit[low]
            s ^= low

        if pruning and best_total is not None and fx + acq_floor >= best_total:
            pruned += 1
            continue

        acquisition = 0
        covered = 0
        for walk in walks:
            for bit, price in walk:
                if bit & mask:
                    acquisition += price
                    covered += 1
                    break

        if full and covered < m:
            infeasible += 1
            continue

        evaluated += 1
        total = acquisition + fx
        if best_total is None or total < best_total:
            best_total = total
            best_id = mask
        if per_k is not None:
            held = per_k.get(k)
            if held is None or (total, mask) < held:
                per_k[k] = (total, mask)

    return best_total, best_id, evaluated, pruned, infeasible, per_k


def _run_scan(
    instance: Instance,
    constraints: Constraints,
    options: SolverOptions,
    track_per_k: bool,
):
    """Shared enumeration driver for the solve and the cardinality sweep."""
    n = instance.n
    if n > options.vendor_cap:
        raise TooManyVendors(
            f"{n} vendors exceed the exhaustive cap of {options.vendor_cap}; "
            "raise vendor_cap or restrict the search with constraints"
        )
    constraints.validate(n)
    lo_k, hi_k = constraints.cardinality_bounds(n)

    index = build_price_index(instance)
    walks = _item_walks(index)
    fixed_by_bit = {
        1 << j: cost for j, cost in enumerate(instance.fixed_costs)
    }
    full = constraints.coverage is CoverageMode.FULL
    acq_floor = lower_bound(instance) if full else 0

    req_mask = 0
    for j in constraints.required:
        req_mask |= 1 << (j - 1)
    forb_mask = 0
    for j in constraints.forbidden:
        forb_mask |= 1 << (j - 1)

    deadline = (
        time.perf_counter() + options.time_budget
        if options.time_budget is not None
        else None
    )

    if req_mask == 0 and forb_mask == 0:
        free_bits = None  # fast path: the raw counter is the subset mask
        t_lo, t_hi = 1, 1 << n
    else:
        free_mask = ((1 << n) - 1) & ~req_mask & ~forb_mask
        free_bits = [1 << p for p in range(n) if free_mask >> p & 1]
        t_lo = 1 if req_mask == 0 else 0
        t_hi = 1 << len(free_bits)

    total_ids = t_hi - t_lo
    workers = min(options.workers, max(1, total_ids))
    bounds = [
        t_lo + (total_ids * w) // workers for w in range(workers + 1)
    ]
    chunks = [
        (bounds[w], bounds[w + 1]) for w in range(workers) if bounds[w] < bounds[w + 1]
    ]

    def scan(chunk: tuple[int, int]):
        return _scan_chunk(
            chunk[0],
            chunk[1],
            req_mask,
            free_bits,
            walks,
            fixed_by_bit,
            lo_k,
            hi_k,
            full,
            instance.m,
            options.pruning and not track_per_k,
            acq_floor,
            deadline,
            track_per_k,
        )

    if not chunks:
        results = []
    elif len(chunks) == 1:
        results = [scan(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(scan, chunks))

    best: Optional[tuple[Money, int]] = None
    evaluated = pruned = infeasible = 0
    per_k: dict[int, tuple[Money, int]] = {}
    for chunk_best, chunk_id, ev, pr, inf, chunk_per_k in results:
        evaluated += ev
        pruned += pr
        infeasible += inf
        if chunk_best is not None:
            candidate = (chunk_best, chunk_id)
            if best is None or candidate < best:
                best = candidate
        if chunk_per_k:
            for k, entry in chunk_per_k.items():
                held = per_k.get(k)
                if held is None or entry < held:
                    per_k[k] = entry

    return best, evaluated, pruned, infeasible, per_k, index


def solve_exhaustive(
    instance: Instance,
    constraints: Optional[Constraints] = None,
    options: Optional[SolverOptions] = None,
) -> SolveReport:
    """Global (or constrained) optimum over all admissible vendor subsets."""
    constraints = constraints or Constraints()
    options = options or SolverOptions()
    started = time.perf_counter()
    best, evaluated, pruned, infeasible, _, index = _run_scan(
        instance, constraints, options, track_per_k=False
    )
    if best is None:
        detail = ""
        if constraints.coverage is CoverageMode.FULL and instance.zero_bid_items:
            detail = (
                f" (items without any bid: {', '.join(instance.zero_bid_items)})"
            )
        raise NoFeasibleSubset(
            "no vendor subset satisfies the constraints and coverage mode" + detail
        )
    total, best_id = best
    solution = build_solution(
        instance,
        VendorSubset.of(j + 1 for j in range(instance.n) if best_id >> j & 1),
        coverage=constraints.coverage,
        index=index,
    )
    assert solution.total_cost == total
    return SolveReport(
        best=solution,
        best_id=best_id,
        subsets_evaluated=evaluated,
        subsets_pruned=pruned,
        subsets_infeasible=infeasible,
        wall_time=time.perf_counter() - started,
        constraints=constraints,
        options=options,
    )


def tabulate_cardinality_minima(
    instance: Instance,
    constraints: Optional[Constraints] = None,
    options: Optional[SolverOptions] = None,
) -> dict[int, tuple[Money, int]]:
    """Best (total, id) per subset size in one sweep.

    Pruning is ignored here: an incumbent for one size says nothing about
    another, so every candidate must be evaluated.
    """
    constraints = constraints or Constraints()
    options = options or SolverOptions()
    _, _, _, _, per_k, _ = _run_scan(
        instance, constraints, options, track_per_k=True
    )
    return per_k
