"""Decision-support layer: cost-vs-vendor-count curve and solution diffs.

The curve answers "what does one more (or one fewer) vendor cost?" by
finding the best solution at each exact subset size. Two evaluation routes
exist and must agree: one constrained solve per size, or a single
enumeration sweep bucketing candidates by size.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .assign import build_solution
from .errors import InstanceMismatch, NoFeasibleSubset
from .model import Constraints, Instance, Money, Solution, VendorSubset
from .solver import SolverOptions, solve_exhaustive, tabulate_cardinality_minima


@dataclass(frozen=True)
class CurveEntry:
    k: int
    solution: Optional[Solution]  # None = no feasible subset of this size

    @property
    def feasible(self) -> bool:
        return self.solution is not None


@dataclass(frozen=True)
class CostCurve:
    entries: tuple[CurveEntry, ...]
    optimum_k: int
    optimum_total: Money
    optimum_id: int

    def entry(self, k: int) -> CurveEntry:
        return self.entries[k - 1]


def cost_curve(
    instance: Instance,
    constraints: Optional[Constraints] = None,
    options: Optional[SolverOptions] = None,
    method: str = "per_k",
) -> CostCurve:
    """Best solution for each exact vendor count k = 1..n.

    Sizes excluded by the base constraints (or with no covering subset)
    are marked infeasible. method="sweep" buckets one enumeration pass by
    subset size instead of running n constrained solves; both agree.
    """
    constraints = constraints or Constraints()
    options = options or SolverOptions()
    constraints.validate(instance.n)
    lo_k, hi_k = constraints.cardinality_bounds(instance.n)

    if method == "per_k":
        entries = []
        for k in range(1, instance.n + 1):
            if not (lo_k <= k <= hi_k):
                entries.append(CurveEntry(k=k, solution=None))
                continue
            try:
                report = solve_exhaustive(
                    instance, replace(constraints, cardinality=k), options
                )
                entries.append(CurveEntry(k=k, solution=report.best))
            except NoFeasibleSubset:
                entries.append(CurveEntry(k=k, solution=None))
    elif method == "sweep":
        per_k = tabulate_cardinality_minima(instance, constraints, options)
        entries = []
        for k in range(1, instance.n + 1):
            held = per_k.get(k)
            if held is None:
                entries.append(CurveEntry(k=k, solution=None))
            else:
                _, best_id = held
                subset = VendorSubset.of(
                    j + 1 for j in range(instance.n) if best_id >> j & 1
                )
                entries.append(
                    CurveEntry(
                        k=k,
                        solution=build_solution(
                            instance, subset, coverage=constraints.coverage
                        ),
                    )
                )
    else:
        raise ValueError(f"unknown curve method: {method!r}")

    feasible = [e for e in entries if e.solution is not None]
    if not feasible:
        raise NoFeasibleSubset("no vendor count admits a feasible subset")
    best = min(
        feasible, key=lambda e: (e.solution.total_cost, e.solution.subset.solution_id)
    )
    return CostCurve(
        entries=tuple(entries),
        optimum_k=best.k,
        optimum_total=best.solution.total_cost,
        optimum_id=best.solution.subset.solution_id,
    )


@dataclass(frozen=True)
class SolutionDelta:
    """Changes when moving from solution a to solution b (b minus a)."""

    total_delta: Money
    acquisition_delta: Money
    fixed_delta: Money
    vendors_entering: frozenset[int]
    vendors_leaving: frozenset[int]
    items_reassigned: tuple[tuple[str, Optional[int], Optional[int]], ...]


def compare_solutions(a: Solution, b: Solution) -> SolutionDelta:
    """Delta report for moving from a to b; numeric deltas are b - a."""
    if a.instance is not b.instance and a.instance != b.instance:
        raise InstanceMismatch("solutions come from different instances")
    reassigned = tuple(
        (rec.id, va, vb)
        for rec, va, vb in zip(a.instance.items, a.assignment, b.assignment)
        if va != vb
    )
    return SolutionDelta(
        total_delta=b.total_cost - a.total_cost,
        acquisition_delta=b.acquisition_cost - a.acquisition_cost,
        fixed_delta=b.fixed_cost - a.fixed_cost,
        vendors_entering=b.subset.members - a.subset.members,
        vendors_leaving=a.subset.members - b.subset.members,
        items_reassigned=reassigned,
    )
