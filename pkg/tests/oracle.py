"""Independent brute-force reference for the exhaustive solver.

Deliberately naive: for every subset id it scans all n columns of every
item row, with no price index, no pruning, and no shared code with the
package. Operates on plain lists so it can double-check the real solver.
"""

from __future__ import annotations

from typing import Optional


def naive_assignment_cost(prices, members):
    """(acquisition, covered) for a member list; full column scan per item."""
    acquisition = 0
    covered = 0
    for row in prices:
        best: Optional[int] = None
        for j in members:
            p = row[j - 1]
            if p is not None and (best is None or p < best):
                best = p
        if best is not None:
            acquisition += best
            covered += 1
    return acquisition, covered


def naive_solve(prices, fixed_costs, *, full_coverage=True,
                required=frozenset(), forbidden=frozenset(), exact_k=None):
    """(best_total, best_id) over all admissible subsets, or None.

    Ties resolve to the smallest id because enumeration ascends and only
    strict improvements replace the incumbent.
    """
    m, n = len(prices), len(fixed_costs)
    best_total = None
    best_id = None
    for r in range(1, 2 ** n):
        members = [j for j in range(1, n + 1) if r >> (j - 1) & 1]
        if required and not required.issubset(members):
            continue
        if forbidden and forbidden.intersection(members):
            continue
        if exact_k is not None and len(members) != exact_k:
            continue
        acquisition, covered = naive_assignment_cost(prices, members)
        if full_coverage and covered < m:
            continue
        total = acquisition + sum(fixed_costs[j - 1] for j in members)
        if best_total is None or total < best_total:
            best_total = total
            best_id = r
    if best_total is None:
        return None
    return best_total, best_id


def naive_best_by_k(prices, fixed_costs, *, full_coverage=True):
    """{k: (best_total, best_id)} for each feasible exact subset size."""
    n = len(fixed_costs)
    result = {}
    for k in range(1, n + 1):
        entry = naive_solve(
            prices, fixed_costs, full_coverage=full_coverage, exact_k=k
        )
        if entry is not None:
            result[k] = entry
    return result
