"""Scaling benchmark over generated instances.

Runs the exhaustive solver on an (n, m) grid and reports median wall time
per cell. Time grows roughly linearly in the item count and doubles per
added vendor, which the benchmark makes visible.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Iterable

from .io import generate_instance
from .solver import SolverOptions, solve_exhaustive


@dataclass(frozen=True)
class BenchRecord:
    n: int
    m: int
    workers: int
    pruning: bool
    subsets_evaluated: int
    wall_time_ms: float


def run_bench(
    vendor_counts: Iterable[int],
    item_counts: Iterable[int],
    workers: int = 1,
    repetitions: int = 3,
    pruning: bool = False,
    bid_density: float = 1.0,
    vendor_cap: int = 24,
) -> list[BenchRecord]:
    """One record per (n, m) cell; wall time is the median over repetitions.

    Instances are generated deterministically per cell, so everything but
    the timing is identical across repetitions (asserted).
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    options = SolverOptions(pruning=pruning, workers=workers, vendor_cap=vendor_cap)
    records = []
    for n in vendor_counts:
        for m in item_counts:
            instance = generate_instance(
                m=m, n=n, seed=1000 * n + m, bid_density=bid_density
            )
            times = []
            evaluated = None
            for _ in range(repetitions):
                report = solve_exhaustive(instance, options=options)
                if evaluated is None:
                    evaluated = report.subsets_evaluated
                elif evaluated != report.subsets_evaluated:
                    raise AssertionError("benchmark repetitions disagree on counts")
                times.append(report.wall_time * 1000.0)
            records.append(
                BenchRecord(
                    n=n,
                    m=m,
                    workers=workers,
                    pruning=pruning,
                    subsets_evaluated=evaluated,
                    wall_time_ms=statistics.median(times),
                )
            )
    return records


def bench_csv(records: Iterable[BenchRecord]) -> str:
    lines = ["n,m,workers,pruning,subsets_evaluated,wall_time_ms"]
    for r in records:
        pruning = "true" if r.pruning else "false"
        lines.append(
            f"{r.n},{r.m},{r.workers},{pruning},{r.subsets_evaluated},"
            f"{r.wall_time_ms:.3f}"
        )
    return "\n".join(lines) + "\n"
