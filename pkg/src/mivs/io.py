"""CSV ingestion, canonical JSON emission, and synthetic instances.

The bid CSV format: header row "item" followed by vendor names, one row
per item with blank cells meaning "no bid", and a final row whose item id
is FIXED_COST carrying the per-vendor fixed costs. Prices use '.' decimals
with at most two places; no thousands separators, no locale formats.

All JSON documents are produced here and nowhere else, with fixed key
order, so the CLI and the HTTP service return byte-identical payloads.
Money is serialized as strings in major units ("127.00") to keep cents
safe from float-parsing readers. Wall-clock time is deliberately left out
of solution documents so repeated runs serialize identically.
"""

from __future__ import annotations

import csv
import io as _io
import json
import random
from typing import Optional

from .errors import BadParameters, MalformedCsv
from .model import Instance, validate_instance
from .money import format_money, format_signed_money, parse_money
from .policies import PolicyResult
from .solver import SolveReport
from .whatif import CostCurve, SolutionDelta

FIXED_COST_MARKER = "FIXED_COST"


def parse_bid_csv(text: str) -> Instance:
    """Parse bid-matrix CSV text into a validated Instance."""
    rows = [row for row in csv.reader(_io.StringIO(text))]
    rows = [row for row in rows if any(cell.strip() for cell in row)]
    if len(rows) < 3:
        raise MalformedCsv(
            "need a header, at least one item row, and a FIXED_COST row"
        )

    header = [cell.strip() for cell in rows[0]]
    if not header or header[0].lower() != "item":
        raise MalformedCsv('header must start with an "item" column')
    vendor_names = header[1:]
    if not vendor_names:
        raise MalformedCsv("header names no vendors")
    if any(not name for name in vendor_names):
        raise MalformedCsv("vendor names must be non-empty")
    if len(set(vendor_names)) != len(vendor_names):
        raise MalformedCsv("duplicate vendor names in header")
    n = len(vendor_names)

    body = rows[1:]
    marker_rows = [i for i, row in enumerate(body) if row[0].strip() == FIXED_COST_MARKER]
    if not marker_rows:
        raise MalformedCsv(f"missing {FIXED_COST_MARKER} row")
    if marker_rows != [len(body) - 1]:
        raise MalformedCsv(f"{FIXED_COST_MARKER} must be the single final row")

    item_rows, fixed_row = body[:-1], body[-1]
    if not item_rows:
        raise MalformedCsv("no item rows before the FIXED_COST row")
    if len(fixed_row) != n + 1:
        raise MalformedCsv(
            f"{FIXED_COST_MARKER} row has {len(fixed_row) - 1} cells, expected {n}"
        )

    item_ids = []
    prices = []
    for lineno, row in enumerate(item_rows, start=2):
        if len(row) != n + 1:
            raise MalformedCsv(
                f"row {lineno} has {len(row) - 1} price cells, expected {n}"
            )
        item_id = row[0].strip()
        if not item_id:
            raise MalformedCsv(f"row {lineno} has an empty item id")
        item_ids.append(item_id)
        prices.append(
            tuple(
                parse_money(cell) if cell.strip() else None for cell in row[1:]
            )
        )

    fixed_costs = []
    for j, cell in enumerate(fixed_row[1:]):
        if not cell.strip():
            raise MalformedCsv(
                f"missing fixed cost for vendor {vendor_names[j]!r}"
            )
        fixed_costs.append(parse_money(cell))

    return validate_instance(item_ids, vendor_names, prices, fixed_costs)


def write_bid_csv(instance: Instance) -> str:
    """Canonical CSV for an instance; parse(write(x)) == x."""
    out = _io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["item"] + [v.id for v in instance.vendors])
    for rec, row in zip(instance.items, instance.prices):
        writer.writerow(
            [rec.id] + [format_money(p) if p is not None else "" for p in row]
        )
    writer.writerow([FIXED_COST_MARKER] + [format_money(c) for c in instance.fixed_costs])
    return out.getvalue()


# --- JSON documents ---------------------------------------------------------


def _dump(document: dict) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)


def _solution_body(solution) -> dict:
    instance = solution.instance
    return {
        "solution_id": solution.subset.solution_id,
        "vendors": [instance.vendors[j - 1].id for j in solution.subset.sorted_members()],
        "assignments": [
            {
                "item": rec.id,
                "vendor": instance.vendors[j - 1].id if j is not None else None,
                "price": format_money(instance.prices[i][j - 1]) if j is not None else None,
            }
            for i, (rec, j) in enumerate(zip(instance.items, solution.assignment))
        ],
        "acquisition_cost": format_money(solution.acquisition_cost),
        "fixed_cost": format_money(solution.fixed_cost),
        "total_cost": format_money(solution.total_cost),
        "items_covered": solution.items_covered,
    }


def _delta_body(delta: SolutionDelta, instance: Instance) -> dict:
    return {
        "total": format_signed_money(delta.total_delta),
        "acquisition": format_signed_money(delta.acquisition_delta),
        "fixed": format_signed_money(delta.fixed_delta),
        "vendors_entering": [
            instance.vendors[j - 1].id for j in sorted(delta.vendors_entering)
        ],
        "vendors_leaving": [
            instance.vendors[j - 1].id for j in sorted(delta.vendors_leaving)
        ],
        "items_reassigned": len(delta.items_reassigned),
    }


def solution_report_json(
    report: SolveReport, delta_vs_unconstrained: Optional[SolutionDelta] = None
) -> str:
    """Canonical solve-result document.

    When the solve was constrained, the caller passes the delta against
    the unconstrained optimum and it is embedded verbatim, so interactive
    clients never have to do money arithmetic themselves.
    """
    document = _solution_body(report.best)
    if delta_vs_unconstrained is not None:
        document["delta_vs_unconstrained"] = _delta_body(
            delta_vs_unconstrained, report.best.instance
        )
    document["stats"] = {
        "subsets_evaluated": report.subsets_evaluated,
        "subsets_pruned": report.subsets_pruned,
        "subsets_infeasible": report.subsets_infeasible,
        "workers": report.options.workers,
        "pruning": report.options.pruning,
    }
    return _dump(document)


def curve_json(curve: CostCurve, instance: Instance) -> str:
    entries = []
    for entry in curve.entries:
        if entry.solution is None:
            entries.append({"k": entry.k, "feasible": False})
            continue
        s = entry.solution
        entries.append(
            {
                "k": entry.k,
                "feasible": True,
                "solution_id": s.subset.solution_id,
                "vendors": [instance.vendors[j - 1].id for j in s.subset.sorted_members()],
                "acquisition_cost": format_money(s.acquisition_cost),
                "fixed_cost": format_money(s.fixed_cost),
                "total_cost": format_money(s.total_cost),
                "items_covered": s.items_covered,
            }
        )
    return _dump(
        {
            "entries": entries,
            "optimum": {
                "k": curve.optimum_k,
                "total_cost": format_money(curve.optimum_total),
                "solution_id": curve.optimum_id,
            },
        }
    )


def policies_json(
    single_vendor: Optional[PolicyResult],
    cheapest_per_item: PolicyResult,
    instance: Instance,
) -> str:
    """Both baseline policies; single_vendor=None means none qualifies."""
    if single_vendor is None:
        alt1: dict = {"feasible": False, "reason": "no vendor bids on every item"}
    else:
        alt1 = {
            "feasible": True,
            "ranking": [
                {
                    "vendor": instance.vendors[row.vendor - 1].id,
                    "purchasing_cost": format_money(row.purchasing_cost),
                    "items_bid": row.items_bid,
                    "full_coverage": row.full_coverage,
                }
                for row in single_vendor.ranking
            ],
            "solution": _solution_body(single_vendor.solution),
        }
    return _dump(
        {
            "single_vendor": alt1,
            "cheapest_per_item": {
                "feasible": True,
                "solution": _solution_body(cheapest_per_item.solution),
            },
        }
    )


def instance_descriptor(instance: Instance, instance_id: str) -> dict:
    return {
        "id": instance_id,
        "m": instance.m,
        "n": instance.n,
        "vendors": [v.id for v in instance.vendors],
        "flagged_items": list(instance.zero_bid_items),
    }


def descriptor_json(instance: Instance, instance_id: str) -> str:
    return _dump(instance_descriptor(instance, instance_id))


# --- synthetic instances -----------------------------------------------------


def generate_instance(
    m: int,
    n: int,
    seed: int,
    price_range: tuple[int, int] = (100, 9999),
    fixed_range: tuple[int, int] = (500, 5000),
    bid_density: float = 1.0,
) -> Instance:
    """Deterministic random instance; every item gets at least one bid.

    Prices and fixed costs are uniform integers (minor units) in their
    inclusive ranges.
    """
    if m < 1 or n < 1:
        raise BadParameters("m and n must be >= 1")
    if not (0 < bid_density <= 1):
        raise BadParameters("bid_density must be in (0, 1]")
    lo_p, hi_p = price_range
    lo_f, hi_f = fixed_range
    if lo_p < 1 or hi_p < lo_p:
        raise BadParameters("price_range must be positive and ordered")
    if lo_f < 0 or hi_f < lo_f:
        raise BadParameters("fixed_range must be non-negative and ordered")

    rng = random.Random(seed)
    prices = []
    for i in range(m):
        bids = [rng.random() < bid_density for _ in range(n)]
        if not any(bids):
            bids[rng.randrange(n)] = True
        prices.append(
            tuple(rng.randint(lo_p, hi_p) if bid else None for bid in bids)
        )
    fixed_costs = [rng.randint(lo_f, hi_f) for _ in range(n)]
    items = [f"I{i + 1}" for i in range(m)]
    vendors = [f"V{j + 1}" for j in range(n)]
    return validate_instance(items, vendors, prices, fixed_costs)
