"""HTTP facade over the solver and what-if layer.

Instances are uploaded as CSV, held immutably in a bounded in-memory
registry (oldest evicted first), and queried read-only, so concurrent
requests against one id always agree. Solves run synchronously under a
time budget; responses reuse the canonical JSON writers, which keeps
service payloads byte-identical to CLI output.

Endpoints:
    POST /api/instances               text/csv body -> 201 descriptor
    GET  /api/instances/{id}          descriptor
    GET  /api/instances/{id}/optimum  ?require=&forbid=&k=&coverage=
    GET  /api/instances/{id}/curve    ?require=&forbid=&coverage=
    GET  /api/instances/{id}/policies
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import io as io_mod
from .errors import (
    BadConstraint,
    ConflictingConstraints,
    InfeasibleSubset,
    MivsError,
    NoFeasibleSubset,
    NoFullCoverageVendor,
    SolveTimeout,
    TooManyVendors,
    UncoveredItem,
)
from .model import Constraints, CoverageMode, Instance
from .policies import policy_cheapest_per_item, policy_single_vendor
from .solver import SolverOptions, solve_exhaustive
from .whatif import compare_solutions, cost_curve


class InstanceRegistry:
    """Bounded id -> Instance store; oldest entry evicted at capacity."""

    def __init__(self, max_instances: int):
        self._max = max_instances
        self._entries: "OrderedDict[str, Instance]" = OrderedDict()
        self._lock = threading.Lock()

    def add(self, instance: Instance) -> str:
        instance_id = uuid.uuid4().hex[:12]
        with self._lock:
            self._entries[instance_id] = instance
            while len(self._entries) > self._max:
                self._entries.popitem(last=False)
        return instance_id

    def get(self, instance_id: str) -> Optional[Instance]:
        with self._lock:
            return self._entries.get(instance_id)


def _error_json(status: int, exc: Exception) -> JSONResponse:
    body = {"error": type(exc).__name__, "detail": str(exc)}
    uncovered = getattr(exc, "uncovered", None) or getattr(exc, "items", None)
    if uncovered:
        body["uncovered_items"] = list(uncovered)
    return JSONResponse(status_code=status, content=body)


def _parse_vendor_list(instance: Instance, raw: Optional[str]) -> frozenset[int]:
    if not raw:
        return frozenset()
    indices = set()
    for piece in raw.split(","):
        piece = piece.strip()
        if piece:
            indices.add(instance.vendor_index(piece))
    return frozenset(indices)


def _parse_constraints(
    instance: Instance,
    require: Optional[str],
    forbid: Optional[str],
    k: Optional[int],
    coverage: Optional[str],
) -> Constraints:
    if coverage is None or coverage == "full":
        mode = CoverageMode.FULL
    elif coverage == "partial":
        mode = CoverageMode.PARTIAL
    else:
        raise BadConstraint(f"coverage must be full or partial, got {coverage!r}")
    constraints = Constraints(
        required=_parse_vendor_list(instance, require),
        forbidden=_parse_vendor_list(instance, forbid),
        cardinality=k,
        coverage=mode,
    )
    constraints.validate(instance.n)
    return constraints


def create_app(
    max_instances: int = 64,
    time_budget: Optional[float] = 30.0,
    vendor_cap: int = 24,
    workers: int = 1,
    cors_origins: tuple[str, ...] = ("*",),
    ui_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="mivs", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = InstanceRegistry(max_instances)
    options = SolverOptions(
        workers=workers, vendor_cap=vendor_cap, time_budget=time_budget
    )

    def json_response(text: str, status: int = 200) -> Response:
        return Response(
            content=text, status_code=status, media_type="application/json"
        )

    @app.post("/api/instances")
    async def create_instance(request: Request):
        raw = await request.body()
        try:
            instance = io_mod.parse_bid_csv(raw.decode("utf-8"))
        except UnicodeDecodeError as exc:
            return _error_json(400, exc)
        except MivsError as exc:
            return _error_json(400, exc)
        instance_id = registry.add(instance)
        return json_response(io_mod.descriptor_json(instance, instance_id), 201)

    @app.get("/api/instances/{instance_id}")
    def get_instance(instance_id: str):
        instance = registry.get(instance_id)
        if instance is None:
            return JSONResponse(status_code=404, content={"error": "unknown id"})
        return json_response(io_mod.descriptor_json(instance, instance_id))

    @app.get("/api/instances/{instance_id}/optimum")
    def get_optimum(
        instance_id: str,
        require: Optional[str] = None,
        forbid: Optional[str] = None,
        k: Optional[int] = None,
        coverage: Optional[str] = None,
    ):
        instance = registry.get(instance_id)
        if instance is None:
            return JSONResponse(status_code=404, content={"error": "unknown id"})
        try:
            constraints = _parse_constraints(instance, require, forbid, k, coverage)
        except ConflictingConstraints as exc:
            return _error_json(409, exc)
        except BadConstraint as exc:
            return _error_json(400, exc)
        try:
            report = solve_exhaustive(instance, constraints, options)
            delta = None
            if not constraints.is_trivial:
                baseline = solve_exhaustive(
                    instance, Constraints(coverage=constraints.coverage), options
                )
                delta = compare_solutions(baseline.best, report.best)
        except (NoFeasibleSubset, InfeasibleSubset) as exc:
            return _error_json(409, exc)
        except (TooManyVendors, SolveTimeout) as exc:
            return _error_json(422, exc)
        return json_response(io_mod.solution_report_json(report, delta))

    @app.get("/api/instances/{instance_id}/curve")
    def get_curve(
        instance_id: str,
        require: Optional[str] = None,
        forbid: Optional[str] = None,
        coverage: Optional[str] = None,
    ):
        instance = registry.get(instance_id)
        if instance is None:
            return JSONResponse(status_code=404, content={"error": "unknown id"})
        try:
            constraints = _parse_constraints(instance, require, forbid, None, coverage)
        except ConflictingConstraints as exc:
            return _error_json(409, exc)
        except BadConstraint as exc:
            return _error_json(400, exc)
        try:
            curve = cost_curve(instance, constraints, options)
        except (NoFeasibleSubset, InfeasibleSubset) as exc:
            return _error_json(409, exc)
        except (TooManyVendors, SolveTimeout) as exc:
            return _error_json(422, exc)
        return json_response(io_mod.curve_json(curve, instance))

    @app.get("/api/instances/{instance_id}/policies")
    def get_policies(instance_id: str):
        instance = registry.get(instance_id)
        if instance is None:
            return JSONResponse(status_code=404, content={"error": "unknown id"})
        try:
            alt2 = policy_cheapest_per_item(instance)
        except UncoveredItem as exc:
            return _error_json(409, exc)
        try:
            alt1 = policy_single_vendor(instance)
        except NoFullCoverageVendor:
            alt1 = None
        return json_response(io_mod.policies_json(alt1, alt2, instance))

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
