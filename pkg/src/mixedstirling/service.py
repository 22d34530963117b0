"""HTTP service wrapping the library: one endpoint per CLI command.

Request/response bodies are pydantic models; counts are exact integers
(arbitrary precision survives JSON serialization). Domain errors map to
HTTP 422, the brute-force resource limit to HTTP 400.
"""

from __future__ import annotations

from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, egfseries, identities, mixedcore, restricted, rstirling
from .bellpoly import parse_weights
from .oracle import OracleLimitError
from .restricted import parse_size_set

app = FastAPI(
    title="mixedstirling",
    description="Exact mixed coloured permutation counts, cross-validated.",
    version=__version__,
)


class ValueRequest(BaseModel):
    n: int = Field(ge=0)
    k: int = Field(ge=1)
    t: int = Field(ge=0)
    r: int = Field(default=0, ge=0, description="pin elements 1..r to distinct cycles")
    size_set: Optional[str] = Field(default=None, description='e.g. "evens", "<=3", "{1,3}"')


class ValueResponse(BaseModel):
    value: int


class TableRequest(BaseModel):
    t: int = Field(ge=0)
    n_max: int = Field(ge=0, le=500)


class TableEntry(BaseModel):
    n: int
    k: int
    value: int


class TableResponse(BaseModel):
    t: int
    entries: list[TableEntry]


class SeriesRequest(BaseModel):
    k: int = Field(ge=1)
    t: int = Field(ge=0)
    order: int = Field(ge=0, le=200)
    size_set: Optional[str] = None
    weights: Optional[str] = None


class SeriesRow(BaseModel):
    n: int
    numerator: int
    denominator: int
    egf_value: Union[int, str]


class SeriesResponse(BaseModel):
    rows: list[SeriesRow]


class VerifyRequest(BaseModel):
    n_max: int = Field(ge=0, le=20)
    include: list[str] = Field(default_factory=list)
    only: Optional[list[str]] = None


class IdentityResult(BaseModel):
    name: str
    checks: int
    failures: int
    passed: bool
    counterexample: Optional[dict] = None


class VerifyResponse(BaseModel):
    n_max: int
    passed: bool
    identities: list[IdentityResult]


class OracleCheckRequest(BaseModel):
    n_max: int = Field(ge=0)
    family: Optional[str] = None


class HealthResponse(BaseModel):
    status: str
    version: str


def _domain(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/value", response_model=ValueResponse)
def value(req: ValueRequest) -> ValueResponse:
    try:
        if req.size_set is not None:
            if req.r:
                raise ValueError("size_set and r cannot be combined (no such family)")
            result = restricted.mixed_S(req.n, req.k, req.t, parse_size_set(req.size_set))
        elif req.r:
            result = rstirling.mixed_r_closed(req.n, req.k, req.t, req.r)
        else:
            result = mixedcore.mixed_closed(req.n, req.k, req.t)
    except (ValueError, ArithmeticError) as exc:
        raise _domain(exc) from exc
    return ValueResponse(value=result)


@app.post("/table", response_model=TableResponse)
def table(req: TableRequest) -> TableResponse:
    try:
        entries = mixedcore.mixed_table(req.t, req.n_max)
    except ValueError as exc:
        raise _domain(exc) from exc
    return TableResponse(
        t=req.t, entries=[TableEntry(n=n, k=k, value=v) for n, k, v in entries]
    )


@app.post("/series", response_model=SeriesResponse)
def series(req: SeriesRequest) -> SeriesResponse:
    try:
        if req.size_set is not None and req.weights is not None:
            raise ValueError("size_set and weights cannot be combined")
        if req.weights is not None:
            ts = egfseries.bellstar_series(req.k, req.t, req.order, parse_weights(req.weights))
        else:
            size_set = parse_size_set(req.size_set) if req.size_set else None
            ts = egfseries.mixed_series(req.k, req.t, req.order, size_set)
    except (ValueError, ArithmeticError) as exc:
        raise _domain(exc) from exc
    return SeriesResponse(rows=[SeriesRow(**row) for row in egfseries.series_rows(ts)])


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    try:
        reports = identities.run_identities(
            req.n_max,
            include=tuple(req.include),
            names=tuple(req.only) if req.only else None,
        )
    except ValueError as exc:
        raise _domain(exc) from exc
    return VerifyResponse(
        n_max=req.n_max,
        passed=all(r.passed for r in reports),
        identities=[IdentityResult(**r.as_dict()) for r in reports],
    )


@app.post("/oracle-check", response_model=VerifyResponse)
def oracle_check(req: OracleCheckRequest) -> VerifyResponse:
    try:
        reports = identities.run_oracle_checks(req.n_max, family=req.family)
    except OracleLimitError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except ValueError as exc:
        raise _domain(exc) from exc
    return VerifyResponse(
        n_max=req.n_max,
        passed=all(r.passed for r in reports),
        identities=[IdentityResult(**r.as_dict()) for r in reports],
    )
