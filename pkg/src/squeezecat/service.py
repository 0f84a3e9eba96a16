"""FastAPI service exposing verification and scenario runs.

All endpoints are stateless: a request carries a scenario config (or relies
on a preset), the response carries plain numbers.  Domain errors from physics
preconditions map to HTTP 400 with the error class name; malformed configs
are rejected by validation with 422.

Run a server with:  uvicorn squeezecat.service:app
"""

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict

from . import __version__
from .config import ScenarioConfig, build_config, config_hash, params_hash
from .errors import SqueezecatError
from .runs import evolve_run, sweep_run, wigner_run
from .verify import run_verification

app = FastAPI(
    title="squeezecat",
    version=__version__,
    description="Simulator and verification suite for squeezed-state superpositions "
    "of a cavity field coupled to a charge qubit",
)


class RunRequest(BaseModel):
    """Scenario selection: a preset overlaid with an optional config document."""

    model_config = ConfigDict(extra="forbid")

    config: Optional[dict] = None
    preset: Literal["default", "deep-squeeze"] = "default"


class HealthResponse(BaseModel):
    status: str
    version: str


class CheckModel(BaseModel):
    name: str
    value: Optional[float]
    threshold: float
    comparison: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    version: str
    config_hash: str
    overall_pass: bool
    checks: list[CheckModel]


class TableResponse(BaseModel):
    """Generic tabular payload; None cells mark unavailable values."""

    version: str
    config_hash: str
    columns: list[str]
    rows: list[list[Optional[float]]]


class EvolveResponse(TableResponse):
    aborted: bool


class WignerResponse(TableResponse):
    outcome: str
    t: float
    params_hash: str


def _build_config_or_422(req: RunRequest) -> ScenarioConfig:
    try:
        return build_config(req.config, preset=req.preset)
    except ValueError as err:
        raise HTTPException(status_code=422, detail=str(err)) from err


def _run(fn, *args):
    try:
        return fn(*args)
    except (SqueezecatError, ValueError) as err:
        raise HTTPException(
            status_code=400, detail=f"{type(err).__name__}: {err}"
        ) from err


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: RunRequest) -> VerifyResponse:
    # a bare request (no config document) verifies both presets
    cfg = _build_config_or_422(req) if (req.config or req.preset != "default") else None
    report = _run(run_verification, cfg)
    return VerifyResponse(
        version=report.version,
        config_hash=report.config_hash,
        overall_pass=report.overall_pass,
        checks=[
            CheckModel(
                name=c.name, value=c.value, threshold=c.threshold,
                comparison=c.comparison, passed=c.passed, detail=c.detail,
            )
            for c in report.checks
        ],
    )


@app.post("/evolve", response_model=EvolveResponse)
def evolve_endpoint(req: RunRequest) -> EvolveResponse:
    cfg = _build_config_or_422(req)
    result = _run(evolve_run, cfg)
    return EvolveResponse(
        version=__version__,
        config_hash=config_hash(cfg),
        columns=result.columns,
        rows=result.rows,
        aborted=result.aborted,
    )


class WignerRequest(RunRequest):
    t: Optional[float] = None


@app.post("/wigner", response_model=WignerResponse)
def wigner_endpoint(req: WignerRequest) -> WignerResponse:
    cfg = _build_config_or_422(req)
    result = _run(wigner_run, cfg, req.t)
    return WignerResponse(
        version=__version__,
        config_hash=config_hash(cfg),
        columns=result.columns,
        rows=result.rows,
        outcome=result.outcome,
        t=result.t,
        params_hash=params_hash(cfg),
    )


@app.post("/sweep", response_model=TableResponse)
def sweep_endpoint(req: RunRequest) -> TableResponse:
    cfg = _build_config_or_422(req)
    result = _run(sweep_run, cfg)
    return TableResponse(
        version=__version__,
        config_hash=config_hash(cfg),
        columns=result.columns,
        rows=result.rows,
    )
