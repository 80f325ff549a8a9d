"""FastAPI service wrapping the core package.

Run with ``clopen serve`` or ``uvicorn clopen.service:app``.  Every
endpoint is a stateless wrapper over ``handlers``; the CLI calls the
same handlers in-process, so the two surfaces cannot drift apart.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers
from .errors import (
    DescriptorError,
    FalsifiedInvariantError,
    InvalidMapError,
    InvalidRingError,
    InvalidSpaceError,
    ResourceBoundError,
)
from .models import (
    ComponentsResponse,
    DecomposeResponse,
    DotResponse,
    IdempotentsResponse,
    ProjLiftRequest,
    ProjWitnessRequest,
    ProjWitnessResponse,
    QspecResponse,
    RingRequest,
    SpaceRequest,
    SpectrumResponse,
    StoneResponse,
    SuiteResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="clopen",
    description="Connected components, Stone duality, idempotent ring "
                "decomposition, primary spectra and graded disconnection "
                "witnesses, verified at finite scale.",
    version="0.1.0",
)


@app.exception_handler(DescriptorError)
@app.exception_handler(InvalidSpaceError)
@app.exception_handler(InvalidMapError)
@app.exception_handler(InvalidRingError)
async def _invalid_input(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": str(exc), "kind": "invalid-input"})


@app.exception_handler(ResourceBoundError)
async def _resource_bound(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc), "kind": "resource-bound"})


@app.exception_handler(FalsifiedInvariantError)
async def _falsified(request: Request, exc: FalsifiedInvariantError) -> JSONResponse:
    return JSONResponse(
        status_code=500,
        content={"error": str(exc), "kind": "falsified-invariant", "witness": exc.witness},
    )


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/ring/idempotents", response_model=IdempotentsResponse)
def ring_idempotents(req: RingRequest):
    return handlers.ring_idempotents(req)


@app.post("/ring/decompose", response_model=DecomposeResponse)
def ring_decompose(req: RingRequest):
    return handlers.ring_decompose(req)


@app.post("/ring/spec", response_model=SpectrumResponse)
def ring_spectrum(req: RingRequest):
    return handlers.ring_spectrum(req)


@app.post("/ring/suite", response_model=SuiteResponse)
def ring_suite(req: RingRequest):
    return handlers.ring_suite(req)


@app.post("/space/components", response_model=ComponentsResponse)
def space_components(req: SpaceRequest):
    return handlers.space_components(req)


@app.post("/space/stone", response_model=StoneResponse)
def space_stone(req: SpaceRequest):
    return handlers.space_stone(req)


@app.post("/space/suite", response_model=SuiteResponse)
def space_suite(req: SpaceRequest):
    return handlers.space_suite(req)


@app.post("/space/dot", response_model=DotResponse)
def space_dot(req: SpaceRequest):
    return handlers.space_dot(req)


@app.post("/qspec", response_model=QspecResponse)
def qspec(req: RingRequest):
    return handlers.qspec(req)


@app.post("/proj/witness", response_model=ProjWitnessResponse)
def proj_witness(req: ProjWitnessRequest):
    return handlers.proj_witness(req)


@app.post("/proj/lift", response_model=SuiteResponse)
def proj_lift(req: ProjLiftRequest):
    return handlers.proj_lift(req)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    return handlers.verify(req)
