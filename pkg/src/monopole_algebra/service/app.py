"""FastAPI application exposing the handlers over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DomainError, MonopoleAlgebraError
from . import handlers
from .schemas import (GaugeCheckRequest, HarmonicRequest, OrthonormalityRequest,
                      OutputRecordModel, SelectionTableRequest, Wigner3jRequest)


def create_app() -> FastAPI:
    app = FastAPI(title="monopole-algebra",
                  description="Charge-monopole angular algebra service")

    @app.exception_handler(DomainError)
    async def domain_error_handler(request: Request, exc: DomainError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(MonopoleAlgebraError)
    async def library_error_handler(request: Request, exc: MonopoleAlgebraError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/harmonic", response_model=OutputRecordModel)
    async def harmonic(request: HarmonicRequest) -> OutputRecordModel:
        record = handlers.handle_harmonic(request.j, request.m, request.mu,
                                          request.theta, request.phi)
        return OutputRecordModel(**record.__dict__)

    @app.post("/wigner3j", response_model=OutputRecordModel)
    async def wigner3j(request: Wigner3jRequest) -> OutputRecordModel:
        record = handlers.handle_wigner3j(request.j1, request.j2, request.j3,
                                          request.m1, request.m2, request.m3)
        return OutputRecordModel(**record.__dict__)

    @app.post("/gauge-check", response_model=OutputRecordModel)
    async def gauge_check(request: GaugeCheckRequest) -> OutputRecordModel:
        record = handlers.handle_gauge_check(request.samples, request.seed,
                                             request.variant, request.tolerance)
        return OutputRecordModel(**record.__dict__)

    @app.post("/selection-table", response_model=OutputRecordModel)
    async def selection_table(request: SelectionTableRequest) -> OutputRecordModel:
        record = handlers.handle_selection_table(
            request.j_max, request.mu, request.operator,
            request.n_theta, request.n_phi)
        return OutputRecordModel(**record.__dict__)

    @app.post("/orthonormality", response_model=OutputRecordModel)
    async def orthonormality(request: OrthonormalityRequest) -> OutputRecordModel:
        record = handlers.handle_orthonormality(
            request.mu, request.j_max, request.n_theta, request.n_phi,
            request.tolerance)
        return OutputRecordModel(**record.__dict__)

    return app
