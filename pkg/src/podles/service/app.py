"""FastAPI service wrapping the verification engine.

The engine state (calibration, Peter-Weyl blocks, operator matrices) is
built lazily and shared across requests, so repeated verification calls and
expression evaluations are cheap after warmup.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Response

from .. import operations
from ..expressions import EvalError, ParseError
from .schemas import (
    CohomologyResponse,
    EvalRequest,
    EvalResponse,
    HealthResponse,
    MatrixResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="podles",
        version="0.1.0",
        description="Exact symbolic verification of the q-deformed Kahler "
                    "geometry of the Podles sphere.",
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse()

    @app.post("/eval", response_model=EvalResponse)
    def eval_expression(req: EvalRequest) -> EvalResponse:
        try:
            return EvalResponse(**operations.run_eval(req.expression))
        except (ParseError, EvalError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            report = operations.run_verify(req.suite, req.max_level, req.mode,
                                           req.s0, req.symbolic_budget)
        except operations.UsageError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return VerifyResponse(**report)

    @app.get("/cohomology", response_model=CohomologyResponse)
    def cohomology(max_level: int = Query(4, ge=0, le=8)) -> CohomologyResponse:
        return CohomologyResponse(**operations.run_cohomology(max_level))

    @app.get("/matrix")
    def matrix(op: str, level: int = Query(..., ge=0, le=8),
               sector: str | None = None, format: str = "json"):
        try:
            out = operations.run_matrix(op, level, sector, format)
        except operations.UsageError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        if format == "csv":
            return Response(content=out, media_type="text/csv")
        return MatrixResponse(**out)

    @app.get("/calibration")
    def calibration() -> dict:
        return operations.run_calibrate()

    return app


app = create_app()
