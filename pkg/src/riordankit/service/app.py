"""FastAPI application exposing the package over HTTP.

Errors map to a small, fixed JSON shape (see ``ErrorPayload``): expression
syntax problems come back as 400 with category "parse", mathematical
precondition failures as 422 with category "precondition", and too-short
input data as 422 with category "insufficient-data".
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import ComputationError, InsufficientDataError
from ..gfparse import ParseError
from ..golden import EXAMPLE_IDS
from . import handlers
from .schemas import (
    CfracRequest,
    CfracResponse,
    DorthRequest,
    DorthResponse,
    ErrorPayload,
    ExamplesResponse,
    HankelRequest,
    HankelResponse,
    RiordanRequest,
    RiordanResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="riordankit",
        version=__version__,
        description="Exact computation of Riordan arrays, d-Hankel transforms, "
                    "d-orthogonal polynomials and generalized continued fractions.",
    )

    @app.exception_handler(ParseError)
    async def parse_error(_: Request, exc: ParseError) -> JSONResponse:
        payload = ErrorPayload(category="parse", message=str(exc), offset=exc.offset)
        return JSONResponse(status_code=400, content=payload.model_dump(exclude_none=True))

    @app.exception_handler(InsufficientDataError)
    async def insufficient_data(_: Request, exc: InsufficientDataError) -> JSONResponse:
        payload = ErrorPayload(category="insufficient-data", message=str(exc),
                               needed=exc.needed, have=exc.have)
        return JSONResponse(status_code=422, content=payload.model_dump(exclude_none=True))

    @app.exception_handler(ComputationError)
    async def computation_error(_: Request, exc: ComputationError) -> JSONResponse:
        payload = ErrorPayload(category="precondition", message=str(exc))
        return JSONResponse(status_code=422, content=payload.model_dump(exclude_none=True))

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/gf", response_model=SeriesResponse)
    def gf(request: SeriesRequest) -> SeriesResponse:
        return handlers.compute_series(request)

    @app.post("/riordan", response_model=RiordanResponse,
              response_model_exclude_none=True)
    def riordan(request: RiordanRequest) -> RiordanResponse:
        return handlers.compute_riordan(request)

    @app.post("/dhankel", response_model=HankelResponse,
              response_model_exclude_none=True)
    def dhankel(request: HankelRequest) -> HankelResponse:
        return handlers.compute_dhankel(request)

    @app.post("/dorth", response_model=DorthResponse,
              response_model_exclude_none=True)
    def dorth(request: DorthRequest) -> DorthResponse:
        return handlers.compute_dorth(request)

    @app.post("/cfrac", response_model=CfracResponse)
    def cfrac(request: CfracRequest) -> CfracResponse:
        return handlers.compute_cfrac(request)

    @app.get("/examples", response_model=ExamplesResponse)
    def examples() -> ExamplesResponse:
        return handlers.list_examples()

    @app.get("/verify/{example_id}", response_model=VerifyResponse)
    def verify(example_id: str) -> VerifyResponse:
        if example_id not in EXAMPLE_IDS:
            payload = ErrorPayload(
                category="parse",
                message=f"unknown example {example_id!r}; "
                        f"valid ids: {', '.join(EXAMPLE_IDS)}")
            return JSONResponse(status_code=404,
                                content=payload.model_dump(exclude_none=True))
        return handlers.compute_verify(example_id)

    return app


app = create_app()
