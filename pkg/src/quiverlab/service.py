"""Stateless HTTP JSON API.

Every request carries the full quiver; the server holds no sessions, only
the immutable reference catalog.  Routes are mounted under both /api and
/api/v1.  Schema violations return 400 with field paths; domain errors
(bad quiver, caps exceeded, undecided) return 422 with a machine-readable
code; 500 is reserved for genuine bugs.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from fastapi import APIRouter, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .classify import ReferenceCatalog, classify_quiver
from .errors import InvalidQuiverError, QuiverError
from .formats import quiver_from_obj
from .mutclass import DEFAULT_WEIGHT_ABORT, enumerate_class
from .payloads import (
    analyze_payload,
    catalog_payload,
    class_payload,
    classify_payload,
    quiver_payload,
)
from .quiver import Quiver

__all__ = ["create_app", "default_cache_dir"]

CLASSIFY_MAX_SIZE = 100_000
CLASS_MAX_SIZE = 10_000           # bounds /api/class response time
MEMBER_PAGE_LIMIT = 1_000


def default_cache_dir() -> Optional[Path]:
    env = os.environ.get("QUIVERLAB_CACHE")
    return Path(env) if env else None


class QuiverIn(BaseModel):
    n: int
    arrows: list[tuple[int, int, int]] = Field(default_factory=list)

    def to_quiver(self) -> Quiver:
        return quiver_from_obj({"n": self.n, "arrows": [list(a) for a in self.arrows]})


class CapsIn(BaseModel):
    max_size: Optional[int] = Field(default=None, ge=1)
    weight_abort: Optional[int] = Field(default=None, ge=1)


class MutateRequest(BaseModel):
    quiver: QuiverIn
    k: int


class AnalyzeRequest(BaseModel):
    quiver: QuiverIn


class ClassifyRequest(BaseModel):
    quiver: QuiverIn
    caps: Optional[CapsIn] = None


class ClassRequest(BaseModel):
    quiver: QuiverIn
    caps: Optional[CapsIn] = None
    include_members: bool = False
    offset: int = Field(default=0, ge=0)
    limit: int = Field(default=100, ge=1, le=MEMBER_PAGE_LIMIT)


def _caps(req_caps: Optional[CapsIn], default_max: int) -> tuple[int, int]:
    max_size = default_max
    weight_abort = DEFAULT_WEIGHT_ABORT
    if req_caps is not None:
        if req_caps.max_size is not None:
            max_size = req_caps.max_size
        if req_caps.weight_abort is not None:
            weight_abort = req_caps.weight_abort
    return max_size, weight_abort


def _checked_vertex(q: Quiver, k: int) -> int:
    if not 1 <= k <= q.n:
        raise InvalidQuiverError(f"vertex {k} out of range 1..{q.n}",
                                 code="vertex_out_of_range")
    return k - 1


def create_app(catalog: Optional[ReferenceCatalog] = None) -> FastAPI:
    if catalog is None:
        catalog = ReferenceCatalog(cache_dir=default_cache_dir())

    app = FastAPI(title="quiverlab", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    router = APIRouter()

    @router.post("/mutate")
    def mutate(req: MutateRequest):
        q = req.quiver.to_quiver()
        k = _checked_vertex(q, req.k)
        return {"quiver": quiver_payload(q.mutate(k))}

    @router.post("/analyze")
    def analyze(req: AnalyzeRequest):
        return analyze_payload(req.quiver.to_quiver())

    @router.post("/classify")
    def classify(req: ClassifyRequest):
        q = req.quiver.to_quiver()
        max_size, weight_abort = _caps(req.caps, CLASSIFY_MAX_SIZE)
        return classify_payload(classify_quiver(q, catalog, max_size, weight_abort))

    @router.post("/class")
    def mutation_class(req: ClassRequest):
        q = req.quiver.to_quiver()
        max_size, weight_abort = _caps(req.caps, CLASS_MAX_SIZE)
        mc = enumerate_class(q, max_size=max_size, weight_abort=weight_abort)
        return class_payload(mc, req.include_members, req.offset, req.limit)

    @router.get("/catalog")
    def catalog_listing():
        return catalog_payload(catalog)

    app.include_router(router, prefix="/api")
    app.include_router(router, prefix="/api/v1")

    @app.exception_handler(QuiverError)
    def quiver_error(request: Request, exc: QuiverError):
        return JSONResponse(status_code=422,
                            content={"code": exc.code, "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    def schema_error(request: Request, exc: RequestValidationError):
        errors = [
            {"path": ".".join(str(part) for part in err["loc"]),
             "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400,
                            content={"code": "schema", "message": "invalid request",
                                     "errors": errors})

    return app
