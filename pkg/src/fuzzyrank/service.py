"""HTTP face of the ranking engine.

Endpoints:

    PUT  /schemes/{name}                 store a scheme document (400 if invalid)
    GET  /schemes                        list stored scheme names
    GET  /schemes/{name}                 fetch the canonical scheme document
    PUT  /schemes/{name}/datasets/{d}    store a CSV dataset (422 with issues)
    POST /rank                           rank a stored dataset
    POST /whatif                         rank with weight/orientation overrides,
                                         persisting nothing
    GET  /healthz                        liveness probe

Status codes: 400 malformed, 404 missing names, 422 domain-invalid.
Ranking responses are the same canonical JSON bytes the CLI emits with
`--format json --no-meta`, so the two fronts are byte-for-byte comparable.
"""
from __future__ import annotations

from pathlib import Path
from typing import Literal

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, model_validator

from . import bundled
from .errors import DomainError
from .fuzzy import defuzzify_centroid, lookup_term
from .ingest import IMPORTANCE_SCALE, HeaderMismatch, ParseError, SchemaViolation
from .model import InvalidDataset, Scheme, orientation_vector, weight_vector
from .store import InvalidName, SchemeStore
from .results import document_json, rank_documents

Method = Literal["topsis", "wp", "both"]


class RankRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scheme: str
    dataset: str
    method: Method


class Override(BaseModel):
    model_config = ConfigDict(extra="forbid")

    weight_term: str | None = None
    weight: float | None = None
    orientation: Literal["benefit", "cost"] | None = None

    @model_validator(mode="after")
    def _one_weight_source(self):
        if self.weight_term is not None and self.weight is not None:
            raise ValueError("give weight_term or weight, not both")
        if self.weight is not None and self.weight <= 0:
            raise ValueError("weight must be > 0")
        return self


class WhatIfRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scheme: str
    dataset: str
    method: Method
    overrides: dict[str, Override] = {}


def _overridden_vectors(scheme: Scheme, overrides: dict[str, Override]):
    """Apply weight and orientation overrides to the scheme's vectors."""
    weights = weight_vector(scheme)
    orients = orientation_vector(scheme)
    index = {c.id: i for i, c in enumerate(scheme.criteria)}
    importance = scheme.scale_by_name(IMPORTANCE_SCALE)
    for cid, override in overrides.items():
        if cid not in index:
            raise SchemaViolation(f"/overrides/{cid}", f"unknown criterion {cid!r}")
        i = index[cid]
        if override.weight_term is not None:
            term = lookup_term(importance, override.weight_term)
            weights[i] = defuzzify_centroid(term.tfn)
        elif override.weight is not None:
            weights[i] = override.weight
        if override.orientation is not None:
            orients[i] = override.orientation
    return weights, orients


def seed_store(store: SchemeStore) -> None:
    """Populate an empty store with the bundled schemes and dataset."""
    if store.list_schemes():
        return
    for name in bundled.SCHEME_FILES:
        store.put_scheme(name, bundled.scheme_path(name).read_text(encoding="utf-8"))
        store.put_dataset(
            name, bundled.DATASET_NAME,
            bundled.dataset_path().read_text(encoding="utf-8"),
        )


def create_app(store_root: Path, seed: bool = True) -> FastAPI:
    store = SchemeStore(store_root)
    if seed:
        seed_store(store)
    app = FastAPI(title="fuzzyrank", docs_url=None, redoc_url=None)
    # the web UI is served as static files from a separate origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST", "PUT"],
        allow_headers=["Content-Type"],
    )

    @app.exception_handler(RequestValidationError)
    async def body_validation(request: Request, exc: RequestValidationError):
        # unreadable JSON is a malformed request (400); a readable body
        # with wrong fields is a domain-invalid one (422)
        errors = [
            {"loc": list(e["loc"]), "msg": e["msg"], "type": e["type"]}
            for e in exc.errors()
        ]
        malformed = any(e["type"] == "json_invalid" for e in errors)
        return JSONResponse(
            {"detail": errors}, status_code=400 if malformed else 422
        )

    def ranking_response(scheme, alts, method, weights=None, orients=None) -> Response:
        docs = rank_documents(
            scheme, alts, method,
            weights=weights, orientations=orients, with_meta=False,
        )
        return Response(content=document_json(docs), media_type="application/json")

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/schemes")
    def list_schemes():
        return {"schemes": store.list_schemes()}

    @app.get("/schemes/{name}")
    def get_scheme(name: str):
        try:
            text = store.get_scheme_text(name)
        except (KeyError, InvalidName):
            return JSONResponse({"detail": f"no scheme {name!r}"}, status_code=404)
        return Response(content=text, media_type="application/json")

    @app.put("/schemes/{name}")
    async def put_scheme(name: str, request: Request):
        body = await request.body()
        try:
            scheme = store.put_scheme(name, body.decode("utf-8"))
        except (ParseError, SchemaViolation, InvalidName, UnicodeDecodeError) as e:
            return JSONResponse({"detail": str(e)}, status_code=400)
        return {"name": name, "criteria": len(scheme.criteria)}

    @app.put("/schemes/{name}/datasets/{dname}")
    async def put_dataset(name: str, dname: str, request: Request):
        body = await request.body()
        try:
            text = body.decode("utf-8")
        except UnicodeDecodeError as e:
            return JSONResponse({"detail": str(e)}, status_code=400)
        try:
            rows = store.put_dataset(name, dname, text)
        except KeyError:
            return JSONResponse({"detail": f"no scheme {name!r}"}, status_code=404)
        except InvalidDataset as e:
            return JSONResponse(
                {"issues": [str(i) for i in e.issues]}, status_code=422
            )
        except (HeaderMismatch, ParseError, InvalidName) as e:
            return JSONResponse({"issues": [str(e)]}, status_code=422)
        return {"scheme": name, "dataset": dname, "rows": rows}

    @app.post("/rank")
    def rank(request: RankRequest):
        try:
            scheme = store.get_scheme(request.scheme)
            alts = store.get_dataset(request.scheme, request.dataset)
        except (KeyError, InvalidName):
            return JSONResponse({"detail": "unknown scheme or dataset"}, status_code=404)
        try:
            return ranking_response(scheme, alts, request.method)
        except DomainError as e:
            return JSONResponse({"detail": str(e)}, status_code=422)

    @app.post("/whatif")
    def whatif(request: WhatIfRequest):
        try:
            scheme = store.get_scheme(request.scheme)
            alts = store.get_dataset(request.scheme, request.dataset)
        except (KeyError, InvalidName):
            return JSONResponse({"detail": "unknown scheme or dataset"}, status_code=404)
        try:
            weights, orients = _overridden_vectors(scheme, request.overrides)
            return ranking_response(scheme, alts, request.method, weights, orients)
        except DomainError as e:
            return JSONResponse({"detail": str(e)}, status_code=422)

    return app
