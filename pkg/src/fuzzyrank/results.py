"""Result documents: the shared ranking pipeline and its JSON form.

A result document records one method's ranking of one scheme's dataset:
per-alternative preference value V, rank, and the method's intermediate
values (D+/D- for the distance method, S for the product method), plus ids
excluded by eligibility screening and optional engine metadata.

The JSON form is canonical: fixed key order, two-space indent, trailing
newline, floats at full precision (shortest round-trip representation).
The CLI and the HTTP service both emit it through `document_json`, which is
what makes their outputs byte-identical for identical inputs. Metadata
holds a timestamp, so deterministic consumers ask for documents without it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import kernels
from ._version import VERSION
from .ingest import ParseError, SchemaViolation
from .model import (
    Alternative,
    Scheme,
    apply_eligibility,
    lower_to_crisp,
    orientation_vector,
    weight_vector,
)
from .topsis import rank_topsis
from .wp import rank_wp

METHODS = ("topsis", "wp")


@dataclass(frozen=True)
class ResultEntry:
    """One ranked alternative."""

    id: str
    v: float
    rank: int
    d_pos: float | None = None
    d_neg: float | None = None
    s: float | None = None

    def to_payload(self) -> dict:
        payload = {"id": self.id, "v": self.v, "rank": self.rank}
        if self.d_pos is not None:
            payload["d_pos"] = self.d_pos
            payload["d_neg"] = self.d_neg
        if self.s is not None:
            payload["s"] = self.s
        return payload


@dataclass(frozen=True)
class ResultDocument:
    """One method's ranking of one dataset, entries in rank order."""

    method: str
    scheme: str
    results: tuple[ResultEntry, ...]
    excluded: tuple[str, ...] = ()
    meta: dict | None = None

    def to_payload(self) -> dict:
        payload = {
            "method": self.method,
            "scheme": self.scheme,
            "results": [e.to_payload() for e in self.results],
            "excluded": list(self.excluded),
        }
        if self.meta is not None:
            payload["meta"] = self.meta
        return payload


def build_meta() -> dict:
    return {
        "engine": "fuzzyrank",
        "version": VERSION,
        "backend": kernels.BACKEND,
        "generated": datetime.now(timezone.utc).isoformat(),
    }


def rank_document(
    scheme: Scheme,
    alts: list[Alternative],
    method: str,
    *,
    weights=None,
    orientations=None,
    with_meta: bool = False,
) -> ResultDocument:
    """Validate, screen, lower, and rank with one method.

    `weights` and `orientations` default to the scheme's own; callers such
    as what-if exploration may pass overridden vectors.
    """
    if method not in METHODS:
        raise SchemaViolation("/method", f"method must be one of {METHODS}, got {method!r}")
    kept, excluded = apply_eligibility(scheme, alts)
    matrix = lower_to_crisp(scheme, kept)
    w = weight_vector(scheme) if weights is None else list(weights)
    o = orientation_vector(scheme) if orientations is None else list(orientations)

    entries = []
    if method == "topsis":
        trace = rank_topsis(matrix, w, o)
        for i, alt_id in enumerate(trace.alternatives):
            entries.append(
                ResultEntry(
                    id=alt_id,
                    v=float(trace.closeness[i]),
                    rank=int(trace.ranks[i]),
                    d_pos=float(trace.dist_pos[i]),
                    d_neg=float(trace.dist_neg[i]),
                )
            )
    else:
        trace = rank_wp(matrix, w, o)
        for i, alt_id in enumerate(trace.alternatives):
            entries.append(
                ResultEntry(
                    id=alt_id,
                    v=float(trace.preferences[i]),
                    rank=int(trace.ranks[i]),
                    s=float(trace.scores[i]),
                )
            )
    entries.sort(key=lambda e: e.rank)
    return ResultDocument(
        method=method,
        scheme=scheme.name,
        results=tuple(entries),
        excluded=tuple(excluded),
        meta=build_meta() if with_meta else None,
    )


def rank_documents(
    scheme: Scheme,
    alts: list[Alternative],
    method: str,
    *,
    weights=None,
    orientations=None,
    with_meta: bool = False,
) -> dict[str, ResultDocument]:
    """Like rank_document, with "both" expanding to the two methods."""
    methods = list(METHODS) if method == "both" else [method]
    return {
        m: rank_document(
            scheme, alts, m,
            weights=weights, orientations=orientations, with_meta=with_meta,
        )
        for m in methods
    }


def document_json(docs: dict[str, ResultDocument]) -> str:
    """Canonical JSON text for one document, or an object keyed by method."""
    if len(docs) == 1:
        payload = next(iter(docs.values())).to_payload()
    else:
        payload = {m: d.to_payload() for m, d in docs.items()}
    return json.dumps(payload, indent=2) + "\n"


def store_result(doc: ResultDocument, path) -> None:
    """Write the canonical JSON form."""
    Path(path).write_text(document_json({doc.method: doc}), encoding="utf-8")


def load_result(path) -> ResultDocument:
    """Read a stored document back; round-trips are lossless."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(str(path), e.lineno, e.colno, e.msg) from e
    return _document_from_payload(payload)


def _document_from_payload(payload) -> ResultDocument:
    if not isinstance(payload, dict):
        raise SchemaViolation("/", "result document must be a JSON object")
    unknown = set(payload) - {"method", "scheme", "results", "excluded", "meta"}
    if unknown:
        raise SchemaViolation("/", f"unknown keys {sorted(unknown)}")
    for key in ("method", "scheme", "results"):
        if key not in payload:
            raise SchemaViolation("/", f"missing key {key!r}")
    if payload["method"] not in METHODS:
        raise SchemaViolation("/method", f"unknown method {payload['method']!r}")

    entries = []
    raw_results = payload["results"]
    if not isinstance(raw_results, list):
        raise SchemaViolation("/results", "expected a list")
    for i, raw in enumerate(raw_results):
        pointer = f"/results/{i}"
        if not isinstance(raw, dict):
            raise SchemaViolation(pointer, "expected an object")
        unknown = set(raw) - {"id", "v", "rank", "d_pos", "d_neg", "s"}
        if unknown:
            raise SchemaViolation(pointer, f"unknown keys {sorted(unknown)}")
        try:
            entries.append(
                ResultEntry(
                    id=raw["id"],
                    v=float(raw["v"]),
                    rank=int(raw["rank"]),
                    d_pos=raw.get("d_pos"),
                    d_neg=raw.get("d_neg"),
                    s=raw.get("s"),
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaViolation(pointer, f"bad entry: {e}") from e

    ranks = sorted(e.rank for e in entries)
    if ranks != list(range(1, len(entries) + 1)):
        raise SchemaViolation("/results", "ranks must be a permutation of 1..m")

    return ResultDocument(
        method=payload["method"],
        scheme=payload["scheme"],
        results=tuple(entries),
        excluded=tuple(payload.get("excluded", ())),
        meta=payload.get("meta"),
    )
