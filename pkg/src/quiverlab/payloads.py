"""JSON payload builders shared by the HTTP service and the CLI.

Both front ends serialize the dicts built here (compact separators, insertion
order), so a CLI --json result is byte-identical to the corresponding
endpoint response.  Vertices are 1-based everywhere in payloads.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .classify import Classification, ReferenceCatalog
from .formats import quiver_to_obj
from .linalg import corank_gf2, corank_z, radical_basis_z, rank_z
from .mutclass import MutationClass, quiver_from_canonical
from .patterns import (
    basic_radical_vectors,
    basic_subquivers,
    double_edges,
    induced_cycles,
    infinite_certificate,
    v00,
    PatternKind,
)
from .quiver import Quiver

__all__ = [
    "dumps",
    "quiver_payload",
    "analyze_payload",
    "classify_payload",
    "class_payload",
    "catalog_payload",
]


def dumps(payload: Any) -> str:
    # same separators FastAPI's JSONResponse uses
    return json.dumps(payload, separators=(",", ":"))


def quiver_payload(q: Quiver) -> dict:
    return quiver_to_obj(q)


def _vertex_list(vs) -> list[int]:
    return [v + 1 for v in sorted(vs)]


def analyze_payload(q: Quiver) -> dict:
    cert = infinite_certificate(q)
    summary = v00(q)
    return {
        "rank_z": rank_z(q),
        "corank_z": corank_z(q),
        "corank_gf2": corank_gf2(q),
        "dim_v00": summary.dim_v00,
        "quotient_dim": summary.quotient_dim,
        "double_edges": [_vertex_list(p.vertices) for p in double_edges(q)],
        "cycles": [
            {"vertices": _vertex_list(p.vertices),
             "oriented": p.kind is PatternKind.ORIENTED_CYCLE}
            for p in induced_cycles(q)
        ],
        "basic_subquivers": [
            {"kind": p.kind.value, "vertices": _vertex_list(p.vertices)}
            for p in basic_subquivers(q)
        ],
        "infinite_certificate": None if cert is None else {
            "clause": cert.clause.value,
            "roman": cert.roman,
            "witness": [_vertex_list(ws) for ws in cert.witness],
            "description": cert.describe(),
        },
        "radical_basis_z": [list(v) for v in radical_basis_z(q)],
        "basic_radical_vectors": [list(v) for v in basic_radical_vectors(q)],
    }


def classify_payload(c: Classification) -> dict:
    return {
        "verdict": c.verdict.value,
        "name": c.name,
        "display": c.describe(),
        "evidence": list(c.evidence),
    }


def class_payload(mc: MutationClass, include_members: bool = False,
                  offset: int = 0, limit: int = 100) -> dict:
    out: dict = {"size": mc.size, "status": mc.status.value}
    if mc.witness is not None:
        out["witness"] = quiver_to_obj(mc.witness)
    if include_members:
        page = mc.members[offset:offset + limit]
        out["members"] = [quiver_to_obj(quiver_from_canonical(cf)) for cf in page]
        out["offset"] = offset
    return out


def catalog_payload(catalog: ReferenceCatalog) -> dict:
    return {"seeds": catalog.listing()}
