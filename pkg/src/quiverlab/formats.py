"""Text and JSON serialization of quivers.

Text format::

    # optional comments
    n 4
    1 2 1
    2 3 2

First non-comment line is ``n <count>``, then one ``<source> <target> <weight>``
arrow per line, all 1-based.  JSON format is ``{"n": int, "arrows": [[i, j, w], ...]}``
with the same 1-based convention.  Parsing and printing round-trip exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InvalidQuiverError, QuiverFormatError
from .quiver import Quiver

__all__ = [
    "parse_text",
    "format_text",
    "parse_json",
    "format_json",
    "quiver_to_obj",
    "quiver_from_obj",
]


def _sorted_arrows(q: Quiver) -> list[tuple[int, int, int]]:
    out = []
    for i in range(q.n):
        for j in range(i + 1, q.n):
            w = q.b[i][j]
            if w > 0:
                out.append((i + 1, j + 1, w))
            elif w < 0:
                out.append((j + 1, i + 1, -w))
    return out


def parse_text(text: str) -> Quiver:
    n = None
    arrows: list[tuple[int, int, int]] = []
    seen_pairs = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise QuiverFormatError("expected header 'n <count>'", line=ln)
            try:
                n = int(parts[1])
            except ValueError:
                raise QuiverFormatError(f"vertex count is not an integer: {parts[1]!r}", line=ln)
            if n < 0:
                raise QuiverFormatError("vertex count must be non-negative", line=ln)
            continue
        if len(parts) != 3:
            raise QuiverFormatError(f"expected '<i> <j> <w>', got {line!r}", line=ln)
        try:
            i, j, w = (int(p) for p in parts)
        except ValueError:
            raise QuiverFormatError(f"non-integer arrow entry in {line!r}", line=ln)
        _check_arrow(n, i, j, w, ln, seen_pairs)
        arrows.append((i - 1, j - 1, w))
    if n is None:
        raise QuiverFormatError("empty input: missing 'n <count>' header")
    return Quiver.from_arrows(n, arrows)


def _check_arrow(n, i, j, w, ln, seen_pairs):
    if not (1 <= i <= n and 1 <= j <= n):
        raise QuiverFormatError(f"vertex out of range 1..{n} in arrow ({i},{j},{w})", line=ln)
    if i == j:
        raise QuiverFormatError(f"loop forbidden at vertex {i}", line=ln)
    if w < 1:
        raise QuiverFormatError(f"arrow weight must be >= 1, got {w}", line=ln)
    pair = (min(i, j), max(i, j))
    if pair in seen_pairs:
        raise QuiverFormatError(f"conflicting edge between {pair[0]} and {pair[1]}", line=ln)
    seen_pairs.add(pair)


def format_text(q: Quiver) -> str:
    lines = [f"n {q.n}"]
    lines.extend(f"{i} {j} {w}" for i, j, w in _sorted_arrows(q))
    return "\n".join(lines) + "\n"


def quiver_to_obj(q: Quiver) -> dict[str, Any]:
    return {"n": q.n, "arrows": [[i, j, w] for i, j, w in _sorted_arrows(q)]}


def quiver_from_obj(obj: Any) -> Quiver:
    if not isinstance(obj, dict):
        raise QuiverFormatError("quiver JSON must be an object")
    extra = set(obj) - {"n", "arrows"}
    if extra:
        raise QuiverFormatError(f"unexpected keys in quiver JSON: {sorted(extra)}")
    if "n" not in obj or "arrows" not in obj:
        raise QuiverFormatError("quiver JSON needs keys 'n' and 'arrows'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise QuiverFormatError(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(obj["arrows"], list):
        raise QuiverFormatError("'arrows' must be a list of [i, j, w] triples")
    arrows = []
    seen_pairs: set = set()
    for idx, item in enumerate(obj["arrows"]):
        if (not isinstance(item, (list, tuple)) or len(item) != 3
                or any(not isinstance(x, int) or isinstance(x, bool) for x in item)):
            raise QuiverFormatError(f"arrow #{idx + 1} must be an [i, j, w] integer triple")
        i, j, w = item
        try:
            _check_arrow(n, i, j, w, None, seen_pairs)
        except QuiverFormatError as e:
            raise QuiverFormatError(f"arrow #{idx + 1}: {e}") from None
        arrows.append((i - 1, j - 1, w))
    return Quiver.from_arrows(n, arrows)


def parse_json(text: str) -> Quiver:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise QuiverFormatError(f"invalid JSON: {e}") from None
    return quiver_from_obj(obj)


def format_json(q: Quiver) -> str:
    return json.dumps(quiver_to_obj(q), separators=(", ", ": ")) + "\n"
