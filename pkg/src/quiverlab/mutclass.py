"""Mutation-class enumeration up to isomorphism.

Members are deduplicated by a canonical form: the lexicographically minimal
serialization of P B P^T over vertex permutations P, found by partition
refinement (iterated neighbourhood signatures) followed by a pruned
branch-and-bound over consistent orderings.  Enumeration is BFS from the
seed's canonical representative and is bounded by a member cap and by a
weight abort: for n >= 3, members of finite mutation classes of connected
quivers never carry an edge weight above 2, so meeting the abort weight
(default 3) settles the question.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional

from .errors import CapExceededError, InvalidQuiverError, SizeLimitError, UndecidedError
from .formats import quiver_from_obj, quiver_to_obj
from .patterns import InfiniteCertificate, infinite_certificate
from .quiver import Quiver

__all__ = [
    "CANONICAL_MAX_N",
    "canonical_form",
    "quiver_from_canonical",
    "ClassStatus",
    "MutationClass",
    "enumerate_class",
    "FinitenessResult",
    "is_finite_mutation_type",
    "SweepResult",
    "sweep",
    "dump_class_jsonl",
    "load_class_jsonl",
    "DUMP_FORMAT_VERSION",
]

DUMP_FORMAT_VERSION = 1

CANONICAL_MAX_N = 12
_SEARCH_NODE_LIMIT = 5_000_000

DEFAULT_MAX_SIZE = 100_000
DEFAULT_WEIGHT_ABORT = 3


def _serialize(b: tuple[tuple[int, ...], ...]) -> bytes:
    return (f"{len(b)}:" + ";".join(",".join(map(str, row)) for row in b)).encode()


def quiver_from_canonical(data: bytes) -> Quiver:
    """Inverse of canonical_form's serialization."""
    head, _, body = data.decode().partition(":")
    n = int(head)
    if n == 0:
        return Quiver(())
    rows = tuple(tuple(int(x) for x in row.split(",")) for row in body.split(";"))
    if len(rows) != n:
        raise InvalidQuiverError("corrupt canonical serialization")
    return Quiver.from_matrix(rows)


def _stable_colors(b, n) -> list[int]:
    # signed entry multisets, refined by neighbour colours until stable
    keys: list[Any] = [tuple(sorted(x for x in row if x)) for row in b]
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    colors = [order[k] for k in keys]
    distinct = len(order)
    while distinct < n:
        keys = [
            (colors[v], tuple(sorted((b[v][u], colors[u]) for u in range(n) if b[v][u])))
            for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new_colors = [order[k] for k in keys]
        if len(order) == distinct:
            return new_colors
        colors = new_colors
        distinct = len(order)
    return colors


def canonical_form(q: Quiver, max_n: int = CANONICAL_MAX_N) -> bytes:
    """Canonical serialization: equal bytes iff the quivers are isomorphic."""
    n = q.n
    if n > max_n:
        raise SizeLimitError(f"canonical form supports n <= {max_n}, got {n}")
    if n <= 1:
        return _serialize(q.b)
    b = q.b
    colors = _stable_colors(b, n)
    # vertices grouped by colour; positions are filled cell by cell
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_of_pos: list[list[int]] = []
    for c in sorted(cells):
        cell_of_pos.extend([cells[c]] * len(cells[c]))

    best: list[Optional[tuple[int, ...]]] = [None] * n
    best_perm: Optional[list[int]] = None
    perm: list[int] = []
    used = [False] * n
    nodes = 0

    def search(d: int):
        nonlocal best_perm, nodes
        nodes += 1
        if nodes > _SEARCH_NODE_LIMIT:
            raise SizeLimitError("canonical form search exceeded its node budget")
        if d == n:
            best_perm = perm.copy()
            return
        for v in cell_of_pos[d]:
            if used[v]:
                continue
            bv = b[v]
            frag = tuple(bv[p] for p in perm)
            cur = best[d]
            if cur is not None:
                if frag > cur:
                    continue
                if frag < cur:
                    best[d] = frag
                    for t in range(d + 1, n):
                        best[t] = None
            else:
                best[d] = frag
            used[v] = True
            perm.append(v)
            search(d + 1)
            perm.pop()
            used[v] = False

    search(0)
    assert best_perm is not None
    rows = tuple(tuple(b[best_perm[i]][best_perm[j]] for j in range(n)) for i in range(n))
    return _serialize(rows)


class ClassStatus(str, Enum):
    COMPLETE = "Complete"
    ABORTED_WEIGHT = "AbortedWeight"
    ABORTED_CAP = "AbortedCap"


@dataclass(frozen=True)
class MutationClass:
    """Enumerated mutation class: sorted canonical members plus metadata.

    ``edges`` are unordered mutation links between member indices (an index
    may link to itself).  On AbortedWeight, ``witness`` is the quiver that
    met the abort weight; partial members are whatever was seen before.
    """

    members: tuple[bytes, ...]
    status: ClassStatus
    witness: Optional[Quiver]
    edges: frozenset[tuple[int, int]]
    seed_connected: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def representatives(self) -> list[Quiver]:
        return [quiver_from_canonical(m) for m in self.members]

    def __contains__(self, cf: bytes) -> bool:
        return cf in set(self.members)


def _check_caps(max_size, weight_abort):
    if max_size <= 0:
        raise CapExceededError(f"max_size must be positive, got {max_size}")
    if weight_abort <= 0:
        raise CapExceededError(f"weight_abort must be positive, got {weight_abort}")


def _bfs(q: Quiver, max_size: int, weight_abort: int,
         key: Callable[[Quiver], bytes], stop_at: Optional[bytes]):
    n = q.n
    check_weight = n >= 3
    status = ClassStatus.COMPLETE
    witness = None
    found = False

    if check_weight and q.max_weight() >= weight_abort:
        return {key(q)}, set(), ClassStatus.ABORTED_WEIGHT, q, stop_at == key(q)

    start = key(q)
    seen = {start}
    found = stop_at == start
    queue = deque([(quiver_from_canonical(start), start)])
    edge_keys: set[tuple[bytes, bytes]] = set()

    while queue and not found:
        cur, cur_cf = queue.popleft()
        for k in range(n):
            m = cur.mutate(k)
            if check_weight and m.max_weight() >= weight_abort:
                return seen, edge_keys, ClassStatus.ABORTED_WEIGHT, m, found
            cf = key(m)
            edge_keys.add((min(cur_cf, cf), max(cur_cf, cf)))
            if cf not in seen:
                if len(seen) >= max_size:
                    return seen, edge_keys, ClassStatus.ABORTED_CAP, None, found
                seen.add(cf)
                if cf == stop_at:
                    found = True
                    break
                queue.append((quiver_from_canonical(cf), cf))
    return seen, edge_keys, status, witness, found


def enumerate_class(q: Quiver, max_size: int = DEFAULT_MAX_SIZE,
                    weight_abort: int = DEFAULT_WEIGHT_ABORT,
                    labeled: bool = False) -> MutationClass:
    """BFS the mutation class of q, deduplicating by canonical form.

    ``labeled=True`` skips canonicalization and deduplicates raw matrices
    instead (debugging aid; classes are larger by the orbit of the
    automorphism-free relabelings).
    """
    _check_caps(max_size, weight_abort)
    key = (lambda x: _serialize(x.b)) if labeled else canonical_form
    seen, edge_keys, status, witness, _ = _bfs(q, max_size, weight_abort, key, None)
    members = tuple(sorted(seen))
    index = {cf: i for i, cf in enumerate(members)}
    edges = frozenset(
        (min(index[a], index[b]), max(index[a], index[b]))
        for a, b in edge_keys if a in index and b in index
    )
    return MutationClass(members, status, witness, edges, q.is_connected())


def class_reaches(q: Quiver, target: bytes, max_size: int = DEFAULT_MAX_SIZE,
                  weight_abort: int = DEFAULT_WEIGHT_ABORT) -> Optional[bool]:
    """Whether BFS from q meets the canonical form ``target``.

    True / False when decided; None when the enumeration was cut off by a cap
    before the target appeared.
    """
    _check_caps(max_size, weight_abort)
    seen, _, status, _, found = _bfs(q, max_size, weight_abort, canonical_form, target)
    if found:
        return True
    if status is ClassStatus.COMPLETE:
        return False
    return None


@dataclass(frozen=True)
class FinitenessResult:
    finite: bool
    certificate: Optional[InfiniteCertificate] = None
    witness: Optional[Quiver] = None
    mutation_class: Optional[MutationClass] = None

    @property
    def reason(self) -> str:
        if self.certificate is not None:
            return "certificate " + self.certificate.describe()
        if self.witness is not None:
            w = self.witness.max_weight()
            return f"enumeration reached edge weight {w}"
        if self.mutation_class is not None:
            return f"mutation class Complete with {self.mutation_class.size} members"
        return "n <= 2"


def is_finite_mutation_type(q: Quiver, max_size: int = DEFAULT_MAX_SIZE,
                            weight_abort: int = DEFAULT_WEIGHT_ABORT) -> FinitenessResult:
    """Decide finite mutation type.

    Quivers with n <= 2 are always finite.  For n >= 3 (connected input),
    an infinite-type certificate settles the question without enumeration;
    otherwise the class is enumerated under the caps.  Hitting the member cap
    raises UndecidedError rather than guessing.
    """
    if q.n <= 2:
        return FinitenessResult(True, mutation_class=enumerate_class(q, max_size, weight_abort))
    cert = infinite_certificate(q)
    if cert is not None:
        return FinitenessResult(False, certificate=cert)
    mc = enumerate_class(q, max_size, weight_abort)
    if mc.status is ClassStatus.ABORTED_WEIGHT:
        return FinitenessResult(False, witness=mc.witness, mutation_class=mc)
    if mc.status is ClassStatus.ABORTED_CAP:
        raise UndecidedError(
            f"mutation class exceeded max_size={max_size} before completing; "
            "finiteness undecided"
        )
    return FinitenessResult(True, mutation_class=mc)


@dataclass(frozen=True)
class SweepResult:
    values: dict[bytes, Any]
    constant: bool


def sweep(q: Quiver, f: Callable[[Quiver], Any], max_size: int = DEFAULT_MAX_SIZE,
          weight_abort: int = DEFAULT_WEIGHT_ABORT) -> SweepResult:
    """Evaluate f on every member of a Complete mutation class of q."""
    mc = enumerate_class(q, max_size, weight_abort)
    if mc.status is not ClassStatus.COMPLETE:
        raise CapExceededError(f"sweep needs a Complete class, enumeration was {mc.status.value}")
    values = {cf: f(quiver_from_canonical(cf)) for cf in mc.members}
    constant = len(set(values.values())) <= 1
    return SweepResult(values, constant)


def dump_class_jsonl(mc: MutationClass, fh) -> None:
    """Write a class as JSON lines: a header object, then one canonical
    representative per line in the quiver JSON format."""
    header = {
        "format": DUMP_FORMAT_VERSION,
        "size": mc.size,
        "status": mc.status.value,
        "seed_connected": mc.seed_connected,
        "edges": sorted([a, b] for a, b in mc.edges),
    }
    fh.write(json.dumps(header, separators=(",", ":")) + "\n")
    for cf in mc.members:
        fh.write(json.dumps(quiver_to_obj(quiver_from_canonical(cf)),
                            separators=(",", ":")) + "\n")


def load_class_jsonl(fh) -> MutationClass:
    """Read back a dump.  Raises InvalidQuiverError on version or shape
    mismatch so callers can fall back to re-enumeration."""
    header_line = fh.readline()
    if not header_line.strip():
        raise InvalidQuiverError("empty class dump")
    header = json.loads(header_line)
    if header.get("format") != DUMP_FORMAT_VERSION:
        raise InvalidQuiverError(f"class dump format {header.get('format')} unsupported")
    members = []
    for line in fh:
        if not line.strip():
            continue
        members.append(_serialize(quiver_from_obj(json.loads(line)).b))
    if len(members) != header["size"] or list(members) != sorted(members):
        raise InvalidQuiverError("class dump is inconsistent with its header")
    first = quiver_from_canonical(members[0]) if members else Quiver(())
    witness = None
    return MutationClass(
        tuple(members),
        ClassStatus(header["status"]),
        witness,
        frozenset((a, b) for a, b in header.get("edges", [])),
        bool(header.get("seed_connected", first.is_connected())),
    )
