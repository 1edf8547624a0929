"""Structural pattern detection.

Covers double edges, chordless (induced) cycles, the three basic subquiver
shapes, indicator-vector radical checks, basic radical vectors over GF(2),
and certificates of infinite mutation type.

A returned certificate proves infinite mutation type for connected quivers;
absence of a certificate proves nothing.  "Cycle" always means an induced
cycle of the underlying graph: the vertices induce exactly a cycle graph,
with no chords.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .errors import SizeLimitError
from .linalg import corank_gf2, gf2_span_dim
from .quiver import Quiver

__all__ = [
    "PatternKind",
    "SubquiverPattern",
    "CertificateClause",
    "InfiniteCertificate",
    "double_edges",
    "chordless_cycle_orders",
    "induced_cycles",
    "cycle_is_oriented",
    "induces_cycle",
    "basic_subquivers",
    "radical_support_check_z",
    "radical_support_check_gf2",
    "basic_radical_vectors",
    "V00Summary",
    "v00",
    "infinite_certificate",
]

CYCLE_ENUM_MAX_N = 16


class PatternKind(str, Enum):
    DOUBLE_EDGE = "double_edge"
    ORIENTED_CYCLE = "oriented_cycle"
    NON_ORIENTED_CYCLE = "non_oriented_cycle"
    BASIC_D4 = "basic_d4"
    BASIC_ADJACENT_TRIANGLES = "basic_adjacent_triangles"
    BASIC_ORIENTED_CYCLE = "basic_oriented_cycle"


@dataclass(frozen=True)
class SubquiverPattern:
    kind: PatternKind
    vertices: frozenset[int]
    detail: Optional[str] = None


class CertificateClause(str, Enum):
    WEIGHT_GE3 = "weight_ge3"
    THREE_VERTEX_DOUBLE_EDGE = "three_vertex_double_edge"
    WEIGHTED_NON_ORIENTED_CYCLE = "weighted_non_oriented_cycle"
    ODD_ATTACHMENT = "odd_attachment"
    TWO_NON_ORIENTED_CYCLES = "two_non_oriented_cycles"


_CLAUSE_ROMAN = {
    CertificateClause.WEIGHT_GE3: "i",
    CertificateClause.THREE_VERTEX_DOUBLE_EDGE: "ii",
    CertificateClause.WEIGHTED_NON_ORIENTED_CYCLE: "iii",
    CertificateClause.ODD_ATTACHMENT: "iv",
    CertificateClause.TWO_NON_ORIENTED_CYCLES: "v",
}


@dataclass(frozen=True)
class InfiniteCertificate:
    clause: CertificateClause
    witness: tuple[frozenset[int], ...]

    @property
    def roman(self) -> str:
        return _CLAUSE_ROMAN[self.clause]

    def describe(self) -> str:
        parts = ["{" + ",".join(str(v + 1) for v in sorted(ws)) + "}" for ws in self.witness]
        return f"clause ({self.roman}) {self.clause.value} on " + ", ".join(parts)


def double_edges(q: Quiver) -> list[SubquiverPattern]:
    out = []
    for i in range(q.n):
        for j in range(i + 1, q.n):
            if abs(q.b[i][j]) == 2:
                out.append(SubquiverPattern(PatternKind.DOUBLE_EDGE, frozenset((i, j))))
    return out


def chordless_cycle_orders(q: Quiver) -> list[tuple[int, ...]]:
    """All induced cycles of the underlying graph, as vertex orders.

    Each cycle appears once, starting at its smallest vertex with the smaller
    neighbour second.  Refuses quivers with more than 16 vertices; the search
    is exponential in the worst case.
    """
    n = q.n
    if n > CYCLE_ENUM_MAX_N:
        raise SizeLimitError(
            f"induced-cycle enumeration supports n <= {CYCLE_ENUM_MAX_N}, got {n}"
        )
    adj = [frozenset(q.neighbors(v)) for v in range(n)]
    out: list[tuple[int, ...]] = []

    def grow(path: list[int]):
        base = path[0]
        last = path[-1]
        for w in adj[last]:
            if w <= base or w in path:
                continue
            # a chord to anything but the tip (or the base, which closes) kills it
            if any(p in adj[w] for p in path[1:-1]):
                continue
            if base in adj[w]:
                if path[1] < w:
                    out.append(tuple(path) + (w,))
                continue
            grow(path + [w])

    for base in range(n):
        for s in sorted(adj[base]):
            if s > base:
                grow([base, s])
    out.sort(key=lambda c: (len(c), c))
    return out


def cycle_is_oriented(q: Quiver, order: Iterable[int]) -> bool:
    order = list(order)
    m = len(order)
    signs = {1 if q.b[order[i]][order[(i + 1) % m]] > 0 else -1 for i in range(m)}
    return len(signs) == 1


def _cycle_weights(q: Quiver, order) -> list[int]:
    m = len(order)
    return [abs(q.b[order[i]][order[(i + 1) % m]]) for i in range(m)]


def _order_detail(order) -> str:
    return "order " + "-".join(str(v + 1) for v in order)


def induced_cycles(q: Quiver) -> list[SubquiverPattern]:
    out = []
    for order in chordless_cycle_orders(q):
        kind = (PatternKind.ORIENTED_CYCLE if cycle_is_oriented(q, order)
                else PatternKind.NON_ORIENTED_CYCLE)
        out.append(SubquiverPattern(kind, frozenset(order), _order_detail(order)))
    return out


def induces_cycle(q: Quiver, vertices: Iterable[int]) -> bool:
    """Whether the given vertex set induces exactly a cycle graph."""
    vs = sorted(set(vertices))
    if len(vs) < 3:
        return False
    inside = set(vs)
    for v in vs:
        if sum(1 for u in q.neighbors(v) if u in inside) != 2:
            return False
    # degree 2 everywhere: connected iff a single cycle
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        v = stack.pop()
        for u in q.neighbors(v):
            if u in inside and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(vs)


def basic_subquivers(q: Quiver) -> list[SubquiverPattern]:
    """Basic subquivers: D4 trees (any orientation), two adjacent oriented
    simply-laced triangles, and oriented simply-laced cycles of length >= 4."""
    n = q.n
    out = []
    for c in range(n):
        single = [v for v in range(n) if abs(q.b[c][v]) == 1]
        for trio in combinations(single, 3):
            if all(q.b[x][y] == 0 for x, y in combinations(trio, 2)):
                out.append(SubquiverPattern(
                    PatternKind.BASIC_D4,
                    frozenset((c,) + trio),
                    f"center {c + 1}",
                ))
    cycles = chordless_cycle_orders(q)
    tri = [c for c in cycles
           if len(c) == 3 and set(_cycle_weights(q, c)) == {1} and cycle_is_oriented(q, c)]
    for c1, c2 in combinations(tri, 2):
        shared = set(c1) & set(c2)
        if len(shared) != 2:
            continue
        a = next(iter(set(c1) - shared))
        b = next(iter(set(c2) - shared))
        if q.b[a][b] == 0:
            out.append(SubquiverPattern(
                PatternKind.BASIC_ADJACENT_TRIANGLES,
                frozenset(c1) | frozenset(c2),
                "shared edge {%d,%d}" % tuple(sorted(v + 1 for v in shared)),
            ))
    for c in cycles:
        if len(c) >= 4 and set(_cycle_weights(q, c)) == {1} and cycle_is_oriented(q, c):
            out.append(SubquiverPattern(
                PatternKind.BASIC_ORIENTED_CYCLE, frozenset(c), _order_detail(c)))
    return out


def radical_support_check_z(q: Quiver, vertices: Iterable[int]) -> bool:
    """Whether the 0/1 indicator of the vertex set is radical over Z.

    Checked vertex by vertex: at every vertex j the weighted arrows leaving j
    into the set must balance the weighted arrows entering j from the set.
    """
    s = set(vertices)
    return all(sum(q.b[j][v] for v in s) == 0 for j in range(q.n))


def radical_support_check_gf2(q: Quiver, vertices: Iterable[int]) -> bool:
    """Whether the indicator of the vertex set is radical mod 2: every vertex
    meets the set with even total edge weight."""
    s = set(vertices)
    return all(sum(q.b[j][v] for v in s) & 1 == 0 for j in range(q.n))


def basic_radical_vectors(q: Quiver) -> list[tuple[int, ...]]:
    """GF(2) radical vectors whose support is two vertices or an induced cycle.

    Candidate supports are every vertex pair and every induced cycle, oriented
    or not.  Returns indicator vectors sorted by support size then vertex
    order.  Empty for n < 3: the shapes only make sense inside a host quiver.
    """
    n = q.n
    if n < 3:
        return []
    supports = [pair for pair in combinations(range(n), 2)]
    supports.extend(tuple(sorted(c)) for c in chordless_cycle_orders(q))
    supports.sort(key=lambda s: (len(s), s))
    out = []
    for s in supports:
        if radical_support_check_gf2(q, s):
            out.append(tuple(1 if v in s else 0 for v in range(n)))
    return out


class V00Summary(NamedTuple):
    dim_v00: int
    dim_v0: int
    quotient_dim: int


def v00(q: Quiver) -> V00Summary:
    """Dimensions of the basic-radical span inside the GF(2) radical."""
    dim_v0 = corank_gf2(q)
    dim_v00 = gf2_span_dim(basic_radical_vectors(q))
    return V00Summary(dim_v00, dim_v0, dim_v0 - dim_v00)


def _is_dag(q: Quiver, vertices) -> bool:
    vs = sorted(vertices)
    indeg = {v: 0 for v in vs}
    inside = set(vs)
    for v in vs:
        for u in q.neighbors(v):
            if u in inside and q.b[u][v] > 0:
                indeg[v] += 1
    ready = [v for v in vs if indeg[v] == 0]
    done = 0
    while ready:
        v = ready.pop()
        done += 1
        for u in q.neighbors(v):
            if u in inside and q.b[v][u] > 0:
                indeg[u] -= 1
                if indeg[u] == 0:
                    ready.append(u)
    return done == len(vs)


def _connected_subset(q: Quiver, vertices) -> bool:
    vs = set(vertices)
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in q.neighbors(v):
            if u in vs and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(vs)


def infinite_certificate(q: Quiver) -> Optional[InfiniteCertificate]:
    """Scan the five infinite-type clauses in order, returning the first hit.

    Clauses, on a quiver with n >= 3 (assumed connected):

    (i)   an edge of weight >= 3;
    (ii)  the quiver has exactly 3 vertices and a double edge, and is not an
          oriented triangle with weights {2,1,1} or {2,2,2};
    (iii) a non-oriented induced cycle with a weight-2 edge;
    (iv)  a simply-laced induced cycle C plus a vertex k joined to C by single
          edges, meeting an odd number of C-vertices (odd >= 3 if C oriented);
    (v)   two distinct non-oriented induced cycles whose union induces a
          connected subquiver with no oriented cycles.
    """
    n = q.n
    if n < 3:
        return None

    for i in range(n):
        for j in range(i + 1, n):
            if abs(q.b[i][j]) >= 3:
                return InfiniteCertificate(
                    CertificateClause.WEIGHT_GE3, (frozenset((i, j)),))

    if n == 3:
        ws = sorted(abs(q.b[x][y]) for x, y in combinations(range(3), 2))
        if 2 in ws:
            ok = (0 not in ws                   # a triangle, not a tree
                  and ws in ([1, 1, 2], [2, 2, 2])
                  and cycle_is_oriented(q, (0, 1, 2)))
            if not ok:
                return InfiniteCertificate(
                    CertificateClause.THREE_VERTEX_DOUBLE_EDGE, (frozenset(range(3)),))

    cycles = chordless_cycle_orders(q)
    oriented = {c: cycle_is_oriented(q, c) for c in cycles}

    for c in cycles:
        if max(_cycle_weights(q, c)) >= 2 and not oriented[c]:
            return InfiniteCertificate(
                CertificateClause.WEIGHTED_NON_ORIENTED_CYCLE, (frozenset(c),))

    for c in cycles:
        if max(_cycle_weights(q, c)) != 1:
            continue
        inside = set(c)
        for k in range(n):
            if k in inside:
                continue
            touching = [v for v in c if q.b[k][v] != 0]
            if not touching or any(abs(q.b[k][v]) != 1 for v in touching):
                continue
            cnt = len(touching)
            if cnt % 2 == 1 and (not oriented[c] or cnt >= 3):
                return InfiniteCertificate(
                    CertificateClause.ODD_ATTACHMENT, (frozenset(c), frozenset((k,))))

    non_oriented = [c for c in cycles if not oriented[c]]
    for c1, c2 in combinations(non_oriented, 2):
        union = frozenset(c1) | frozenset(c2)
        if _connected_subset(q, union) and _is_dag(q, union):
            return InfiniteCertificate(
                CertificateClause.TWO_NON_ORIENTED_CYCLES,
                (frozenset(c1), frozenset(c2)))

    return None
