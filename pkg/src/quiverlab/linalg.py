"""Exact linear algebra over Z and GF(2).

Integer rank uses Bareiss fraction-free elimination, so no floats and no
rationals appear on that path.  Kernels over Q are computed with exact
rationals and cleared to primitive integer vectors.  GF(2) matrices are kept
as rows of machine integers used as bitsets (bit j of row i is b[i][j] mod 2).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InvalidQuiverError
from .quiver import Quiver

__all__ = [
    "rank_z",
    "corank_z",
    "radical_basis_z",
    "reduce_mod2",
    "rank_gf2",
    "corank_gf2",
    "radical_basis_gf2",
    "gf2_span_dim",
    "gf2_member",
]


def _bareiss_rank(mat: Sequence[Sequence[int]]) -> int:
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            mic = m[i][c]
            mrc = m[r][c]
            for j in range(c + 1, cols):
                # exact by Sylvester's identity
                m[i][j] = (m[i][j] * mrc - mic * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def rank_z(q: Quiver) -> int:
    """Rank of the exchange matrix over the rationals."""
    r = _bareiss_rank(q.b)
    # skew-symmetric matrices have even rank
    assert r % 2 == 0, f"odd rank {r} on a skew-symmetric matrix"
    return r


def corank_z(q: Quiver) -> int:
    return q.n - rank_z(q)


def radical_basis_z(q: Quiver) -> list[tuple[int, ...]]:
    """Basis of the radical {u : B u = 0} as primitive integer vectors.

    Kernel vectors are read off the reduced row echelon form, one per free
    column in ascending order, scaled to integers with gcd 1 and a positive
    leading entry.
    """
    n = q.n
    m = [[Fraction(x) for x in row] for row in q.b]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -m[prow][fcol]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x != 0)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def reduce_mod2(q: Quiver) -> list[int]:
    """Rows of B mod 2 as bitsets."""
    return [sum((x & 1) << j for j, x in enumerate(row)) for row in q.b]


def _gf2_rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    m = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if (m[i] >> c) & 1), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and (m[i] >> c) & 1:
                m[i] ^= m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def rank_gf2(q: Quiver) -> int:
    _, pivots = _gf2_rref(reduce_mod2(q), q.n)
    return len(pivots)


def corank_gf2(q: Quiver) -> int:
    return q.n - rank_gf2(q)


def radical_basis_gf2(q: Quiver) -> list[tuple[int, ...]]:
    """Basis of {u : (B mod 2) u = 0}, one vector per free column, ascending."""
    n = q.n
    m, pivots = _gf2_rref(reduce_mod2(q), n)
    pivset = set(pivots)
    basis = []
    for fcol in range(n):
        if fcol in pivset:
            continue
        v = [0] * n
        v[fcol] = 1
        for prow, pcol in enumerate(pivots):
            v[pcol] = (m[prow] >> fcol) & 1
        basis.append(tuple(v))
    return basis


def _pack(v: Sequence[int]) -> int:
    return sum((int(x) & 1) << j for j, x in enumerate(v))


def gf2_span_dim(vectors: Sequence[Sequence[int]]) -> int:
    """Dimension of the GF(2) span of the given 0/1 vectors."""
    if not vectors:
        return 0
    n = len(vectors[0])
    for v in vectors:
        if len(v) != n:
            raise InvalidQuiverError("vectors of mixed length in gf2_span_dim")
    _, pivots = _gf2_rref([_pack(v) for v in vectors], n)
    return len(pivots)


def gf2_member(v: Sequence[int], vectors: Sequence[Sequence[int]]) -> bool:
    """Whether v lies in the GF(2) span of the given vectors."""
    if not any(int(x) & 1 for x in v):
        return True
    if not vectors:
        return False
    if len(v) != len(vectors[0]):
        raise InvalidQuiverError("vector length mismatch in gf2_member")
    base = gf2_span_dim(vectors)
    return gf2_span_dim(list(vectors) + [list(v)]) == base
