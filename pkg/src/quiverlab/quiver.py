"""Quivers as skew-symmetric integer matrices.

A quiver on n vertices (no loops, no 2-cycles) is stored as its exchange
matrix ``b``: ``b[i][j] = w > 0`` means w arrows from i to j, and skew-symmetry
``b[j][i] = -w`` is enforced on construction.  Vertices are 0-based here;
the text/JSON formats and the CLI/HTTP layers use 1-based labels.

Entries are plain Python ints, so weights produced by repeated mutation never
overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidQuiverError

__all__ = ["Quiver", "new_quiver", "pushforward_vector", "support"]


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Quiver:
    """Immutable quiver, identified with its skew-symmetric exchange matrix."""

    b: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.b)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], labels=None) -> "Quiver":
        b = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(b)
        for i, row in enumerate(b):
            if len(row) != n:
                raise InvalidQuiverError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if b[i][i] != 0:
                raise InvalidQuiverError(f"loop forbidden at vertex {i}")
            for j in range(i + 1, n):
                if b[i][j] != -b[j][i]:
                    raise InvalidQuiverError(
                        f"matrix not skew-symmetric at ({i},{j}): {b[i][j]} vs {b[j][i]}"
                    )
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InvalidQuiverError("labels length does not match vertex count")
        return cls(b, labels)

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int, int]], labels=None) -> "Quiver":
        """Build a quiver from 0-based (source, target, weight) triples."""
        if n < 0:
            raise InvalidQuiverError("vertex count must be non-negative")
        rows = [[0] * n for _ in range(n)]
        for i, j, w in arrows:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidQuiverError(f"vertex out of range in arrow ({i},{j},{w})")
            if i == j:
                raise InvalidQuiverError(f"loop forbidden at vertex {i}")
            if w <= 0:
                raise InvalidQuiverError(f"arrow weight must be positive, got {w}")
            if rows[i][j] != 0 or rows[j][i] != 0:
                raise InvalidQuiverError(f"conflicting edge between {i} and {j}")
            rows[i][j] = w
            rows[j][i] = -w
        return cls.from_matrix(rows, labels)

    def mutate(self, k: int) -> "Quiver":
        """Mutate at vertex k.

        Parameters
        ----------
        k : int
            0-based vertex index.

        Returns
        -------
        Quiver
            The mutated quiver: entries in row/column k change sign, and for
            i, j != k the entry becomes
            ``b[i][j] + sgn(b[i][k]) * max(b[i][k] * b[k][j], 0)``.

        Raises
        ------
        IndexError
            If k is out of range.
        """
        n = self.n
        if not 0 <= k < n:
            raise IndexError(f"mutation vertex {k} out of range for n={n}")
        b = self.b
        out = []
        for i in range(n):
            bi = b[i]
            bik = bi[k]
            if i == k:
                out.append(tuple(-x for x in bi))
                continue
            row = list(bi)
            row[k] = -bik
            if bik:
                s = _sgn(bik)
                bk = b[k]
                for j in range(n):
                    if j == k or j == i:
                        continue
                    p = bik * bk[j]
                    if p > 0:
                        row[j] = bi[j] + s * p
            out.append(tuple(row))
        return Quiver(tuple(out), self.labels)

    def mutate_sequence(self, ks: Iterable[int]) -> "Quiver":
        q = self
        for k in ks:
            q = q.mutate(k)
        return q

    def induced_subquiver(self, vs: Iterable[int]) -> "Quiver":
        """Full subquiver on the given vertices, in ascending vertex order."""
        order = sorted(set(vs))
        for v in order:
            if not 0 <= v < self.n:
                raise InvalidQuiverError(f"vertex {v} out of range")
        b = tuple(tuple(self.b[i][j] for j in order) for i in order)
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[i] for i in order)
        return Quiver(b, labels)

    def permuted(self, perm: Sequence[int]) -> "Quiver":
        """Relabel vertices: vertex i of the result is vertex perm[i] of self."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidQuiverError("not a permutation of the vertex set")
        b = tuple(tuple(self.b[perm[i]][perm[j]] for j in range(self.n)) for i in range(self.n))
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[perm[i]] for i in range(self.n))
        return Quiver(b, labels)

    def arrows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (source, target, weight) once per underlying edge, source first."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                w = self.b[i][j]
                if w > 0:
                    yield (i, j, w)
                elif w < 0:
                    yield (j, i, -w)

    def neighbors(self, v: int) -> list[int]:
        return [j for j in range(self.n) if self.b[v][j] != 0]

    def degree(self, v: int) -> int:
        return sum(1 for j in range(self.n) if self.b[v][j] != 0)

    def max_weight(self) -> int:
        return max((abs(x) for row in self.b for x in row), default=0)

    def is_simply_laced(self) -> bool:
        return self.max_weight() <= 1

    def is_connected(self) -> bool:
        n = self.n
        if n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for j in range(n):
                if self.b[v][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def components(self) -> list[frozenset[int]]:
        left = set(range(self.n))
        comps = []
        while left:
            start = min(left)
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for j in range(self.n):
                    if self.b[v][j] != 0 and j not in seen:
                        seen.add(j)
                        stack.append(j)
            comps.append(frozenset(seen))
            left -= seen
        return comps


def new_quiver(n: int, arrows: Iterable[tuple[int, int, int]], labels=None) -> Quiver:
    """Construct a quiver from 0-based arrow triples; see Quiver.from_arrows."""
    return Quiver.from_arrows(n, arrows, labels)


def pushforward_vector(q: Quiver, k: int, u: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of a vector after the base change attached to mutation at k.

    The new basis is ``e'_k = -e_k`` and, for j != k, ``e'_j = e_j`` when
    ``b[k][j] >= 0`` and ``e'_j = e_j - b[k][j] e_k`` when ``b[k][j] < 0``.
    In coordinates only the k-th entry moves:

        u'_k = -u_k + sum(-b[k][j] * u_j for j with b[k][j] < 0)

    The weights -b[k][j] matter: on multiple arrows the unweighted sum is not
    a base change, and the radical is not preserved.  If ``q.b @ u == 0`` then
    ``q.mutate(k).b @ u' == 0``.
    """
    n = q.n
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range for n={n}")
    u = tuple(int(x) for x in u)
    if len(u) != n:
        raise InvalidQuiverError(f"vector length {len(u)} does not match n={n}")
    bk = q.b[k]
    acc = -u[k]
    for j in range(n):
        if bk[j] < 0:
            acc += -bk[j] * u[j]
    return u[:k] + (acc,) + u[k + 1:]


def support(u: Sequence[int]) -> frozenset[int]:
    """Indices of the non-zero coordinates."""
    return frozenset(i for i, x in enumerate(u) if x)
