"""Shared fixtures, random corpora, and the independent oracle.

The oracle reimplements mutation, isomorphism (exhaustive permutations),
class enumeration, rational rank and the GF(2) kernel from scratch, without
touching the library internals.  Ground-truth fixtures in the tests were
produced by these functions and then frozen.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product
from pathlib import Path

import pytest
from hypothesis import strategies as st

from quiverlab import Quiver, ReferenceCatalog

REPO_ROOT = Path(__file__).resolve().parent.parent
CACHE_DIR = REPO_ROOT / ".quiverlab-cache"


@pytest.fixture(scope="session")
def catalog() -> ReferenceCatalog:
    return ReferenceCatalog(cache_dir=CACHE_DIR)


# ---------------------------------------------------------------- corpora

def random_quiver(rng: random.Random, n: int, max_weight: int = 3,
                  density: float = 0.5) -> Quiver:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                w = rng.randint(1, max_weight) * rng.choice((1, -1))
                b[i][j] = w
                b[j][i] = -w
    return Quiver.from_matrix(b)


def corpus(seed: int, count: int, max_n: int = 8, max_weight: int = 3) -> list[Quiver]:
    rng = random.Random(seed)
    return [random_quiver(rng, rng.randint(1, max_n), max_weight) for _ in range(count)]


@st.composite
def quivers(draw, min_n: int = 1, max_n: int = 6, max_weight: int = 3):
    n = draw(st.integers(min_n, max_n))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = draw(st.integers(-max_weight, max_weight))
            b[i][j] = w
            b[j][i] = -w
    return Quiver.from_matrix(b)


# ----------------------------------------------------------------- oracle

def oracle_mutate(q: Quiver, k: int) -> Quiver:
    # textbook formula, no shortcuts shared with the library
    n = q.n
    b = q.b
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                sgn = 0 if b[i][k] == 0 else (1 if b[i][k] > 0 else -1)
                out[i][j] = b[i][j] + sgn * max(b[i][k] * b[k][j], 0)
    return Quiver.from_matrix(out)


def oracle_canonical(q: Quiver) -> bytes:
    n = q.n
    best = None
    for perm in permutations(range(n)):
        key = tuple(q.b[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))
        if best is None or key < best:
            best = key
    return repr((n, best)).encode()


def oracle_class(q: Quiver, cap: int = 100_000, weight_abort: int = 3):
    """BFS enumeration up to isomorphism; returns (set of oracle keys, aborted)."""
    start = oracle_canonical(q)
    seen = {start: q}
    queue = [q]
    while queue:
        cur = queue.pop(0)
        for k in range(cur.n):
            nxt = oracle_mutate(cur, k)
            if cur.n >= 3 and nxt.max_weight() >= weight_abort:
                return set(seen), True
            key = oracle_canonical(nxt)
            if key not in seen:
                if len(seen) >= cap:
                    return set(seen), True
                seen[key] = nxt
                queue.append(nxt)
    return set(seen), False


def oracle_rank(q: Quiver) -> int:
    m = [[Fraction(x) for x in row] for row in q.b]
    n = q.n
    rank = 0
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col] / m[row][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def oracle_gf2_kernel(q: Quiver) -> set[tuple[int, ...]]:
    """All GF(2) radical vectors, brute force over 2^n candidates."""
    n = q.n
    out = set()
    for bits in product((0, 1), repeat=n):
        if all(sum(q.b[i][j] * bits[j] for j in range(n)) % 2 == 0 for i in range(n)):
            out.add(bits)
    return out


def oracle_is_radical_z(q: Quiver, u) -> bool:
    return all(sum(q.b[i][j] * u[j] for j in range(q.n)) == 0 for i in range(q.n))


def same_iso_classes(quivers_a, quivers_b) -> bool:
    return ({oracle_canonical(x) for x in quivers_a}
            == {oracle_canonical(x) for x in quivers_b})
