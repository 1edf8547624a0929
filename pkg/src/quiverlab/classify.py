"""Classification against the reference catalog.

A connected quiver with n >= 3 of finite mutation type either comes from a
triangulated surface or is mutation-equivalent to one of the exceptional
types E6, E7, E8, E6^(1), E7^(1), E8^(1), E6^(1,1), E7^(1,1), E8^(1,1),
X6, X7.  The catalog holds one seed per type (plus small A_n, D_n and
oriented-cycle seeds for testing) and lazily enumerates their mutation
classes, cached on disk as JSON-lines dumps.

Two mutation classes either coincide or are disjoint, so "the class of q
intersects the class of seed s" is just membership of q's canonical form in
the cached class of s.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Optional

from .errors import CapExceededError, HypothesisError
from .linalg import corank_gf2, corank_z
from .mutclass import (
    ClassStatus,
    MutationClass,
    canonical_form,
    class_reaches,
    dump_class_jsonl,
    enumerate_class,
    is_finite_mutation_type,
    load_class_jsonl,
)
from .patterns import basic_subquivers, chordless_cycle_orders, cycle_is_oriented, induces_cycle
from .quiver import Quiver, new_quiver

__all__ = [
    "seed_quiver",
    "SEED_NAMES",
    "EXCEPTIONAL_E_NAMES",
    "EXCEPTIONAL_X_NAMES",
    "ReferenceCatalog",
    "mutation_equivalent",
    "contains_class_subquiver",
    "E6Report",
    "e6_characterization",
    "SurfaceCheck",
    "SurfaceReport",
    "surface_by_basic_radical",
    "e6_x6_exclusion",
    "Verdict",
    "Classification",
    "classify_quiver",
]


def _path(n: int) -> list[tuple[int, int, int]]:
    return [(i, i + 1, 1) for i in range(n - 1)]


def _seed_a(n: int) -> Quiver:
    if n < 2:
        raise HypothesisError("A_n seeds need n >= 2")
    return new_quiver(n, _path(n))


def _seed_d(n: int) -> Quiver:
    if n < 4:
        raise HypothesisError("D_n seeds need n >= 4")
    arrows = [(0, 2, 1), (1, 2, 1)]
    arrows += [(i, i + 1, 1) for i in range(2, n - 1)]
    return new_quiver(n, arrows)


def _seed_e(n: int) -> Quiver:
    # path on n-1 vertices with the extra vertex under the third node
    arrows = _path(n - 1) + [(2, n - 1, 1)]
    return new_quiver(n, arrows)


def _seed_e_ext(n: int) -> Quiver:
    if n == 6:
        # three legs of length 2 around the branch vertex
        arrows = _path(5) + [(2, 5, 1), (5, 6, 1)]
        return new_quiver(7, arrows)
    if n == 7:
        arrows = _path(7) + [(3, 7, 1)]
        return new_quiver(8, arrows)
    arrows = _path(8) + [(2, 8, 1)]
    return new_quiver(9, arrows)


def _double_ext_core() -> list[tuple[int, int, int]]:
    # double edge 0 => 1 and three oriented triangles 1 -> spoke -> 0
    arrows = [(0, 1, 2)]
    for s in (2, 3, 4):
        arrows += [(1, s, 1), (s, 0, 1)]
    return arrows


def _seed_e_double_ext(n: int) -> Quiver:
    arrows = _double_ext_core()
    if n == 6:
        # one pendant on each spoke
        arrows += [(2, 5, 1), (3, 6, 1), (4, 7, 1)]
        return new_quiver(8, arrows)
    if n == 7:
        # pendant chains of sizes 2, 2, 0
        arrows += [(2, 5, 1), (5, 6, 1), (3, 7, 1), (7, 8, 1)]
        return new_quiver(9, arrows)
    # pendant chain sizes 1, 4, 0
    arrows += [(2, 5, 1), (3, 6, 1), (6, 7, 1), (7, 8, 1), (8, 9, 1)]
    return new_quiver(10, arrows)


def _seed_x6() -> Quiver:
    arrows = [(0, 1, 1), (1, 2, 2), (2, 0, 1),
              (0, 3, 1), (3, 4, 2), (4, 0, 1),
              (0, 5, 1)]
    return new_quiver(6, arrows)


def _seed_x7() -> Quiver:
    arrows = []
    for a in (1, 3, 5):
        arrows += [(0, a, 1), (a, a + 1, 2), (a + 1, 0, 1)]
    return new_quiver(7, arrows)


def _seed_cycle(n: int) -> Quiver:
    if n < 3:
        raise HypothesisError("cycle seeds need n >= 3")
    return new_quiver(n, [(i, (i + 1) % n, 1) for i in range(n)])


EXCEPTIONAL_E_NAMES = (
    "E6", "E7", "E8",
    "E6^(1)", "E7^(1)", "E8^(1)",
    "E6^(1,1)", "E7^(1,1)", "E8^(1,1)",
)
EXCEPTIONAL_X_NAMES = ("X6", "X7")

_SURFACE_NAMES = tuple(f"A{n}" for n in range(2, 9)) + \
    tuple(f"D{n}" for n in range(4, 9)) + \
    tuple(f"C{n}" for n in range(4, 9))

SEED_NAMES = _SURFACE_NAMES + EXCEPTIONAL_E_NAMES + EXCEPTIONAL_X_NAMES


def seed_quiver(name: str) -> Quiver:
    """The catalog seed quiver for a type name like "D5" or "E7^(1,1)".

    Tree seeds are oriented along increasing vertex number; finite mutation
    type does not depend on the orientation chosen for a tree.
    """
    if name in ("X6", "X7"):
        return _seed_x6() if name == "X6" else _seed_x7()
    if name.startswith("E"):
        rank = int(name[1])
        if name.endswith("^(1,1)"):
            return _seed_e_double_ext(rank)
        if name.endswith("^(1)"):
            return _seed_e_ext(rank)
        return _seed_e(rank)
    kind, num = name[0], int(name[1:])
    if kind == "A":
        return _seed_a(num)
    if kind == "D":
        return _seed_d(num)
    if kind == "C":
        return _seed_cycle(num)
    raise HypothesisError(f"unknown seed name {name!r}")


def _slug(name: str) -> str:
    out = []
    for ch in name:
        out.append(ch if ch.isalnum() else "_")
    text = "".join(out)
    while "__" in text:
        text = text.replace("__", "_")
    return text.strip("_")


class ReferenceCatalog:
    """Named seeds with lazily enumerated, disk-cached mutation classes."""

    def __init__(self, cache_dir: Optional[Path] = None,
                 max_size: int = 100_000):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.max_size = max_size
        self._classes: dict[str, MutationClass] = {}
        self._lock = threading.Lock()

    def names(self) -> tuple[str, ...]:
        return SEED_NAMES

    def listing(self) -> list[dict]:
        return [{"name": name, "n": seed_quiver(name).n} for name in SEED_NAMES]

    def exceptional_names_for_n(self, n: int) -> list[str]:
        return [name for name in EXCEPTIONAL_E_NAMES + EXCEPTIONAL_X_NAMES
                if seed_quiver(name).n == n]

    def _cache_path(self, name: str) -> Optional[Path]:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"{_slug(name)}.jsonl"

    def class_for(self, name: str) -> MutationClass:
        if name not in SEED_NAMES:
            raise HypothesisError(f"unknown seed name {name!r}")
        with self._lock:
            mc = self._classes.get(name)
            if mc is not None:
                return mc
            seed = seed_quiver(name)
            path = self._cache_path(name)
            if path is not None and path.exists():
                try:
                    with open(path) as fh:
                        mc = load_class_jsonl(fh)
                    if (mc.status is not ClassStatus.COMPLETE
                            or canonical_form(seed) not in mc):
                        mc = None  # stale or foreign cache, rebuild
                except Exception:
                    mc = None
            if mc is None:
                mc = enumerate_class(seed, max_size=self.max_size)
                if mc.status is not ClassStatus.COMPLETE:
                    raise RuntimeError(
                        f"internal error: catalog class {name} enumerated "
                        f"{mc.status.value}; seeds must be finite mutation type")
                if path is not None:
                    self.cache_dir.mkdir(parents=True, exist_ok=True)
                    tmp = path.with_suffix(".tmp")
                    with open(tmp, "w") as fh:
                        dump_class_jsonl(mc, fh)
                    tmp.replace(path)
            self._classes[name] = mc
            return mc

    def build(self, names=None) -> dict[str, int]:
        """Enumerate (and cache) the named classes; returns name -> size.

        Also checks, on two small tree seeds, that the arbitrary orientation
        chosen for trees does not change the class.
        """
        sizes = {}
        for name in (names or SEED_NAMES):
            sizes[name] = self.class_for(name).size
        for name, alt in (("A3", new_quiver(3, [(0, 1, 1), (2, 1, 1)])),
                          ("D4", new_quiver(4, [(0, 3, 1), (3, 1, 1), (2, 3, 1)]))):
            if names is None or name in names:
                got = enumerate_class(alt)
                if set(got.members) != set(self.class_for(name).members):
                    raise RuntimeError(
                        f"internal error: reorienting the {name} tree changed its class")
        return sizes


def mutation_equivalent(q1: Quiver, q2: Quiver,
                        max_size: int = 100_000, weight_abort: int = 3) -> bool:
    """Whether q2 is reachable from q1 by mutations and relabeling."""
    if q1.n != q2.n:
        return False
    if corank_z(q1) != corank_z(q2):
        return False
    got = class_reaches(q1, canonical_form(q2), max_size, weight_abort)
    if got is None:
        raise CapExceededError(
            f"mutation class exceeded max_size={max_size}; equivalence undecided")
    return got


def contains_class_subquiver(q: Quiver, name: str, catalog: ReferenceCatalog,
                             max_subsets: int = 200_000) -> Optional[frozenset[int]]:
    """First vertex set (ascending) whose induced subquiver lies in the
    mutation class of the named seed, or None."""
    m = seed_quiver(name).n
    if q.n < m:
        return None
    if comb(q.n, m) > max_subsets:
        raise CapExceededError(
            f"subquiver scan would visit {comb(q.n, m)} subsets, over the budget of {max_subsets}")
    members = set(catalog.class_for(name).members)
    for vs in combinations(range(q.n), m):
        if canonical_form(q.induced_subquiver(vs)) in members:
            return frozenset(vs)
    return None


def _check_e6_hypotheses(q: Quiver):
    if q.n != 6:
        raise HypothesisError(f"characterization needs 6 vertices, got {q.n}")
    if not q.is_connected():
        raise HypothesisError("characterization needs a connected quiver")
    if not q.is_simply_laced():
        raise HypothesisError("characterization needs a simply-laced quiver")
    for c in chordless_cycle_orders(q):
        if not cycle_is_oriented(q, c):
            raise HypothesisError(
                "characterization needs all induced cycles oriented; "
                "{" + ",".join(str(v + 1) for v in sorted(c)) + "} is not")


@dataclass(frozen=True)
class E6Report:
    mutation_equivalent_e6: Optional[bool]
    basic_and_corank_z_zero: bool
    basic_and_corank_gf2_zero: bool
    graph_conditions: bool


def _e6_graph_conditions(q: Quiver, has_basic: bool) -> bool:
    if not has_basic:
        return False
    for c in chordless_cycle_orders(q):
        inside = set(c)
        if not any(
            sum(1 for v in c if q.b[k][v] != 0) == 1
            for k in range(q.n) if k not in inside
        ):
            return False
    for x, y in combinations(range(q.n), 2):
        if q.b[x][y] != 0:
            continue
        if not any(
            (q.b[v][x] != 0) != (q.b[v][y] != 0)
            for v in range(q.n) if v not in (x, y)
        ):
            return False
    return True


def e6_characterization(q: Quiver, catalog: ReferenceCatalog) -> E6Report:
    """The four equivalent E6 tests on a connected simply-laced 6-vertex
    quiver with no non-oriented induced cycle."""
    _check_e6_hypotheses(q)
    has_basic = bool(basic_subquivers(q))
    equivalent: Optional[bool]
    try:
        equivalent = canonical_form(q) in catalog.class_for("E6")
    except CapExceededError:
        equivalent = None
    return E6Report(
        mutation_equivalent_e6=equivalent,
        basic_and_corank_z_zero=has_basic and corank_z(q) == 0,
        basic_and_corank_gf2_zero=has_basic and corank_gf2(q) == 0,
        graph_conditions=_e6_graph_conditions(q, has_basic),
    )


@dataclass(frozen=True)
class SurfaceCheck:
    subquiver: frozenset[int]
    kind: str
    vector: Optional[tuple[int, ...]]
    indicator_radical: Optional[bool]
    ok: bool


@dataclass(frozen=True)
class SurfaceReport:
    holds: bool
    checks: tuple[SurfaceCheck, ...]


def _small_radical_in(q: Quiver, region: frozenset[int]) -> Optional[tuple[int, ...]]:
    # nonzero u with entries in {-1,0,1}, B u = 0, supported in the region,
    # with support two vertices or an induced cycle of q
    supports = [t for t in combinations(sorted(region), 2)]
    big = [t for size in range(3, len(region) + 1)
           for t in combinations(sorted(region), size) if induces_cycle(q, t)]
    for t in supports + big:
        for signs in product((1, -1), repeat=len(t)):
            u = [0] * q.n
            for v, s in zip(t, signs):
                u[v] = s
            if all(sum(q.b[j][v] * u[v] for v in t) == 0 for j in range(q.n)):
                return tuple(u)
    return None


def surface_by_basic_radical(q: Quiver) -> SurfaceReport:
    """Surface test for a finite-mutation-type quiver: every basic subquiver
    must host a small radical vector (entries in {-1,0,1}, support a vertex
    pair or an induced cycle), and the indicator of every basic oriented
    cycle of length >= 5 must itself be radical."""
    from .patterns import PatternKind, radical_support_check_z

    checks = []
    for pat in basic_subquivers(q):
        vec = _small_radical_in(q, pat.vertices)
        indicator: Optional[bool] = None
        ok = vec is not None
        if pat.kind is PatternKind.BASIC_ORIENTED_CYCLE and len(pat.vertices) >= 5:
            indicator = radical_support_check_z(q, pat.vertices)
            ok = ok and indicator
        checks.append(SurfaceCheck(pat.vertices, pat.kind.value, vec, indicator, ok))
    return SurfaceReport(all(c.ok for c in checks), tuple(checks))


def e6_x6_exclusion(q: Quiver, catalog: ReferenceCatalog) -> bool:
    """True unless q contains both an E6-class and an X6-class subquiver
    (which never happens; a False return signals a bug somewhere)."""
    return not (contains_class_subquiver(q, "E6", catalog) is not None
                and contains_class_subquiver(q, "X6", catalog) is not None)


class Verdict(str, Enum):
    TOO_SMALL = "TooSmall"
    INFINITE = "Infinite"
    SURFACE = "Surface"
    EXCEPTIONAL_E = "ExceptionalE"
    EXCEPTIONAL_X = "ExceptionalX"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    name: Optional[str]
    evidence: tuple[str, ...]

    def describe(self) -> str:
        if self.name:
            return f"{self.verdict.value}({self.name})"
        return self.verdict.value


def _internal_check(cond: bool, message: str):
    if not cond:
        raise RuntimeError("internal error: " + message)


def _sample_members(mc: MutationClass, k: int = 5):
    step = max(1, mc.size // k)
    return [mc.members[i] for i in range(0, mc.size, step)][:k]


def classify_quiver(q: Quiver, catalog: ReferenceCatalog,
                    max_size: int = 100_000, weight_abort: int = 3) -> Classification:
    """Full classification of a connected quiver.

    TooSmall for n <= 2; Infinite with evidence (certificate or weight
    witness); otherwise ExceptionalE/ExceptionalX by catalog-class membership,
    or Surface.  Surface verdicts are cross-checked against the subquiver
    criteria; a cross-check failure raises rather than mislabeling.
    """
    from .mutclass import quiver_from_canonical
    from .patterns import infinite_certificate

    if q.n <= 2:
        return Classification(Verdict.TOO_SMALL, None,
                              (f"n={q.n}: classification needs at least 3 vertices",))
    if not q.is_connected():
        raise HypothesisError("classification needs a connected quiver")

    cert = infinite_certificate(q)
    if cert is not None:
        return Classification(Verdict.INFINITE, None, (cert.describe(),))

    cf = canonical_form(q)
    for name in catalog.exceptional_names_for_n(q.n):
        mc = catalog.class_for(name)
        if cf in mc:
            kind = Verdict.EXCEPTIONAL_E if name in EXCEPTIONAL_E_NAMES else Verdict.EXCEPTIONAL_X
            evidence = [f"canonical form lies in the cached {name} class ({mc.size} members)"]
            if kind is Verdict.EXCEPTIONAL_E:
                for member_cf in _sample_members(mc):
                    found = contains_class_subquiver(
                        quiver_from_canonical(member_cf), "E6", catalog)
                    _internal_check(
                        found is not None,
                        f"{name} class member lacks an E6-class subquiver")
                evidence.append("sampled class members contain an E6-class subquiver")
            return Classification(kind, name, tuple(evidence))

    fin = is_finite_mutation_type(q, max_size=max_size, weight_abort=weight_abort)
    if not fin.finite:
        return Classification(Verdict.INFINITE, None, (fin.reason,))

    evidence = [fin.reason, "class disjoint from all cached exceptional classes"]
    if q.n >= 6:
        _internal_check(contains_class_subquiver(q, "E6", catalog) is None,
                        "Surface verdict but an E6-class subquiver is present")
        _internal_check(contains_class_subquiver(q, "X6", catalog) is None,
                        "Surface verdict but an X6-class subquiver is present")
        evidence.append("no E6-class or X6-class subquiver")
    report = surface_by_basic_radical(q)
    _internal_check(report.holds, "Surface verdict but the basic-radical test fails")
    evidence.append(f"basic-radical surface test holds on {len(report.checks)} basic subquivers")
    return Classification(Verdict.SURFACE, None, tuple(evidence))
