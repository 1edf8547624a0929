import pytest
from hypothesis import given, settings

from quiverlab import (
    CertificateClause,
    PatternKind,
    SizeLimitError,
    basic_radical_vectors,
    basic_subquivers,
    double_edges,
    induced_cycles,
    infinite_certificate,
    new_quiver,
    radical_support_check_gf2,
    radical_support_check_z,
    seed_quiver,
    v00,
)
from quiverlab.patterns import chordless_cycle_orders, cycle_is_oriented, induces_cycle

from conftest import quivers


def path(n):
    return new_quiver(n, [(i, i + 1, 1) for i in range(n - 1)])


def oriented_cycle(n):
    return new_quiver(n, [(i, (i + 1) % n, 1) for i in range(n)])


class TestDoubleEdges:
    def test_x6_has_two(self):
        assert len(double_edges(seed_quiver("X6"))) == 2

    def test_x7_has_three(self):
        assert len(double_edges(seed_quiver("X7"))) == 3

    def test_double_extended_have_one(self):
        assert len(double_edges(seed_quiver("E6^(1,1)"))) == 1
        assert len(double_edges(seed_quiver("E7^(1,1)"))) == 1
        assert len(double_edges(seed_quiver("E8^(1,1)"))) == 1

    def test_simply_laced_none(self):
        assert double_edges(seed_quiver("E7")) == []


class TestInducedCycles:
    def test_square_with_diagonal_gives_triangles(self):
        q = new_quiver(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)])
        found = induced_cycles(q)
        assert sorted(sorted(p.vertices) for p in found) == [[0, 1, 2], [0, 2, 3]]

    def test_oriented_square(self):
        found = induced_cycles(oriented_cycle(4))
        assert len(found) == 1
        assert found[0].kind is PatternKind.ORIENTED_CYCLE
        assert found[0].vertices == frozenset(range(4))

    def test_path_has_none(self):
        assert induced_cycles(path(5)) == []

    def test_k4_has_only_triangles(self):
        q = new_quiver(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1),
                           (0, 3, 1), (1, 3, 1), (2, 3, 1)])
        found = chordless_cycle_orders(q)
        assert len(found) == 4 and all(len(c) == 3 for c in found)

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            chordless_cycle_orders(path(17))

    @given(quivers(min_n=3, max_n=6, max_weight=1))
    @settings(max_examples=80)
    def test_every_reported_cycle_is_induced(self, q):
        for p in induced_cycles(q):
            assert induces_cycle(q, p.vertices)

    def test_orders_are_cyclic(self):
        for order in chordless_cycle_orders(seed_quiver("E6^(1,1)")):
            m = len(order)
            for i in range(m):
                assert order[(i + 1) % m] in seed_quiver("E6^(1,1)").neighbors(order[i])


class TestBasicSubquivers:
    def test_d4_star_any_orientation(self):
        for arrows in ([(0, 3, 1), (1, 3, 1), (2, 3, 1)],
                       [(3, 0, 1), (1, 3, 1), (3, 2, 1)]):
            found = basic_subquivers(new_quiver(4, arrows))
            assert [p.kind for p in found] == [PatternKind.BASIC_D4]

    def test_oriented_square_is_basic(self):
        found = basic_subquivers(oriented_cycle(4))
        assert [p.kind for p in found] == [PatternKind.BASIC_ORIENTED_CYCLE]

    def test_a6_has_none(self):
        assert basic_subquivers(path(6)) == []

    def test_adjacent_oriented_triangles(self):
        q = new_quiver(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 1, 1)])
        kinds = {p.kind for p in basic_subquivers(q)}
        assert PatternKind.BASIC_ADJACENT_TRIANGLES in kinds

    def test_non_oriented_triangle_pair_not_basic(self):
        q = new_quiver(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (1, 3, 1), (3, 2, 1)])
        assert all(p.kind is not PatternKind.BASIC_ADJACENT_TRIANGLES
                   for p in basic_subquivers(q))

    def test_outer_pair_adjacency_disqualifies(self):
        # two oriented triangles sharing an edge, outer vertices joined
        q = new_quiver(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1),
                           (2, 3, 1), (3, 1, 1), (0, 3, 1)])
        assert all(p.kind is not PatternKind.BASIC_ADJACENT_TRIANGLES
                   for p in basic_subquivers(q))


class TestRadicalSupportChecks:
    def test_lone_oriented_cycle_indicator(self):
        assert radical_support_check_z(oriented_cycle(5), range(5))

    def test_path_indicator_unbalanced(self):
        assert not radical_support_check_z(path(3), {0, 1, 2})

    def test_square_with_pendant(self):
        q = new_quiver(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 4, 1)])
        assert not radical_support_check_z(q, {0, 1, 2, 3})

    def test_double_edge_even(self):
        q = new_quiver(3, [(0, 1, 2), (1, 2, 1), (2, 0, 1)])
        assert radical_support_check_gf2(q, {0, 1})

    def test_single_arrow_odd(self):
        assert not radical_support_check_gf2(new_quiver(2, [(0, 1, 1)]), {0})

    @given(quivers(max_n=6))
    @settings(max_examples=40)
    def test_checks_match_matrix_products(self, q):
        from itertools import combinations
        for size in range(1, q.n + 1):
            for s in combinations(range(q.n), size):
                u = [1 if v in s else 0 for v in range(q.n)]
                bz = all(sum(q.b[i][j] * u[j] for j in range(q.n)) == 0
                         for i in range(q.n))
                b2 = all(sum(q.b[i][j] * u[j] for j in range(q.n)) % 2 == 0
                         for i in range(q.n))
                assert radical_support_check_z(q, s) == bz
                assert radical_support_check_gf2(q, s) == b2


class TestBasicRadicalVectors:
    def test_triangle(self):
        q = oriented_cycle(3)
        assert basic_radical_vectors(q) == [(1, 1, 1)]

    def test_a3_pair_support(self):
        assert basic_radical_vectors(path(3)) == [(1, 0, 1)]

    def test_too_small(self):
        assert basic_radical_vectors(new_quiver(2, [(0, 1, 1)])) == []

    def test_v00_examples(self):
        assert v00(path(3)) == (1, 1, 0)
        assert v00(oriented_cycle(3)) == (1, 1, 0)
        # A5 kernel is supported on {1,3,5}: neither a pair nor a cycle
        assert v00(path(5)) == (0, 1, 1)


class TestInfiniteCertificate:
    def test_weight_three(self):
        cert = infinite_certificate(new_quiver(3, [(0, 1, 3), (1, 2, 1)]))
        assert cert.clause is CertificateClause.WEIGHT_GE3

    def test_three_vertex_double_tree(self):
        cert = infinite_certificate(new_quiver(3, [(0, 1, 2), (1, 2, 1)]))
        assert cert.clause is CertificateClause.THREE_VERTEX_DOUBLE_EDGE

    def test_non_oriented_weighted_square(self):
        q = new_quiver(4, [(0, 1, 2), (1, 2, 1), (3, 2, 1), (0, 3, 1)])
        cert = infinite_certificate(q)
        assert cert.clause is CertificateClause.WEIGHTED_NON_ORIENTED_CYCLE

    def test_odd_attachment(self):
        q = new_quiver(5, [(0, 1, 1), (2, 1, 1), (2, 3, 1), (0, 3, 1), (0, 4, 1)])
        cert = infinite_certificate(q)
        assert cert.clause is CertificateClause.ODD_ATTACHMENT

    def test_two_non_oriented_cycles(self):
        q = new_quiver(5, [(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 2, 1),
                           (0, 4, 1), (4, 2, 1)])
        cert = infinite_certificate(q)
        assert cert.clause is CertificateClause.TWO_NON_ORIENTED_CYCLES

    def test_finite_triangle_exceptions(self):
        assert infinite_certificate(new_quiver(3, [(0, 1, 2), (1, 2, 1), (2, 0, 1)])) is None
        assert infinite_certificate(new_quiver(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])) is None

    def test_small_and_reference_quivers_clean(self):
        assert infinite_certificate(new_quiver(2, [(0, 1, 5)])) is None  # n < 3
        for name in ("A5", "D6", "E6", "X6", "X7", "E8^(1,1)"):
            assert infinite_certificate(seed_quiver(name)) is None

    def test_description_uses_one_based_vertices(self):
        cert = infinite_certificate(new_quiver(3, [(0, 1, 3), (1, 2, 1)]))
        assert "{1,2}" in cert.describe() and cert.roman == "i"
