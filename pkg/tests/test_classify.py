import pytest

from quiverlab import (
    CapExceededError,
    Classification,
    EXCEPTIONAL_E_NAMES,
    EXCEPTIONAL_X_NAMES,
    HypothesisError,
    ReferenceCatalog,
    SEED_NAMES,
    Verdict,
    canonical_form,
    classify_quiver,
    contains_class_subquiver,
    double_edges,
    e6_characterization,
    e6_x6_exclusion,
    infinite_certificate,
    mutation_equivalent,
    new_quiver,
    seed_quiver,
    surface_by_basic_radical,
)

TRIANGLE = new_quiver(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])


class TestSeeds:
    def test_name_inventory(self):
        assert len(SEED_NAMES) == 28
        assert len(EXCEPTIONAL_E_NAMES) == 9 and len(EXCEPTIONAL_X_NAMES) == 2

    def test_shapes(self):
        e6 = seed_quiver("E6")
        assert e6.n == 6 and len(list(e6.arrows())) == 5 and e6.is_simply_laced()
        assert len(double_edges(seed_quiver("X7"))) == 3
        e711 = seed_quiver("E7^(1,1)")
        assert e711.n == 9 and len(double_edges(e711)) == 1
        assert seed_quiver("C5").n == 5 and len(list(seed_quiver("C5").arrows())) == 5

    def test_all_seeds_connected_and_certificate_free(self):
        for name in SEED_NAMES:
            q = seed_quiver(name)
            assert q.is_connected(), name
            assert infinite_certificate(q) is None, name

    def test_unknown_names_rejected(self):
        with pytest.raises(HypothesisError):
            seed_quiver("F4")
        with pytest.raises(HypothesisError):
            seed_quiver("A1")


class TestCatalog:
    def test_cache_file_round_trip(self, tmp_path):
        cat = ReferenceCatalog(cache_dir=tmp_path)
        first = cat.class_for("A3")
        assert (tmp_path / "A3.jsonl").exists()
        again = ReferenceCatalog(cache_dir=tmp_path).class_for("A3")
        assert again.members == first.members and again.size == 4

    def test_corrupt_cache_rebuilds(self, tmp_path):
        (tmp_path / "A3.jsonl").write_text("not json\n")
        assert ReferenceCatalog(cache_dir=tmp_path).class_for("A3").size == 4

    def test_foreign_cache_rebuilds(self, tmp_path):
        cat = ReferenceCatalog(cache_dir=tmp_path)
        cat.class_for("A3")
        (tmp_path / "D4.jsonl").write_text((tmp_path / "A3.jsonl").read_text())
        assert ReferenceCatalog(cache_dir=tmp_path).class_for("D4").size == 6

    def test_memory_only(self):
        assert ReferenceCatalog().class_for("A4").size == 6

    def test_build_checks_tree_orientation(self, tmp_path):
        sizes = ReferenceCatalog(cache_dir=tmp_path).build(names=["A3", "D4"])
        assert sizes == {"A3": 4, "D4": 6}

    def test_unknown_seed(self):
        with pytest.raises(HypothesisError):
            ReferenceCatalog().class_for("B2")

    def test_exceptional_names_for_n(self):
        cat = ReferenceCatalog()
        assert cat.exceptional_names_for_n(6) == ["E6", "X6"]
        assert cat.exceptional_names_for_n(7) == ["E7", "E6^(1)", "X7"]
        assert cat.exceptional_names_for_n(5) == []

    def test_listing(self):
        entries = {e["name"]: e["n"] for e in ReferenceCatalog().listing()}
        assert entries["E8^(1,1)"] == 10 and entries["A2"] == 2


class TestMutationEquivalent:
    def test_path_and_cycle(self):
        assert mutation_equivalent(seed_quiver("A3"), TRIANGLE)
        assert mutation_equivalent(TRIANGLE, seed_quiver("A3"))

    def test_reflexive(self):
        q = seed_quiver("D5")
        assert mutation_equivalent(q, q)

    def test_disjoint_classes(self):
        assert not mutation_equivalent(seed_quiver("E6"), seed_quiver("A6"))

    def test_size_mismatch(self):
        assert not mutation_equivalent(seed_quiver("A3"), seed_quiver("A4"))

    def test_corank_filter(self):
        # oriented square has corank 2, the path 0; no enumeration required
        assert not mutation_equivalent(seed_quiver("C4"), seed_quiver("A4"), max_size=1)

    def test_undecided_raises(self):
        q1 = new_quiver(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
        with pytest.raises(CapExceededError):
            mutation_equivalent(q1, seed_quiver("A4"), max_size=5, weight_abort=100)


class TestContainsClassSubquiver:
    def test_e7_contains_e6(self, catalog):
        vs = contains_class_subquiver(seed_quiver("E7"), "E6", catalog)
        assert vs is not None and len(vs) == 6
        sub = seed_quiver("E7").induced_subquiver(sorted(vs))
        assert canonical_form(sub) in catalog.class_for("E6")

    def test_x7_contains_x6(self, catalog):
        assert contains_class_subquiver(seed_quiver("X7"), "X6", catalog) is not None

    def test_a6_contains_neither(self, catalog):
        assert contains_class_subquiver(seed_quiver("A6"), "E6", catalog) is None
        assert contains_class_subquiver(seed_quiver("A6"), "X6", catalog) is None

    def test_smaller_quiver_is_none(self, catalog):
        assert contains_class_subquiver(seed_quiver("A5"), "E6", catalog) is None

    def test_budget(self, catalog):
        with pytest.raises(CapExceededError):
            contains_class_subquiver(seed_quiver("E7"), "E6", catalog, max_subsets=1)


class TestE6Characterization:
    def test_e6_seed_all_true(self, catalog):
        rep = e6_characterization(seed_quiver("E6"), catalog)
        assert rep.mutation_equivalent_e6 is True
        assert rep.basic_and_corank_z_zero and rep.basic_and_corank_gf2_zero
        assert rep.graph_conditions

    def test_a6_seed_all_false(self, catalog):
        rep = e6_characterization(seed_quiver("A6"), catalog)
        assert rep.mutation_equivalent_e6 is False
        assert not rep.basic_and_corank_z_zero and not rep.basic_and_corank_gf2_zero
        assert not rep.graph_conditions

    def test_d6_seed_all_false(self, catalog):
        rep = e6_characterization(seed_quiver("D6"), catalog)
        assert (rep.mutation_equivalent_e6, rep.basic_and_corank_z_zero,
                rep.basic_and_corank_gf2_zero, rep.graph_conditions) \
            == (False, False, False, False)

    def test_hypothesis_gates(self, catalog):
        with pytest.raises(HypothesisError):
            e6_characterization(seed_quiver("A5"), catalog)
        with pytest.raises(HypothesisError):
            e6_characterization(new_quiver(6, [(0, 1, 1), (1, 2, 1), (3, 4, 1), (4, 5, 1)]),
                                catalog)
        with pytest.raises(HypothesisError):
            e6_characterization(seed_quiver("X6"), catalog)
        bad_cycle = new_quiver(6, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1),
                                   (3, 4, 1), (4, 5, 1)])
        with pytest.raises(HypothesisError):
            e6_characterization(bad_cycle, catalog)


class TestSurfaceTest:
    def test_d4_star_holds(self):
        report = surface_by_basic_radical(seed_quiver("D4"))
        assert report.holds and len(report.checks) == 1
        assert report.checks[0].vector is not None

    def test_oriented_square_holds(self):
        report = surface_by_basic_radical(seed_quiver("C4"))
        assert report.holds
        # the alternating pair is found before the full-cycle support
        assert report.checks[0].vector == (1, 0, 1, 0)
        assert report.checks[0].indicator_radical is None

    def test_long_cycle_engages_indicator_check(self):
        report = surface_by_basic_radical(seed_quiver("C5"))
        assert report.holds and report.checks[0].indicator_radical is True

    def test_e6_fails(self):
        assert not surface_by_basic_radical(seed_quiver("E6")).holds

    def test_x6_fails(self):
        assert not surface_by_basic_radical(seed_quiver("X6")).holds

    def test_path_vacuous(self):
        report = surface_by_basic_radical(seed_quiver("A6"))
        assert report.holds and report.checks == ()

    def test_exclusion(self, catalog):
        for name in ("E7", "X7", "A7"):
            assert e6_x6_exclusion(seed_quiver(name), catalog)


class TestClassifyQuiver:
    def test_too_small(self, catalog):
        got = classify_quiver(new_quiver(2, [(0, 1, 1)]), catalog)
        assert got.verdict is Verdict.TOO_SMALL and got.describe() == "TooSmall"

    def test_disconnected_rejected(self, catalog):
        with pytest.raises(HypothesisError):
            classify_quiver(new_quiver(4, [(0, 1, 1), (2, 3, 1)]), catalog)

    def test_infinite_by_certificate(self, catalog):
        got = classify_quiver(new_quiver(3, [(0, 1, 3), (1, 2, 1)]), catalog)
        assert got.verdict is Verdict.INFINITE and got.name is None

    def test_infinite_by_weight_escape(self, catalog):
        q = new_quiver(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
        got = classify_quiver(q, catalog)
        assert got.verdict is Verdict.INFINITE
        assert any("edge weight" in line for line in got.evidence)

    def test_exceptional_e(self, catalog):
        got = classify_quiver(seed_quiver("E6"), catalog)
        assert got.describe() == "ExceptionalE(E6)"
        moved = seed_quiver("E6").mutate_sequence([0, 3, 2])
        assert classify_quiver(moved, catalog).describe() == "ExceptionalE(E6)"

    def test_exceptional_x(self, catalog):
        assert classify_quiver(seed_quiver("X6"), catalog).describe() == "ExceptionalX(X6)"
        assert classify_quiver(seed_quiver("X7"), catalog).describe() == "ExceptionalX(X7)"

    def test_surface_small(self, catalog):
        got = classify_quiver(seed_quiver("A4"), catalog)
        assert got.verdict is Verdict.SURFACE and got.name is None

    def test_surface_with_subquiver_cross_check(self, catalog):
        got = classify_quiver(seed_quiver("D6"), catalog)
        assert got.verdict is Verdict.SURFACE
        assert any("E6" in line for line in got.evidence)

    def test_verdict_is_mutation_invariant(self, catalog):
        for name in ("A4", "D5"):
            moved = seed_quiver(name).mutate_sequence([0, 1, 2, 0])
            assert classify_quiver(moved, catalog).verdict is Verdict.SURFACE

    def test_classification_is_frozen_dataclass(self):
        got = Classification(Verdict.SURFACE, None, ("x",))
        with pytest.raises(Exception):
            got.verdict = Verdict.INFINITE
