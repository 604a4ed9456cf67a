from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie import zoo
from homlie.errors import BudgetExceededError, DimensionError, PreconditionError
from homlie.exactmath import FieldSpec, Matrix
from homlie.lowdim import (
    AffHomStructure,
    a2_only_trivial_hom_ideals,
    a2_only_trivial_hom_ideals_by_closure,
    aff_automorphisms,
    aff_class_count,
    aff_classes,
    aff_iso_bruteforce,
    aff_iso_by_invariants,
    aff_simple_structures,
    count_irreducible_quadratics,
    dim3_check,
    has_no_invariant_line,
    induced_is_lie,
    list_irreducible_quadratics,
    multiplicative_aff_maps,
    no_multiplicative_simple_dim2,
    sigma_from_brackets,
)
from homlie.twisting import is_hom_simple

GF2, GF3, GF5 = FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5)


def all_2x2(q):
    f = FieldSpec.gf(q)
    return [Matrix(f, 2, 2, e) for e in itertools.product(range(q), repeat=4)]


class TestAbelianPlane:
    @pytest.mark.parametrize("q, count", [(2, 1), (3, 3), (5, 10), (7, 21), (11, 55)])
    def test_irreducible_quadratic_count(self, q, count):
        assert count_irreducible_quadratics(q) == count == q * (q - 1) // 2

    def test_gf2_quadratic(self):
        assert [p.coeffs for p in list_irreducible_quadratics(2)] == [(1, 1, 1)]

    def test_examples(self):
        assert has_no_invariant_line(Matrix.from_rows(GF3, [[0, 2], [1, 0]]))  # x^2 + 1
        assert not has_no_invariant_line(Matrix.identity(GF3, 2))
        assert not has_no_invariant_line(Matrix.zeros(GF5, 2))
        with pytest.raises(DimensionError):
            has_no_invariant_line(Matrix.identity(GF3, 3))

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_two_paths_agree(self, q):
        for m in all_2x2(q):
            assert a2_only_trivial_hom_ideals(m, q) == a2_only_trivial_hom_ideals_by_closure(m, q)

    @pytest.mark.parametrize("q", [2, 3])
    def test_count_of_irreducible_maps(self, q):
        # GL2 elements with irreducible charpoly: (q^2 - q) per polynomial
        good = sum(a2_only_trivial_hom_ideals(m, q) for m in all_2x2(q))
        assert good == count_irreducible_quadratics(q) * (q * q - q)


class TestAff:
    @pytest.mark.parametrize("q, count", [(2, 8), (3, 54)])
    def test_structure_counts(self, q, count):
        assert len(list(aff_simple_structures(q))) == count == q ** 3 * (q - 1)

    @pytest.mark.parametrize("q", [2, 3])
    def test_every_structure_is_hom_simple(self, q):
        A = zoo.aff(FieldSpec.gf(q)).algebra
        for s in aff_simple_structures(q):
            assert is_hom_simple(A, s.sigma).is_simple is True
        zero_corner = Matrix.from_rows(FieldSpec.gf(q), [[1, 0], [1, 1]])
        assert is_hom_simple(A, zero_corner).is_simple is False

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_automorphism_group_order(self, q):
        assert len(aff_automorphisms(q)) == q * (q - 1)

    @pytest.mark.parametrize("q", [2, 3])
    def test_invariants_match_bruteforce(self, q):
        structures = list(aff_simple_structures(q))
        for s1, s2 in itertools.product(structures, repeat=2):
            assert aff_iso_by_invariants(s1, s2) == (aff_iso_bruteforce(s1, s2, q) is not None)

    def test_witness_conjugates(self):
        s = list(aff_simple_structures(3))
        for s1, s2 in itertools.product(s[:10], s[-10:]):
            phi = aff_iso_bruteforce(s1, s2, 3)
            if phi is not None:
                assert phi @ s1.sigma == s2.sigma @ phi

    def test_invariants_need_simple(self):
        a = AffHomStructure(Matrix.identity(GF3, 2))
        b = AffHomStructure(Matrix.from_rows(GF3, [[0, 1], [0, 0]]))
        with pytest.raises(PreconditionError):
            aff_iso_by_invariants(a, b)

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_class_count(self, q):
        # frozen oracle: q^2 orbits, one per (trace, det) pair
        classes = aff_classes(q)
        assert aff_class_count(q) == len(classes) == q * q
        labels = {(c[0].trace, c[0].det) for c in classes}
        assert len(labels) == q * q
        assert all({(s.trace, s.det) for s in c} == {(c[0].trace, c[0].det)} for c in classes)
        assert sum(len(c) for c in classes) == q ** 3 * (q - 1)

    def test_class_budget(self):
        with pytest.raises(BudgetExceededError):
            aff_classes(11)

    @given(st.sampled_from([2, 3, 5]), st.data())
    @settings(max_examples=40)
    def test_distinct_traces_never_isomorphic(self, q, data):
        structures = list(aff_simple_structures(q))
        s1 = data.draw(st.sampled_from(structures))
        s2 = data.draw(st.sampled_from(structures))
        if s1.trace != s2.trace:
            assert aff_iso_bruteforce(s1, s2, q) is None

    @pytest.mark.parametrize("q, count", [(2, 6), (3, 15)])
    def test_multiplicative_maps(self, q, count):
        assert len(multiplicative_aff_maps(q)) == count

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_no_multiplicative_simple(self, q):
        assert no_multiplicative_simple_dim2(q)
        A = zoo.aff(FieldSpec.gf(q)).algebra
        assert not any(m[0, 1] for m in multiplicative_aff_maps(q))
        assert all(is_hom_simple(A, m).is_simple is False for m in multiplicative_aff_maps(q))


class TestDim3:
    def test_sigma_from_brackets(self):
        assert sigma_from_brackets(zoo.so3(GF5).algebra) == Matrix.identity(GF5, 3)
        assert sigma_from_brackets(zoo.abelian(3, GF5).algebra).is_zero()
        with pytest.raises(DimensionError):
            sigma_from_brackets(zoo.aff(GF5).algebra)

    @pytest.mark.parametrize("f", [GF3, GF5, FieldSpec.gf(7), FieldSpec.rationals()])
    def test_outside_twists_recover(self, f):
        results = dim3_check(f, 25, seed=1)
        assert len(results) == 25
        assert all(r.ok for r in results)
        assert all(induced_is_lie(r) for r in results[:5])

    def test_gf5_fifty(self):
        assert all(r.ok for r in dim3_check(GF5, 50, seed=0))

    def test_deterministic(self):
        a = [r.theta for r in dim3_check(GF5, 5, seed=9)]
        b = [r.theta for r in dim3_check(GF5, 5, seed=9)]
        assert a == b
