from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.laurent import LaurentPoly
from homlie.rootsys import (
    admissible_cases,
    cartan_matrix,
    enumerate_roots,
    trace_closed_form,
    trace_enumerated,
    verify_traces,
)

ROOT_COUNTS = {("A", 1): 2, ("A", 2): 6, ("B", 2): 8, ("G", 2): 12, ("F", 4): 48,
               ("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("D", 4): 24, ("C", 3): 18}

laurents = st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=5).map(LaurentPoly)


class TestLaurent:
    def test_no_zero_coefficients(self):
        p = LaurentPoly({1: 2, -1: 0, 0: 0})
        assert p.coeffs == {1: 2}
        assert LaurentPoly({}) == LaurentPoly({0: 0})

    def test_string_ascending(self):
        p = LaurentPoly({-3: 2, -2: 1, 0: 4, 1: 2})
        assert str(p) == "2*c^-3 + c^-2 + 4 + 2*c"
        assert str(LaurentPoly({})) == "0"
        assert str(LaurentPoly({2: -1, 0: 3})) == "3 - c^2"

    def test_sym(self):
        assert LaurentPoly.sym(2, 3) == LaurentPoly({2: 3, -2: 3})
        assert LaurentPoly.sym(1).is_symmetric()
        assert not LaurentPoly({4: 1, -3: 1}).is_symmetric()

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == LaurentPoly({})

    @given(laurents, laurents, st.fractions(min_value=-3, max_value=3).filter(bool))
    def test_evaluation_is_a_homomorphism(self, a, b, x):
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)
        assert a.inverted()(x) == a(1 / Fraction(x))


class TestCartan:
    def test_examples(self):
        assert cartan_matrix("A", 2) == [[2, -1], [-1, 2]]
        assert cartan_matrix("G", 2) == [[2, -1], [-3, 2]]
        assert cartan_matrix("E8", 8)[1][3] == -1

    def test_b_and_c_are_transposes(self):
        for l in range(3, 7):
            b, c = cartan_matrix("B", l), cartan_matrix("C", l)
            assert c == [list(r) for r in zip(*b)]

    @pytest.mark.parametrize("t, l", [("D", 3), ("E", 5), ("F", 3), ("G", 3), ("B", 1), ("C", 2), ("X", 2)])
    def test_invalid(self, t, l):
        with pytest.raises(ValueError):
            cartan_matrix(t, l)

    def test_d3_hint(self):
        with pytest.raises(ValueError, match="A3"):
            cartan_matrix("D", 3)


class TestRoots:
    @pytest.mark.parametrize("key, count", sorted(ROOT_COUNTS.items()))
    def test_counts(self, key, count):
        assert len(enumerate_roots(*key)) == count

    @pytest.mark.parametrize("t, l", admissible_cases(8))
    def test_structure(self, t, l):
        rs = enumerate_roots(t, l)
        roots = rs.roots
        assert all(tuple(-m for m in r) in roots for r in roots)
        assert len(rs.positive) == len(roots) // 2
        for i in range(l):
            assert tuple(1 if k == i else 0 for k in range(l)) in roots
        if t == "A":
            assert len(roots) == l * (l + 1)

    def test_g2_multiset(self):
        rs = enumerate_roots("G", 2)
        assert sorted(r[0] for r in rs.positive) == [0, 1, 1, 2, 3, 3]

    def test_e8_highest_root(self):
        rs = enumerate_roots("E", 8)
        assert max(rs.positive, key=sum) == (2, 3, 4, 6, 5, 4, 3, 2)


class TestTraces:
    def test_examples(self):
        assert trace_enumerated("A", 1, 1) == LaurentPoly({0: 1, 1: 1, -1: 1})
        g2 = LaurentPoly.const(4) + LaurentPoly.sym(1, 2) + LaurentPoly.sym(2, 1) + LaurentPoly.sym(3, 2)
        assert trace_enumerated("G", 2, 1) == g2
        assert trace_enumerated("B", 2, 1) == LaurentPoly.const(4) + LaurentPoly.sym(1, 3)
        assert trace_enumerated("B", 2, 2) == LaurentPoly.const(4) + LaurentPoly.sym(1, 2) + LaurentPoly.sym(2, 1)
        f4 = LaurentPoly.const(22) + LaurentPoly.sym(1, 14) + LaurentPoly.sym(2, 1)
        assert trace_closed_form("F", 4, 1) == f4

    @pytest.mark.parametrize("l", range(3, 9))
    def test_c_last_index(self, l):
        dim = enumerate_roots("C", l).dim_algebra
        shifted = LaurentPoly.sym(1) - 2
        assert trace_closed_form("C", l, l) == dim + (l * (l + 1) // 2) * shifted

    @pytest.mark.parametrize("t, l", admissible_cases(8))
    def test_enumeration_invariants(self, t, l):
        rs = enumerate_roots(t, l)
        for i in range(1, l + 1):
            tr = trace_enumerated(t, l, i)
            assert tr(1) == rs.dim_algebra
            assert tr.is_symmetric()
            n_i = sum(1 for r in rs.roots if r[i - 1])
            assert tr.constant_term() == rs.dim_algebra - n_i

    @pytest.mark.parametrize("l", range(1, 9))
    def test_type_a_matches(self, l):
        assert all(r.matches for r in verify_traces("A", l))

    def test_g2_and_b2_match(self):
        assert [r.verdict for r in verify_traces("G", 2)] == ["match", "match"]
        assert [r.verdict for r in verify_traces("B", 2)] == ["match", "match"]

    def test_mismatch_golden(self):
        # frozen: the only disagreement across every admissible case
        bad = [(t, l, r.i, str(r.difference)) for t, l in admissible_cases(8)
               for r in verify_traces(t, l) if not r.matches]
        assert bad == [("E", 8, 5, "-20*c^3 + 20*c^4")]

    def test_e8_index5_enumeration(self):
        tr = trace_enumerated("E", 8, 5)
        assert tr.coeff(3) == tr.coeff(-3) == 20
        assert tr.coeff(4) == tr.coeff(-4) == 10

    def test_index_range(self):
        with pytest.raises(ValueError):
            trace_enumerated("A", 3, 4)
        with pytest.raises(ValueError):
            verify_traces("G", 2, [0])

    def test_report_counts(self):
        assert Counter(r.verdict for t, l in admissible_cases(8) for r in verify_traces(t, l)) == Counter(
            match=sum(l for _, l in admissible_cases(8)) - 1, mismatch=1)
