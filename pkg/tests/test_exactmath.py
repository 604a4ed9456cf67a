from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.errors import FieldMismatchError, UnsupportedFieldError
from homlie.exactmath import (
    FieldSpec,
    Matrix,
    Poly,
    Scalar,
    Subspace,
    charpoly,
    companion,
    count_lines,
    enumerate_lines,
    enumerate_subspaces,
    enumerate_vectors,
    gaussian_binomial,
    is_prime,
    is_similar,
    kernel,
    random_invertible,
    rational_canonical_form,
    rref,
    solve,
    spin,
)

from strategies import FIELDS, matrices, scalars, square_pairs

QQ = FieldSpec.rationals()
GF2, GF3, GF5 = FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5)


def brute_rank(m: Matrix) -> int:
    """Rank over GF(p) as log_p of the size of the column space."""
    f = m.field
    image = {m.apply(v) for v in enumerate_vectors(f, m.cols)}
    r = 0
    while f.p ** r < len(image):
        r += 1
    return r


class TestFieldSpec:
    def test_prime_check(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
        with pytest.raises(ValueError):
            FieldSpec.gf(4)

    @pytest.mark.parametrize("text, field", [("Q", QQ), ("gf5", GF5), ("GF(3)", GF3)])
    def test_parse(self, text, field):
        assert FieldSpec.parse(text) == field

    def test_canonical_rationals(self):
        s = Scalar.parse(QQ, "-6/4")
        assert str(s) == "-3/2"
        assert s == Scalar(QQ, Fraction(3, -2))

    def test_residues_reduced(self):
        assert Scalar(GF5, 12).value == 2
        assert str(Scalar(GF5, 3).inverse()) == "2"

    @pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", ""])
    def test_rational_rejects(self, bad):
        with pytest.raises(ValueError):
            QQ.parse_element(bad)

    @pytest.mark.parametrize("bad", ["5", "-1", "x"])
    def test_residue_rejects(self, bad):
        with pytest.raises(ValueError):
            GF5.parse_element(bad)

    def test_mixed_fields(self):
        with pytest.raises(FieldMismatchError):
            Scalar(GF3, 1) + Scalar(GF5, 1)

    @given(st.sampled_from(FIELDS).flatmap(lambda f: st.tuples(st.just(f), scalars(f))))
    def test_text_round_trip(self, pair):
        f, x = pair
        x = f(x)
        text = f.format_element(x)
        assert f.parse_element(text) == x
        assert f.format_element(f.parse_element(text)) == text

    @given(st.sampled_from(FIELDS[1:]).flatmap(lambda f: st.tuples(st.just(f), scalars(f))))
    def test_inverse(self, pair):
        f, x = pair
        if x:
            assert f.mul(x, f.inv(x)) == 1


class TestRref:
    def test_examples(self):
        red, r = rref(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))
        assert (red.to_rows(), r) == ([(1, 2)], 1)
        I = Matrix.identity(GF5, 3)
        assert rref(I) == (I, 3)
        red, r = rref(Matrix.from_rows(GF2, [[0, 1], [1, 0]]))
        assert (red, r) == (Matrix.identity(GF2, 2), 2)

    @given(matrices())
    def test_idempotent(self, m):
        red, r = rref(m)
        assert rref(red) == (red, r)

    @given(matrices())
    def test_rank_nullity(self, m):
        assert kernel(m).dim + m.rank() == m.cols

    @given(matrices(f=GF3, max_dim=3))
    def test_rank_matches_image_count(self, m):
        assert m.rank() == brute_rank(m)

    @given(matrices())
    def test_kernel_vectors_annihilated(self, m):
        assert all(not any(m.apply(v)) for v in kernel(m).vectors())


class TestKernelSolve:
    def test_kernel_examples(self):
        assert kernel(Matrix.zeros(QQ, 2)).is_full()
        assert kernel(Matrix.identity(QQ, 2)).is_zero()
        assert kernel(Matrix.from_rows(GF2, [[1, 1], [1, 1]])) == Subspace.span(GF2, 2, [(1, 1)])

    def test_solve_examples(self):
        assert solve(Matrix.identity(GF5, 2), (3, 4)) == (3, 4)
        assert solve(Matrix.zeros(QQ, 2), (1, 0)) is None
        assert solve(Matrix.from_rows(QQ, [[2]]), (3,)) == (Fraction(3, 2),)

    @given(matrices(), st.data())
    def test_solve_consistency(self, m, data):
        f = m.field
        x = data.draw(st.lists(scalars(f), min_size=m.cols, max_size=m.cols))
        b = m.apply([f(t) for t in x])
        sol = solve(m, b)
        assert sol is not None and m.apply(sol) == b


class TestSubspace:
    def test_examples(self):
        e1, e2 = Subspace.span(QQ, 3, [(1, 0, 0)]), Subspace.span(QQ, 3, [(0, 1, 0)])
        assert e1 + e2 == Subspace.span(QQ, 3, [(1, 0, 0), (0, 1, 0)])
        a = Subspace.span(QQ, 3, [(1, 0, 0), (0, 1, 0)])
        b = Subspace.span(QQ, 3, [(0, 1, 0), (0, 0, 1)])
        assert a & b == e2
        assert (2, 2) in Subspace.span(QQ, 2, [(1, 1)])

    def test_canonical_equality(self):
        a = Subspace.span(QQ, 2, [(2, 4), (1, 1)])
        b = Subspace.span(QQ, 2, [(1, 0), (0, 1)])
        assert a == b and hash(a) == hash(b)

    @given(st.data())
    def test_dimension_formula(self, data):
        f = data.draw(st.sampled_from(FIELDS))
        n = data.draw(st.integers(1, 4))
        a = Subspace.span(f, n, data.draw(matrices(f, cols=n)).to_rows())
        b = Subspace.span(f, n, data.draw(matrices(f, cols=n)).to_rows())
        assert (a + b).dim + (a & b).dim == a.dim + b.dim
        assert a & b <= a <= a + b
        assert (a <= b and b <= a) == (a == b)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            Subspace.full(QQ, 2) + Subspace.full(QQ, 3)

    def test_spin(self):
        shift = Matrix.from_rows(QQ, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        assert spin(QQ, 3, [shift], [(1, 0, 0)]).is_full()
        assert spin(QQ, 3, [shift], [(0, 1, 0)]).dim == 2


class TestCharpoly:
    def test_examples(self):
        a0, a1 = Fraction(2), Fraction(-3)
        m = Matrix.from_rows(QQ, [[0, a0], [1, a1]])
        assert charpoly(m) == Poly(QQ, (-a0, -a1, 1))
        x_minus_1 = Poly(QQ, (-1, 1))
        assert charpoly(Matrix.identity(QQ, 3)) == x_minus_1 * x_minus_1 * x_minus_1
        assert charpoly(Matrix.diagonal(QQ, [1, 2])) == Poly(QQ, (2, -3, 1))

    def test_rcf_examples(self):
        assert rational_canonical_form(Matrix.diagonal(QQ, [1, 1])) == [Poly(QQ, (-1, 1))] * 2
        nilpotent = Matrix.from_rows(QQ, [[0, 1], [0, 0]])
        assert not is_similar(Matrix.identity(QQ, 2), nilpotent)
        assert not is_similar(Matrix.zeros(QQ, 2), nilpotent)

    @given(square_pairs())
    def test_conjugation_invariance(self, pair):
        m, p = pair
        conj = p @ m @ p.inverse()
        assert charpoly(conj) == charpoly(m)
        assert is_similar(m, conj)

    @given(square_pairs())
    def test_invariant_factors_divide(self, pair):
        m, _ = pair
        factors = rational_canonical_form(m)
        assert all(not (b % a) for a, b in zip(factors, factors[1:]))
        prod = Poly(m.field, (1,))
        for q in factors:
            prod = prod * q
        assert prod == charpoly(m)

    def test_similarity_is_equivalence(self):
        rng = random.Random(3)
        sample = [Matrix.from_rows(GF3, [[rng.randrange(3) for _ in range(3)] for _ in range(3)]) for _ in range(12)]
        for m in list(sample[:4]):
            p = random_invertible(GF3, 3, rng)
            sample.append(p @ m @ p.inverse())
        rel = {(i, j): is_similar(a, b) for (i, a), (j, b) in itertools.product(enumerate(sample), repeat=2)}
        idx = range(len(sample))
        assert all(rel[i, i] for i in idx)
        assert all(rel[i, j] == rel[j, i] for i in idx for j in idx)
        assert all(rel[i, k] for i in idx for j in idx for k in idx if rel[i, j] and rel[j, k])

    def test_companion_roots(self):
        # x^2 + 1 has no root mod 3 and two roots mod 5
        assert Poly(GF3, (1, 0, 1)).roots() == []
        assert sorted(Poly(GF5, (1, 0, 1)).roots()) == [2, 3]
        assert charpoly(companion(GF5, [1, 0])) == Poly(GF5, (1, 0, 1))

    def test_rational_roots(self):
        # (x - 1)(x + 3/2) x^2
        p = Poly(QQ, (1, 0)) * Poly(QQ, (Fraction(-3, 2), Fraction(1, 2), 1)) * Poly(QQ, (0, 0, 1))
        assert p.rational_roots() == [Fraction(-3, 2), 0, 1]
        assert Poly(QQ, (2, 0, 1)).rational_roots() == []
        with pytest.raises(UnsupportedFieldError):
            Poly(GF5, (1, 1)).rational_roots()

    @given(st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)), min_size=1, max_size=4))
    def test_rational_roots_recovered(self, roots):
        p = Poly(QQ, (1,))
        for r in roots:
            p = p * Poly(QQ, (-r, 1))
        assert p.rational_roots() == sorted(set(roots))


class TestEnumeration:
    @pytest.mark.parametrize("p, n, count", [(2, 3, 7), (3, 2, 4), (5, 1, 1)])
    def test_line_counts(self, p, n, count):
        lines = list(enumerate_lines(FieldSpec.gf(p), n))
        assert len(lines) == count == count_lines(p, n)
        assert len(set(lines)) == count
        assert all(L.dim == 1 for L in lines)

    @pytest.mark.parametrize("p, n", [(2, 4), (3, 3), (5, 2), (7, 2)])
    def test_lines_partition_nonzero_vectors(self, p, n):
        f = FieldSpec.gf(p)
        lines = list(enumerate_lines(f, n))
        assert len(lines) == (p ** n - 1) // (p - 1)
        covered = {v for v in enumerate_vectors(f, n) if any(v)}
        assert sum(p - 1 for _ in lines) == len(covered)
        assert all(any(v in L for L in lines) for v in covered)

    @pytest.mark.parametrize("p, n, k", [(2, 3, 1), (2, 4, 2), (3, 3, 2), (3, 2, 1)])
    def test_subspace_counts(self, p, n, k):
        subs = list(enumerate_subspaces(FieldSpec.gf(p), n, k))
        assert len(subs) == len(set(subs)) == gaussian_binomial(n, k, p)

    def test_rationals_rejected(self):
        with pytest.raises(UnsupportedFieldError):
            list(enumerate_lines(QQ, 2))
        with pytest.raises(UnsupportedFieldError):
            list(enumerate_vectors(QQ, 2))
