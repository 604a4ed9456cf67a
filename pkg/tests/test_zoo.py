from __future__ import annotations

import random

import pytest

from homlie import zoo
from homlie.algebra import AnticommAlgebra, bracket, direct_sum, is_abelian, is_lie, is_nilpotent, is_simple, is_solvable
from homlie.errors import PreconditionError, UnsupportedFieldError
from homlie.exactmath import FieldSpec, Matrix, Subspace, enumerate_lines
from homlie.twisting import HomLie, hs_space, induced_lie, is_hom_simple, is_multiplicative, is_regular, is_twisting_map

QQ = FieldSpec.rationals()
GF2, GF3, GF5 = FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5)
FINITE = [GF2, GF3, GF5]

FAMILIES = [("heisenberg", (1,)), ("heisenberg", (2,)), ("s_family", (3,)), ("s_family", (4,)), ("s_family", (5,)),
            ("a_ext", (3,)), ("a_ext", (4,)), ("r_family", (2,)), ("r_family", (3,)),
            ("aff_plus_abelian", (1,)), ("aff_plus_abelian", (2,)), ("aff", ()), ("so3", ()),
            ("abelian", (3,)), ("regular", (2,)), ("a1", ()), ("a2", ()), ("so3_ext", ())]


def e(f, n, i):
    return tuple(1 if k == i else 0 for k in range(n))


@pytest.mark.parametrize("name, params", FAMILIES)
@pytest.mark.parametrize("f", FINITE + [QQ])
def test_tags_hold(name, params, f):
    entry = zoo.build(name, params, f)
    A = entry.algebra
    if entry.sigma is not None:
        assert is_twisting_map(A, entry.sigma)
    tags = entry.expected
    if "simple" in tags:
        assert is_simple(A).is_simple is True
    if "not-simple" in tags:
        assert is_simple(A).is_simple is False
    if "hom-simple" in tags:
        assert is_hom_simple(A, entry.sigma).is_simple is True
    if "solvable" in tags:
        assert is_solvable(A)
    if "nilpotent" in tags:
        assert is_nilpotent(A)
    if "lie" in tags:
        assert is_lie(A)
    if "regular" in tags:
        assert is_regular(A, entry.sigma)


def test_basic_constants():
    so3 = zoo.so3(QQ).algebra
    assert bracket(so3, e(QQ, 3, 0), e(QQ, 3, 1)) == e(QQ, 3, 2)
    assert is_abelian(zoo.abelian(2, GF5).algebra)
    aff = zoo.aff(GF3)
    assert is_solvable(aff.algebra) and aff.marked_ideal == Subspace.span(GF3, 2, [(0, 1)])
    proper = {is_simple(aff.algebra).witness}
    assert proper == {aff.marked_ideal}


def test_sl2_needs_odd_characteristic():
    with pytest.raises(UnsupportedFieldError):
        zoo.sl2(GF2)
    assert is_simple(zoo.sl2(GF3).algebra).is_simple


def test_heisenberg_sigma_orbit():
    for n in (1, 2, 3):
        h = zoo.heisenberg(n, QQ)
        d = 2 * n + 1
        top = e(QQ, d, d - 1)
        for i in range(1, 2 * n + 1):
            assert h.sigma.power(i).apply(top) == e(QQ, d, d - 1 - i)
        assert h.marked_ideal == Subspace.span(QQ, d, [top])


def test_s3_is_cross_product():
    assert zoo.s_family(3, QQ).algebra == zoo.so3(QQ).algebra


def test_a_ext_sigma():
    a = zoo.a_ext(4, QQ)
    s = a.sigma
    assert s.apply(e(QQ, 5, 3)) == e(QQ, 5, 4)
    assert all(not any(s.apply(e(QQ, 5, i))) for i in (0, 1, 2, 4))


def test_r_family_sigma_squares_to_zero():
    for n in (2, 3, 4):
        assert zoo.r_family(n, QQ).sigma.power(2).is_zero()


def test_aff_plus_abelian():
    entry = zoo.aff_plus_abelian(2, GF5)
    assert entry.sigma.is_invertible()
    assert entry.sigma.power(entry.dim) == Matrix.identity(GF5, entry.dim)
    assert is_simple(entry.algebra).is_simple is False


@pytest.mark.parametrize("n", [1, 2, 3])
def test_regular_construction(n):
    rng = random.Random(n)
    s = zoo.so3(GF5).algebra
    autos = [zoo.so3_automorphism(GF5, rng) for _ in range(n)]
    entry = zoo.regular_construction(s, n, autos)
    H = HomLie(entry.algebra, entry.sigma)
    assert is_regular(entry.algebra, entry.sigma) and is_multiplicative(entry.algebra, entry.sigma)
    expected = s
    for _ in range(n - 1):
        expected = direct_sum(expected, s)
    assert induced_lie(H) == expected
    comps = [zoo.component(entry, GF5, 3, i) for i in range(n)]
    for i, c in enumerate(comps):
        assert c.image(entry.sigma) == comps[(i + 1) % n]


def test_regular_single_copy():
    entry = zoo.regular_construction(zoo.so3(GF5).algebra, 1)
    assert entry.algebra == zoo.so3(GF5).algebra
    assert entry.sigma == Matrix.identity(GF5, 3)


def test_regular_rejects():
    s = zoo.so3(GF5).algebra
    with pytest.raises(PreconditionError):
        zoo.regular_construction(s, 1, [Matrix.diagonal(GF5, [1, 2, 3])])
    with pytest.raises(PreconditionError):
        zoo.regular_construction(zoo.aff(GF5).algebra, 2)
    with pytest.raises(PreconditionError):
        zoo.regular_construction(s, 2, [Matrix.identity(GF5, 3)])


@pytest.mark.parametrize("f", [GF3, GF5, QQ])
def test_so3_automorphisms(f):
    rng = random.Random(0)
    s = zoo.so3(f).algebra
    for _ in range(5):
        a = zoo.so3_automorphism(f, rng)
        assert a.is_invertible() and is_multiplicative(s, a)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_abelian2_irreducible(q):
    entry = zoo.abelian2_with_irreducible_sigma(q)
    assert not any(L.is_invariant(entry.sigma) for L in enumerate_lines(entry.field, 2))


def test_metabelian_hs_dimension():
    for n in (1, 2):
        assert hs_space(zoo.heisenberg(n, GF3).algebra).dim == (2 * n + 1) ** 2


def test_extension_readings():
    rank_one = zoo.so3_extension(GF5, "rank-one")
    identity = zoo.so3_extension(GF5, "identity")
    # derivations of so3 are inner (rank 2), so neither choice of ad d gives a Lie algebra
    assert not is_lie(rank_one.algebra) and not is_lie(identity.algebra)
    for entry in (rank_one, identity):
        assert is_simple(entry.algebra).is_simple is False
        assert entry.marked_ideal.dim == 3
    with pytest.raises(ValueError):
        zoo.so3_extension(GF5, "other")


def test_build_errors():
    with pytest.raises(KeyError):
        zoo.build("nope", (), QQ)
    with pytest.raises(ValueError):
        zoo.build("so3", (2,), QQ)
    with pytest.raises(ValueError):
        zoo.build("s_family", (2,), QQ)
    assert isinstance(zoo.build("abelian", (2,), QQ).algebra, AnticommAlgebra)
