"""Dimensions 2 and 3.

Two-dimensional structures live on ``aff`` with basis ``x = e0``, ``y = e1``
and ``[x, y] = y``.  A twisting map is stored as its matrix in that basis, so
``sigma[0, 1]`` is the x-coefficient of ``sigma(y)``: the structure is
Hom-simple exactly when it is nonzero.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .algebra import AnticommAlgebra, is_homomorphism, is_lie
from .errors import BudgetExceededError, DimensionError, FieldMismatchError, PreconditionError
from .exactmath import FieldSpec, Matrix, Subspace, enumerate_lines
from .exactmath.poly import Poly
from .exactmath.sampling import random_invertible
from .twisting import hom_ideal_closure, is_multiplicative, is_twisting_map, outside_twist
from .zoo import aff, so3


def _gf(q: int) -> FieldSpec:
    return FieldSpec.gf(q)


def list_irreducible_quadratics(q: int) -> list[Poly]:
    """Monic x^2 - a1 x - a0 over GF(q) without a root, scanning (a1, a0)."""
    f = _gf(q)
    out = []
    for a1 in range(q):
        for a0 in range(q):
            p = Poly(f, (f(-a0), f(-a1), f.one))
            if not p.roots():
                out.append(p)
    return out


def count_irreducible_quadratics(q: int) -> int:
    return len(list_irreducible_quadratics(q))


def has_no_invariant_line(sigma: Matrix) -> bool:
    """No line L with sigma(L) inside L (so a singular sigma always fails via its kernel)."""
    f = sigma.field
    f.require_finite("has_no_invariant_line")
    if sigma.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got {sigma.shape}")
    return not any(L.is_invariant(sigma) for L in enumerate_lines(f, 2))


def a2_only_trivial_hom_ideals(sigma: Matrix, q: int) -> bool:
    """On abelian a_2 every subspace is an ideal, so Hom-ideals are the sigma-stable subspaces."""
    if sigma.field != _gf(q):
        raise FieldMismatchError(f"sigma over {sigma.field}, expected gf{q}")
    return has_no_invariant_line(sigma)


def a2_only_trivial_hom_ideals_by_closure(sigma: Matrix, q: int) -> bool:
    """Same question answered by Hom-ideal closures of every line."""
    f = _gf(q)
    A = AnticommAlgebra.abelian(f, 2)
    return all(hom_ideal_closure(A, sigma, L).is_full() for L in enumerate_lines(f, 2))


@dataclass(frozen=True)
class AffHomStructure:
    sigma: Matrix

    def __post_init__(self):
        if self.sigma.shape != (2, 2):
            raise DimensionError(f"expected a 2x2 matrix, got {self.sigma.shape}")

    @property
    def field(self) -> FieldSpec:
        return self.sigma.field

    @property
    def is_simple(self) -> bool:
        return bool(self.sigma[0, 1])

    @property
    def trace(self):
        return self.sigma.trace()

    @property
    def det(self):
        return self.sigma.det()

    def key(self) -> tuple:
        return self.sigma.entries


def aff_simple_structures(q: int) -> Iterator[AffHomStructure]:
    f = _gf(q)
    for s11, s12, s21, s22 in itertools.product(range(q), repeat=4):
        if s12:
            yield AffHomStructure(Matrix.from_rows(f, [[s11, s12], [s21, s22]]))


def aff_iso_by_invariants(s1: AffHomStructure, s2: AffHomStructure) -> bool:
    """Equal traces and s12 s21 - t12 t21 = (s11 - t11)(s22 - t11)."""
    if s1.field != s2.field:
        raise FieldMismatchError(f"{s1.field} vs {s2.field}")
    if not (s1.is_simple and s2.is_simple):
        raise PreconditionError("both structures must have a nonzero (0, 1) entry")
    f = s1.field
    a, b = s1.sigma, s2.sigma
    if a.trace() != b.trace():
        return False
    lhs = f.sub(f.mul(a[0, 1], a[1, 0]), f.mul(b[0, 1], b[1, 0]))
    rhs = f.mul(f.sub(a[0, 0], b[0, 0]), f.sub(a[1, 1], b[0, 0]))
    return lhs == rhs


@lru_cache(maxsize=None)
def aff_automorphisms(q: int) -> tuple[Matrix, ...]:
    """Aut(aff) over GF(q), found by scanning GL(2, q)."""
    f = _gf(q)
    A = aff(f).algebra
    out = []
    for entries in itertools.product(range(q), repeat=4):
        m = Matrix(f, 2, 2, entries)
        if m.is_invertible() and is_homomorphism(m, A, A):
            out.append(m)
    return tuple(out)


def aff_iso_bruteforce(s1: AffHomStructure, s2: AffHomStructure, q: int) -> Matrix | None:
    """An automorphism phi of aff with phi s1 = s2 phi, if any."""
    for phi in aff_automorphisms(q):
        if phi @ s1.sigma == s2.sigma @ phi:
            return phi
    return None


_MAX_CLASS_Q = 7


def aff_classes(q: int) -> list[list[AffHomStructure]]:
    """Orbits of the simple structures under Aut(aff) conjugation."""
    if q > _MAX_CLASS_Q:
        raise BudgetExceededError(f"class enumeration supports q <= {_MAX_CLASS_Q}")
    structures = list(aff_simple_structures(q))
    index = {s.key(): k for k, s in enumerate(structures)}
    autos = aff_automorphisms(q)
    inverses = [phi.inverse() for phi in autos]
    seen = [False] * len(structures)
    classes = []
    for k, s in enumerate(structures):
        if seen[k]:
            continue
        orbit = []
        for phi, inv in zip(autos, inverses):
            j = index[(phi @ s.sigma @ inv).entries]
            if not seen[j]:
                seen[j] = True
                orbit.append(structures[j])
        classes.append(orbit)
    return classes


def aff_class_count(q: int) -> int:
    return len(aff_classes(q))


def multiplicative_aff_maps(q: int) -> list[Matrix]:
    f = _gf(q)
    A = aff(f).algebra
    return [m for m in (Matrix(f, 2, 2, e) for e in itertools.product(range(q), repeat=4))
            if is_multiplicative(A, m)]


def no_multiplicative_simple_dim2(q: int) -> bool:
    """Every multiplicative sigma on aff keeps F y stable, so none is Hom-simple.

    Abelian a_2 is excluded outright: simplicity requires a nonabelian bracket.
    """
    f = _gf(q)
    y_line = Subspace.span(f, 2, [(0, 1)])
    return all(y_line.is_invariant(m) for m in multiplicative_aff_maps(q))


def sigma_from_brackets(A: AnticommAlgebra) -> Matrix:
    """sigma(e0) = [e1, e2], sigma(e1) = [e2, e0], sigma(e2) = [e0, e1]."""
    if A.dim != 3:
        raise DimensionError(f"expected a 3-dimensional algebra, got dimension {A.dim}")
    t = A.table
    return Matrix.from_columns(A.field, [t[1][2], t[2][0], t[0][1]], 3)


@dataclass(frozen=True)
class Dim3Result:
    theta: Matrix
    sigma: Matrix
    bijective: bool
    twisting: bool
    recovers_so3: bool
    multiplicative: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.twisting and self.recovers_so3


def dim3_outside_twist_check(theta: Matrix) -> Dim3Result:
    """Twist so3 by theta, rebuild sigma from the brackets, and untwist by sigma^-1."""
    f = theta.field
    base = so3(f).algebra
    A = outside_twist(base, theta)
    sigma = sigma_from_brackets(A)
    bij = sigma.is_invertible()
    tw = is_twisting_map(A, sigma)
    # sigma need not be multiplicative here, so untwist directly instead of via induced_lie
    rec = bij and outside_twist(A, sigma.inverse()) == base
    return Dim3Result(theta, sigma, bij, tw, rec, is_multiplicative(A, sigma))


def dim3_check(field: FieldSpec, samples: int, seed: int = 0) -> list[Dim3Result]:
    rng = random.Random(seed)
    return [dim3_outside_twist_check(random_invertible(field, 3, rng)) for _ in range(samples)]


def induced_is_lie(result: Dim3Result) -> bool:
    A = outside_twist(so3(result.theta.field).algebra, result.theta)
    return is_lie(outside_twist(A, result.sigma.inverse()))
