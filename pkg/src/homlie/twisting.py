"""Twisting maps: Hom-Jacobians, the space HS(A), Hom-ideals, Yau twists and
the simplicity classes SS / SS* / PS."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .algebra import AnticommAlgebra, bracket, ideal_closure, is_abelian, is_homomorphism, is_lie, is_simple
from .config import DEFAULT_PS_SAMPLES, DEFAULT_SEED, enumeration_budget
from .errors import DimensionError, FieldMismatchError, PreconditionError
from .exactmath import Matrix, Subspace, kernel, rational_canonical_form, spin
from .exactmath.matrix import Vector, is_zero_vector
from .exactmath.poly import Poly
from .exactmath.sampling import random_vector
from .irreducibility import IdealReport, ideal_report, search_stable_subspace


def _check_map(A: AnticommAlgebra, m: Matrix, name: str = "sigma"):
    if m.field != A.field:
        raise FieldMismatchError(f"{name} over {m.field}, algebra over {A.field}")
    if m.shape != (A.dim, A.dim):
        raise DimensionError(f"{name} must be {A.dim}x{A.dim}, got {m.shape}")


def hom_jacobian(A: AnticommAlgebra, sigma: Matrix, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """[sx,[y,z]] + [sy,[z,x]] + [sz,[x,y]]."""
    _check_map(A, sigma)
    f = A.field
    terms = (
        bracket(A, sigma.apply(x), bracket(A, y, z)),
        bracket(A, sigma.apply(y), bracket(A, z, x)),
        bracket(A, sigma.apply(z), bracket(A, x, y)),
    )
    return tuple(f(sum(c)) for c in zip(*terms))


def _basis_triples(n: int):
    return itertools.combinations(range(n), 3)


def is_twisting_map(A: AnticommAlgebra, sigma: Matrix) -> bool:
    # alternating + trilinear: basis triples i<j<k suffice
    _check_map(A, sigma)
    e = A.basis_vector
    return all(is_zero_vector(hom_jacobian(A, sigma, e(i), e(j), e(k))) for i, j, k in _basis_triples(A.dim))


@dataclass(frozen=True)
class HomLie:
    """An algebra with a twisting map; the Hom-Jacobi identity is checked on construction."""

    algebra: AnticommAlgebra
    sigma: Matrix

    def __post_init__(self):
        if not is_twisting_map(self.algebra, self.sigma):
            raise PreconditionError("sigma does not satisfy the Hom-Jacobi identity")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class HSSpace:
    """Basis of HS(A) inside End(A); ``subspace`` is the flattened RREF form in F^(n^2)."""

    algebra: AnticommAlgebra
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @cached_property
    def basis(self) -> list[Matrix]:
        n = self.algebra.dim
        return [Matrix(self.algebra.field, n, n, tuple(v)) for v in self.subspace.vectors()]

    def element(self, coeffs: Sequence) -> Matrix:
        """Linear combination of the basis with the given coefficients."""
        f = self.algebra.field
        n = self.algebra.dim
        acc = [f.zero] * (n * n)
        for c, b in zip(coeffs, self.subspace.vectors()):
            if c:
                acc = [f.add(a, f.mul(c, x)) for a, x in zip(acc, b)]
        return Matrix(f, n, n, tuple(acc))

    def __contains__(self, sigma: Matrix) -> bool:
        return self.subspace.contains(sigma.entries)


def hs_space(A: AnticommAlgebra) -> HSSpace:
    """Kernel of sigma -> (Hom-Jacobian on basis triples).

    Unknown sigma_ab (row a, column b, i.e. the e_a coefficient of sigma e_b)
    sits at index a*n + b.  For a triple (i, j, k) the coefficient of e_r in
    [sigma e_i, [e_j, e_k]] is sum_a sigma_ai * c(a, [e_j,e_k])_r.
    """
    f = A.field
    n = A.dim
    t = A.table
    # bt[a][v] = [e_a, v] computed lazily per inner bracket
    rows = []
    for i, j, k in _basis_triples(n):
        eqs = [[0] * (n * n) for _ in range(n)]
        for b, inner in ((i, t[j][k]), (j, t[k][i]), (k, t[i][j])):
            if is_zero_vector(inner):
                continue
            for a in range(n):
                w = bracket(A, A.basis_vector(a), inner)
                for r, c in enumerate(w):
                    if c:
                        eqs[r][a * n + b] += c
        for eq in eqs:
            if any(eq):
                rows.append([f(x) for x in eq])
    if not rows:
        return HSSpace(A, Subspace.full(f, n * n))
    sub = kernel(Matrix.from_rows(f, rows, n * n))
    return HSSpace(A, sub)


def hom_ideal_closure(A: AnticommAlgebra, sigma: Matrix, S: Subspace) -> Subspace:
    _check_map(A, sigma)
    if S.ambient_dim != A.dim:
        raise DimensionError(f"subspace of F^{S.ambient_dim} in an algebra of dimension {A.dim}")
    return spin(A.field, A.dim, list(A.ad_basis) + [sigma], S.vectors())


def is_hom_ideal(A: AnticommAlgebra, sigma: Matrix, S: Subspace) -> bool:
    return hom_ideal_closure(A, sigma, S) == S


def is_hom_simple(A: AnticommAlgebra, sigma: Matrix, *, budget: int | None = None,
                  seed: int = DEFAULT_SEED, method: str = "auto") -> IdealReport:
    _check_map(A, sigma)
    gens = list(A.ad_basis) + [sigma]
    search = search_stable_subspace(A.field, A.dim, gens, budget=budget, seed=seed, method=method)
    return ideal_report(search, is_abelian(A))


def is_multiplicative(A: AnticommAlgebra, sigma: Matrix) -> bool:
    _check_map(A, sigma)
    return is_homomorphism(sigma, A, A)


def is_regular(A: AnticommAlgebra, sigma: Matrix) -> bool:
    return is_multiplicative(A, sigma) and sigma.is_invertible()


def outside_twist(A: AnticommAlgebra, theta: Matrix) -> AnticommAlgebra:
    """Bracket theta o [.,.]."""
    _check_map(A, theta, "theta")
    return AnticommAlgebra.from_brackets(A.field, A.dim, {k: theta.apply(v) for k, v in A.brackets})


def inside_twist(A: AnticommAlgebra, theta: Matrix) -> AnticommAlgebra:
    """Bracket [theta ., theta .]."""
    _check_map(A, theta, "theta")
    cols = theta.columns()
    pairs = {(i, j): bracket(A, cols[i], cols[j]) for i, j in itertools.combinations(range(A.dim), 2)}
    return AnticommAlgebra.from_brackets(A.field, A.dim, pairs)


def yau_twist(H: HomLie, theta: Matrix) -> HomLie:
    """(A, theta o [.,.], theta o sigma) for a multiplicative theta."""
    if not is_multiplicative(H.algebra, theta):
        raise PreconditionError("theta is not multiplicative for the algebra's bracket")
    return HomLie(outside_twist(H.algebra, theta), theta @ H.sigma)


def induced_lie(H: HomLie) -> AnticommAlgebra:
    """Bracket sigma^-1 o [.,.] of a regular Hom-Lie algebra."""
    if not is_regular(H.algebra, H.sigma):
        raise PreconditionError("the induced Lie algebra needs a regular structure")
    L = outside_twist(H.algebra, H.sigma.inverse())
    if not is_lie(L):
        raise AssertionError("induced algebra fails the Jacobi identity")
    return L


def is_hom_morphism(phi: Matrix, H1: HomLie, H2: HomLie) -> bool:
    if phi.field != H1.field or phi.field != H2.field:
        raise FieldMismatchError("phi and both algebras must share a field")
    if phi.shape != (H2.dim, H1.dim):
        raise DimensionError(f"phi must be {H2.dim}x{H1.dim}, got {phi.shape}")
    return is_homomorphism(phi, H1.algebra, H2.algebra) and phi @ H1.sigma == H2.sigma @ phi


def transport(H: HomLie, phi: Matrix) -> HomLie:
    """Push the structure forward along an invertible phi, making phi an isomorphism H -> result."""
    A = H.algebra
    _check_map(A, phi, "phi")
    inv = phi.inverse()
    cols = inv.columns()
    pairs = {(i, j): phi.apply(bracket(A, cols[i], cols[j])) for i, j in itertools.combinations(range(A.dim), 2)}
    B = AnticommAlgebra.from_brackets(A.field, A.dim, pairs)
    return HomLie(B, phi @ H.sigma @ inv)


def restrict(m: Matrix, S: Subspace) -> Matrix:
    """Matrix of m on an m-stable subspace S, in S's RREF basis."""
    if not S.is_invariant(m):
        raise PreconditionError("subspace is not stable under the map")
    cols = [S.coordinates(m.apply(b)) for b in S.vectors()]
    return Matrix.from_columns(m.field, cols, S.dim)


def regular_invariant(H: HomLie, component: Subspace, n: int) -> list[Poly]:
    """Invariant factors of sigma^n restricted to one component.

    Equal lists are necessary for isomorphism but do not certify it.
    """
    if not is_regular(H.algebra, H.sigma):
        raise PreconditionError("regular_invariant needs a regular structure")
    if not component.is_proper_nontrivial() and n > 1:
        raise PreconditionError("component must be a proper nonzero subspace")
    L = induced_lie(H)
    if ideal_closure(L, component) != component:
        raise PreconditionError("component is not an ideal of the induced Lie algebra")
    sn = H.sigma.power(n)
    if not component.is_invariant(sn):
        raise PreconditionError("component is not stable under sigma^n")
    return rational_canonical_form(restrict(sn, component))


YES, NO, PROBABLY_NO = "yes", "no", "probably-no"


@dataclass(frozen=True)
class ClassMembership:
    simple: bool | None
    ss: bool | None
    ss_star: bool | None
    ps: str
    notes: str = ""
    hs_dim: int = 0
    invertible_witness: Matrix | None = None


def classify_membership(A: AnticommAlgebra, *, budget: int | None = None, seed: int = DEFAULT_SEED,
                        samples: int = DEFAULT_PS_SAMPLES) -> ClassMembership:
    """Strong-simplicity classes: ss is simplicity itself, ss* adds HS != 0, ps asks for an invertible twisting map."""
    rep = is_simple(A, budget=budget, seed=seed)
    hs = hs_space(A)
    notes = []
    if rep.inconclusive:
        notes.append("simplicity inconclusive")
    if not rep.is_simple:
        # ss* and ps both imply ss
        ps = NO if rep.is_simple is False else PROBABLY_NO
        return ClassMembership(rep.is_simple, rep.is_simple, rep.is_simple, ps, "; ".join(notes), hs.dim)
    if hs.dim == 0:
        return ClassMembership(True, True, False, NO, "HS(A) = 0", 0)
    f = A.field
    witness = None
    if f.p and f.p ** hs.dim <= enumeration_budget(budget):
        for coeffs in itertools.product(range(f.p), repeat=hs.dim):
            m = hs.element(coeffs)
            if m.is_invertible():
                witness = m
                break
        ps = YES if witness is not None else NO
        notes.append(f"exhaustive over {f.p ** hs.dim} elements")
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            m = hs.element(random_vector(f, hs.dim, rng, bound=10))
            if m.is_invertible():
                witness = m
                break
        ps = YES if witness is not None else PROBABLY_NO
        notes.append(f"sampled {samples} elements")
    return ClassMembership(True, True, True, ps, "; ".join(notes), hs.dim, witness)
