"""Anticommutative algebras given by structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .config import DEFAULT_SEED, enumeration_budget
from .errors import BudgetExceededError, DimensionError, FieldMismatchError, PreconditionError
from .exactmath import (
    FieldSpec,
    Matrix,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    kernel,
    spin,
    stack,
)
from .exactmath.matrix import Vector, is_zero_vector, unit_vector
from .exactmath.subspace import EchelonBasis, line_representatives
from .irreducibility import IdealReport, ideal_report, search_stable_subspace


@dataclass(frozen=True)
class AnticommAlgebra:
    """Structure constants ``[e_i, e_j]`` for ``i < j``, stored sparsely.

    ``brackets`` is a sorted tuple of ``((i, j), vector)`` with nonzero
    vectors only; every other pair brackets to zero.
    """

    field: FieldSpec
    dim: int
    brackets: tuple = ()

    def __post_init__(self):
        seen = set()
        for (i, j), v in self.brackets:
            if not (0 <= i < j < self.dim):
                raise DimensionError(f"bracket index pair ({i}, {j}) invalid for dimension {self.dim}")
            if len(v) != self.dim:
                raise DimensionError(f"bracket ({i}, {j}) has length {len(v)}, expected {self.dim}")
            if (i, j) in seen:
                raise ValueError(f"duplicate bracket ({i}, {j})")
            seen.add((i, j))

    @classmethod
    def from_brackets(cls, field: FieldSpec, dim: int, brackets: Mapping | Iterable = ()) -> AnticommAlgebra:
        """Build from ``{(i, j): vector}``; pairs with ``i > j`` are negated and merged."""
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        acc: dict[tuple[int, int], list] = {}
        for (i, j), v in items:
            if len(v) != dim:
                raise DimensionError(f"bracket ({i}, {j}) has length {len(v)}, expected {dim}")
            v = [field(x) for x in v]
            if i == j:
                if any(v):
                    raise ValueError(f"[e_{i}, e_{i}] must vanish")
                continue
            if i > j:
                i, j = j, i
                v = [field.neg(x) for x in v]
            cur = acc.setdefault((i, j), [field.zero] * dim)
            acc[(i, j)] = [field.add(a, b) for a, b in zip(cur, v)]
        entries = tuple(sorted((k, tuple(v)) for k, v in acc.items() if any(v)))
        return cls(field, dim, entries)

    @classmethod
    def abelian(cls, field: FieldSpec, dim: int) -> AnticommAlgebra:
        return cls(field, dim, ())

    @property
    def constants(self) -> dict[tuple[int, int], Vector]:
        return dict(self.brackets)

    @cached_property
    def table(self) -> list[list[Vector]]:
        """Dense ``table[i][j] = [e_i, e_j]``."""
        f = self.field
        n = self.dim
        zero = (f.zero,) * n
        t = [[zero] * n for _ in range(n)]
        for (i, j), v in self.brackets:
            t[i][j] = v
            t[j][i] = tuple(f.neg(x) for x in v)
        return t

    @cached_property
    def ad_basis(self) -> list[Matrix]:
        return [ad(self, unit_vector(self.field, self.dim, i)) for i in range(self.dim)]

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.field, self.dim, i)

    def __str__(self) -> str:
        f = self.field
        parts = []
        for (i, j), v in self.brackets:
            terms = " + ".join(
                (f"e{k}" if f.format_element(c) == "1" else f"{f.format_element(c)}*e{k}")
                for k, c in enumerate(v) if c
            )
            parts.append(f"[e{i},e{j}]={terms}")
        return f"AnticommAlgebra({f}, dim={self.dim}: " + ", ".join(parts) + ")"


def _check_vec(A: AnticommAlgebra, x: Sequence):
    if len(x) != A.dim:
        raise DimensionError(f"vector of length {len(x)} in an algebra of dimension {A.dim}")


def bracket(A: AnticommAlgebra, x: Sequence, y: Sequence) -> Vector:
    _check_vec(A, x)
    _check_vec(A, y)
    f = A.field
    acc = [0] * A.dim
    for (i, j), v in A.brackets:
        c = x[i] * y[j] - x[j] * y[i]
        if c:
            for k, a in enumerate(v):
                if a:
                    acc[k] += c * a
    if f.p:
        return tuple(a % f.p for a in acc)
    return tuple(f(a) for a in acc)


def ad(A: AnticommAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]."""
    cols = [bracket(A, x, A.basis_vector(j)) for j in range(A.dim)]
    return Matrix.from_columns(A.field, cols, A.dim)


def rank_ad(A: AnticommAlgebra, x: Sequence) -> int:
    return ad(A, x).rank()


def jacobiator(A: AnticommAlgebra, i: int, j: int, k: int) -> Vector:
    t = A.table
    f = A.field
    e = A.basis_vector
    terms = [bracket(A, e(i), t[j][k]), bracket(A, e(j), t[k][i]), bracket(A, e(k), t[i][j])]
    return tuple(f(sum(c)) for c in zip(*terms))


def is_lie(A: AnticommAlgebra) -> bool:
    return all(is_zero_vector(jacobiator(A, i, j, k))
               for i, j, k in itertools.combinations(range(A.dim), 3))


def is_abelian(A: AnticommAlgebra) -> bool:
    return not A.brackets


def bracket_spaces(A: AnticommAlgebra, S: Subspace, T: Subspace) -> Subspace:
    """[S, T] = span{[s, t]}."""
    vecs = [bracket(A, s, t) for s in S.vectors() for t in T.vectors()]
    return Subspace.span(A.field, A.dim, vecs)


def whole(A: AnticommAlgebra) -> Subspace:
    return Subspace.full(A.field, A.dim)


def derived_series(A: AnticommAlgebra) -> list[Subspace]:
    """A, [A,A], [[A,A],[A,A]], ... up to the first repeated term."""
    series = [whole(A)]
    while True:
        nxt = bracket_spaces(A, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(A: AnticommAlgebra) -> list[Subspace]:
    series = [whole(A)]
    while True:
        nxt = bracket_spaces(A, series[-1], whole(A))
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(A: AnticommAlgebra) -> bool:
    return derived_series(A)[-1].is_zero()


def is_nilpotent(A: AnticommAlgebra) -> bool:
    return lower_central_series(A)[-1].is_zero()


def nilpotency_class(A: AnticommAlgebra) -> int | None:
    """Number of nonzero steps of the lower central series after A; None if not nilpotent."""
    lcs = lower_central_series(A)
    if not lcs[-1].is_zero():
        return None
    return len(lcs) - 1


def center(A: AnticommAlgebra) -> Subspace:
    if A.dim == 0:
        return whole(A)
    # x is central iff ad(e_j) x = 0 for all j
    return kernel(stack(A.ad_basis))


def ideal_closure(A: AnticommAlgebra, S: Subspace) -> Subspace:
    """Least ideal containing S, by spinning under every ad e_i."""
    if S.ambient_dim != A.dim:
        raise DimensionError(f"subspace of F^{S.ambient_dim} in an algebra of dimension {A.dim}")
    return spin(A.field, A.dim, A.ad_basis, S.vectors())


def is_ideal(A: AnticommAlgebra, S: Subspace) -> bool:
    return ideal_closure(A, S) == S


def is_simple(A: AnticommAlgebra, *, budget: int | None = None, seed: int = DEFAULT_SEED,
              method: str = "auto") -> IdealReport:
    """Nonabelian with no proper nonzero ideal.

    Over GF(p) every line is spun when the line count fits the budget;
    otherwise, and over Q, the Norton-style test decides.
    """
    search = search_stable_subspace(A.field, A.dim, A.ad_basis, budget=budget, seed=seed, method=method)
    return ideal_report(search, is_abelian(A))


def unique_proper_ideal_check(A: AnticommAlgebra, candidate: Subspace) -> bool:
    """Certify that ``candidate`` is the only proper nonzero ideal (exhaustive, GF(p) only)."""
    A.field.require_finite("unique_proper_ideal_check")
    if not candidate.is_proper_nontrivial():
        raise PreconditionError("candidate must be a proper nonzero subspace")
    if not is_ideal(A, candidate):
        return False
    hit_candidate = False
    for v in line_representatives(A.field, A.dim):
        closure = spin(A.field, A.dim, A.ad_basis, [v])
        if candidate.contains(v):
            if closure == candidate:
                hit_candidate = True
            elif not closure.is_full():
                return False
        elif not closure.is_full():
            return False
    return hit_candidate


def simplicity_criterion_condition(A: AnticommAlgebra, S: Subspace) -> bool:
    """Either [S,A] = A, or [S,A] is strictly inside [[S,A],A]."""
    if not S.is_proper_nontrivial():
        raise PreconditionError("S must be a nonzero proper subspace")
    if not is_lie(A):
        raise PreconditionError("the criterion applies to Lie algebras")
    return _criterion(A, S)


def _criterion(A: AnticommAlgebra, S: Subspace) -> bool:
    sa = bracket_spaces(A, S, whole(A))
    if sa.is_full():
        return True
    saa = bracket_spaces(A, sa, whole(A))
    return sa < saa


def is_simple_via_criterion(A: AnticommAlgebra, *, budget: int | None = None) -> bool:
    """Evaluate the criterion on every nonzero subspace of a Lie algebra over GF(p)."""
    p = A.field.require_finite("is_simple_via_criterion")
    if not is_lie(A):
        raise PreconditionError("the criterion applies to Lie algebras")
    n = A.dim
    total = sum(gaussian_binomial(n, k, p) for k in range(1, n))
    if total > enumeration_budget(budget):
        raise BudgetExceededError(f"{total} subspaces exceed the enumeration budget")
    # S = A itself: the condition reads [A, A] = A
    if n == 0 or not bracket_spaces(A, whole(A), whole(A)).is_full():
        return False
    return all(_criterion(A, S) for k in range(1, n) for S in enumerate_subspaces(A.field, n, k))


def direct_sum(A: AnticommAlgebra, B: AnticommAlgebra) -> AnticommAlgebra:
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    f = A.field
    n, m = A.dim, B.dim
    zero_a, zero_b = (f.zero,) * n, (f.zero,) * m
    brackets = [((i, j), tuple(v) + zero_b) for (i, j), v in A.brackets]
    brackets += [((i + n, j + n), zero_a + tuple(v)) for (i, j), v in B.brackets]
    return AnticommAlgebra(f, n + m, tuple(sorted(brackets)))


def extend_by_element(A: AnticommAlgebra, D: Matrix) -> AnticommAlgebra:
    """Append a basis vector d (last index) with [d, a] = D a and A's brackets unchanged."""
    if D.field != A.field:
        raise FieldMismatchError(f"{D.field} vs {A.field}")
    if D.shape != (A.dim, A.dim):
        raise DimensionError(f"D must be {A.dim}x{A.dim}, got {D.shape}")
    f = A.field
    n = A.dim
    brackets = {k: tuple(v) + (f.zero,) for k, v in A.brackets}
    for i in range(n):
        col = D.col(i)
        if any(col):
            # [e_i, d] = -D e_i
            brackets[(i, n)] = tuple(f.neg(x) for x in col) + (f.zero,)
    return AnticommAlgebra.from_brackets(f, n + 1, brackets)


def is_homomorphism(phi: Matrix, A: AnticommAlgebra, B: AnticommAlgebra) -> bool:
    """phi [x, y]_A = [phi x, phi y]_B on all basis pairs."""
    if phi.shape != (B.dim, A.dim):
        raise DimensionError(f"map of shape {phi.shape} between dimensions {A.dim} and {B.dim}")
    cols = phi.columns()
    ta = A.table
    for i, j in itertools.combinations(range(A.dim), 2):
        if phi.apply(ta[i][j]) != bracket(B, cols[i], cols[j]):
            return False
    return True


_GL_BUDGET = 24_261_120  # |GL(4, 3)|


def gl_order(n: int, p: int) -> int:
    out = 1
    for k in range(n):
        out *= p ** n - p ** k
    return out


def isomorphic_bruteforce(A: AnticommAlgebra, B: AnticommAlgebra) -> Matrix | None:
    """Search GL(n, p) (with pruning) for an isomorphism A -> B."""
    if A.field != B.field:
        raise FieldMismatchError(f"{A.field} vs {B.field}")
    p = A.field.require_finite("isomorphic_bruteforce")
    if A.dim != B.dim:
        return None
    n = A.dim
    if gl_order(n, p) > max(_GL_BUDGET, enumeration_budget()):
        raise BudgetExceededError(f"|GL({n},{p})| exceeds the brute-force budget")
    f = A.field
    ta = A.table
    # pair (i, j) is checkable once images of i, j and of the support of [e_i, e_j] are fixed
    checks: dict[int, list] = {k: [] for k in range(n)}
    for i, j in itertools.combinations(range(n), 2):
        support = [k for k, x in enumerate(ta[i][j]) if x]
        checks[max([j] + support)].append((i, j))
    candidates = [v for v in itertools.product(range(p), repeat=n) if any(v)]
    images: list = [None] * n

    def consistent(k: int) -> bool:
        for i, j in checks[k]:
            lhs = [0] * n
            for c, img in zip(ta[i][j], images):
                if c:
                    for r in range(n):
                        lhs[r] += c * img[r]
            if tuple(x % p for x in lhs) != bracket(B, images[i], images[j]):
                return False
        return True

    def extend(k: int, eb: EchelonBasis):
        if k == n:
            return True
        for v in candidates:
            if not any(eb.reduce(v)):
                continue
            images[k] = v
            if consistent(k):
                child = EchelonBasis(f, n)
                child.rows = [list(r) for r in eb.rows]
                child.pivots = list(eb.pivots)
                child.add(v)
                if extend(k + 1, child):
                    return True
        images[k] = None
        return False

    if extend(0, EchelonBasis(f, n)):
        return Matrix.from_columns(f, images, n)
    return None
