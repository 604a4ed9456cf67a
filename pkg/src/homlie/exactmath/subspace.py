"""Subspaces of F^n in canonical RREF form, spinning, and finite enumerations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..errors import DimensionError, FieldMismatchError
from .field import FieldSpec, Raw
from .matrix import Matrix, Vector, dot, kernel_rows, rref_rows


@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its reduced row-echelon basis (no zero rows).

    The RREF basis is unique, so dataclass equality and hashing are set
    equality.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = []
        for v in vectors:
            if len(v) != n:
                raise DimensionError(f"vector of length {len(v)} in F^{n}")
            rows.append([field(x) for x in v])
        red, _ = rref_rows(field, rows, n)
        return cls(n, Matrix(field, len(red), n, tuple(x for r in red for x in r)))

    @classmethod
    def _from_rref(cls, field: FieldSpec, n: int, red: Sequence[Sequence[Raw]]) -> Subspace:
        return cls(n, Matrix(field, len(red), n, tuple(x for r in red for x in r)))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(n, Matrix(field, 0, n, ()))

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> Subspace:
        return cls(n, Matrix.identity(field, n))

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[Vector]:
        return self.basis.to_rows()

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def is_proper_nontrivial(self) -> bool:
        return 0 < self.dim < self.ambient_dim

    def _check(self, other: Subspace):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in F^{self.ambient_dim}")
        f = self.field
        v = [f(x) for x in v]
        red, _ = rref_rows(f, self.vectors() + [v], self.ambient_dim)
        return len(red) == self.dim

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubset(self, other: Subspace) -> bool:
        self._check(other)
        if self.dim > other.dim:
            return False
        return (self + other).dim == other.dim

    __le__ = issubset

    def __lt__(self, other: Subspace) -> bool:
        return self.dim < other.dim and self.issubset(other)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        red, _ = rref_rows(self.field, self.vectors() + other.vectors(), self.ambient_dim)
        return Subspace._from_rref(self.field, self.ambient_dim, red)

    def annihilator(self) -> Subspace:
        """{w : w . v = 0 for all v in self}, as a subspace of the same F^n."""
        ker = kernel_rows(self.field, self.vectors(), self.ambient_dim)
        return Subspace.span(self.field, self.ambient_dim, ker)

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def image(self, m: Matrix) -> Subspace:
        return Subspace.span(self.field, m.rows, (m.apply(v) for v in self.vectors()))

    def is_invariant(self, m: Matrix) -> bool:
        return all(self.contains(m.apply(v)) for v in self.vectors())

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the RREF basis (v must lie in the subspace)."""
        f = self.field
        red, pivots = self.vectors(), []
        for r in red:
            pivots.append(next(i for i, x in enumerate(r) if x))
        coords = tuple(f(v[pc]) for pc in pivots)
        check = [f.zero] * self.ambient_dim
        for c, r in zip(coords, red):
            for i, x in enumerate(r):
                check[i] = f.add(check[i], f.mul(c, x))
        if tuple(check) != tuple(f(x) for x in v):
            raise ValueError("vector is not in the subspace")
        return coords

    def __str__(self) -> str:
        return "span" + str(self.basis) if self.dim else "0"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def kernel(m: Matrix) -> Subspace:
    """{v : m v = 0} as a canonical subspace of F^cols."""
    return Subspace.span(m.field, m.cols, kernel_rows(m.field, m.to_rows(), m.cols))


class EchelonBasis:
    """Incrementally grown semi-echelon basis (internal helper for spinning)."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field: FieldSpec, n: int):
        self.field = field
        self.n = n
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v) -> list:
        p = self.field.p
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                if p:
                    v = [(x - c * y) % p for x, y in zip(v, row)]
                else:
                    v = [x - c * y for x, y in zip(v, row)]
        return v

    def add(self, v) -> list | None:
        """Adjoin v; return the normalized new row, or None if v was dependent."""
        v = self.reduce(v)
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return None
        inv = self.field.inv(v[pc])
        v = [self.field.mul(inv, x) for x in v]
        self.rows.append(v)
        self.pivots.append(pc)
        return v

    @property
    def dim(self) -> int:
        return len(self.rows)

    def subspace(self) -> Subspace:
        red, _ = rref_rows(self.field, self.rows, self.n)
        return Subspace._from_rref(self.field, self.n, red)


def _apply_rows(field: FieldSpec, rows, v) -> list:
    p = field.p
    if p:
        return [sum(a * b for a, b in zip(r, v)) % p for r in rows]
    return [sum(a * b for a, b in zip(r, v)) for r in rows]


def spin(field: FieldSpec, n: int, generators: Sequence[Matrix], seeds: Iterable[Sequence]) -> Subspace:
    """Smallest subspace containing ``seeds`` and stable under every generator."""
    gens = [g.to_rows() for g in generators]
    eb = EchelonBasis(field, n)
    queue = []
    for s in seeds:
        r = eb.add(s)
        if r is not None:
            queue.append(r)
    while queue and eb.dim < n:
        v = queue.pop()
        for g in gens:
            r = eb.add(_apply_rows(field, g, v))
            if r is not None:
                queue.append(r)
                if eb.dim == n:
                    break
    if eb.dim == n:
        return Subspace.full(field, n)
    return eb.subspace()


# finite enumerations -----------------------------------------------------------


def enumerate_vectors(field: FieldSpec, dim: int) -> Iterator[Vector]:
    p = field.require_finite("enumerate_vectors")
    return itertools.product(range(p), repeat=dim)


def line_representatives(field: FieldSpec, dim: int) -> Iterator[Vector]:
    """Nonzero vectors whose first nonzero coordinate is 1, one per line."""
    p = field.require_finite("enumerate_lines")
    for k in range(dim):
        head = (0,) * k + (1,)
        for tail in itertools.product(range(p), repeat=dim - k - 1):
            yield head + tail


def enumerate_lines(field: FieldSpec, dim: int) -> Iterator[Subspace]:
    for v in line_representatives(field, dim):
        yield Subspace(dim, Matrix(field, 1, dim, v))


def count_lines(p: int, dim: int) -> int:
    return (p ** dim - 1) // (p - 1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(field: FieldSpec, dim: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of GF(p)^dim, each exactly once (via RREF shapes)."""
    p = field.require_finite("enumerate_subspaces")
    for pivots in itertools.combinations(range(dim), k):
        pivset = set(pivots)
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, dim) if c not in pivset]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * dim for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            yield Subspace(dim, Matrix(field, k, dim, tuple(x for row in rows for x in row)))



__all__ = [
    "Subspace", "kernel", "subspace_sum", "subspace_intersect", "contains", "spin",
    "EchelonBasis", "enumerate_vectors", "enumerate_lines", "line_representatives",
    "enumerate_subspaces", "count_lines", "gaussian_binomial", "dot",
]
