"""Univariate polynomials over a field; characteristic polynomials and
rational canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from ..errors import DimensionError, FieldMismatchError, UnsupportedFieldError
from .field import FieldSpec, Raw
from .matrix import Matrix


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial in ``x`` with raw coefficients, lowest degree first."""

    field: FieldSpec
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.field(c) for c in self.coeffs))

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field: FieldSpec, c) -> Poly:
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Raw:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: Poly):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (f.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (f.zero,) * (n - len(other.coeffs))
        return Poly(f, tuple(f.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        f = self.field
        if not isinstance(other, Poly):
            c = f(other)
            return Poly(f, tuple(f.mul(c, x) for x in self.coeffs))
        self._check(other)
        if not self or not other:
            return Poly(f, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(f, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: Poly):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(f, ()), self
        quot = [f.zero] * (dq + 1)
        inv = f.inv(other.lead)
        dv = other.degree
        for k in range(dq, -1, -1):
            c = f.mul(rem[k + dv], inv)
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = f.sub(rem[k + j], f.mul(c, b))
        return Poly(f, tuple(quot)), Poly(f, tuple(rem[:dv]))

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def monic(self) -> Poly:
        if not self:
            return self
        return self * self.field.inv(self.lead)

    def __call__(self, x) -> Raw:
        f = self.field
        x = f(x)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def roots(self) -> list[Raw]:
        """Roots in GF(p) by exhaustive evaluation."""
        p = self.field.require_finite("Poly.roots")
        return [a for a in range(p) if not self(a)]

    def rational_roots(self, cap: int = 10 ** 10) -> list[Fraction]:
        """Roots in Q by the rational root theorem.

        Skips the search (returns the roots 0 only) when the cleared constant or
        leading coefficient exceeds ``cap``, so the result may be incomplete.
        """
        if self.field.p is not None:
            raise UnsupportedFieldError("rational_roots is for polynomials over Q")
        if not self:
            raise ValueError("the zero polynomial has every root")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        roots = []
        low = next(k for k, c in enumerate(ints) if c)
        if low:
            roots.append(Fraction(0))
        ints = ints[low:]
        a0, an = abs(ints[0]), abs(ints[-1])
        if len(ints) == 1 or a0 > cap or an > cap:
            return roots
        for d in _divisors(a0):
            for e in _divisors(an):
                for r in (Fraction(d, e), Fraction(-d, e)):
                    if r not in roots and not self(r):
                        roots.append(r)
        return sorted(roots)

    def __str__(self) -> str:
        if not self:
            return "0"
        f = self.field
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if f.p is None and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            mag_s = f.format_element(mag)
            if k == 0:
                body = mag_s
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag_s == "1" else f"{mag_s}*{mono}"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def charpoly(m: Matrix) -> Poly:
    """Monic characteristic polynomial det(x I - m), via Hessenberg reduction."""
    if not m.is_square:
        raise DimensionError("charpoly of a non-square matrix")
    f = m.field
    n = m.rows
    h = [list(r) for r in m.to_rows()]
    for k in range(1, n - 1):
        c = k - 1
        piv = next((i for i in range(k, n) if h[i][c]), None)
        if piv is None:
            continue
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            for row in h:
                row[k], row[piv] = row[piv], row[k]
        t = h[k][c]
        for j in range(k + 1, n):
            if h[j][c]:
                u = f.div(h[j][c], t)
                h[j] = [f.sub(a, f.mul(u, b)) for a, b in zip(h[j], h[k])]
                for row in h:
                    row[k] = f.add(row[k], f.mul(u, row[j]))
    x = Poly.x(f)
    ps = [Poly.const(f, 1)]
    for mm in range(1, n + 1):
        pm = (x - Poly.const(f, h[mm - 1][mm - 1])) * ps[mm - 1]
        t = f.one
        for i in range(mm - 1, 0, -1):
            t = f.mul(t, h[i][i - 1])
            pm = pm - ps[i - 1] * f.mul(h[i - 1][mm - 1], t)
        ps.append(pm)
    return ps[n]


def _smith_invariants(f: FieldSpec, mat: list[list[Poly]]) -> list[Poly]:
    n = len(mat)
    diag = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    e = mat[i][j]
                    if e and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
            if best is None:
                diag.extend([Poly(f, ())] * (n - t))
                return diag
            _, i, j = best
            mat[t], mat[i] = mat[i], mat[t]
            for row in mat:
                row[t], row[j] = row[j], row[t]
            piv = mat[t][t]
            dirty = False
            for i in range(t + 1, n):
                if mat[i][t]:
                    q, r = divmod(mat[i][t], piv)
                    mat[i] = [a - b * q for a, b in zip(mat[i], mat[t])]
                    dirty = dirty or bool(r)
            for j in range(t + 1, n):
                if mat[t][j]:
                    q, r = divmod(mat[t][j], piv)
                    for row in mat:
                        row[j] = row[j] - row[t] * q
                    dirty = dirty or bool(r)
            if dirty:
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if mat[i][j] % piv), None)
            if bad is not None:
                mat[t] = [a + b for a, b in zip(mat[t], mat[bad])]
                continue
            diag.append(piv.monic())
            break
    return diag


def rational_canonical_form(m: Matrix) -> list[Poly]:
    """Invariant factors of m (nonconstant, each dividing the next)."""
    if not m.is_square:
        raise DimensionError("rational canonical form of a non-square matrix")
    f = m.field
    n = m.rows
    x = Poly.x(f)
    mat = [[(x if i == j else Poly(f, ())) - Poly.const(f, m[i, j]) for j in range(n)] for i in range(n)]
    inv = _smith_invariants(f, mat)
    return [p for p in inv if p.degree >= 1]


def is_similar(a: Matrix, b: Matrix) -> bool:
    if not (a.is_square and b.is_square) or a.rows != b.rows:
        raise DimensionError(f"similarity needs equal square shapes, got {a.shape} and {b.shape}")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return rational_canonical_form(a) == rational_canonical_form(b)


def companion(field: FieldSpec, coeffs: Sequence) -> Matrix:
    """Companion matrix of the monic x^n + c_{n-1} x^{n-1} + ... + c_0 (coeffs low first)."""
    n = len(coeffs)
    rows = [[field.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = field.one
    for i in range(n):
        rows[i][n - 1] = field.neg(field(coeffs[i]))
    return Matrix.from_rows(field, rows)
