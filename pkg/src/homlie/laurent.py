"""Integer Laurent polynomials in one variable ``c``."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class LaurentPoly:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(a) for e, a in (coeffs or {}).items() if a}

    @classmethod
    def const(cls, a: int) -> LaurentPoly:
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> LaurentPoly:
        return cls({e: a})

    @classmethod
    def sym(cls, k: int, a: int = 1) -> LaurentPoly:
        """a (c^k + c^-k); for k = 0 this is 2a."""
        return cls({k: a}) + cls({-k: a})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def constant_term(self) -> int:
        return self.coeff(0)

    def __add__(self, other) -> LaurentPoly:
        other = _lift(other)
        out = dict(self._coeffs)
        for e, a in other._coeffs.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -a for e, a in self._coeffs.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _lift(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _lift(other)
        out: dict[int, int] = {}
        for e1, a1 in self._coeffs.items():
            for e2, a2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __call__(self, c) -> Fraction:
        c = Fraction(c)
        return sum((a * c ** e for e, a in self._coeffs.items()), Fraction(0))

    def inverted(self) -> LaurentPoly:
        """Substitute c -> 1/c."""
        return LaurentPoly({-e: a for e, a in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        return self == self.inverted()

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = ""
        for e in sorted(self._coeffs):
            a = self._coeffs[e]
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                var = "c" if e == 1 else f"c^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out = ("-" if a < 0 else "") + body
            else:
                out += (" - " if a < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented
