"""Exact scalar fields: the rationals and prime fields GF(p).

Raw field elements are plain Python values: :class:`fractions.Fraction` for
the rationals and ``int`` residues in ``[0, p)`` for GF(p).  Matrices and
vectors store raw values; :class:`Scalar` is the tagged, user-facing wrapper.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import FieldMismatchError, UnsupportedFieldError

Raw = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_RESIDUE_RE = re.compile(r"^\d+$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"GF({self.p}): {self.p} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``Q`` / ``QQ`` or ``gfP`` / ``GF(P)``."""
        t = text.strip().lower().replace("(", "").replace(")", "")
        if t in ("q", "qq", "rationals"):
            return cls.rationals()
        if t.startswith("gf") and t[2:].isdigit():
            return cls.gf(int(t[2:]))
        raise ValueError(f"unknown field {text!r}; expected Q or gfP")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def kind(self) -> str:
        return "Q" if self.p is None else "GF"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def order(self) -> int:
        if self.p is None:
            raise UnsupportedFieldError("the rationals are infinite")
        return self.p

    def __str__(self) -> str:
        return "Q" if self.p is None else f"gf{self.p}"

    def require_finite(self, what: str = "this operation") -> int:
        if self.p is None:
            raise UnsupportedFieldError(f"{what} needs a finite field, got Q")
        return self.p

    # raw element arithmetic ------------------------------------------------

    @property
    def zero(self) -> Raw:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, x) -> Raw:
        """Coerce an int, Fraction, numeric string or Scalar into a raw element."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatchError(f"scalar over {x.field} used over {self}")
            return x.value
        if isinstance(x, str):
            return self.parse_element(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.p else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.p else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return (a * b) % self.p if self.p else a * b

    def neg(self, a: Raw) -> Raw:
        return (-a) % self.p if self.p else -a

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / Fraction(a)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    # text format -----------------------------------------------------------

    def parse_element(self, text: str) -> Raw:
        t = text.strip()
        if self.p is None:
            m = _RATIONAL_RE.match(t)
            if not m:
                raise ValueError(f"malformed rational {text!r}")
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise ValueError(f"zero denominator in {text!r}")
            return Fraction(int(m.group(1)), den)
        if not _RESIDUE_RE.match(t):
            raise ValueError(f"malformed GF({self.p}) residue {text!r}")
        k = int(t)
        if k >= self.p:
            raise ValueError(f"residue {k} out of range for GF({self.p})")
        return k

    def format_element(self, a: Raw) -> str:
        if self.p is None:
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; equality is representation equality."""

    field: FieldSpec
    value: Raw

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> Scalar:
        return cls(field, field.parse_element(text))

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def inverse(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def __str__(self) -> str:
        return self.field.format_element(self.value)


QQ = FieldSpec.rationals()
