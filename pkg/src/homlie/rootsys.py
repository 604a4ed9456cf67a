"""Root systems (Bourbaki numbering) and traces of the diagonal automorphisms
x_beta -> c^{m_i(beta)} x_beta, computed by enumeration and by closed form.

Cartan convention: ``A[i][j] = <alpha_i, alpha_j^vee>``, so for G2 (alpha_1
short) ``A = [[2, -1], [-3, 2]]``.  Index ``i`` in the public API is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly

TYPES = ("A", "B", "C", "D", "E", "F", "G")


def _normalize(type_label: str, l: int) -> str:
    t = type_label.strip().upper()
    if len(t) > 1 and t[0] in "EFG" and t[1:].isdigit():
        if int(t[1:]) != l:
            raise ValueError(f"type {type_label} has rank {t[1:]}, got rank {l}")
        t = t[0]
    if len(t) > 1 and t[0] in "ABCD" and t[1:].isdigit():
        if int(t[1:]) != l:
            raise ValueError(f"type {type_label} has rank {t[1:]}, got rank {l}")
        t = t[0]
    if t not in TYPES:
        raise ValueError(f"unknown root system type {type_label!r}")
    valid = {
        "A": l >= 1,
        "B": l >= 2,
        "C": l >= 3,
        "D": l >= 4,
        "E": l in (6, 7, 8),
        "F": l == 4,
        "G": l == 2,
    }[t]
    if not valid:
        hint = "; use A3 for D3" if (t == "D" and l == 3) else ""
        raise ValueError(f"invalid rank {l} for type {t}{hint}")
    return t


def _edges(t: str, l: int) -> list[tuple[int, int]]:
    if t in "ABCFG":
        return [(k, k + 1) for k in range(l - 1)]
    if t == "D":
        return [(k, k + 1) for k in range(l - 2)] + [(l - 3, l - 1)]
    # E: 1-3-4-5-6-7-8 with 2 attached to 4 (0-based: 0-2-3-4-..., 1-3)
    return [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, l - 1)]


@lru_cache(maxsize=None)
def _cartan(t: str, l: int) -> tuple:
    A = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    for i, j in _edges(t, l):
        A[i][j] = A[j][i] = -1
    if t == "B":
        A[l - 2][l - 1] = -2
    elif t == "C":
        A[l - 1][l - 2] = -2
    elif t == "F":
        A[1][2] = -2
    elif t == "G":
        A[1][0] = -3
    return tuple(tuple(r) for r in A)


def cartan_matrix(type_label: str, l: int) -> list[list[int]]:
    t = _normalize(type_label, l)
    return [list(r) for r in _cartan(t, l)]


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    positive: tuple

    @property
    def roots(self) -> frozenset:
        neg = tuple(tuple(-m for m in r) for r in self.positive)
        return frozenset(self.positive + neg)

    def __len__(self) -> int:
        return 2 * len(self.positive)

    @property
    def dim_algebra(self) -> int:
        return self.rank + len(self)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"


@lru_cache(maxsize=None)
def _positive_roots(t: str, l: int) -> tuple:
    A = _cartan(t, l)
    simple = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for j in range(l):
                # <beta, alpha_j^vee> = sum_i m_i A[i][j]
                pairing = sum(beta[i] * A[i][j] for i in range(l))
                q = 0
                down = list(beta)
                while True:
                    down[j] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[j] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def enumerate_roots(type_label: str, l: int) -> RootSystem:
    t = _normalize(type_label, l)
    return RootSystem(t, l, _positive_roots(t, l))


def _check_i(rs: RootSystem, i: int):
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple root index {i} out of range 1..{rs.rank}")


def trace_enumerated(type_label: str, l: int, i: int) -> LaurentPoly:
    """l + sum over all roots of c^{m_i(beta)}."""
    rs = enumerate_roots(type_label, l)
    _check_i(rs, i)
    acc: dict[int, int] = {0: l}
    for beta in rs.roots:
        e = beta[i - 1]
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def _s(k: int, a: Fraction | int = 1) -> LaurentPoly:
    a = Fraction(a)
    if a.denominator != 1:
        raise AssertionError("closed form produced a non-integer coefficient")
    return LaurentPoly.sym(k, int(a))


def _tail(*terms) -> LaurentPoly:
    """const, then coefficients of (c^k + c^-k) for k = 1, 2, ..."""
    out = LaurentPoly.const(terms[0])
    for k, a in enumerate(terms[1:], start=1):
        out = out + _s(k, a)
    return out


# exceptional types: (constant, coefficient of c^1 + c^-1, of c^2 + c^-2, ...)
_EXCEPTIONAL = {
    ("E", 6): {1: (46, 16), 6: (46, 16), 3: (28, 20, 5), 5: (28, 20, 5),
               2: (36, 20, 1), 4: (20, 18, 9, 2)},
    ("E", 7): {1: (67, 32, 1), 2: (49, 35, 7), 3: (39, 30, 15, 2), 4: (27, 24, 18, 8, 3),
               5: (33, 30, 15, 5), 6: (49, 32, 10), 7: (79, 27)},
    ("E", 8): {1: (92, 64, 14), 2: (64, 56, 28, 8), 3: (52, 42, 35, 14, 7),
               4: (36, 30, 30, 20, 15, 6, 5), 6: (54, 48, 30, 16, 3), 7: (82, 54, 27, 2),
               8: (134, 56, 1)},
    ("F", 4): {1: (22, 14, 1), 2: (12, 12, 6, 2), 3: (12, 6, 9, 2, 3), 4: (22, 8, 7)},
    ("G", 2): {1: (4, 2, 1, 2), 2: (4, 4, 1)},
}


def trace_closed_form(type_label: str, l: int, i: int) -> LaurentPoly:
    """The published closed form, transcribed as printed (dim g from the enumeration)."""
    rs = enumerate_roots(type_label, l)
    _check_i(rs, i)
    t = rs.type_label
    dim = rs.dim_algebra
    shifted = LaurentPoly.sym(1) - 2  # c + c^-1 - 2
    if t == "A":
        return dim + i * (l + 1 - i) * shifted
    if t == "B":
        return (dim - i * (4 * l + 1 - 3 * i)) + _s(1, i * (2 * (l - i) + 1)) + _s(2, Fraction((i - 1) * i, 2))
    if t == "C":
        if i < l:
            return (dim - i * (4 * l + 1 - 3 * i)) + _s(1, 2 * i * (l - i)) + _s(2, Fraction(i * (i + 1), 2))
        return dim + (l * (l + 1) // 2) * shifted
    if t == "D":
        if i <= l - 2:
            return (dim - i * (4 * l - 1 - 3 * i)) + _s(1, 2 * i * (l - i)) + _s(2, Fraction((i - 1) * i, 2))
        return dim + ((l - 1) * l // 2) * shifted
    if (t, l) == ("E", 8) and i == 5:
        # printed with a lone c^4 and c^-3 in the cubic slot
        return (LaurentPoly.const(40) + _s(1, 40) + _s(2, 30)
                + LaurentPoly({4: 20, -3: 20}) + _s(4, 10) + _s(5, 4))
    return _tail(*_EXCEPTIONAL[(t, l)][i])


@dataclass(frozen=True)
class TraceCheck:
    i: int
    closed: LaurentPoly
    enumerated: LaurentPoly

    @property
    def matches(self) -> bool:
        return self.closed == self.enumerated

    @property
    def difference(self) -> LaurentPoly:
        """closed form minus enumeration."""
        return self.closed - self.enumerated

    @property
    def verdict(self) -> str:
        return "match" if self.matches else "mismatch"


def verify_traces(type_label: str, l: int, indices=None) -> list[TraceCheck]:
    rs = enumerate_roots(type_label, l)
    idx = range(1, l + 1) if indices is None else indices
    out = []
    for i in idx:
        _check_i(rs, i)
        out.append(TraceCheck(i, trace_closed_form(rs.type_label, l, i), trace_enumerated(rs.type_label, l, i)))
    return out


def admissible_cases(max_rank: int = 8) -> list[tuple[str, int]]:
    """Every (type, rank) covered by the closed forms, classical ranks up to max_rank."""
    cases = [("A", l) for l in range(1, max_rank + 1)]
    cases += [("B", l) for l in range(2, max_rank + 1)]
    cases += [("C", l) for l in range(3, max_rank + 1)]
    cases += [("D", l) for l in range(4, max_rank + 1)]
    cases += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    return cases
