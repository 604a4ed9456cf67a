"""Named algebras and twisting maps.

Basis vectors are 0-indexed: ``e_1`` of a family's usual description is
index 0.  Every constructor returns a :class:`ZooEntry` whose ``expected``
tags name the properties the family is known to have.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .algebra import AnticommAlgebra, direct_sum, extend_by_element, is_homomorphism, is_lie, is_simple
from .errors import PreconditionError, UnsupportedFieldError
from .exactmath import FieldSpec, Matrix, Subspace
from .exactmath.poly import Poly
from .exactmath.sampling import random_element
from .twisting import is_twisting_map


@dataclass(frozen=True)
class ZooEntry:
    name: str
    params: tuple
    algebra: AnticommAlgebra
    sigma: Matrix | None = None
    expected: frozenset = dc_field(default_factory=frozenset)
    marked_ideal: Subspace | None = None

    def __post_init__(self):
        if self.sigma is not None and not is_twisting_map(self.algebra, self.sigma):
            raise PreconditionError(f"{self.name}: sigma is not a twisting map")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _unit(field: FieldSpec, n: int, i: int) -> tuple:
    return tuple(field.one if k == i else field.zero for k in range(n))


def _map_from_images(field: FieldSpec, n: int, images: dict[int, int]) -> Matrix:
    """Matrix sending e_k to e_images[k] (basis vectors not listed go to 0)."""
    cols = [_unit(field, n, images[k]) if k in images else (field.zero,) * n for k in range(n)]
    return Matrix.from_columns(field, cols, n)


def _alg(field: FieldSpec, n: int, rules: dict[tuple[int, int], int | tuple]) -> AnticommAlgebra:
    """Brackets given as target basis indices or explicit vectors."""
    br = {k: (_unit(field, n, v) if isinstance(v, int) else v) for k, v in rules.items()}
    return AnticommAlgebra.from_brackets(field, n, br)


def abelian(n: int, field: FieldSpec) -> ZooEntry:
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return ZooEntry("abelian", (n,), AnticommAlgebra.abelian(field, n), expected=frozenset({"abelian", "nilpotent"}))


def aff(field: FieldSpec) -> ZooEntry:
    """x = e0, y = e1, [x, y] = y."""
    A = _alg(field, 2, {(0, 1): 1})
    return ZooEntry("aff", (), A, expected=frozenset({"solvable", "not-simple"}),
                    marked_ideal=Subspace.span(field, 2, [_unit(field, 2, 1)]))


def so3(field: FieldSpec) -> ZooEntry:
    A = _alg(field, 3, {(0, 1): 2, (1, 2): 0, (2, 0): 1})
    return ZooEntry("so3", (), A, Matrix.identity(field, 3), frozenset({"simple", "lie"}))


def sl2(field: FieldSpec) -> ZooEntry:
    """Basis (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f."""
    if field.p == 2:
        raise UnsupportedFieldError("sl2 needs characteristic other than 2")
    m2 = field(-2)
    z = field.zero
    A = AnticommAlgebra.from_brackets(field, 3, {
        (0, 1): (m2, z, z),
        (0, 2): (z, field.one, z),
        (1, 2): (z, z, m2),
    })
    return ZooEntry("sl2", (), A, Matrix.identity(field, 3), frozenset({"simple", "lie"}))


def heisenberg(n: int, field: FieldSpec) -> ZooEntry:
    """h_{2n+1}: [e_{2i}, e_{2i+1}] = e_{2n}; sigma shifts e_k -> e_{k-1} and kills e_0."""
    if n < 1:
        raise ValueError("heisenberg needs n >= 1")
    d = 2 * n + 1
    A = _alg(field, d, {(2 * i, 2 * i + 1): d - 1 for i in range(n)})
    sigma = _map_from_images(field, d, {k: k - 1 for k in range(1, d)})
    return ZooEntry("heisenberg", (n,), A, sigma, frozenset({"nilpotent", "lie", "hom-simple", "not-simple"}),
                    marked_ideal=Subspace.span(field, d, [_unit(field, d, d - 1)]))


def _s_rules(n: int) -> dict:
    rules = {(i, i + 1): i + 2 for i in range(n - 2)}
    rules[(n - 2, n - 1)] = 0
    rules[(n - 1, 0)] = 1
    return rules


def s_family(n: int, field: FieldSpec) -> ZooEntry:
    """[e_i, e_{i+1}] = e_{i+2} (i <= n-3), [e_{n-2}, e_{n-1}] = e_0, [e_{n-1}, e_0] = e_1."""
    if n < 3:
        raise ValueError("s_family needs n >= 3")
    return ZooEntry("s_family", (n,), _alg(field, n, _s_rules(n)), expected=frozenset({"simple"}))


def a_ext(n: int, field: FieldSpec) -> ZooEntry:
    """S_n extended by d (index n) with [d, e_0] = e_1; sigma(e_{n-1}) = d, all else 0."""
    if n < 3:
        raise ValueError("a_ext needs n >= 3")
    rules = _s_rules(n)
    rules[(n, 0)] = 1
    A = _alg(field, n + 1, rules)
    sigma = _map_from_images(field, n + 1, {n - 1: n})
    marked = Subspace.span(field, n + 1, [_unit(field, n + 1, k) for k in range(n)])
    return ZooEntry("a_ext", (n,), A, sigma, frozenset({"hom-simple", "not-simple"}), marked_ideal=marked)


def r_family(n: int, field: FieldSpec) -> ZooEntry:
    """dim 2n: [e_{2i}, e_{2i+1}] = e_{2i+2}, last pair brackets to e_0.

    sigma(e_{2i}) = e_{2i+3} for i < n-1, sigma(e_{2n-2}) = e_1, sigma of odd-index vectors is 0.
    """
    if n < 2:
        raise ValueError("r_family needs n >= 2")
    d = 2 * n
    rules = {(2 * i, 2 * i + 1): 2 * i + 2 for i in range(n - 1)}
    rules[(d - 2, d - 1)] = 0
    images = {2 * i: 2 * i + 3 for i in range(n - 1)}
    images[d - 2] = 1
    return ZooEntry("r_family", (n,), _alg(field, d, rules), _map_from_images(field, d, images),
                    frozenset({"solvable", "hom-simple", "not-simple"}))


def aff_plus_abelian(n: int, field: FieldSpec) -> ZooEntry:
    """Basis x, y, e_1..e_n; sigma: y -> x -> e_1 -> ... -> e_n -> y."""
    if n < 1:
        raise ValueError("aff_plus_abelian needs n >= 1")
    d = n + 2
    A = direct_sum(aff(field).algebra, AnticommAlgebra.abelian(field, n))
    images = {1: 0, 0: 2, d - 1: 1}
    images.update({k: k + 1 for k in range(2, d - 1)})
    return ZooEntry("aff_plus_abelian", (n,), A, _map_from_images(field, d, images),
                    frozenset({"solvable", "hom-simple", "not-simple"}))


def regular_construction(s: AnticommAlgebra, n: int, autos: Sequence[Matrix] | None = None) -> ZooEntry:
    """n copies of a simple Lie algebra s with bracket sigma o (componentwise bracket).

    sigma maps copy i to copy i+1 (mod n) through autos[i].
    """
    if n < 1:
        raise ValueError("need at least one copy")
    f = s.field
    m = s.dim
    if autos is None:
        autos = [Matrix.identity(f, m)] * n
    if len(autos) != n:
        raise PreconditionError(f"expected {n} automorphisms, got {len(autos)}")
    if not is_lie(s):
        raise PreconditionError("the building block must be a Lie algebra")
    if is_simple(s).is_simple is not True:
        raise PreconditionError("the building block must be simple")
    for k, a in enumerate(autos):
        if a.shape != (m, m) or not a.is_invertible() or not is_homomorphism(a, s, s):
            raise PreconditionError(f"autos[{k}] is not an automorphism")
    d = n * m
    sigma_entries = [[f.zero] * d for _ in range(d)]
    for i, a in enumerate(autos):
        j = (i + 1) % n
        for r in range(m):
            for c in range(m):
                sigma_entries[j * m + r][i * m + c] = a[r, c]
    sigma = Matrix.from_rows(f, sigma_entries, d)
    brackets = {}
    for (a, b), v in s.brackets:
        for i in range(n):
            # sigma of the copy-i bracket lands in copy i+1
            img = autos[i].apply(v)
            j = (i + 1) % n
            vec = [f.zero] * d
            vec[j * m:(j + 1) * m] = img
            brackets[(i * m + a, i * m + b)] = tuple(vec)
    A = AnticommAlgebra.from_brackets(f, d, brackets)
    return ZooEntry("regular", (n,), A, sigma, frozenset({"hom-simple", "regular", "multiplicative"}))


def component(entry_or_dim, field: FieldSpec, m: int, i: int) -> Subspace:
    """The i-th copy inside a regular construction with blocks of size m."""
    d = entry_or_dim.dim if isinstance(entry_or_dim, ZooEntry) else entry_or_dim
    return Subspace.span(field, d, [_unit(field, d, i * m + r) for r in range(m)])


def abelian2_with_irreducible_sigma(q: int) -> ZooEntry:
    """a_2 over GF(q) with sigma = [[0, a0], [1, a1]] whose char poly x^2 - a1 x - a0 has no root."""
    f = FieldSpec.gf(q)
    for a1 in range(q):
        for a0 in range(q):
            # x^2 - a1 x - a0, low-first coefficients (-a0, -a1)
            if not Poly(f, (f(-a0), f(-a1), 1)).roots():
                sigma = Matrix.from_rows(f, [[0, a0], [1, a1]])
                return ZooEntry("abelian2_irreducible", (q,), AnticommAlgebra.abelian(f, 2), sigma,
                                frozenset({"abelian", "only-trivial-hom-ideals"}))
    raise AssertionError(f"no irreducible monic quadratic over GF({q})")


def singular_hs4(field: FieldSpec) -> ZooEntry:
    """[e0,e1]=e2, [e0,e2]=e3, [e0,e3]=e0, [e1,e3]=e1: simple, every twisting map singular."""
    A = _alg(field, 4, {(0, 1): 2, (0, 2): 3, (0, 3): 0, (1, 3): 1})
    return ZooEntry("a1", (), A, expected=frozenset({"simple", "ss", "ss*", "not-ps"}))


def zero_hs4(field: FieldSpec) -> ZooEntry:
    """singular_hs4 plus [e1,e2] = e0: simple with HS = 0."""
    A = _alg(field, 4, {(0, 1): 2, (0, 2): 3, (0, 3): 0, (1, 3): 1, (1, 2): 0})
    return ZooEntry("a2", (), A, expected=frozenset({"simple", "ss", "not-ss*"}))


def so3_extension(field: FieldSpec, reading: str = "rank-one") -> ZooEntry:
    """F d x| so3 with ad d = E_00 ("rank-one") or ad d = identity ("identity")."""
    base = so3(field).algebra
    if reading == "rank-one":
        D = Matrix.unit(field, 3, 0, 0)
    elif reading == "identity":
        D = Matrix.identity(field, 3)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    A = extend_by_element(base, D)
    marked = Subspace.span(field, 4, [_unit(field, 4, k) for k in range(3)])
    tags = {"unique-proper-ideal"} if reading == "rank-one" else set()
    return ZooEntry(f"so3_ext_{reading}", (), A, expected=frozenset(tags | {"not-simple"}), marked_ideal=marked)


def so3_automorphism(field: FieldSpec, rng: random.Random) -> Matrix:
    """Random element of SO(3) by the Cayley transform (I - K)^-1 (I + K), K skew."""
    if field.p == 2:
        # char 2: only permutation matrices are guaranteed; pick a cyclic power
        k = rng.randrange(3)
        return _map_from_images(field, 3, {i: (i + k) % 3 for i in range(3)})
    I = Matrix.identity(field, 3)
    while True:
        a, b, c = (random_element(field, rng, bound=4) for _ in range(3))
        K = Matrix.from_rows(field, [[0, field.neg(c), b], [c, 0, field.neg(a)], [field.neg(b), a, 0]])
        M = I - K
        if M.is_invertible():
            return M.inverse() @ (I + K)


def swap_automorphism(field: FieldSpec, m: int) -> Matrix:
    """Exchange the two copies of a 2m-dimensional direct sum."""
    return _map_from_images(field, 2 * m, {k: (k + m) % (2 * m) for k in range(2 * m)})


_BUILDERS: dict[str, tuple[int, Callable]] = {
    "abelian": (1, lambda f, n: abelian(n, f)),
    "aff": (0, aff),
    "so3": (0, so3),
    "sl2": (0, sl2),
    "heisenberg": (1, lambda f, n: heisenberg(n, f)),
    "s_family": (1, lambda f, n: s_family(n, f)),
    "a_ext": (1, lambda f, n: a_ext(n, f)),
    "r_family": (1, lambda f, n: r_family(n, f)),
    "aff_plus_abelian": (1, lambda f, n: aff_plus_abelian(n, f)),
    "regular": (1, lambda f, n: regular_construction(so3(f).algebra, n)),
    "abelian2_irreducible": (0, lambda f: abelian2_with_irreducible_sigma(f.require_finite("abelian2_irreducible"))),
    "a1": (0, singular_hs4),
    "a2": (0, zero_hs4),
    "so3_ext": (0, lambda f: so3_extension(f, "rank-one")),
    "so3_ext_identity": (0, lambda f: so3_extension(f, "identity")),
}

NAMES = tuple(_BUILDERS)


def build(name: str, params: Sequence[int], field: FieldSpec) -> ZooEntry:
    """Look up a family by name; ``params`` must match its arity."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown zoo entry {name!r}; known: {', '.join(NAMES)}")
    arity, fn = _BUILDERS[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(field, *params)
