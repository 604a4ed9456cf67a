"""Deciding whether F^n has a proper nonzero subspace stable under a set of
matrices.

Ideals of an algebra are the subspaces stable under every ``ad e_i``;
Hom-ideals additionally under the twisting map.  Both simplicity checks
reduce to the same question about the associative envelope generated by
those matrices, answered here by one of two exact procedures:

* ``lines``: over GF(p), spin every line.  Any proper nonzero stable
  subspace contains a line whose spin is proper, so this is complete.
* ``norton``: pick an envelope element ``t`` with a nonzero kernel.  If every
  kernel vector spins to the whole space and some vector of ``ker t^T``
  spins to the whole dual space, no proper stable subspace exists (Norton's
  irreducibility criterion).  A proper spin on either side is a witness.
  Over GF(p) every line of ``ker t`` is spun; over Q only elements with a
  one-dimensional kernel give a verdict, so the search may end inconclusive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .config import DEFAULT_ENVELOPE_TRIES, DEFAULT_SEED, enumeration_budget
from .exactmath import FieldSpec, Matrix, Subspace, charpoly, count_lines, kernel, spin
from .exactmath.subspace import line_representatives
from .exactmath.sampling import random_vector

SIMPLE = "simple"
NOT_SIMPLE = "not-simple"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IdealReport:
    """Outcome of a (Hom-)simplicity check.

    ``is_simple`` is ``None`` when the search over Q ran out of budget.
    ``witness`` is a proper nonzero (Hom-)ideal whenever one was found; it can
    only be missing for a non-simple algebra when the algebra is abelian and
    has no proper nonzero stable subspace at all.
    """

    is_simple: bool | None
    witness: Subspace | None = None
    proper_nontrivial_ideals_seen: frozenset = dc_field(default_factory=frozenset)
    method: str = ""
    reason: str = ""

    @property
    def verdict(self) -> str:
        if self.is_simple is None:
            return INCONCLUSIVE
        return SIMPLE if self.is_simple else NOT_SIMPLE

    @property
    def inconclusive(self) -> bool:
        return self.is_simple is None


@dataclass(frozen=True)
class _Search:
    irreducible: bool | None
    witness: Subspace | None
    seen: frozenset
    method: str


def _exhaustive(field: FieldSpec, n: int, gens: Sequence[Matrix]) -> _Search:
    seen = set()
    witness = None
    for v in line_representatives(field, n):
        w = spin(field, n, gens, [v])
        if not w.is_full():
            if witness is None:
                witness = w
            seen.add(w)
    return _Search(witness is None, witness, frozenset(seen), "lines")


def _envelope_candidates(field: FieldSpec, n: int, gens: Sequence[Matrix], rng: random.Random, tries: int):
    """Generators first, then random envelope elements without identity term."""
    yield from gens
    if not gens:
        return
    for _ in range(tries):
        coeffs = random_vector(field, len(gens), rng, bound=3)
        t = Matrix.zeros(field, n)
        for c, g in zip(coeffs, gens):
            if c:
                t = t + g.scale(c)
        if rng.random() < 0.5:
            t = t + rng.choice(gens) @ rng.choice(gens)
        yield t
        # shift by an eigenvalue in the base field to force a kernel
        cp = charpoly(t)
        for lam in (cp.roots() if field.p else cp.rational_roots())[:2]:
            yield t - Matrix.identity(field, n).scale(lam)


def _subspace_lines(field: FieldSpec, sub: Subspace):
    basis = sub.vectors()
    n = sub.ambient_dim
    p = field.p
    for coeffs in line_representatives(field, len(basis)):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                for i, x in enumerate(b):
                    v[i] = (v[i] + c * x) % p
        yield tuple(v)


def _norton(field: FieldSpec, n: int, gens: Sequence[Matrix], rng: random.Random,
            tries: int, budget: int) -> _Search:
    gens_t = [g.transpose() for g in gens]
    best = None
    for t in _envelope_candidates(field, n, gens, rng, tries):
        ker = kernel(t)
        k = ker.dim
        if k == 0:
            continue
        if field.p is None:
            # any proper spin is a definite witness, whatever the nullity
            for v in ker.vectors():
                w = spin(field, n, gens, [v])
                if not w.is_full():
                    return _Search(False, w, frozenset([w]), "norton")
            if k == 1:
                best = (t, ker)
                break
        else:
            if count_lines(field.p, k) > budget:
                continue
            if best is None or k < best[1].dim:
                best = (t, ker)
            if k == 1:
                break
    if best is None:
        return _Search(None, None, frozenset(), "norton")
    t, ker = best
    if field.p is not None:
        for v in _subspace_lines(field, ker):
            w = spin(field, n, gens, [v])
            if not w.is_full():
                return _Search(False, w, frozenset([w]), "norton")
    dual_ker = kernel(t.transpose())
    w = dual_ker.vectors()[0]
    dual = spin(field, n, gens_t, [w])
    if not dual.is_full():
        witness = dual.annihilator()
        return _Search(False, witness, frozenset([witness]), "norton")
    return _Search(True, None, frozenset(), "norton")


def search_stable_subspace(field: FieldSpec, n: int, gens: Sequence[Matrix], *,
                           budget: int | None = None, seed: int = DEFAULT_SEED,
                           tries: int = DEFAULT_ENVELOPE_TRIES, method: str = "auto") -> _Search:
    """Look for a proper nonzero subspace of F^n stable under ``gens``."""
    budget = enumeration_budget(budget)
    if n <= 1:
        return _Search(True, None, frozenset(), "trivial")
    if not any(not g.is_zero() for g in gens):
        w = Subspace.span(field, n, [tuple(1 if i == 0 else 0 for i in range(n))])
        return _Search(False, w, frozenset([w]), "trivial")
    rng = random.Random(seed)
    if method == "auto":
        method = "lines" if field.p and count_lines(field.p, n) <= budget else "norton"
    if method == "lines":
        field.require_finite("exhaustive line search")
        return _exhaustive(field, n, gens)
    if field.p is None:
        # cheap sieve: spin the basis lines and a few random lines
        seeds = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
        seeds += [random_vector(field, n, rng) for _ in range(8)]
        for s in seeds:
            if any(s):
                w = spin(field, n, gens, [s])
                if not w.is_full():
                    return _Search(False, w, frozenset([w]), "norton")
    return _norton(field, n, gens, rng, tries, budget)


def ideal_report(search: _Search, abelian: bool) -> IdealReport:
    if abelian:
        return IdealReport(False, search.witness, search.seen, search.method, "abelian")
    if search.irreducible is None:
        return IdealReport(None, None, search.seen, search.method,
                           "no envelope element with a one-dimensional kernel within budget")
    if search.irreducible:
        return IdealReport(True, None, frozenset(), search.method)
    return IdealReport(False, search.witness, search.seen, search.method, "proper ideal found")
