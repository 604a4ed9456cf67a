"""JSON documents for algebras and twisting maps.

Schema::

    {"field": "Q" | {"gf": p},
     "dim": n,
     "brackets": [{"i": i, "j": j, "v": ["a/b", ...]}, ...],   # 0 <= i < j < n
     "sigma": [["a", ...], ...]}                                # optional, row-major

Omitted pairs bracket to zero.  Serialization is canonical: brackets sorted by
(i, j), zero brackets dropped, keys sorted, scalars in reduced form.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import AnticommAlgebra
from .errors import DocumentError
from .exactmath import FieldSpec, Matrix, is_prime


def _parse_field(raw: Any) -> FieldSpec:
    if raw == "Q":
        return FieldSpec.rationals()
    if isinstance(raw, dict) and set(raw) == {"gf"}:
        p = raw["gf"]
        if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
            raise DocumentError("field.gf", f"expected a prime integer, got {p!r}")
        return FieldSpec.gf(p)
    raise DocumentError("field", f'expected "Q" or {{"gf": p}}, got {raw!r}')


def _scalar(field: FieldSpec, raw: Any, path: str):
    if not isinstance(raw, str):
        raise DocumentError(path, f"scalar must be a string, got {raw!r}")
    try:
        return field.parse_element(raw)
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _int(raw: Any, path: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise DocumentError(path, f"expected an integer, got {raw!r}")
    return raw


def parse_document(data: dict) -> tuple[AnticommAlgebra, Matrix | None]:
    """Validate a decoded document; returns the algebra and sigma (or None)."""
    if not isinstance(data, dict):
        raise DocumentError("$", "document must be a JSON object")
    unknown = set(data) - {"field", "dim", "brackets", "sigma"}
    if unknown:
        raise DocumentError("$", f"unknown keys {sorted(unknown)}")
    for key in ("field", "dim"):
        if key not in data:
            raise DocumentError(key, "missing")
    field = _parse_field(data["field"])
    n = _int(data["dim"], "dim")
    if n < 0:
        raise DocumentError("dim", "must be nonnegative")
    brackets = data.get("brackets", [])
    if not isinstance(brackets, list):
        raise DocumentError("brackets", "must be a list")
    entries: dict[tuple[int, int], tuple] = {}
    for k, b in enumerate(brackets):
        path = f"brackets[{k}]"
        if not isinstance(b, dict) or set(b) != {"i", "j", "v"}:
            raise DocumentError(path, 'expected an object with keys "i", "j", "v"')
        i, j = _int(b["i"], f"{path}.i"), _int(b["j"], f"{path}.j")
        if not (0 <= i < n and 0 <= j < n):
            raise DocumentError(path, f"index pair ({i}, {j}) out of range for dim {n}")
        if i >= j:
            raise DocumentError(path, f"bracket ({i}, {j}) must have i < j")
        if (i, j) in entries:
            raise DocumentError(path, f"duplicate bracket ({i}, {j})")
        v = b["v"]
        if not isinstance(v, list) or len(v) != n:
            got = len(v) if isinstance(v, list) else type(v).__name__
            raise DocumentError(f"{path}.v", f"bracket ({i}, {j}) needs {n} scalars, got {got}")
        entries[(i, j)] = tuple(_scalar(field, x, f"{path}.v[{r}]") for r, x in enumerate(v))
    algebra = AnticommAlgebra.from_brackets(field, n, entries)
    sigma = None
    if "sigma" in data:
        rows = data["sigma"]
        if not isinstance(rows, list) or len(rows) != n:
            raise DocumentError("sigma", f"expected {n} rows")
        parsed = []
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise DocumentError(f"sigma[{r}]", f"expected {n} entries")
            parsed.append([_scalar(field, x, f"sigma[{r}][{c}]") for c, x in enumerate(row)])
        sigma = Matrix.from_rows(field, parsed, n)
    return algebra, sigma


def parse_algebra(text: str) -> tuple[AnticommAlgebra, Matrix | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    return parse_document(data)


def field_to_json(field: FieldSpec):
    return "Q" if field.p is None else {"gf": field.p}


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return m.to_strings()


def to_document(algebra: AnticommAlgebra, sigma: Matrix | None = None) -> dict:
    f = algebra.field
    doc: dict[str, Any] = {
        "field": field_to_json(f),
        "dim": algebra.dim,
        "brackets": [{"i": i, "j": j, "v": [f.format_element(x) for x in v]} for (i, j), v in algebra.brackets],
    }
    if sigma is not None:
        doc["sigma"] = matrix_to_json(sigma)
    return doc


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2)


def serialize(algebra: AnticommAlgebra, sigma: Matrix | None = None) -> str:
    return dumps(to_document(algebra, sigma))
