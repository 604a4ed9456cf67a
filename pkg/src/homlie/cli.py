"""Command-line interface: ``homlie VERB [options]``.

Exit codes: 0 success, 1 a check failed (or a precondition/budget was hit),
2 usage or input-format error.  Reports are JSON with sorted keys on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import algebra as alg
from . import lowdim, rootsys, suite, zoo
from .config import DEFAULT_SEED
from .document import dumps, field_to_json, matrix_to_json, parse_algebra, to_document
from .errors import BudgetExceededError, DocumentError, HomLieError, PreconditionError, UnsupportedFieldError
from .exactmath import FieldSpec, Matrix, Subspace
from .twisting import (
    HomLie,
    hs_space,
    inside_twist,
    is_hom_simple,
    is_multiplicative,
    is_regular,
    is_twisting_map,
    outside_twist,
    yau_twist,
)


class UsageError(Exception):
    pass


def _subspace_json(S: Subspace | None):
    if S is None:
        return None
    return [[S.field.format_element(x) for x in v] for v in S.vectors()]


def _report(verb: str, results: dict, field: FieldSpec | None = None, dim: int | None = None,
            discrepancies: list | None = None) -> dict:
    return {
        "verb": verb,
        "field": field_to_json(field) if field is not None else None,
        "dim": dim,
        "results": results,
        "discrepancies": discrepancies or [],
    }


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


def _ideal_results(rep) -> dict:
    out = {"verdict": rep.verdict, "method": rep.method, "witness": _subspace_json(rep.witness)}
    if rep.inconclusive:
        out["inconclusive"] = True
    if rep.reason:
        out["reason"] = rep.reason
    return out


def cmd_validate(args) -> tuple[dict, int]:
    A, sigma = _load(args.input)
    res: dict[str, Any] = {"valid": True, "lie": alg.is_lie(A)}
    code = 0
    if sigma is not None:
        ok = is_twisting_map(A, sigma)
        res["sigma_twisting"] = ok
        if not ok:
            res["valid"] = False
            code = 1
    return _report("validate", res, A.field, A.dim), code


def cmd_info(args) -> tuple[dict, int]:
    A, sigma = _load(args.input)
    res: dict[str, Any] = {
        "lie": alg.is_lie(A),
        "abelian": alg.is_abelian(A),
        "solvable": alg.is_solvable(A),
        "nilpotent": alg.is_nilpotent(A),
        "center": _subspace_json(alg.center(A)),
        "derived_series_dims": [S.dim for S in alg.derived_series(A)],
        "lower_central_series_dims": [S.dim for S in alg.lower_central_series(A)],
    }
    if sigma is not None:
        res["sigma_twisting"] = is_twisting_map(A, sigma)
        res["sigma_multiplicative"] = is_multiplicative(A, sigma)
        res["sigma_regular"] = is_regular(A, sigma)
    return _report("info", res, A.field, A.dim), 0


def cmd_hs(args) -> tuple[dict, int]:
    A, _ = _load(args.input)
    hs = hs_space(A)
    res = {"hs_dim": hs.dim, "basis": [matrix_to_json(m) for m in hs.basis]}
    return _report("hs", res, A.field, A.dim), 0


def cmd_simple(args) -> tuple[dict, int]:
    A, _ = _load(args.input)
    rep = alg.is_simple(A, seed=args.seed)
    return _report("simple", _ideal_results(rep), A.field, A.dim), 0


def cmd_hom_simple(args) -> tuple[dict, int]:
    A, sigma = _load(args.input)
    if sigma is None:
        raise UsageError("hom-simple needs a document with \"sigma\"")
    HomLie(A, sigma)
    rep = is_hom_simple(A, sigma, seed=args.seed)
    return _report("hom-simple", _ideal_results(rep), A.field, A.dim), 0


def _load_theta(path: str, A) -> Matrix:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc.msg}") from None
    rows = data.get("theta") if isinstance(data, dict) else data
    if not isinstance(rows, list) or len(rows) != A.dim:
        raise DocumentError("theta", f"expected {A.dim} rows")
    parsed = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != A.dim:
            raise DocumentError(f"theta[{r}]", f"expected {A.dim} entries")
        for c, x in enumerate(row):
            if not isinstance(x, str):
                raise DocumentError(f"theta[{r}][{c}]", "scalar must be a string")
        try:
            parsed.append([A.field.parse_element(x) for x in row])
        except ValueError as exc:
            raise DocumentError(f"theta[{r}]", str(exc)) from None
    return Matrix.from_rows(A.field, parsed, A.dim)


def cmd_twist(args) -> tuple[dict, int]:
    A, sigma = _load(args.input)
    theta = _load_theta(args.theta, A)
    if args.mode == "outside":
        doc = to_document(outside_twist(A, theta), sigma)
    elif args.mode == "inside":
        doc = to_document(inside_twist(A, theta), sigma)
    else:
        if sigma is None:
            raise UsageError("yau mode needs a document with \"sigma\"")
        T = yau_twist(HomLie(A, sigma), theta)
        doc = to_document(T.algebra, T.sigma)
    return _report("twist", {"mode": args.mode, "document": doc}, A.field, A.dim), 0


def _parse_params(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--params must be comma-separated integers, got {text!r}") from None


def _parse_field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_zoo(args) -> tuple[dict, int]:
    field = _parse_field(args.field)
    try:
        entry = zoo.build(args.name, _parse_params(args.params), field)
    except (KeyError, ValueError) as exc:
        if isinstance(exc, HomLieError):
            raise
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    return to_document(entry.algebra, entry.sigma), 0


def cmd_trace_check(args) -> tuple[dict, int]:
    try:
        rows = rootsys.verify_traces(args.type, args.rank, None if args.i is None else [args.i])
        cartan = rootsys.cartan_matrix(args.type, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = [{"i": r.i, "closed_form": str(r.closed), "enumerated": str(r.enumerated), "verdict": r.verdict}
             for r in rows]
    disc = [{"i": r.i, "difference": str(r.difference)} for r in rows if not r.matches]
    res = {"type": args.type.upper(), "rank": args.rank, "numbering": "Bourbaki", "cartan": cartan, "table": table}
    return _report("trace-check", res, discrepancies=disc), (1 if disc else 0)


def cmd_aff_classes(args) -> tuple[dict, int]:
    try:
        classes = lowdim.aff_classes(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    f = FieldSpec.gf(args.q)
    reps = []
    for orbit in classes:
        s = orbit[0]
        reps.append({
            "representative": matrix_to_json(s.sigma),
            "trace": f.format_element(s.trace),
            "det": f.format_element(s.det),
            "size": len(orbit),
        })
    reps.sort(key=lambda r: (int(r["trace"]), int(r["det"])))
    res = {"q": args.q, "structures": sum(len(o) for o in classes), "classes": len(classes), "representatives": reps}
    return _report("aff-classes", res, f, 2), (0 if len(classes) >= args.q else 1)


def cmd_dim3_check(args) -> tuple[dict, int]:
    field = _parse_field(args.field)
    results = lowdim.dim3_check(field, args.samples, args.seed)
    failures = [k for k, r in enumerate(results) if not r.ok]
    res = {
        "samples": len(results),
        "bijective": sum(r.bijective for r in results),
        "twisting": sum(r.twisting for r in results),
        "recovers_so3": sum(r.recovers_so3 for r in results),
        "multiplicative": sum(r.multiplicative for r in results),
        "failures": failures,
    }
    return _report("dim3-check", res, field, 3), (1 if failures else 0)


def cmd_paper_suite(args) -> tuple[dict, int]:
    results = suite.run_suite(args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    crit = [r.to_json() for r in results]
    disc = [dict(d, criterion=r.number) for r in results for d in r.discrepancies]
    ok = all(r.passed for r in results)
    return _report("paper-suite", {"seed": args.seed, "criteria": crit, "all_passed": ok}, discrepancies=disc), \
        (0 if ok else 1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homlie", description="Exact computations with Hom-Lie algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    def with_input(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--in", dest="input", required=True, help="algebra JSON document ('-' for stdin)")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.set_defaults(func=fn)
        return sp

    with_input("validate", cmd_validate, "parse and validate a document")
    with_input("info", cmd_info, "series, center and sigma properties")
    with_input("hs", cmd_hs, "the space of twisting maps")
    with_input("simple", cmd_simple, "simplicity of the algebra")
    with_input("hom-simple", cmd_hom_simple, "Hom-simplicity with the document's sigma")
    tw = with_input("twist", cmd_twist, "outside, inside or Yau twist")
    tw.add_argument("--theta", required=True, help="JSON matrix (rows of scalar strings)")
    tw.add_argument("--mode", required=True, choices=("outside", "inside", "yau"))

    z = sub.add_parser("zoo", help="emit a named algebra")
    z.add_argument("name", choices=zoo.NAMES)
    z.add_argument("--params", default="")
    z.add_argument("--field", default="Q")
    z.set_defaults(func=cmd_zoo)

    t = sub.add_parser("trace-check", help="closed-form traces vs root enumeration")
    t.add_argument("--type", required=True)
    t.add_argument("--rank", type=int, required=True)
    t.add_argument("--i", type=int)
    t.set_defaults(func=cmd_trace_check)

    a = sub.add_parser("aff-classes", help="isomorphism classes of simple structures on aff over GF(q)")
    a.add_argument("--q", type=int, required=True)
    a.set_defaults(func=cmd_aff_classes)

    d = sub.add_parser("dim3-check", help="random outside twists of so3")
    d.add_argument("--field", required=True)
    d.add_argument("--samples", type=int, default=50)
    d.add_argument("--seed", type=int, default=DEFAULT_SEED)
    d.set_defaults(func=cmd_dim3_check)

    s = sub.add_parser("paper-suite", help="run every acceptance check")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_paper_suite)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, code = args.func(args)
    except (UsageError, DocumentError) as exc:
        print(f"homlie {args.verb}: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, BudgetExceededError, UnsupportedFieldError) as exc:
        print(dumps(_report(args.verb, {"error": str(exc)})))
        return 1
    print(dumps(report))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
