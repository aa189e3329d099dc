"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .algebras import Kdgm, NDga, tensor_dga, verify_kdgm, verify_ndga
from .complexes import NComplex, cohomology, nilpotency_order, nilpotency_violations, tensor_complex
from .fixtures import FixtureError
from .freealg import cs_functional, format_terms, format_word, variational_check, word_key
from .gallery import GALLERY
from .graded import StructuralError
from .maurer_cartan import PreconditionError, c_coeff, mc_residual
from .multiindex import enumerate_EN, format_multiindex, parse_multiindex, weight
from .paths import GRAPH_L, c_oracle, kernel_row
from .scalars import format_scalar

OK, MATH_FAIL, INPUT_ERROR, BREACH = 0, 1, 2, 3
MAX_K = 6


class UsageError(Exception):
    pass


def _emit(out, text_lines: list[str], payload, fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _load_data(path: str) -> dict:
    return fixtures.read_json(path)


# verify -----------------------------------------------------------------

def _describe(N: int, order: int | None, what: str) -> str:
    if order == N:
        return f"proper {N}-{what}"
    return f"{N}-{what} (nilpotency order {order})"


def _verify_complex_data(data: dict, where: str = "") -> tuple[list[str], NComplex | None]:
    try:
        space, d, N = fixtures.parse_complex_parts(data, where)
    except StructuralError as exc:
        return [f"{where}{exc}"], None
    bad = nilpotency_violations(d, N)
    if bad:
        return [f"{where}{b}" for b in bad], None
    return [], NComplex(space, d, N)


def verify_report(data: dict) -> dict:
    kind = fixtures.fixture_kind(data)
    if kind not in ("complex", "algebra", "module"):
        raise FixtureError(f"verify expects a complex, algebra or module, not a {kind}")
    if kind == "module":
        if not isinstance(data.get("algebra"), dict) or not isinstance(data.get("module"), dict):
            raise FixtureError("module fixture needs 'algebra' and 'module' objects")
        bad_a, A = _verify_complex_data(data["algebra"], "algebra.")
        bad_m, Mc = _verify_complex_data(data["module"], "module.")
        violations = bad_a + bad_m
        if not violations:
            mod = fixtures.module_from_json(data)
            violations = [f"algebra: {v}" for v in verify_ndga(mod.algebra)] + verify_kdgm(mod)
        N, order = (Mc.N, nilpotency_order(Mc.d, Mc.N)) if Mc else (None, None)
        what = "dgm"
    else:
        violations, C = _verify_complex_data(data)
        if not violations and kind == "algebra":
            violations = verify_ndga(fixtures.algebra_from_json(data))
        N, order = (C.N, C.order) if C else (None, None)
        what = "dga" if kind == "algebra" else "complex"
    valid = not violations
    summary = _describe(N, order, what) if valid else f"invalid {what}"
    return {"kind": kind, "valid": valid, "N": N, "order": order,
            "summary": summary, "violations": violations}


def cmd_verify(args, out) -> int:
    report = verify_report(_load_data(args.fixture))
    lines = [report["summary"]] + [f"FAIL {v}" for v in report["violations"]]
    _emit(out, lines, report, args.format)
    return OK if report["valid"] else MATH_FAIL


# cohomology -------------------------------------------------------------

def cmd_cohomology(args, out) -> int:
    if not args.all and (args.p is None or args.i is None):
        raise UsageError("give --p and --i, or --all")
    if args.p is not None and args.p < 1:
        raise UsageError("p must be >= 1")
    C = _as_complex(fixtures.load(args.fixture))
    if args.p is not None and args.p >= C.N:
        raise UsageError(f"p must be < N = {C.N}")
    if args.all:
        ps = [args.p] if args.p is not None else list(range(1, C.N))
        degrees = C.space.degrees()
        if args.i is not None:
            degrees = [args.i]
        rows = [(p, i, cohomology(C, p, i)[0]) for p in ps for i in degrees]
    else:
        rows = [(args.p, args.i, cohomology(C, args.p, args.i)[0])]
    _emit(out, [f"({p}, {i}, {d})" for p, i, d in rows],
          {"N": C.N, "rows": [{"p": p, "i": i, "dim": d} for p, i, d in rows]}, args.format)
    return OK


def _as_complex(obj) -> NComplex:
    if isinstance(obj, NComplex):
        return obj
    if isinstance(obj, NDga):
        return obj.complex
    if isinstance(obj, Kdgm):
        return obj.module_complex
    raise FixtureError("expected a complex, algebra or module fixture")


# mc ---------------------------------------------------------------------

def _filtered(N: int, M: int):
    return [s for s in enumerate_EN(N) if all(x < M for x in s)]


def cmd_mc(args, out) -> int:
    N, M = args.N, args.M if args.M is not None else args.N
    if M < 1 or N < M:
        raise UsageError(f"need N >= M >= 1, got N={N}, M={M}")
    if args.residual:
        return _mc_residual(args, out, N, M)
    rows, code = [], OK
    for s in _filtered(N, M):
        c = c_coeff(s, N)
        row = {"s": format_multiindex(s), "c": format_scalar(c), "dpow": N - weight(s)}
        if args.oracle:
            o = c_oracle(s, N)
            row["oracle"] = format_scalar(o)
            row["status"] = "MATCH" if o == c else "MISMATCH"
            if o != c:
                code = BREACH
        elif c == 0:
            continue
        rows.append(row)
    lines = []
    for r in rows:
        line = f"s={r['s']}  c={r['c']}  dpow={r['dpow']}"
        if args.oracle:
            line += f"  oracle={r['oracle']}  {r['status']}"
        lines.append(line)
    _emit(out, lines, {"N": N, "M": M, "terms": rows}, args.format)
    return code


def _mc_residual(args, out, N: int, M: int) -> int:
    fixture_path, e_path = args.residual
    base = fixtures.load(fixture_path)
    C = _as_complex(base)
    e = fixtures.map_from_json(C.space, _load_data(e_path), "e")
    if e.degree != 1:
        raise FixtureError(f"e: degree must be 1, got {e.degree}")
    try:
        R = mc_residual(C.d, e, M, N)
    except PreconditionError as exc:
        _emit(out, [f"precondition failed: {exc}"], {"error": str(exc)}, args.format)
        return MATH_FAIL
    entries = [abs(c) for img in R.images().values() for c in img.values()]
    top = max(entries, default=0)
    status = "zero" if top == 0 else "nonzero"
    _emit(out, [f"residual max |entry| = {format_scalar(top)}", status],
          {"N": N, "M": M, "max_abs_entry": format_scalar(top), "zero": top == 0,
           "residual": fixtures.to_json(R)["map"]}, args.format)
    return OK if top == 0 else MATH_FAIL


# cs ---------------------------------------------------------------------

def cmd_cs(args, out) -> int:
    if not 1 <= args.K <= MAX_K:
        raise UsageError(f"K must be in 1..{MAX_K}")
    terms = cs_functional(args.K)
    listing = format_terms(terms)
    payload = {"K": args.K, "terms": [{"word": format_word(w), "coeff": format_scalar(c)}
                                      for w, c in _sorted_terms(terms)]}
    lines = [listing]
    code = OK
    if args.variational:
        ok = variational_check(args.K)
        payload["variational"] = ok
        lines.append(f"variational: {'true' if ok else 'false'}")
        code = OK if ok else MATH_FAIL
    _emit(out, lines, payload, args.format)
    return code


def _sorted_terms(terms):
    return sorted(terms.items(), key=lambda kv: word_key(kv[0]))


# kernel -----------------------------------------------------------------

def cmd_kernel(args, out) -> int:
    if args.n < 0:
        raise UsageError("n must be >= 0")
    if (args.builtin is None) == (args.graph is None):
        raise UsageError("give exactly one of --builtin L or --graph FILE")
    if args.builtin is not None:
        try:
            x = parse_multiindex(args.x)
            ys = [parse_multiindex(y) for y in args.y]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        G, fmt_v = GRAPH_L, format_multiindex
    else:
        G = fixtures.load(args.graph)
        if not hasattr(G, "neighbors"):
            raise FixtureError("--graph expects an edge-list fixture")
        x, ys = args.x, list(args.y)
        for v in (x, *ys):
            if not G.has_vertex(v):
                raise UsageError(f"unknown vertex {v!r}")
        fmt_v = str
    row = kernel_row(G, args.n, x)
    if not ys:
        ys = sorted(row, key=_vertex_key)
    rows = [(y, row.get(y, 0)) for y in ys]
    _emit(out, [f"{fmt_v(y)} <- {fmt_v(x)} : {format_scalar(c)}" for y, c in rows],
          {"n": args.n, "x": fmt_v(x),
           "values": [{"y": fmt_v(y), "value": format_scalar(c)} for y, c in rows]},
          args.format)
    return OK


def _vertex_key(v):
    return (0, len(v), v) if isinstance(v, tuple) else (1, 0, str(v))


# tensor / export --------------------------------------------------------

def cmd_tensor(args, out) -> int:
    A, B = fixtures.load(args.left), fixtures.load(args.right)
    if isinstance(A, NDga) and isinstance(B, NDga):
        T = tensor_dga(A, B)
    else:
        T = tensor_complex(_as_complex(A), _as_complex(B))
    _write_json(out, fixtures.to_json(T), args.output)
    return OK


def cmd_export(args, out) -> int:
    if args.name not in GALLERY:
        raise UsageError(f"unknown gallery fixture {args.name!r}; choose from {', '.join(GALLERY)}")
    _write_json(out, fixtures.to_json(GALLERY[args.name]()), args.output)
    return OK


def _write_json(out, payload, path) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


# parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="ndga", description="Exact computations with N-complexes and N-dgas.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[fmt], help="check the axioms of a fixture")
    p.add_argument("fixture")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cohomology", parents=[fmt], help="generalized cohomology dimensions")
    p.add_argument("fixture")
    p.add_argument("--p", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("mc", parents=[fmt], help="expansion coefficients and residuals")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--coeffs", action="store_true")
    mode.add_argument("--oracle", action="store_true")
    mode.add_argument("--residual", nargs=2, metavar=("FIXTURE", "EFILE"))
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("cs", parents=[fmt], help="Chern-Simons functional cs_{2,2K}")
    p.add_argument("K", type=int)
    p.add_argument("--variational", action="store_true")
    p.set_defaults(func=cmd_cs)

    p = sub.add_parser("kernel", parents=[fmt], help="path-sum kernel values")
    p.add_argument("--builtin", choices=("L",))
    p.add_argument("--graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", action="append", default=[])
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("tensor", help="tensor two fixtures")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("export-gallery", help="write a built-in fixture as JSON")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, FixtureError) as exc:
        err.write(f"error: {exc}\n")
        return INPUT_ERROR
    except StructuralError as exc:
        err.write(f"structural error: {exc}\n")
        return MATH_FAIL
    except AssertionError as exc:
        err.write(f"internal invariant breach: {exc}\n")
        return BREACH
