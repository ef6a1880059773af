"""Command-line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict (not
panmagic, infeasible, certificate found), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from pathlib import Path

from . import formats
from .core import Panmagic, SquareMatrix, check_panmagic, check_panstochastic, perm_matrix
from .decomp import Feasible, decompose5, membership, non_decomp_certificate
from .formats import FormatError
from .gallery import FIXTURE_NAMES, counterexample, fixture
from .perms import AffineSpec, affine_perm, enumerate_affine_panmagic, enumerate_panmagic, nonaffine_piecewise
from .products import kronecker, wreath_matrices

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _read_source(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(), path
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load_matrix(path: str) -> SquareMatrix:
    text, source = _read_source(path)
    return formats.parse_matrix(text, source)


def _emit_matrix(A: SquareMatrix, fmt: str | None) -> str:
    return formats.format_matrix_json(A) if fmt == "json" else formats.format_matrix_text(A)


def _emit_perm(pi, fmt: str | None, as_matrix: bool) -> str:
    if as_matrix:
        return _emit_matrix(perm_matrix(pi), fmt)
    if fmt == "json":
        return _dump_json({"n": pi.n, "images": list(pi.images)})
    return formats.format_permutation_text(pi)


def cmd_check(args, out) -> int:
    A = _load_matrix(args.input)
    report = check_panmagic(A)
    stoch = check_panstochastic(A)
    if args.format == "json":
        obj = {"panmagic": bool(report), "panstochastic": bool(stoch)}
        if isinstance(report, Panmagic):
            obj["mu"] = str(report.mu)
        else:
            obj["violation"] = {
                "kind": report.kind,
                "index": report.index,
                "sum": str(report.sum),
                "expected": str(report.expected),
            }
        if report and not stoch:
            obj["reason"] = stoch.reason
        out.write(_dump_json(obj))
    elif stoch:
        out.write(f"panstochastic, mu = {report.mu}\n")
    elif report:
        out.write(f"{report.describe()} (not panstochastic: {stoch.reason})\n")
    else:
        out.write(report.describe() + "\n")
    return EXIT_OK if report else EXIT_NEGATIVE


def cmd_enumerate(args, out) -> int:
    if args.n < 1:
        raise InputError("--n must be a positive integer")
    if args.affine_only:
        specs = enumerate_affine_panmagic(args.n)
        perms = [affine_perm(s, args.n) for s in specs]
    else:
        perms = enumerate_panmagic(args.n, allow_large=args.allow_large, workers=args.workers)
    if args.count_only:
        out.write(_dump_json({"count": len(perms)}) if args.format == "json" else f"{len(perms)}\n")
    elif args.format == "json":
        out.write(_dump_json({"n": args.n, "permutations": [list(p.images) for p in perms]}))
    else:
        for p in perms:
            out.write(" ".join(str(x) for x in p.images) + "\n")
    return EXIT_OK


def cmd_construct(args, out) -> int:
    if args.kind == "wreath":
        blocks = [_load_matrix(p) for p in args.blocks.split(",")]
        out.write(_emit_matrix(wreath_matrices(blocks, _load_matrix(args.outer)), args.format))
    elif args.kind == "kron":
        out.write(_emit_matrix(kronecker(_load_matrix(args.left), _load_matrix(args.right)), args.format))
    elif args.kind == "affine":
        pi = affine_perm(AffineSpec(args.a % args.n, args.b % args.n), args.n)
        out.write(_emit_perm(pi, args.format, args.as_matrix))
    else:
        out.write(_emit_perm(nonaffine_piecewise(args.n, args.p), args.format, args.as_matrix))
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    A = _load_matrix(args.input)
    result = decompose5(A)
    terms = [{"perm": list(p.images), "coeff": str(c)} for p, c in result.terms]
    if args.format == "text":
        for t in terms:
            out.write(f"{t['coeff']} {' '.join(str(x) for x in t['perm'])}\n")
    else:
        out.write(_dump_json(terms))
    return EXIT_OK


def _load_vertices(args) -> list[SquareMatrix]:
    if args.panmagic_n is not None:
        return [perm_matrix(p) for p in enumerate_panmagic(args.panmagic_n)]
    root = Path(args.vertices)
    if not root.is_dir():
        raise InputError(f"{root}: not a directory")
    files = sorted(p for p in root.iterdir() if p.is_file() and p.suffix in (".txt", ".json"))
    if not files:
        raise InputError(f"{root}: no .txt or .json vertex files")
    return [formats.parse_matrix(p.read_text(), str(p)) for p in files]


def cmd_membership(args, out) -> int:
    A = _load_matrix(args.input)
    vertices = _load_vertices(args)
    if not vertices:
        raise InputError("vertex list is empty")
    result = membership(A, vertices)
    if isinstance(result, Feasible):
        out.write(_dump_json({"feasible": True, "coefficients": [str(c) for c in result.coefficients]}))
        return EXIT_OK
    out.write(_dump_json({"feasible": False}))
    return EXIT_NEGATIVE


def cmd_certify(args, out) -> int:
    A = _load_matrix(args.input)
    cert = non_decomp_certificate(A)
    if cert is None:
        out.write(_dump_json({"certificate": None}))
        return EXIT_OK
    out.write(_dump_json(cert.to_json_obj()))
    return EXIT_NEGATIVE


def cmd_fixture(args, out) -> int:
    out.write(_emit_matrix(fixture(args.name), args.format))
    return EXIT_OK


def cmd_counterexample(args, out) -> int:
    A = counterexample(args.n)
    out.write(_emit_matrix(A, args.format))
    if args.certify:
        if gcd(args.n, 6) != 1:
            out.write(_dump_json({"certificate": None, "reason": f"no panmagic permutation of degree {args.n} exists"}))
        else:
            out.write(_dump_json(non_decomp_certificate(A).to_json_obj()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="panstochastic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=("text", "json"), default=default)

    p = sub.add_parser("check", help="panmagic / panstochastic verdict")
    p.add_argument("--input", required=True)
    fmt(p, "text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list panmagic permutations of degree n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--affine-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit n above the default cap")
    p.add_argument("--workers", type=int, default=None)
    fmt(p, "text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="wreath/kron products, affine and piecewise permutations")
    csub = p.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("wreath")
    c.add_argument("--blocks", required=True, help="comma-separated block matrix files")
    c.add_argument("--outer", required=True)
    fmt(c, "text")
    c = csub.add_parser("kron")
    c.add_argument("--left", required=True)
    c.add_argument("--right", required=True)
    fmt(c, "text")
    c = csub.add_parser("affine")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, default=0)
    c.add_argument("--as-matrix", action="store_true")
    fmt(c, "text")
    c = csub.add_parser("piecewise")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--as-matrix", action="store_true")
    fmt(c, "text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="convex decomposition of a 5x5 panstochastic matrix")
    p.add_argument("--input", required=True)
    fmt(p, "json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("membership", help="exact convex-hull membership")
    p.add_argument("--input", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--vertices", help="directory of vertex matrix files")
    g.add_argument("--panmagic-n", type=int, help="use all panmagic permutation matrices of this order")
    fmt(p, "json")
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("certify", help="search for a non-decomposability certificate")
    p.add_argument("--input", required=True)
    fmt(p, "json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("fixture", help="emit a named matrix")
    p.add_argument("--name", required=True, choices=FIXTURE_NAMES)
    fmt(p, "text")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("counterexample", help="panstochastic n x n matrix with no panmagic decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--certify", action="store_true")
    fmt(p, "text")
    p.set_defaults(func=cmd_counterexample)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (FormatError, InputError) as exc:
        err.write(f"error: {exc}\n")
    except (ValueError, KeyError) as exc:
        err.write(f"error: {exc.args[0] if exc.args else exc}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
