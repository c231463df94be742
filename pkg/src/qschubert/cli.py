"""Command-line front end.

Shapes are given as ``--n N --k K`` and mean G(n-k, n): subspaces of
dimension n-k in C^n, Schubert classes indexed by partitions in an
(n-k) x k box.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure or
method disagreement, 3 residue-sum residual failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import comb

from .checks import run_verification
from .expression import (
    ParseError,
    class_json,
    evaluate,
    parse,
    render,
    render_partition,
    sorted_terms,
)
from .grassmannian import GrassmannianShape, ShapeError, degree_for_codim, enumerate_box
from .classical import CohomClass, multiply_classical
from .quantum import QuantumClass, gromov_witten, quantum_multiply
from .residue import ResidualError, RESIDUAL_TOL, vi_gromov_witten, vi_raw

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_RESIDUAL = 0, 1, 2, 3
DEFAULT_MAX_BASIS = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _shape_json(shape):
    return {"n": shape.n, "k": shape.k}


_INSERTION = re.compile(r"^\s*(?:s?\[)?\s*(\d+(?:\s*,\s*\d+)*)\s*\]?\s*$")


def parse_insertion(text: str, shape: GrassmannianShape):
    """Accept ``s[2,1]``, ``[2,1]`` or ``2,1``."""
    m = _INSERTION.match(text)
    if not m:
        raise UsageError(f"cannot read insertion {text!r}")
    parts = [int(p) for p in m.group(1).split(",")]
    try:
        return shape.partition(parts)
    except ShapeError as exc:
        raise UsageError(f"insertion {text!r}: {exc}")


def _expressions(args):
    if args.expr:
        return list(args.expr)
    return [line.strip() for line in sys.stdin if line.strip()]


def cmd_mult(shape, args, out):
    results = []
    for text in _expressions(args):
        value = evaluate(parse(text, shape), shape, args.mode)
        results.append((text, value))
    if args.json:
        _dump(
            {
                "shape": _shape_json(shape),
                "mode": args.mode,
                "results": [
                    {"expression": text, "terms": class_json(value)["terms"]}
                    for text, value in results
                ],
            },
            out,
        )
    else:
        for _, value in results:
            out.write(render(value) + "\n")
    return EXIT_OK


def _degree(shape, parts, requested):
    total = sum(map(sum, parts))
    natural = degree_for_codim(shape, total)
    d = natural if requested is None else requested
    note = None
    if d is None or natural != d:
        want = "n*d + k(n-k)" if d is None else f"n*d + k(n-k) = {shape.n * d + shape.dim_g}"
        note = f"codimensions sum to {total}, need {want}; the invariant is 0 by convention"
    return (0 if d is None else d), note


def cmd_gw(shape, args, out):
    parts = [parse_insertion(t, shape) for t in args.insertions]
    if len(parts) < 2:
        raise UsageError("at least two insertions are required")
    d, note = _degree(shape, parts, args.degree)
    record = {"shape": _shape_json(shape), "insertions": [list(p) for p in parts], "degree": d}
    values = {}
    if args.method in ("pieri", "both"):
        values["pieri"] = gromov_witten(shape, parts, d)
    if args.method in ("vi", "both"):
        values["vi"] = vi_gromov_witten(shape, parts, d)
    record.update(values)
    agree = len(set(values.values())) == 1
    if args.method == "both":
        record["agree"] = agree
    if note:
        record["note"] = note
    if args.json:
        _dump(record, out)
    else:
        if args.method == "both":
            out.write(f"pieri={values['pieri']} vi={values['vi']}\n")
        else:
            out.write(f"{values[args.method]}\n")
        if note:
            out.write(f"note: {note}\n")
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_vi(shape, args, out):
    parts = [parse_insertion(t, shape) for t in args.insertions]
    if not parts:
        raise UsageError("at least one insertion is required")
    d, note = _degree(shape, parts, args.degree)
    record = {"shape": _shape_json(shape), "insertions": [list(p) for p in parts], "degree": d}
    if note:
        record["value"] = 0
        record["note"] = note
    else:
        raw = vi_raw(shape, parts, d)
        value = vi_gromov_witten(shape, parts, d)
        record.update(
            value=value, raw={"re": raw.real, "im": raw.imag}, residual=abs(raw - value)
        )
    if args.json:
        _dump(record, out)
    else:
        out.write(f"{record['value']}\n")
        if note:
            out.write(f"note: {note}\n")
        else:
            out.write(f"raw={record['raw']['re']:.12g}{record['raw']['im']:+.3g}j "
                      f"residual={record['residual']:.3g} (tolerance {RESIDUAL_TOL:g})\n")
    return EXIT_OK


def multiplication_table(shape, mode):
    """Products of all unordered basis pairs, in basis order."""
    box = enumerate_box(shape)
    rows = []
    for i, lam in enumerate(box):
        for mu in box[i:]:
            if mode == "quantum":
                value = quantum_multiply(shape, QuantumClass.basis(shape, lam), QuantumClass.basis(shape, mu))
            else:
                value = multiply_classical(shape, CohomClass.basis(shape, lam), CohomClass.basis(shape, mu))
            rows.append((lam, mu, value))
    return rows


def cmd_table(shape, args, out):
    size = comb(shape.n, shape.k)
    if size > args.max_basis:
        raise UsageError(f"basis of {shape!r} has {size} elements, limit is {args.max_basis}")
    rows = multiplication_table(shape, args.mode)
    if args.json:
        _dump(
            {
                "shape": _shape_json(shape),
                "mode": args.mode,
                "products": [
                    {
                        "left": list(lam),
                        "right": list(mu),
                        "terms": [
                            {"partition": list(nu), "q": d, "coeff": c}
                            for nu, d, c in sorted_terms(value)
                        ],
                    }
                    for lam, mu, value in rows
                ],
            },
            out,
        )
    else:
        for lam, mu, value in rows:
            out.write(f"{render_partition(lam)}*{render_partition(mu)} = {render(value)}\n")
    return EXIT_OK


def cmd_verify(shape, args, out):
    checks = run_verification(shape)
    passed = all(c.passed for c in checks)
    if args.json:
        _dump(
            {
                "shape": _shape_json(shape),
                "passed": passed,
                "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            },
            out,
        )
    else:
        out.write(f"{shape!r}  (n={shape.n}, k={shape.k})\n")
        width = max(len(c.name) for c in checks)
        for c in checks:
            if c.passed:
                out.write(f"PASS  {c.name}\n")
            else:
                out.write(f"FAIL  {c.name.ljust(width)}  {c.detail}\n")
        failed = sum(not c.passed for c in checks)
        out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if passed else EXIT_VERIFY


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="ambient dimension")
    common.add_argument("--k", type=int, required=True,
                        help="codimension bound; subspaces have dimension n-k")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="qschubert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mult", parents=[common], help="evaluate class expressions")
    p.add_argument("--mode", choices=["classical", "quantum"], default="quantum")
    p.add_argument("expr", nargs="*", help="expressions such as 's[2,1]*s[1,0]'; stdin if absent")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("gw", parents=[common], help="Gromov-Witten invariant")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--method", choices=["pieri", "vi", "both"], default="pieri")
    p.add_argument("insertions", nargs="+", help="partitions such as s[2,1] or 2,1")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("vi", parents=[common], help="residue-sum evaluation with diagnostics")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("insertions", nargs="+")
    p.set_defaults(func=cmd_vi)

    p = sub.add_parser("table", parents=[common], help="full multiplication table")
    p.add_argument("--mode", choices=["classical", "quantum"], default="quantum")
    p.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the ring self-checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        shape = GrassmannianShape(args.n, args.k)
        if getattr(args, "degree", None) is not None and args.degree < 0:
            raise UsageError("--degree must be nonnegative")
        return args.func(shape, args, out)
    except (UsageError, ParseError, ShapeError) as exc:
        sys.stderr.write(f"qschubert: error: {exc}\n")
        return EXIT_USAGE
    except ResidualError as exc:
        sys.stderr.write(f"qschubert: residual failure: {exc}\n")
        return EXIT_RESIDUAL


if __name__ == "__main__":
    sys.exit(main())
