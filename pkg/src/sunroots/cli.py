"""Command line interface: ``sunroots {poly,zeros,seq,verify}``.

Exit status is 0 on success or a passing verification, 1 when a
verification is refuted, and 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sunroots import sequences, verify
from sunroots.arith_functions import ArithFnSpec
from sunroots.darcais import generate
from sunroots.delta_zeros import DEFAULT_WIDTH

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 60


class UsageError(Exception):
    pass


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(text), int(text))
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


def parse_g(text: str) -> ArithFnSpec:
    try:
        return ArithFnSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _positive_width(text: str) -> Fraction:
    w = parse_rational(text)
    if w <= 0:
        raise UsageError("width must be positive")
    return w


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args) -> int:
    g = parse_g(args.g)
    if args.N < 0:
        raise UsageError("N must be non-negative")
    seq = generate(g, args.N)
    if args.x is not None:
        x = parse_rational(args.x)
        values = [seq.value(n, x) for n in range(args.N + 1)]
        if args.format == "json":
            doc = {"g": g.name, "x": verify.rational_json(x),
                   "values": [{"n": n, "value": verify.rational_json(v)} for n, v in enumerate(values)]}
            _emit(json.dumps(doc, indent=2) + "\n", args.out)
        else:
            rows = [["n", "value"]] + [[str(n), fmt_rational(v)] for n, v in enumerate(values)]
            _emit(_csv(rows), args.out)
        return EXIT_OK
    if args.format == "json":
        doc = {"g": g.name, "polys": [
            {"n": n, "coefficients": [verify.rational_json(c) for c in seq[n].coefficients]}
            for n in range(args.N + 1)]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        header = ["n"] + [f"c{k}" for k in range(args.N + 1)]
        rows = [header] + [[str(n)] + [fmt_rational(c) for c in seq[n].coefficients]
                           for n in range(args.N + 1)]
        _emit(_csv(rows), args.out)
    return EXIT_OK


def cmd_zeros(args) -> int:
    g = parse_g(args.g)
    lo, hi = parse_range(args.range)
    if lo < 1:
        raise UsageError("Delta_n is defined for n >= 1")
    width = _positive_width(args.width)
    feasible = [n for n in range(lo, hi + 1) if n <= args.max_n]
    results = dict(verify.largest_zeros(g, feasible, width, args.threads)) if feasible else {}
    rows: List[dict] = []
    for n in range(lo, hi + 1):
        r = results.get(n)
        if r is None:
            rows.append({"n": n, "lo": None, "hi": None, "exact": None,
                         "status": "skipped: degree too large"})
        else:
            rows.append({"n": n, "lo": r.lo, "hi": r.hi, "exact": r.exact, "status": "ok"})
    if args.format == "json":
        doc = {"g": g.name, "width": verify.rational_json(width), "rows": [
            {k: (verify.rational_json(v) if isinstance(v, Fraction) else v) for k, v in row.items()}
            for row in rows]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        def cell(v):
            return "" if v is None else fmt_rational(v)
        table = [["n", "lo", "hi", "exact", "midpoint", "status"]]
        for row in rows:
            mid = "" if row["lo"] is None else f"{float((row['lo'] + row['hi']) / 2):.12g}"
            table.append([str(row["n"]), cell(row["lo"]), cell(row["hi"]), cell(row["exact"]),
                          mid, row["status"]])
        _emit(_csv(table), args.out)
    return EXIT_OK


def cmd_seq(args) -> int:
    if args.N < 0:
        raise UsageError("N must be non-negative")
    try:
        seq = sequences.by_name(args.name, args.N)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    roots = ["" if n == 0 else sequences.display_root(v, n, args.root_decimals)
             for n, v in enumerate(seq.values)]
    if args.format == "json":
        doc = {"name": seq.name, "rows": [{"n": n, "value": str(v), "root": r or None}
                                          for n, (v, r) in enumerate(zip(seq.values, roots))]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        rows = [["n", "value", "root"]] + [[str(n), str(v), r] for n, (v, r) in enumerate(zip(seq.values, roots))]
        _emit(_csv(rows), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    options = {"threads": args.threads}
    if args.horizon is not None:
        if args.horizon < 2:
            raise UsageError("horizon must be at least 2")
        options["horizon"] = args.horizon
    if args.range is not None:
        options["lo"], options["hi"] = parse_range(args.range)
    if args.k is not None:
        options["ks"] = [args.k]
    if args.ell is not None:
        options["ells"] = [args.ell]
    if args.width is not None:
        options["width"] = _positive_width(args.width)
    try:
        report = verify.run(args.id, **options)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = report.to_json()
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    failed = [i for i in report.instances if not i.result]
    summary = f"{report.id}: {'PASS' if report.passed else 'FAIL'} ({len(report.instances)} instances"
    summary += f", {len(failed)} failed)" if failed else ")"
    print(summary, file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunroots",
        description="Generalized D'Arcais polynomials, difference polynomials and their largest real zeros.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("poly", help="coefficients of P_0..P_N, or their values at x")
    p.add_argument("--g", required=True, help="sigma:<l> | psi:<l> | gbar | gell:<l>")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--x", help="evaluate at this rational instead of listing coefficients")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("zeros", help="certified largest real zeros of Delta_n")
    p.add_argument("--g", required=True)
    p.add_argument("--range", required=True, help="A..B")
    p.add_argument("--width", default=str(DEFAULT_WIDTH))
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help="larger n are reported as skipped (default %(default)s)")
    p.add_argument("--threads", type=int, default=verify.default_threads())
    common(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("seq", help="integer sequence table with fixed-decimal n-th roots")
    p.add_argument("name", help="p | pk:<k> | pp | pbar | Nell:<l>")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--root-decimals", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="run a named verification suite, print a JSON report")
    p.add_argument("id", choices=sorted(verify.SUITES))
    p.add_argument("--horizon", type=int)
    p.add_argument("--range", help="n-range A..B")
    p.add_argument("--k", type=int, help="colour count for color-k")
    p.add_argument("--ell", type=int, choices=(3, 4), help="subgroup family for gell-ray")
    p.add_argument("--width", help="isolation width for zero suites")
    p.add_argument("--threads", type=int, default=verify.default_threads())
    common(p, fmt=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sunroots: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
