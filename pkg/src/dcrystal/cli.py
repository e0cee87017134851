"""Command-line interface.

Exit codes: 0 success or all checks passed, 1 a check failed, 2 bad usage or
malformed input.
"""

import argparse
import json
import sys
import time

from dcrystal import kr
from dcrystal.burge import (
    Biword, OMEGA, biword_to_datum, datum_to_biword, kappa_nw, kappa_nw_inv,
    kappa_nw_trace, kappa_se, kappa_se_inv, kappa_se_trace, lambda_of,
)
from dcrystal.paths import (
    from_triangle_rows, maximizing_double_path, shape_from_paths, triangle_rows,
)
from dcrystal.pbw import LusztigDatum
from dcrystal.tableaux import Tableau
from dcrystal.verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_RANK = 12


class UsageError(Exception):
    pass


def canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_input(text):
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("[", "{")):
        try:
            with open(text) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (text, exc.strerror))
    text = text.strip()
    if not text:
        return []
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("input is not valid JSON: %s" % exc)


def _check_rank(n):
    if not 4 <= n <= MAX_RANK:
        raise UsageError("rank must lie in 4..%d" % MAX_RANK)
    return n


def parse_datum(obj, n=None, biword=False):
    """Triangle rows (or a list of biletters with ``biword``) to a datum."""
    if not isinstance(obj, list):
        raise UsageError("expected a JSON array")
    if biword:
        if n is None:
            raise UsageError("--n is required with --biword")
        try:
            pairs = sorted(((int(a), int(b)) for a, b in obj), key=lambda p: (-p[0], p[1]))
            return biword_to_datum(Biword(tuple(pairs), OMEGA), _check_rank(n))
        except (TypeError, ValueError) as exc:
            raise UsageError("bad biword: %s" % exc)
    if not obj:
        return LusztigDatum.zero(_check_rank(n or 4), "upper")
    if n is not None and len(obj) != n - 1:
        raise UsageError("--n %d needs %d triangle rows, got %d" % (n, n - 1, len(obj)))
    _check_rank(len(obj) + 1)
    try:
        return from_triangle_rows(obj)
    except (TypeError, ValueError) as exc:
        raise UsageError("bad triangle: %s" % exc)


# --- subcommands -----------------------------------------------------------------

def cmd_burge(args):
    raw = _read_input(args.input)
    if args.inverse:
        if args.n is None:
            raise UsageError("--inverse needs --n")
        n = _check_rank(args.n)
        try:
            t = Tableau.from_json(raw) if isinstance(raw, dict) else (
                Tableau.anti_normal(raw) if args.direction == "se" else Tableau.normal(raw))
            c = (kappa_se_inv if args.direction == "se" else kappa_nw_inv)(t, n)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError("cannot invert: %s" % exc)
        out = {"datum": triangle_rows(c)}
        text = json.dumps(triangle_rows(c))
        return _emit(args, out, text)

    c = parse_datum(raw, args.n, args.biword)
    kappa = kappa_se if args.direction == "se" else kappa_nw
    t = kappa(c)
    out = {"direction": args.direction, "tableau": t.to_json(),
           "biword": [list(p) for p in datum_to_biword(c).pairs]}
    lines = [t.pretty() if t.size() else "(empty)"]
    if args.trace:
        steps = (kappa_se_trace if args.direction == "se" else kappa_nw_trace)(c)
        out["trace"] = [s.to_json() for s in steps]
        for k, s in enumerate(steps, start=1):
            lines.append("-- after %d pair%s" % (k, "" if k == 1 else "s"))
            lines.append(s.pretty())
    return _emit(args, out, "\n".join(lines))


def cmd_shape(args):
    c = parse_datum(_read_input(args.input), args.n, args.biword)
    a = list(lambda_of(c))
    b = list(shape_from_paths(c))
    out = {"insertion": a, "paths": b, "agree": a == b}
    text = "insertion %s\npaths     %s\n%s" % (a, b, "agree" if a == b else "MISMATCH")
    _emit(args, out, text)
    return EXIT_OK if a == b else EXIT_FAIL


def cmd_paths(args):
    c = parse_datum(_read_input(args.input), args.n, args.biword)
    best, path = maximizing_double_path(c)
    rows = triangle_rows(c)
    on = path.cells()
    overlay = [["%d%s" % (v, "*" if (r, m) in on else "") for m, v in enumerate(row, start=1)]
               for r, row in enumerate(rows, start=1)]
    out = {"epsilon_star": best, "double_path": path.to_json(), "overlay": overlay}
    width = max(len(x) for row in overlay for x in row)
    text = "\n".join(["epsilon_star %d" % best] +
                     [" ".join(x.rjust(width) for x in row) for row in overlay])
    return _emit(args, out, text)


def cmd_verify(args):
    fn = SUITES[args.suite]
    kwargs = {"n": _check_rank(args.n or 4), "jobs": args.jobs}
    if args.suite in ("operator-oracle", "tensor-split", "burge-equivariance",
                      "shape-equality"):
        kwargs["bound"] = args.bound
    if args.suite in ("burge-equivariance", "shape-equality"):
        kwargs.update(samples=args.samples, seed=args.seed)
    if args.suite in ("kr-iso", "embedding"):
        kwargs["s"] = args.s
    if args.suite == "embedding":
        kwargs["t"] = args.t if args.t is not None else args.s + 1
    if args.suite == "operator-oracle" and kwargs["n"] != 4:
        raise UsageError("the braid-move oracle is limited to rank 4")
    start = time.perf_counter()
    report = fn(**kwargs)
    out = report.to_json()
    out["seconds"] = round(time.perf_counter() - start, 3)
    _emit(args, out, report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_graph(args):
    n = _check_rank(args.n or 4)
    g = kr.crystal_graph(n, args.s, args.side)
    if args.format == "dot":
        print(g.to_dot())
        return EXIT_OK
    text = "\n".join(["%d vertices, %d edges" % (len(g.vertices), len(g.edges))] +
                     ["%s -%d-> %s" % (g.label(a), i, g.label(b))
                      for a, i, b in sorted(g.edges)])
    return _emit(args, g.to_json(), text)


def _emit(args, obj, text):
    if args.format == "json":
        print(canonical(obj))
    else:
        print(text)
    return EXIT_OK


# --- parser ------------------------------------------------------------------------

def _common(p, formats=("json", "text")):
    p.add_argument("--n", type=int, help="rank (4..%d)" % MAX_RANK)
    p.add_argument("--format", choices=formats, default="text")


def _datum_input(p):
    p.add_argument("input", nargs="?", default="-",
                   help="triangle rows as JSON, a file holding them, or - for stdin")
    p.add_argument("--biword", action="store_true",
                   help="read a list of biletters [a, b] (a > b) instead")


def build_parser():
    parser = argparse.ArgumentParser(prog="dcrystal",
                                     description="Type D crystal computations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("burge", help="Burge correspondence of a datum")
    _common(p)
    _datum_input(p)
    p.add_argument("--direction", choices=("se", "nw"), default="se")
    p.add_argument("--inverse", action="store_true",
                   help="read a tableau (rows or tableau JSON) and return the datum")
    p.add_argument("--trace", action="store_true", help="show intermediate tableaux")
    p.set_defaults(func=cmd_burge)

    p = sub.add_parser("shape", help="shape by insertion and by double paths")
    _common(p)
    _datum_input(p)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("paths", help="star epsilon and a maximizing double path")
    _common(p)
    _datum_input(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="run a verification suite")
    _common(p)
    p.add_argument("suite", nargs="?", choices=sorted(SUITES))
    p.add_argument("--suite", dest="suite_flag", choices=sorted(SUITES))
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--t", type=int)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--samples", type=int, default=0,
                   help="random data instead of exhaustive enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="affine crystal graph at level s")
    _common(p, formats=("dot", "json", "text"))
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--side", choices=("lusztig", "tableau"), default="lusztig")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help and on bad arguments; report the code instead
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "verify":
            args.suite = args.suite_flag or args.suite
            if args.suite is None:
                raise UsageError("name a suite")
        for name in ("s", "t", "bound", "samples", "jobs"):
            val = getattr(args, name, None)
            if val is not None and val < (1 if name == "jobs" else 0):
                raise UsageError("--%s must be %s" % (name, "positive" if name == "jobs"
                                                         else "nonnegative"))
        return args.func(args)
    except UsageError as exc:
        print("dcrystal: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
