"""Command line front end.

    systoles classify  --surface s11 --alpha 1 --beta 1
    systoles enumerate --surface s04 --alpha 1/2 --beta 1 --count 4
    systoles act       --surface s11 --alpha 1 --beta 1 --word "S T"
    systoles plot      --surface s11 --figure gamma --depth 6 --out gamma.svg

Coordinates written as integers or ``p/q`` are exact; decimals are floats
unless ``--exact`` is given.  Output on stdout is deterministic; timings are
only reported with ``--timings``.

Exit codes: 0 success, 2 bad input, 3 float tolerance ambiguity, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__, curvetree, plot
from .classify import classify
from .core import EPS, SurfaceKind, as_scalar, from_log, log_point, make_point, to_log
from .errors import DomainError, SystoleError, ToleranceAmbiguity
from .mcg import McgWord, apply_word
from .rep import geodesic_length

EXIT_INPUT, EXIT_AMBIGUOUS, EXIT_IO = 2, 3, 4


def fmt_scalar(x):
    """Rationals as ``p/q`` (or an integer), floats with 17 significant digits."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return format(x, ".17g")


def dumps(obj, indent=0):
    """JSON with 17-digit floats and rationals as strings (integers stay numbers)."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else json.dumps(fmt_scalar(obj))
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if obj != obj or obj in (float("inf"), float("-inf")):
            raise DomainError("non-finite value in output")
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[" + ", ".join(dumps(v, indent + 1) for v in obj) + "]"
    return json.dumps(str(obj))


# -- argument handling -----------------------------------------------------

def _point_args(sp):
    sp.add_argument("--surface", required=True, help="s11 (torus) or s04 (sphere)")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--log-coords", action="store_true", help="read alpha, beta as log chart (A, B)")
    sp.add_argument("--exact", action="store_true", help="convert decimals to exact rationals")
    sp.add_argument("--timings", action="store_true", help="add wall-clock timings to the output")


def build_parser():
    ap = argparse.ArgumentParser(prog="systoles", description="Systoles of S11 and S04.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="systole and 2-systole multiplicities")
    _point_args(sp)
    sp.add_argument("--tol", type=float, default=EPS)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", help="shortest curves as CSV")
    _point_args(sp)
    sp.add_argument("--count", type=int, default=10)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("act", help="apply a mapping class word")
    _point_args(sp)
    sp.add_argument("--word", required=True, help='e.g. "S T T S Tinv"')
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("plot", help="SVG figure plus CSV sidecar")
    sp.add_argument("--surface", required=True)
    sp.add_argument("--figure", choices=("gamma", "delta"), required=True)
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--bounds", default="-4,4,-4,4", help="xmin,xmax,ymin,ymax")
    sp.add_argument("--samples", type=int, default=16)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_plot)
    return ap


def read_point(args):
    surface = SurfaceKind.parse(args.surface)
    if args.log_coords:
        if args.exact:
            raise DomainError("log coordinates are float only; drop --exact")
        return from_log(log_point(surface, float(args.alpha), float(args.beta)))
    exact = True if args.exact else None
    return make_point(surface, as_scalar(args.alpha, exact), as_scalar(args.beta, exact))


def _echo(args, p):
    return {
        "surface": p.surface.value,
        "alpha_arg": args.alpha,
        "beta_arg": args.beta,
        "log_coords": bool(args.log_coords),
        "exact_flag": bool(args.exact),
    }


def _chart(p):
    q = to_log(p)
    return {"alpha": p.alpha, "beta": p.beta}, {"A": q.A, "B": q.B}


def cmd_classify(args, out):
    t0 = time.perf_counter()
    p = read_point(args)
    c = classify(p, args.tol)
    point, logp = _chart(p)
    rec = {
        "input": _echo(args, p),
        "backend": c.backend,
        "tolerance": 0 if p.exact else args.tol,
        "point": point,
        "log": logp,
        "systole_count": c.systole_count,
        "systole_value": c.systole_value,
        "systole_length": c.systole_length,
        "systole_regions": [str(r) for r in c.systole_regions],
        "two_systole_count": c.two_systole_count,
        "two_systole_value": c.two_systole_value,
        "two_systole_length": c.two_systole_length,
        "two_systole_regions": [str(r) for r in c.two_systole_regions],
        "gamma_position": c.gamma.value,
        "in_delta0": c.in_delta0,
        "in_delta1": c.in_delta1,
    }
    if args.timings:
        rec["timings"] = {"total_s": time.perf_counter() - t0}
    out.write(dumps(rec) + "\n")


def cmd_enumerate(args, out):
    p = read_point(args)
    if args.count < 1:
        raise DomainError("--count must be positive")
    t0 = time.perf_counter()
    curves = curvetree.enumerate(p, args.count)
    wr = csv.writer(out, lineterminator="\n")
    wr.writerow(["value", "length", "region", "slope"])
    for c in curves:
        wr.writerow([fmt_scalar(c.value), format(geodesic_length(c.value), ".17g"),
                     c.region.label(), str(c.region)])
    if args.timings:
        sys.stderr.write(f"enumerate: {time.perf_counter() - t0:.6f} s\n")


def cmd_act(args, out):
    p = read_point(args)
    g = McgWord.parse(args.word)
    q = apply_word(p, g)
    point, logp = _chart(q)
    rec = {"input": _echo(args, p), "word": str(g), "point": point, "log": logp}
    out.write(dumps(rec) + "\n")


def _bounds(text):
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad bounds {text!r}") from exc
    if len(vals) != 4 or vals[0] >= vals[1] or vals[2] >= vals[3]:
        raise DomainError("bounds must be xmin,xmax,ymin,ymax with min < max")
    return vals


def cmd_plot(args, out):
    surface = SurfaceKind.parse(args.surface)
    if not 0 <= args.depth <= 12:
        raise DomainError("--depth must lie in [0, 12]")
    if args.samples < 2:
        raise DomainError("--samples must be at least 2")
    bounds = _bounds(args.bounds)
    lines, marks, bounds = plot.figure(surface, args.figure, args.depth, args.samples, bounds)
    svg = plot.render_svg(lines, marks, bounds, title=f"{args.figure} {surface.value} depth {args.depth}")
    target = Path(args.out)
    sidecar = target.with_suffix(".csv")
    target.write_text(svg)
    sidecar.write_text(plot.render_csv(lines, marks))
    rec = {"svg": str(target), "csv": str(sidecar), "polylines": len(lines), "markers": len(marks)}
    out.write(dumps(rec) + "\n")


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        args.func(args, out)
    except ToleranceAmbiguity as exc:
        sys.stderr.write(f"error: {exc}\nhint: rerun with --exact or rational p/q inputs\n")
        return EXIT_AMBIGUOUS
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except (SystoleError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
