"""Command line interface.

Exit codes: 0 success, 2 malformed instance file, 3 pipeline precondition
failure (the induced subdivision is not a regular full triangulation, or the
command does not apply to the instance dimension), 1 anything else.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import census as census_mod
from .core import ParseError, parse_instance, serialize_instance
from .generators import (GeneratorError, canonical_unimodular, derive_seed,
                         random_full_triangulation, random_signs)
from .homology import analyze
from .subdivision import SubdivisionError, regular_subdivision
from .svgplot import render_curve_svg


def _read_instance(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _fail(message: str, status: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return status


def cmd_betti(args) -> int:
    try:
        poly, signs = _read_instance(args.file)
    except OSError as exc:
        return _fail(str(exc), 2)
    except ParseError as exc:
        return _fail(str(exc), 2)
    try:
        result = analyze(poly, signs)
    except SubdivisionError as exc:
        return _fail(str(exc), 3)
    print("betti: " + " ".join(str(b) for b in result.betti.b))
    print(f"chi: {result.betti.chi}")
    return 0


def cmd_subdivision(args) -> int:
    try:
        poly, _ = _read_instance(args.file)
    except OSError as exc:
        return _fail(str(exc), 2)
    except ParseError as exc:
        return _fail(str(exc), 2)
    try:
        sub = regular_subdivision(poly)
    except SubdivisionError as exc:
        return _fail(str(exc), 3)
    fvec = sub.f_vector()
    print("f-vector: " + " ".join(str(x) for x in fvec))
    if args.f_vector:
        return 0
    print(f"full: {'yes' if sub.is_full else 'no'}")
    print(f"triangulation: {'yes' if sub.is_triangulation else 'no'}")
    print(f"unimodular: {'yes' if sub.is_unimodular else 'no'}")
    return 0


def cmd_gen(args) -> int:
    try:
        if args.canonical:
            poly = canonical_unimodular(args.n, args.d, args.seed)
        else:
            poly = random_full_triangulation(args.n, args.d, args.seed,
                                             Fraction(args.lam))
    except GeneratorError as exc:
        return _fail(str(exc), 1)
    signs = random_signs(args.n, args.d, derive_seed(args.seed, 1))
    text = serialize_instance(poly, signs)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_census(args) -> int:
    rows, skipped = census_mod.run_census(
        args.n, args.d, args.triangulations, args.signs, args.seed,
        Fraction(args.lam), workers=args.workers)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(census_mod.rows_to_csv(rows, args.n))
    print(census_mod.format_summary(rows, skipped, args.n, args.d))
    return 0


def cmd_plot(args) -> int:
    try:
        poly, signs = _read_instance(args.file)
    except OSError as exc:
        return _fail(str(exc), 2)
    except ParseError as exc:
        return _fail(str(exc), 2)
    if poly.n != 3:
        return _fail("plots are implemented for n = 3 only", 3)
    try:
        svg = render_curve_svg(poly, signs)
    except SubdivisionError as exc:
        return _fail(str(exc), 3)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patchwork",
        description="Z2-Betti numbers of real tropical hypersurfaces "
                    "via combinatorial patchworking.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("betti", help="Betti numbers of the real part of an instance")
    p.add_argument("file")
    p.set_defaults(func=cmd_betti)

    p = subs.add_parser("subdivision", help="report on the induced regular subdivision")
    p.add_argument("file")
    p.add_argument("--f-vector", action="store_true",
                   help="print only the f-vector line")
    p.set_defaults(func=cmd_subdivision)

    p = subs.add_parser("gen", help="generate an instance file")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--canonical", action="store_true",
                      help="verified unimodular triangulation")
    kind.add_argument("--random", action="store_true",
                      help="random regular full triangulation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lambda", dest="lam", default="1/4",
                   help="convexity mixing weight in [0,1], e.g. 1/4")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = subs.add_parser("census", help="random census of Betti vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--triangulations", type=int, required=True)
    p.add_argument("--signs", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lambda", dest="lam", default="1/4")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: PATCHWORK_THREADS or all cores)")
    p.set_defaults(func=cmd_census)

    p = subs.add_parser("plot", help="SVG plot of a plane curve and its real part")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except census_mod.CensusBoundViolation as exc:
        return _fail(f"bound violation: {exc}", 1)
    except Exception as exc:  # keep one-line diagnostics for scripting
        return _fail(str(exc), 1)


if __name__ == "__main__":
    sys.exit(main())
