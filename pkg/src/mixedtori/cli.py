"""Command-line interface: ``mixedtori analyze`` and ``mixedtori nested-check``."""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .analysis import EXIT_INPUT, EXIT_OK, analyze
from .config import DEFAULT
from .criteria import nested_characterization, parse_nested_spec
from .errors import InputError
from .report import dumps, nested_struct, nested_text, to_struct, to_text
from .svg import render_polygon_svg


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mixedtori", description="Essential tori in links of mixed polynomial singularities.")
    ap.add_argument("--version", action="version", version=f"mixedtori {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze a mixed polynomial")
    an.add_argument("poly", help='polynomial, e.g. "u^4 + ~u u^2 v + u^2 ~v^2 + v^6"')
    an.add_argument("--out", choices=("text", "struct", "both"), default="text")
    an.add_argument("--svg", metavar="PATH", help="write the Newton polygon as SVG")
    an.add_argument("--t-samples", type=int, metavar="K")
    an.add_argument("--grid", type=int, metavar="G")
    an.add_argument("--tol-unit", type=float, metavar="X")
    an.add_argument("--tol-vanish", type=float, metavar="X")

    nc = sub.add_parser("nested-check", help="evaluate the nested-tori characterization on a spec file")
    nc.add_argument("spec", help="path to a spec document (n=<int> then one line per component)")
    nc.add_argument("--out", choices=("text", "struct"), default="text")
    return ap


def cmd_analyze(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        cfg = DEFAULT.with_overrides(
            t_samples=args.t_samples, grid=args.grid, tol_unit=args.tol_unit, tol_vanish=args.tol_vanish
        )
        if cfg.t_samples < 1 or cfg.grid < 8:
            raise InputError("--t-samples must be >= 1 and --grid >= 8")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    res = analyze(args.poly, cfg)
    if args.out in ("text", "both"):
        stdout.write(to_text(res))
    if args.out == "both":
        stdout.write("\n")
    if args.out in ("struct", "both"):
        stdout.write(dumps(to_struct(res)))
    if args.svg and res.boundary is not None:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_polygon_svg(res.boundary, res.support))
    return res.exit_code


def cmd_nested_check(args, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        with open(args.spec, encoding="utf-8") as fh:
            spec = parse_nested_spec(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.spec}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    results = nested_characterization(spec)
    stdout.write(nested_text(results) if args.out == "text" else dumps(nested_struct(results)))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    return cmd_nested_check(args)


if __name__ == "__main__":
    sys.exit(main())
