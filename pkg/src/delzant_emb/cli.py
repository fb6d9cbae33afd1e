"""``delzant-emb`` command line front end.

Exit codes: 0 success, 1 bad input (parse or geometry error), 2 the input
polytope is valid but not Delzant.
"""

import argparse
import json
import sys
from fractions import Fraction

from .catalog import build
from .delzant import validate_delzant
from .emb import CLOSED, OPEN, embedding_space, emb_function
from .errors import DelzantEmbError, NotDelzant
from .io import dumps, loads
from .svg import render_svg

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_DELZANT = 2


def _read_polytope(args):
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return loads(text)


def _rational_arg(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _radius_t(args):
    """``t = r^2`` from ``--at``/``--t`` or from a decimal ``--r`` (squared exactly)."""
    t = getattr(args, "at", None)
    if t is None:
        t = getattr(args, "t", None)
    if args.r is not None:
        if t is not None:
            raise DelzantEmbError("give either t or --r, not both")
        t = args.r * args.r
    return t


def _mode(args):
    return OPEN if args.open else CLOSED


def _emit_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_validate(args, out):
    p = _read_polytope(args)
    report = validate_delzant(p)
    _emit_json(report.to_json(), out)
    return EXIT_OK if report.is_delzant else EXIT_NOT_DELZANT


def cmd_emb(args, out):
    p = _read_polytope(args)
    sf = emb_function(p)
    t = _radius_t(args)
    if t is None:
        _emit_json(sf.to_json(), out)
    else:
        out.write(f"{sf(t, _mode(args))}\n")
    return EXIT_OK


def cmd_catalog(args, out):
    out.write(dumps(build(" ".join(args.expr))) + "\n")
    return EXIT_OK


def cmd_render(args, out):
    p = _read_polytope(args)
    balls = [(int(i), Fraction(t)) for i, t in (args.ball or [])]
    out.write(render_svg(p, balls, size=args.size))
    return EXIT_OK


def cmd_embedding_space(args, out):
    p = _read_polytope(args)
    t = _radius_t(args)
    if t is None:
        raise DelzantEmbError("embedding-space needs --t or --r")
    _emit_json(embedding_space(p, t, _mode(args)).to_json(), out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="delzant-emb",
        description="Exact equivariant ball-embedding invariants of Delzant polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", "-i", help="polytope JSON file (default: stdin)")
        return sp

    def with_radius(sp, flag):
        sp.add_argument(flag, dest=flag.lstrip("-"), type=_rational_arg, default=None,
                        help="ball size t = r^2, as an exact rational such as 3/2")
        sp.add_argument("--r", type=_rational_arg, default=None,
                        help="ball radius r as a decimal; squared exactly")
        sp.add_argument("--open", action="store_true",
                        help="open-ball convention (edge length >= t instead of > t)")

    sp = with_input(sub.add_parser("validate", help="check the Delzant conditions"))
    sp.set_defaults(func=cmd_validate)

    sp = with_input(sub.add_parser("emb", help="step function, or its value with --at"))
    with_radius(sp, "--at")
    sp.set_defaults(func=cmd_emb)

    sp = sub.add_parser("catalog", help="emit a catalog polytope, e.g. 'hirzebruch(1,1,1)'")
    sp.add_argument("expr", nargs="+",
                    help="simplex(n, lam) | cube(n, lam) | cp_product(n, m, lam) | "
                         "hirzebruch(a, b, k) | pentagon | chopped(base, vertex, eps)")
    sp.set_defaults(func=cmd_catalog)

    sp = with_input(sub.add_parser("render", help="SVG drawing of a 2D polytope"))
    sp.add_argument("--ball", nargs=2, action="append", metavar=("VERTEX", "T"),
                    help="shade the ball image of size T at vertex index VERTEX (repeatable)")
    sp.add_argument("--size", type=int, default=400, help="drawing size in pixels")
    sp.set_defaults(func=cmd_render)

    sp = with_input(sub.add_parser("embedding-space",
                                   help="components of the ball-embedding space at t"))
    with_radius(sp, "--t")
    sp.set_defaults(func=cmd_embedding_space)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NotDelzant as exc:
        err.write(f"error: NotDelzant: {exc}\n")
        return EXIT_NOT_DELZANT
    except (DelzantEmbError, OSError, ValueError, TypeError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
