"""Command line front end.

Every subcommand prints a single JSON object on stdout (or a bare value
with --plain).  Input errors come back as {"error": {"code", "message"}}
with exit status 1; malformed flags exit 2 the usual argparse way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath

from . import eta
from .dedekind import rademacher_phi
from .errors import ParseError
from .fricke import phi_p
from .inertia import km_phi, tridiag_signature, tridiag_trace
from .matrices import FrickeElement, parse_fricke, parse_matrix
from .render import RenderOptions, render_svg
from .words import decompose, endpoints

DEFAULT_TOLERANCE = "1e-40"


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"word must be comma separated integers, got {text!r}") from exc


def _parse_z(text: str, prec: int):
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"z must be re,im with decimal parts, got {text!r}")
    try:
        with mpmath.workdps(prec + eta.GUARD_DIGITS):
            return mpmath.mpc(mpmath.mpf(parts[0].strip()), mpmath.mpf(parts[1].strip()))
    except ValueError as exc:
        raise ParseError(f"could not read z from {text!r}") from exc


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"expected a rational number, got {text!r}") from exc


def _default_precision() -> int:
    raw = os.environ.get("RADEMACHER_PRECISION")
    if raw is None:
        return eta.DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        return eta.DEFAULT_PRECISION
    return value if value > 0 else eta.DEFAULT_PRECISION


def _fricke_arg(args) -> FrickeElement:
    if args.fricke is not None:
        if args.matrix is not None or args.p is not None:
            raise ParseError("--fricke cannot be combined with --p/--matrix")
        return parse_fricke(args.fricke)
    if args.p is None or args.matrix is None:
        raise ParseError("need either --fricke or both --p and --matrix")
    g = parse_matrix(args.matrix)
    return FrickeElement.gamma0(args.p, g)


def _add_precision_flags(sub):
    sub.add_argument("--precision", type=int, default=None,
                     help="decimal digits (default: RADEMACHER_PRECISION or 50)")
    sub.add_argument("--tolerance", default=DEFAULT_TOLERANCE,
                     help="pass threshold for the residual")


def _sub(subs, name, help_text):
    p = subs.add_parser(name, help=help_text)
    # SUPPRESS keeps a pre-subcommand --plain from being clobbered by a default
    p.add_argument("--plain", action="store_true", default=argparse.SUPPRESS,
                   help="bare values instead of JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rademacher",
        description="Rademacher symbols, edge path decompositions, and eta checks",
    )
    parser.add_argument("--plain", action="store_true",
                        help="bare values instead of JSON")
    subs = parser.add_subparsers(dest="command", required=True)

    p = _sub(subs, "phi", "Rademacher symbol of an SL(2,Z) matrix")
    p.add_argument("--matrix", required=True, help="a,b,c,d")

    p = _sub(subs, "phi-p", "level p symbol of a group element")
    p.add_argument("--p", type=int, default=None, help="odd prime level")
    p.add_argument("--matrix", default=None, help="a,b,c,d in Gamma0(p)")
    p.add_argument("--fricke", default=None, help="p:alpha,beta,gamma,delta coset element")

    p = _sub(subs, "decompose", "edge word of a matrix, with path endpoints")
    p.add_argument("--matrix", required=True, help="a,b,c,d")

    p = _sub(subs, "endpoints", "vertices of the path of a word")
    p.add_argument("--word", required=True, help="comma separated integers (may be empty)")

    p = _sub(subs, "km", "trace and signature form of the symbol")
    p.add_argument("--word", required=True, help="comma separated integers")

    p = _sub(subs, "verify-eta", "check the eta transformation law at a point")
    p.add_argument("--matrix", required=True, help="a,b,c,d")
    p.add_argument("--z", required=True, help="re,im in the upper half plane")
    _add_precision_flags(p)

    p = _sub(subs, "verify-theorem1", "check the level p eta product law at a point")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--matrix", default=None)
    p.add_argument("--fricke", default=None)
    p.add_argument("--z", required=True, help="re,im in the upper half plane")
    _add_precision_flags(p)

    p = _sub(subs, "render", "SVG picture of the path of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--x-min", default=None, help="left edge in plane units")
    p.add_argument("--x-max", default=None, help="right edge in plane units")
    p.add_argument("--height-cap", default=None, help="clip height for vertical edges")
    p.add_argument("--width-px", type=int, default=800)
    p.add_argument("--height-px", type=int, default=560)
    p.add_argument("--stroke-width", default="3/2")
    p.add_argument("--font-size", default="14")
    p.add_argument("--no-labels", action="store_true", help="skip vertex labels")

    return parser


def _run_phi(args):
    value = rademacher_phi(parse_matrix(args.matrix))
    return {"phi": value}, [str(value)]


def _run_phi_p(args):
    value = phi_p(_fricke_arg(args))
    return {"phi_p": str(value)}, [str(value)]


def _run_decompose(args):
    word = decompose(parse_matrix(args.matrix))
    pts = [str(v) for v in endpoints(word)]
    return {"word": list(word), "endpoints": pts}, [
        ",".join(str(a) for a in word),
        " ".join(pts),
    ]


def _run_endpoints(args):
    pts = [str(v) for v in endpoints(_parse_word(args.word))]
    return {"endpoints": pts}, [" ".join(pts)]


def _run_km(args):
    word = _parse_word(args.word)
    trace = tridiag_trace(word)
    signature = tridiag_signature(word)
    return (
        {"word": list(word), "trace": trace, "signature": signature,
         "phi": trace - 3 * signature},
        [f"trace {trace}", f"signature {signature}", f"phi {trace - 3 * signature}"],
    )


def _verify_common(report, args):
    payload = report.to_dict(tolerance=args.tolerance)
    plain = [f"residual {payload['residual']}", f"pass {str(payload['pass']).lower()}"]
    code = 0 if payload["pass"] else 1
    return payload, plain, code


def _run_verify_eta(args):
    prec = args.precision if args.precision is not None else _default_precision()
    g = parse_matrix(args.matrix)
    z = _parse_z(args.z, prec)
    return _verify_common(eta.verify_eta_transform(g, z, prec=prec), args)


def _run_verify_theorem1(args):
    prec = args.precision if args.precision is not None else _default_precision()
    element = _fricke_arg(args)
    z = _parse_z(args.z, prec)
    return _verify_common(eta.verify_theorem1(element, z, prec=prec), args)


def _run_render(args):
    opts = RenderOptions(
        x_min=None if args.x_min is None else _parse_fraction(args.x_min),
        x_max=None if args.x_max is None else _parse_fraction(args.x_max),
        height_cap=None if args.height_cap is None else _parse_fraction(args.height_cap),
        width_px=args.width_px,
        height_px=args.height_px,
        stroke_width=_parse_fraction(args.stroke_width),
        font_size=_parse_fraction(args.font_size),
        label_vertices=not args.no_labels,
    )
    data = render_svg(_parse_word(args.word), opts)
    if args.out is not None:
        with open(args.out, "wb") as handle:
            handle.write(data)
        return {"written": args.out, "bytes": len(data)}, [args.out]
    sys.stdout.write(data.decode("ascii"))
    return None, None


_HANDLERS = {
    "phi": _run_phi,
    "phi-p": _run_phi_p,
    "decompose": _run_decompose,
    "endpoints": _run_endpoints,
    "km": _run_km,
    "verify-eta": _run_verify_eta,
    "verify-theorem1": _run_verify_theorem1,
    "render": _run_render,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)

    try:
        result = _HANDLERS[args.command](args)
    except ParseError as exc:
        print(json.dumps({"error": {"code": exc.code, "message": str(exc)}}))
        return 2
    except ValueError as exc:
        code = getattr(exc, "code", "domain")
        print(json.dumps({"error": {"code": code, "message": str(exc)}}))
        return 1

    if len(result) == 3:
        payload, plain, status = result
    else:
        payload, plain = result
        status = 0
    if payload is None:
        return status
    if args.plain:
        for line in plain:
            print(line)
    else:
        print(json.dumps(payload))
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))
