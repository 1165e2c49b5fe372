"""Deterministic SVG pictures of based edge paths in the upper half plane.

Edges between finite vertices are semicircles on the real axis; edges to
1/0 are vertical segments clipped at a height cap.  All geometry is exact
Fraction arithmetic; pixel coordinates are formatted once, with 12 decimal
places and round-half-even, so equal inputs give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .errors import ParseError
from .words import Farey, endpoints

_QUANTUM = Decimal("1.000000000000")


def _fmt(x) -> str:
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 60
        d = (Decimal(x.numerator) / Decimal(x.denominator)).quantize(
            _QUANTUM, rounding=ROUND_HALF_EVEN
        )
    if d == 0:
        d = abs(d)  # never emit -0.000000000000
    return str(d)


@dataclass
class RenderOptions:
    """x range and cap are plane units; None means derive from the path."""

    x_min: Fraction | None = None
    x_max: Fraction | None = None
    height_cap: Fraction | None = None
    width_px: int = 800
    height_px: int = 560
    stroke_width: Fraction = Fraction(3, 2)
    font_size: Fraction = Fraction(14)
    label_vertices: bool = True

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ParseError("pixel dimensions must be positive")
        if self.stroke_width <= 0 or self.font_size <= 0:
            raise ParseError("stroke width and font size must be positive")
        if self.x_min is not None and self.x_max is not None and self.x_min >= self.x_max:
            raise ParseError("x_min must be strictly less than x_max")
        if self.height_cap is not None and self.height_cap <= 0:
            raise ParseError("height cap must be positive")


def _x_range(vertices: list[Farey], opts: RenderOptions) -> tuple[Fraction, Fraction]:
    finite = [Fraction(v.n, v.d) for v in vertices if not v.is_infinity]
    lo = min(finite)
    hi = max(finite)
    pad = max((hi - lo) / 4, Fraction(1, 4))
    x_min = opts.x_min if opts.x_min is not None else lo - pad
    x_max = opts.x_max if opts.x_max is not None else hi + pad
    if x_min >= x_max:
        raise ParseError("x_min must be strictly less than x_max")
    return x_min, x_max


def render_svg(word, opts: RenderOptions | None = None) -> bytes:
    opts = opts if opts is not None else RenderOptions()
    vertices = endpoints(word)
    x_min, x_max = _x_range(vertices, opts)
    cap = opts.height_cap if opts.height_cap is not None else (x_max - x_min) * Fraction(5, 8)

    scale = Fraction(opts.width_px) / (x_max - x_min)
    axis_y = Fraction(opts.height_px) - 2 * Fraction(opts.font_size)

    def px(x: Fraction) -> Fraction:
        return (x - x_min) * scale

    top_y = axis_y - cap * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opts.width_px}" '
        f'height="{opts.height_px}" viewBox="0 0 {opts.width_px} {opts.height_px}">',
        f'<rect width="{opts.width_px}" height="{opts.height_px}" fill="#ffffff"/>',
        f'<line x1="0" y1="{_fmt(axis_y)}" x2="{opts.width_px}" y2="{_fmt(axis_y)}" '
        f'stroke="#888888" stroke-width="1"/>',
    ]

    stroke = f'stroke="#1a1a1a" stroke-width="{_fmt(opts.stroke_width)}" fill="none"'
    for u, v in zip(vertices, vertices[1:]):
        if u.is_infinity or v.is_infinity:
            fin = v if u.is_infinity else u
            x = px(Fraction(fin.n, fin.d))
            parts.append(
                f'<line x1="{_fmt(x)}" y1="{_fmt(axis_y)}" x2="{_fmt(x)}" '
                f'y2="{_fmt(top_y)}" {stroke}/>'
            )
        else:
            xu = Fraction(u.n, u.d)
            xv = Fraction(v.n, v.d)
            left, right = (xu, xv) if xu < xv else (xv, xu)
            r = (right - left) * scale / 2
            parts.append(
                f'<path d="M {_fmt(px(left))} {_fmt(axis_y)} A {_fmt(r)} {_fmt(r)} '
                f'0 0 1 {_fmt(px(right))} {_fmt(axis_y)}" {stroke}/>'
            )

    if opts.label_vertices:
        label_y = axis_y + opts.font_size * Fraction(5, 4)
        font = f'font-family="sans-serif" font-size="{_fmt(opts.font_size)}"'
        seen = set()
        first_vertical_x = None
        for u, v in zip(vertices, vertices[1:]):
            if u.is_infinity or v.is_infinity:
                fin = v if u.is_infinity else u
                first_vertical_x = px(Fraction(fin.n, fin.d))
                break
        for v in vertices:
            if v in seen:
                continue
            seen.add(v)
            if v.is_infinity:
                if first_vertical_x is None:
                    continue
                parts.append(
                    f'<text x="{_fmt(first_vertical_x)}" y="{_fmt(top_y - opts.font_size / 4)}" '
                    f'text-anchor="middle" {font}>{v}</text>'
                )
            else:
                x = px(Fraction(v.n, v.d))
                parts.append(
                    f'<text x="{_fmt(x)}" y="{_fmt(label_y)}" '
                    f'text-anchor="middle" {font}>{v}</text>'
                )

    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("ascii")
