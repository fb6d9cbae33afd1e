"""Plain SVG 1.1 drawings of planar polytopes and ball images.

Coordinates stay exact until the moment they are written out; the output is
byte-identical for identical input.
"""

from fractions import Fraction
from xml.sax.saxutils import escape

from .delzant import vertex_data
from .emb import ball_momentum_image
from .errors import DimensionNotRenderable

__all__ = ["SvgScene", "render_svg"]

MARGIN = Fraction(1, 10)
FILLS = ("#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc", "#fc9272", "#d9d9d9")


def _num(x):
    s = f"{float(x):.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _cycle(p):
    """Vertex indices of a convex polygon in boundary order."""
    order = [0]
    prev = None
    while len(order) < len(p.vertices):
        cur = order[-1]
        nxt = [j for j in p.neighbours(cur) if j != prev and j not in order]
        if not nxt:
            break
        prev = cur
        order.append(nxt[0])
    return order


class SvgScene:
    """Outline of a 2D polytope plus shaded ball images.

    :param p: the polygon
    :param balls: ``(vertex_index, t)`` pairs to shade
    :param size: pixel size of the longer side of the drawing area
    """

    def __init__(self, p, balls=(), size=400):
        if p.dim != 2:
            raise DimensionNotRenderable(f"only 2-dimensional polytopes can be drawn, got {p.dim}")
        self.polytope = p
        self.balls = [(i, Fraction(t)) for i, t in balls]
        self.images = [ball_momentum_image(vertex_data(p, i), t, p) for i, t in self.balls]
        self.size = size

        xs = [v[0] for v in p.vertices]
        ys = [v[1] for v in p.vertices]
        for img in self.images:
            xs += [v[0] for v in img.simplex.vertices]
            ys += [v[1] for v in img.simplex.vertices]
        span = max(max(xs) - min(xs), max(ys) - min(ys))
        pad = MARGIN * span
        self.xmin, self.ymax = min(xs) - pad, max(ys) + pad
        self.width_units = max(xs) - min(xs) + 2 * pad
        self.height_units = max(ys) - min(ys) + 2 * pad
        self.unit = Fraction(size) / max(self.width_units, self.height_units)

    def to_px(self, point):
        x, y = point
        return (x - self.xmin) * self.unit, (self.ymax - y) * self.unit

    def _points_attr(self, pts):
        return " ".join(f"{_num(a)},{_num(b)}" for a, b in (self.to_px(q) for q in pts))

    def render(self):
        w = _num(self.width_units * self.unit)
        h = _num(self.height_units * self.unit)
        p = self.polytope
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">',
        ]
        for k, img in enumerate(self.images):
            tri = img.simplex
            pts = [tri.vertices[i] for i in _cycle(tri)]
            fill = FILLS[k % len(FILLS)]
            lines.append(
                f'  <polygon class="ball" points="{self._points_attr(pts)}" fill="{fill}" '
                f'fill-opacity="0.7" stroke="#3182bd" stroke-width="1"/>')
        outline = [p.vertices[i] for i in _cycle(p)]
        lines.append(
            f'  <polygon class="polytope" points="{self._points_attr(outline)}" fill="none" '
            f'stroke="black" stroke-width="2"/>')
        for v in p.vertices:
            px, py = self.to_px(v)
            label = escape("(" + ", ".join(str(c) for c in v) + ")")
            lines.append(f'  <circle cx="{_num(px)}" cy="{_num(py)}" r="3" fill="black"/>')
            lines.append(
                f'  <text x="{_num(px + 5)}" y="{_num(py - 5)}" font-family="sans-serif" '
                f'font-size="12">{label}</text>')
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def render_svg(p, balls=(), size=400):
    return SvgScene(p, balls, size).render()
