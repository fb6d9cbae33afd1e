"""
Blow-ups and ball pictures
==========================

A blow-up of size eps cuts a smooth corner off the polytope. We chop the
square, then draw ball images the way one would on the back of an envelope:
the simplex conv{x, x + t w_1, x + t w_2} at a vertex x with edge directions
w_1, w_2.

SVG files are written to the directory given on the command line (default:
the current directory).
"""

import sys
from fractions import Fraction
from pathlib import Path

from delzant_emb import corner_chop, cube, emb_function
from delzant_emb.svg import render_svg

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
outdir.mkdir(parents=True, exist_ok=True)

square = cube(2, 2)
pentagon = corner_chop(square, square.vertices.index((2, 2)), 1)
print("chopped square:", [tuple(str(c) for c in v) for v in pentagon.vertices])

#
# A chop of size 1/2 instead keeps more room at every corner.
#
small = corner_chop(square, square.vertices.index((2, 2)), Fraction(1, 2))
print("chop 1/2 step function:", emb_function(small).to_json()["pieces"])

#
# Pictures: four balls of size 1 in the square, and the single ball of
# size 2 that still fits at the origin of the pentagon.
#
(outdir / "square_balls.svg").write_text(render_svg(square, [(i, 1) for i in range(4)]))
origin = pentagon.vertices.index((0, 0))
(outdir / "pentagon_ball.svg").write_text(render_svg(pentagon, [(origin, 2)]))
half = [(i, Fraction(1, 2)) for i in range(len(pentagon.vertices))]
(outdir / "pentagon_small_balls.svg").write_text(render_svg(pentagon, half))
print("wrote", sorted(p.name for p in outdir.glob("*.svg")))
