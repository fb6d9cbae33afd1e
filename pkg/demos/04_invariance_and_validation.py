"""
What the invariant sees, and what it does not
=============================================

Moving a polytope by a unimodular matrix and a rational translation gives
an equivariantly symplectomorphic manifold, so the step function must not
change. Non-smooth polygons are rejected before anything is counted.
"""

from fractions import Fraction

from delzant_emb import (
    affine_image, emb_function, hirzebruch, hull_from_vertices, random_unimodular,
    validate_delzant,
)
from delzant_emb.errors import NotDelzant

h = hirzebruch(2, 3, 1)
reference = emb_function(h)
print("Hirzebruch trapezoid:", [tuple(str(c) for c in v) for v in h.vertices])
print("thresholds", [str(t) for t in reference.thresholds], "drops", reference.drop_counts)

for seed in range(5):
    a = random_unimodular(2, seed, 4)
    moved = affine_image(h, a, (Fraction(seed, 3), -seed))
    sf = emb_function(moved)
    same = (sf.thresholds, sf.drop_counts) == (reference.thresholds, reference.drop_counts)
    print(f"A={a}: vertices {[tuple(str(c) for c in v) for v in moved.vertices]} same={same}")

#
# The triangle conv{(0,0), (1,0), (0,2)} is simple and rational but its
# edges at (1, 0) span a sublattice of index 2.
#
tri = hull_from_vertices([(0, 0), (1, 0), (0, 2)])
for failure in validate_delzant(tri).failures:
    print("not Delzant:", failure)
try:
    emb_function(tri)
except NotDelzant as exc:
    print("emb_function refused:", exc)
